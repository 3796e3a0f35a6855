// Command-line front end. Links only against the C interface.
//
// Exit codes: 0 success or affirmative verdict, 1 negative verdict,
// 2 usage or parse error, 3 internal error.

#include "jacobi/jacobi_c.h"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct ElementDeleter
{
    void operator()(jac_element *e) const { jac_element_free(e); }
};
struct ReportDeleter
{
    void operator()(jac_report *r) const { jac_report_free(r); }
};
struct SubsetsDeleter
{
    void operator()(jac_subset_list *s) const { jac_subsets_free(s); }
};
struct BasisDeleter
{
    void operator()(jac_basis *b) const { jac_basis_free(b); }
};
struct StringDeleter
{
    void operator()(char *s) const { jac_string_free(s); }
};

using ElementPtr = std::unique_ptr<jac_element, ElementDeleter>;
using ReportPtr = std::unique_ptr<jac_report, ReportDeleter>;
using SubsetsPtr = std::unique_ptr<jac_subset_list, SubsetsDeleter>;
using BasisPtr = std::unique_ptr<jac_basis, BasisDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

int report_failure(jac_status status)
{
    std::cerr << "jacobi: " << jac_status_name(status) << ": " << jac_last_error() << "\n";
    return status == JAC_ERR_INTERNAL || status == JAC_ERR_NO_MEMORY ? kExitInternal : kExitUsage;
}

bool read_input(const std::string &path, std::string &text)
{
    if (path.empty() || path == "-")
    {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
        return true;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
    {
        std::cerr << "jacobi: cannot open " << path << "\n";
        return false;
    }
    text.assign(std::istreambuf_iterator<char>(in), {});
    return true;
}

void emit(const StringPtr &text) { std::cout << text.get(); }

std::string join_tau(const std::vector<int> &tau)
{
    std::string out;
    for (std::size_t k = 0; k < tau.size(); ++k)
    {
        if (k)
            out += ' ';
        out += std::to_string(tau[k]);
    }
    return out;
}

void print_report(const jac_report *report)
{
    const int degree = jac_report_degree(report);
    std::ostringstream deciders;
    std::string witness;
    for (std::size_t k = 0; k < jac_report_decider_count(report); ++k)
    {
        std::vector<int> tau(static_cast<std::size_t>(degree));
        char *value = nullptr;
        const bool has = jac_report_decider_witness(report, k, tau.data(), &value);
        StringPtr owned(value);
        deciders << "decider " << jac_report_decider_name(report, k) << " "
                 << (jac_report_decider_is_jacobi(report, k) ? "yes" : "no");
        if (has)
        {
            deciders << " tau " << join_tau(tau) << " value " << value;
            if (witness.empty())
                witness = "witness " + join_tau(tau) + " value " + value + "\n";
        }
        deciders << "\n";
    }
    std::cout << (jac_report_is_jacobi(report) ? "JACOBI" : "NOT JACOBI") << "\n" << witness << deciders.str();
}

int cmd_omega(int n)
{
    jac_element *raw = nullptr;
    if (auto st = jac_element_omega(n, &raw); st != JAC_OK)
        return report_failure(st);
    ElementPtr element(raw);
    char *text = nullptr;
    if (auto st = jac_element_format(element.get(), &text); st != JAC_OK)
        return report_failure(st);
    emit(StringPtr(text));
    return kExitYes;
}

int cmd_expand(const std::vector<int> &images)
{
    char *text = nullptr;
    if (auto st = jac_expand_bracket(images.data(), images.size(), &text); st != JAC_OK)
        return report_failure(st);
    emit(StringPtr(text));
    return kExitYes;
}

int cmd_check_element(const std::string &path, int threads)
{
    std::string input;
    if (!read_input(path, input))
        return kExitUsage;
    jac_element *raw = nullptr;
    if (auto st = jac_element_parse(input.c_str(), &raw); st != JAC_OK)
        return report_failure(st);
    ElementPtr element(raw);
    jac_report *rep = nullptr;
    if (auto st = jac_check_element(element.get(), threads, &rep); st != JAC_OK)
        return report_failure(st);
    ReportPtr report(rep);
    print_report(report.get());
    return jac_report_is_jacobi(report.get()) ? kExitYes : kExitNo;
}

int cmd_check_subset(const std::string &path, bool table, int threads)
{
    std::string input;
    if (!read_input(path, input))
        return kExitUsage;
    jac_subset_list *raw = nullptr;
    if (auto st = jac_subsets_parse(input.c_str(), &raw); st != JAC_OK)
        return report_failure(st);
    SubsetsPtr list(raw);
    const std::size_t count = jac_subsets_count(list.get());
    bool all_jacobi = true;
    for (std::size_t k = 0; k < count; ++k)
    {
        if (count > 1)
            std::cout << (k ? "---\n" : "") << "# subset " << (k + 1) << " of " << count << " (size "
                      << jac_subsets_size(list.get(), k) << ")\n";
        jac_report *rep = nullptr;
        if (auto st = jac_check_subset(list.get(), k, threads, &rep); st != JAC_OK)
            return report_failure(st);
        ReportPtr report(rep);
        print_report(report.get());
        all_jacobi = all_jacobi && jac_report_is_jacobi(report.get());
        if (table)
        {
            char *text = nullptr;
            if (auto st = jac_subset_balance_table(list.get(), k, &text); st != JAC_OK)
                return report_failure(st);
            std::cout << "# tau | plus minus\n";
            emit(StringPtr(text));
        }
    }
    return all_jacobi ? kExitYes : kExitNo;
}

int cmd_basis(int n)
{
    jac_basis *raw = nullptr;
    if (auto st = jac_basis_compute(n, &raw); st != JAC_OK)
        return report_failure(st);
    BasisPtr basis(raw);
    char *text = nullptr;
    if (auto st = jac_basis_format(basis.get(), &text); st != JAC_OK)
        return report_failure(st);
    std::cerr << "rank " << jac_basis_rank(basis.get()) << "\n";
    emit(StringPtr(text));
    return kExitYes;
}

int cmd_search(const jac_search_options &options)
{
    jac_subset_list *raw = nullptr;
    if (auto st = jac_search(&options, &raw); st != JAC_OK)
        return report_failure(st);
    SubsetsPtr list(raw);
    char *text = nullptr;
    if (auto st = jac_subsets_format(list.get(), &text); st != JAC_OK)
        return report_failure(st);
    std::cerr << jac_subsets_count(list.get()) << " subsets\n";
    emit(StringPtr(text));
    return kExitYes;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Jacobi elements and Jacobi subsets of the symmetric group ring"};
    app.require_subcommand(1);

    int threads = 1;

    int omega_n = 0;
    auto *omega_cmd = app.add_subcommand("omega", "print the image of the full left-normed bracket");
    omega_cmd->add_option("N", omega_n, "degree")->required();

    std::vector<int> expand_images;
    auto *expand_cmd = app.add_subcommand("expand", "expand [x_P1, ..., x_PN] into monomials");
    expand_cmd->add_option("P", expand_images, "one-line permutation")->required();

    std::string element_path;
    auto *element_cmd = app.add_subcommand("check-element", "decide whether an element is Jacobi");
    element_cmd->add_option("FILE", element_path, "element file (stdin if omitted)");
    element_cmd->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

    std::string subset_path;
    bool table = false;
    auto *subset_cmd = app.add_subcommand("check-subset", "decide whether subsets are Jacobi");
    subset_cmd->add_option("FILE", subset_path, "subset file (stdin if omitted)");
    subset_cmd->add_flag("--table", table, "print per-tau coset counts");
    subset_cmd->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

    int basis_n = 0;
    auto *basis_cmd = app.add_subcommand("basis", "print a Z-basis of the Jacobi lattice");
    basis_cmd->add_option("N", basis_n, "degree")->required();

    jac_search_options search{0, -1, 0, 0, 1};
    bool nonempty = false;
    bool with_identity = false;
    auto *search_cmd = app.add_subcommand("search", "enumerate Jacobi subsets");
    search_cmd->add_option("N", search.degree, "degree")->required();
    search_cmd->add_option("--max-size", search.max_size, "largest subset size")->check(CLI::NonNegativeNumber);
    search_cmd->add_flag("--nonempty", nonempty, "skip the empty subset");
    search_cmd->add_flag("--containing-identity", with_identity, "only subsets containing the identity");
    search_cmd->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? kExitYes : kExitUsage;
    }

    if (*omega_cmd)
        return cmd_omega(omega_n);
    if (*expand_cmd)
        return cmd_expand(expand_images);
    if (*element_cmd)
        return cmd_check_element(element_path, threads);
    if (*subset_cmd)
        return cmd_check_subset(subset_path, table, threads);
    if (*basis_cmd)
        return cmd_basis(basis_n);
    if (*search_cmd)
    {
        search.require_nonempty = nonempty;
        search.require_identity = with_identity;
        search.threads = threads;
        return cmd_search(search);
    }
    return kExitUsage;
}
