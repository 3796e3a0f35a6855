#include "jacobi/jacobi_c.h"

#include "jacobi/lattice.hpp"
#include "jacobi/search.hpp"
#include "jacobi/shuffles.hpp"
#include "jacobi/text_format.hpp"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>

using namespace jacobi;

struct jac_element
{
    GroupRingElement value;
};

struct jac_report
{
    DeciderReport value;
};

struct jac_subset_list
{
    SubsetList value;
};

struct jac_basis
{
    LatticeBasis value;
};

namespace {

thread_local std::string last_error;
thread_local std::size_t last_error_line = 0;

jac_status fail(jac_status status, const std::string &message, std::size_t line = 0)
{
    last_error = message;
    last_error_line = line;
    return status;
}

// Runs body, translating exceptions into status codes.
template <class Body>
jac_status guarded(Body &&body)
{
    try
    {
        last_error.clear();
        last_error_line = 0;
        body();
        return JAC_OK;
    }
    catch (const ParseError &e)
    {
        return fail(JAC_ERR_PARSE, e.what(), e.line());
    }
    catch (const DegreeMismatch &e)
    {
        return fail(JAC_ERR_DEGREE_MISMATCH, e.what());
    }
    catch (const UnsupportedSearch &e)
    {
        return fail(JAC_ERR_UNSUPPORTED, e.what());
    }
    catch (const InternalDisagreement &e)
    {
        return fail(JAC_ERR_INTERNAL, e.what());
    }
    catch (const std::bad_alloc &)
    {
        return fail(JAC_ERR_NO_MEMORY, "out of memory");
    }
    catch (const std::invalid_argument &e)
    {
        return fail(JAC_ERR_INVALID_ARGUMENT, e.what());
    }
    catch (const std::out_of_range &e)
    {
        return fail(JAC_ERR_INVALID_ARGUMENT, e.what());
    }
    catch (const std::exception &e)
    {
        return fail(JAC_ERR_INTERNAL, e.what());
    }
}

char *duplicate(const std::string &s)
{
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

#define JAC_REQUIRE(cond)                                                                          \
    do                                                                                             \
    {                                                                                              \
        if (!(cond))                                                                               \
            return fail(JAC_ERR_INVALID_ARGUMENT, "null argument: " #cond);                        \
    } while (0)

const Subset &subset_at(const jac_subset_list *list, std::size_t index)
{
    if (index >= list->value.subsets.size())
        throw std::out_of_range("subset index " + std::to_string(index) + " out of range");
    return list->value.subsets[index];
}

// An input without any permutation carries no degree; all its subsets are
// empty and the empty subset is Jacobi in every degree, so check it in S_1.
int effective_degree(const jac_subset_list *list)
{
    return list->value.degree ? list->value.degree : 1;
}

} // namespace

extern "C" {

const char *jac_last_error(void) { return last_error.c_str(); }

size_t jac_last_error_line(void) { return last_error_line; }

const char *jac_status_name(jac_status status)
{
    switch (status)
    {
    case JAC_OK:
        return "ok";
    case JAC_ERR_INVALID_ARGUMENT:
        return "invalid argument";
    case JAC_ERR_DEGREE_MISMATCH:
        return "degree mismatch";
    case JAC_ERR_PARSE:
        return "parse error";
    case JAC_ERR_UNSUPPORTED:
        return "unsupported";
    case JAC_ERR_INTERNAL:
        return "internal error";
    case JAC_ERR_NO_MEMORY:
        return "out of memory";
    }
    return "unknown status";
}

int jac_max_degree(void) { return kMaxDegree; }

void jac_string_free(char *text) { std::free(text); }

jac_status jac_element_parse(const char *text, jac_element **out)
{
    JAC_REQUIRE(text && out);
    return guarded([&] { *out = new jac_element{parse_element(text)}; });
}

jac_status jac_element_omega(int n, jac_element **out)
{
    JAC_REQUIRE(out);
    return guarded([&] { *out = new jac_element{omega(n)}; });
}

jac_status jac_element_format(const jac_element *element, char **out_text)
{
    JAC_REQUIRE(element && out_text);
    return guarded([&] { *out_text = duplicate(format_element(element->value)); });
}

int jac_element_degree(const jac_element *element) { return element ? element->value.degree() : 0; }

size_t jac_element_term_count(const jac_element *element) { return element ? element->value.size() : 0; }

int jac_element_equal(const jac_element *a, const jac_element *b)
{
    return a && b && a->value == b->value;
}

void jac_element_free(jac_element *element) { delete element; }

jac_status jac_expand_bracket(const int *images, size_t n, char **out_text)
{
    JAC_REQUIRE(images && out_text);
    return guarded([&] {
        const std::span<const int> letters(images, n);
        *out_text = duplicate(
            format_polynomial(expand_left_normed_bracket(letters, static_cast<int>(n))));
    });
}

jac_status jac_check_element(const jac_element *element, int threads, jac_report **out)
{
    JAC_REQUIRE(element && out);
    return guarded([&] { *out = new jac_report{verify_element_report(element->value, threads)}; });
}

jac_status jac_check_subset(const jac_subset_list *list, size_t index, int threads, jac_report **out)
{
    JAC_REQUIRE(list && out);
    return guarded([&] {
        *out = new jac_report{verify_subset_report(subset_at(list, index), effective_degree(list), threads)};
    });
}

int jac_report_is_jacobi(const jac_report *report) { return report && report->value.is_jacobi; }

int jac_report_degree(const jac_report *report) { return report ? report->value.degree : 0; }

size_t jac_report_decider_count(const jac_report *report)
{
    return report ? report->value.deciders.size() : 0;
}

const char *jac_report_decider_name(const jac_report *report, size_t k)
{
    if (!report || k >= report->value.deciders.size())
        return nullptr;
    return report->value.deciders[k].name;
}

int jac_report_decider_is_jacobi(const jac_report *report, size_t k)
{
    if (!report || k >= report->value.deciders.size())
        return 0;
    return report->value.deciders[k].verdict.is_jacobi;
}

int jac_report_decider_witness(const jac_report *report, size_t k, int *tau_out, char **value_out)
{
    if (!report || k >= report->value.deciders.size())
        return 0;
    const auto &witness = report->value.deciders[k].verdict.witness;
    if (!witness)
        return 0;
    if (tau_out)
        for (int i = 1; i <= witness->tau.degree(); ++i)
            tau_out[i - 1] = witness->tau(i);
    if (value_out)
    {
        *value_out = nullptr;
        if (guarded([&] { *value_out = duplicate(witness->value.get_str()); }) != JAC_OK)
            return 0;
    }
    return 1;
}

void jac_report_free(jac_report *report) { delete report; }

jac_status jac_subsets_parse(const char *text, jac_subset_list **out)
{
    JAC_REQUIRE(text && out);
    return guarded([&] { *out = new jac_subset_list{parse_subsets(text)}; });
}

size_t jac_subsets_count(const jac_subset_list *list) { return list ? list->value.subsets.size() : 0; }

int jac_subsets_degree(const jac_subset_list *list) { return list ? list->value.degree : 0; }

size_t jac_subsets_size(const jac_subset_list *list, size_t index)
{
    if (!list || index >= list->value.subsets.size())
        return 0;
    return list->value.subsets[index].size();
}

jac_status jac_subsets_format(const jac_subset_list *list, char **out_text)
{
    JAC_REQUIRE(list && out_text);
    return guarded([&] { *out_text = duplicate(format_subsets(list->value.subsets)); });
}

jac_status jac_subset_balance_table(const jac_subset_list *list, size_t index, char **out_text)
{
    JAC_REQUIRE(list && out_text);
    return guarded([&] {
        std::string text;
        for (const auto &row : subset_balance_table(subset_at(list, index), effective_degree(list)))
            text += row.tau.to_string() + " | " + std::to_string(row.plus_count) + " " +
                    std::to_string(row.minus_count) + "\n";
        *out_text = duplicate(text);
    });
}

void jac_subsets_free(jac_subset_list *list) { delete list; }

jac_status jac_search(const jac_search_options *options, jac_subset_list **out)
{
    JAC_REQUIRE(options && out);
    return guarded([&] {
        SearchOptions o;
        o.degree = options->degree;
        if (options->max_size >= 0)
            o.max_size = static_cast<std::size_t>(options->max_size);
        o.require_nonempty = options->require_nonempty != 0;
        o.require_identity = options->require_identity != 0;
        o.threads = options->threads;
        auto list = std::make_unique<jac_subset_list>();
        list->value.degree = options->degree;
        list->value.subsets = enumerate_jacobi_subsets(o);
        *out = list.release();
    });
}

jac_status jac_basis_compute(int n, jac_basis **out)
{
    JAC_REQUIRE(out);
    return guarded([&] { *out = new jac_basis{jacobi_lattice_basis(n)}; });
}

size_t jac_basis_rank(const jac_basis *basis) { return basis ? basis->value.rank() : 0; }

jac_status jac_basis_format(const jac_basis *basis, char **out_text)
{
    JAC_REQUIRE(basis && out_text);
    return guarded([&] {
        const auto elements = basis->value.elements();
        *out_text = duplicate(format_element_stanzas(elements));
    });
}

jac_status jac_basis_contains(const jac_basis *basis, const jac_element *element, int *out_member)
{
    JAC_REQUIRE(basis && element && out_member);
    return guarded([&] { *out_member = basis->value.contains(element->value) ? 1 : 0; });
}

void jac_basis_free(jac_basis *basis) { delete basis; }

} // extern "C"
