#include "cli_runner.hpp"

#include "jacobi/text_format.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

using namespace jacobi;
using namespace jacobi::testing;

namespace {

std::string slurp(const std::string &path)
{
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::size_t count_lines(const std::string &s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

std::size_t count_stanzas(const std::string &s)
{
    if (s.empty())
        return 0;
    std::size_t n = 1;
    for (std::size_t pos = 0; (pos = s.find("---\n", pos)) != std::string::npos; pos += 4)
        ++n;
    return n;
}

} // namespace

TEST(Cli, Omega)
{
    EXPECT_EQ(run_cli("omega 2").out, "1 1 2\n-1 2 1\n");
    EXPECT_EQ(run_cli("omega 1").out, "1 1\n");
    const auto r3 = run_cli("omega 3");
    EXPECT_EQ(r3.exit_code, 0);
    EXPECT_EQ(r3.out, "1 1 2 3\n-1 2 1 3\n-1 3 1 2\n1 3 2 1\n");
    EXPECT_EQ(run_cli("omega 0").exit_code, 2);
    EXPECT_EQ(run_cli("omega 99").exit_code, 2);
    EXPECT_EQ(run_cli("omega x").exit_code, 2);
}

TEST(Cli, Expand)
{
    EXPECT_EQ(run_cli("expand 1 2").out, "1 1 2\n-1 2 1\n");
    EXPECT_EQ(run_cli("expand 1 2 3").out, run_cli("omega 3").out);
    // Left translate of omega_3 by [2,1,3].
    EXPECT_EQ(run_cli("expand 2 1 3").out, "-1 1 2 3\n1 2 1 3\n1 3 1 2\n-1 3 2 1\n");
    EXPECT_EQ(run_cli("expand 1 1").exit_code, 2);
}

TEST(Cli, CheckElement)
{
    const auto yes = run_cli("check-element", "1 1 2\n1 2 1\n");
    EXPECT_EQ(yes.exit_code, 0);
    EXPECT_EQ(yes.out.substr(0, 7), "JACOBI\n");

    const auto no = run_cli("check-element", "1 1 2\n");
    EXPECT_EQ(no.exit_code, 1);
    EXPECT_EQ(no.out.substr(0, 11), "NOT JACOBI\n");
    EXPECT_NE(no.out.find("witness 1 2 value 1\n"), std::string::npos);

    EXPECT_EQ(run_cli("check-element '" + fixture("malformed.elem") + "'").exit_code, 2);
    EXPECT_EQ(run_cli("check-element /nonexistent/file").exit_code, 2);
    EXPECT_EQ(run_cli("check-element '" + fixture("jacobi_doubled.elem") + "'").exit_code, 0);
}

TEST(Cli, CheckSubset)
{
    const auto seven = run_cli("check-subset '" + fixture("identity_n4_size7.subset") + "'");
    EXPECT_EQ(seven.exit_code, 0);
    EXPECT_EQ(seven.out.substr(0, 7), "JACOBI\n");

    const auto single = run_cli("check-subset", "1 2 3\n");
    EXPECT_EQ(single.exit_code, 1);
    EXPECT_NE(single.out.find("witness 1 2 3"), std::string::npos);

    const auto table = run_cli("check-subset --table '" + fixture("identity_n4_size5.subset") + "'");
    EXPECT_EQ(table.exit_code, 0);
    std::istringstream lines(table.out);
    std::size_t rows = 0;
    for (std::string line; std::getline(lines, line);)
    {
        const auto bar = line.find(" | ");
        if (bar == std::string::npos || line[0] == '#')
            continue;
        ++rows;
        std::istringstream counts(line.substr(bar + 3));
        int plus = -1, minus = -2;
        counts >> plus >> minus;
        EXPECT_EQ(plus, minus) << line;
    }
    EXPECT_EQ(rows, 24u);

    EXPECT_EQ(run_cli("check-subset", "1 2\n1 2\n").exit_code, 2);
}

TEST(Cli, Basis)
{
    const auto b2 = run_cli("basis 2");
    EXPECT_EQ(b2.exit_code, 0);
    EXPECT_EQ(count_stanzas(b2.out), 1u);
    const auto e2 = parse_element(b2.out);
    EXPECT_EQ(e2.size(), 2u);
    EXPECT_EQ(abs(e2.coefficient(Permutation({1, 2}))), 1);
    EXPECT_EQ(e2.coefficient(Permutation({1, 2})), e2.coefficient(Permutation({2, 1})));

    EXPECT_EQ(count_stanzas(run_cli("basis 3").out), 4u);
    EXPECT_EQ(count_stanzas(run_cli("basis 4").out), 18u);
    EXPECT_EQ(run_cli("basis 7").exit_code, 2);
}

TEST(Cli, Search)
{
    const auto two = run_cli("search 2 --nonempty");
    EXPECT_EQ(two.exit_code, 0);
    EXPECT_EQ(two.out, "1 2\n2 1\n");

    const auto four = run_cli("search 4 --max-size 4 --containing-identity");
    EXPECT_NE(four.out.find("1 2 3 4\n2 1 4 3\n3 4 1 2\n4 3 2 1\n"), std::string::npos);

    const auto three = run_cli("search 3");
    const auto parsed = parse_subsets(three.out);
    for (const auto &t : parsed.subsets)
        EXPECT_TRUE(is_jacobi_bruteforce(indicator(t, 3)));

    EXPECT_EQ(run_cli("search 5").exit_code, 2);
    EXPECT_EQ(run_cli("search 4 --max-size -1").exit_code, 2);
}

TEST(Cli, FixtureRoundTrip)
{
    for (const char *name : {"antisymmetry.elem", "single_bracket.elem", "jacobi_doubled.elem"})
    {
        const auto a = parse_element(slurp(fixture(name)));
        const auto text = format_element(a);
        EXPECT_EQ(parse_element(text), a) << name;
        EXPECT_EQ(format_element(parse_element(text)), text) << name;
    }
    for (const char *name : {"identity_n2.subset", "identity_n3.subset", "identity_n4_size4.subset",
                             "identity_n4_size5.subset", "identity_n4_size6.subset", "identity_n4_size7.subset"})
    {
        const auto list = parse_subsets(slurp(fixture(name)));
        const auto text = format_subsets(list.subsets);
        EXPECT_EQ(parse_subsets(text).subsets, list.subsets) << name;
        EXPECT_EQ(run_cli("check-subset '" + fixture(name) + "'").exit_code, 0) << name;
    }
    // Printed output of each command re-parses to the same element.
    for (const char *cmd : {"omega 4", "expand 3 1 4 2"})
    {
        const auto out = run_cli(cmd).out;
        EXPECT_EQ(format_element(parse_element(out)), out) << cmd;
    }
    const auto basis = run_cli("basis 3").out;
    EXPECT_EQ(format_element_stanzas(parse_element_stanzas(basis)), basis);
    EXPECT_GT(count_lines(basis), 0u);
}

TEST(Cli, ThreadCountDoesNotChangeBytes)
{
    EXPECT_EQ(run_cli("search 4 --max-size 5 --threads 1").out, run_cli("search 4 --max-size 5 --threads 8").out);
    const auto f = fixture("identity_n4_size6.subset");
    EXPECT_EQ(run_cli("check-subset --table --threads 1 '" + f + "'").out,
              run_cli("check-subset --table --threads 8 '" + f + "'").out);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run_cli("").exit_code, 2);
    EXPECT_EQ(run_cli("frobnicate").exit_code, 2);
    EXPECT_EQ(run_cli("--help").exit_code, 0);
}
