#include "jacobi/free_algebra.hpp"

#include "jacobi/shuffles.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace jacobi;
using jacobi::testing::ElementGenerator;
using jacobi::testing::P;

namespace {

MultilinearPolynomial poly(int n, std::initializer_list<std::pair<Permutation, long>> terms)
{
    MultilinearPolynomial p(n);
    for (const auto &[w, c] : terms)
        p.add_term(w, c);
    return p;
}

std::vector<int> iota_letters(int n)
{
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        v[static_cast<std::size_t>(k)] = k + 1;
    return v;
}

} // namespace

TEST(FreeAlgebra, ExpandExamples)
{
    EXPECT_EQ(expand_left_normed_bracket(std::vector{1}, 1), poly(1, {{P({1}), 1}}));
    EXPECT_EQ(expand_left_normed_bracket(std::vector{1, 2}, 2), poly(2, {{P({1, 2}), 1}, {P({2, 1}), -1}}));
    EXPECT_EQ(expand_left_normed_bracket(std::vector{1, 2, 3}, 3),
              poly(3, {{P({1, 2, 3}), 1}, {P({2, 1, 3}), -1}, {P({3, 1, 2}), -1}, {P({3, 2, 1}), 1}}));
}

TEST(FreeAlgebra, ExpandRejectsBadLetters)
{
    EXPECT_THROW(expand_left_normed_bracket(std::vector{1, 1}, 2), std::invalid_argument);
    EXPECT_THROW(expand_left_normed_bracket(std::vector{1, 3}, 2), std::invalid_argument);
    EXPECT_THROW(expand_left_normed_bracket(std::vector{1, 2}, 3), std::invalid_argument);
}

TEST(FreeAlgebra, ExpandShape)
{
    for (int n = 1; n <= 7; ++n)
    {
        const auto p = expand_left_normed_bracket(iota_letters(n), n);
        EXPECT_EQ(p.size(), std::size_t{1} << (n - 1));
        for (const auto &[w, c] : p.terms())
            EXPECT_TRUE(c == 1 || c == -1);
        EXPECT_EQ(p.coefficient(Permutation::identity(n)), 1);
    }
}

TEST(FreeAlgebra, PhiExamples)
{
    EXPECT_TRUE(phi(MultilinearPolynomial(3)).is_zero());
    EXPECT_EQ(phi(expand_left_normed_bracket(std::vector{1, 2}, 2)), omega(2));
    for (int n = 1; n <= 6; ++n)
        EXPECT_EQ(phi(expand_left_normed_bracket(iota_letters(n), n)), omega(n)) << "n=" << n;
}

TEST(FreeAlgebra, BetaTildeExamples)
{
    EXPECT_TRUE(beta_tilde(GroupRingElement(3)).is_zero());
    EXPECT_EQ(beta_tilde(GroupRingElement::basis(P({1, 2}))), poly(2, {{P({1, 2}), 1}, {P({2, 1}), -1}}));
    GroupRingElement antisym(2);
    antisym.add_term(P({1, 2}), 1);
    antisym.add_term(P({2, 1}), 1);
    EXPECT_TRUE(beta_tilde(antisym).is_zero());
}

TEST(FreeAlgebra, OmegaRightMultiplyExamples)
{
    EXPECT_TRUE(omega_right_multiply(GroupRingElement(4)).is_zero());
    for (int n = 1; n <= 5; ++n)
        EXPECT_EQ(omega_right_multiply(GroupRingElement::basis(Permutation::identity(n))), omega(n));
    GroupRingElement antisym(2);
    antisym.add_term(P({1, 2}), 1);
    antisym.add_term(P({2, 1}), 1);
    EXPECT_TRUE(omega_right_multiply(antisym).is_zero());
}

TEST(FreeAlgebraProperty, DiagramCommutes)
{
    ElementGenerator gen(201);
    for (int trial = 0; trial < 200; ++trial)
    {
        const int n = gen.integer(1, 5);
        const auto a = gen.element(n);
        EXPECT_EQ(phi(beta_tilde(a)), omega_right_multiply(a));
    }
}

TEST(FreeAlgebraProperty, RelabelingIsLeftTranslation)
{
    for (int n = 1; n <= 5; ++n)
        for (const auto &sigma : enumerate_symmetric_group(n))
            EXPECT_EQ(phi(expand_left_normed_bracket(sigma)), translate(sigma, omega(n)))
                << "sigma=" << sigma.to_string();
}

TEST(FreeAlgebraProperty, PhiIsBijective)
{
    ElementGenerator gen(202);
    for (int trial = 0; trial < 100; ++trial)
    {
        const auto a = gen.element(gen.integer(1, 5));
        EXPECT_EQ(phi(phi_inverse(a)), a);
        const auto p = phi_inverse(a);
        EXPECT_EQ(phi_inverse(phi(p)), p);
    }
}
