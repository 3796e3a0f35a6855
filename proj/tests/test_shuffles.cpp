#include "jacobi/shuffles.hpp"

#include "jacobi/free_algebra.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace jacobi;
using jacobi::testing::P;

namespace {

std::size_t binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    std::size_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
    return r;
}

} // namespace

TEST(Shuffles, Examples)
{
    const auto s11 = enumerate_shuffles(1, 1);
    ASSERT_EQ(s11.size(), 2u);
    EXPECT_EQ(s11[0], (Shuffle{{1}, {2}}));
    EXPECT_EQ(s11[1], (Shuffle{{2}, {1}}));
    EXPECT_EQ(enumerate_shuffles(2, 2).size(), 6u);
    const auto s00 = enumerate_shuffles(0, 0);
    ASSERT_EQ(s00.size(), 1u);
    EXPECT_TRUE(s00[0].alpha.empty() && s00[0].beta.empty());
}

TEST(Shuffles, FirstFixedExamples)
{
    const auto s21 = enumerate_shuffles_first_fixed(2, 1);
    ASSERT_EQ(s21.size(), 2u);
    EXPECT_EQ(s21[0], (Shuffle{{1, 2}, {3}}));
    EXPECT_EQ(s21[1], (Shuffle{{1, 3}, {2}}));
    EXPECT_EQ(enumerate_shuffles_first_fixed(3, 2).size(), 6u);
    EXPECT_EQ(enumerate_shuffles_first_fixed(1, 0), (std::vector{Shuffle{{1}, {}}}));
    EXPECT_THROW(enumerate_shuffles_first_fixed(0, 2), std::invalid_argument);
}

TEST(Shuffles, CardinalitiesAndShape)
{
    for (int s = 0; s <= 6; ++s)
        for (int t = 0; t <= 6; ++t)
        {
            const auto all = enumerate_shuffles(s, t);
            EXPECT_EQ(all.size(), binomial(s + t, s));
            for (const auto &sh : all)
            {
                EXPECT_TRUE(std::is_sorted(sh.alpha.begin(), sh.alpha.end()));
                EXPECT_TRUE(std::is_sorted(sh.beta.begin(), sh.beta.end()));
                std::set<int> values(sh.alpha.begin(), sh.alpha.end());
                values.insert(sh.beta.begin(), sh.beta.end());
                EXPECT_EQ(values.size(), static_cast<std::size_t>(s + t));
            }
            if (s >= 1)
            {
                const auto fixed = enumerate_shuffles_first_fixed(s, t);
                EXPECT_EQ(fixed.size(), binomial(s + t - 1, t));
                for (const auto &sh : fixed)
                    EXPECT_EQ(sh.alpha.front(), 1);
            }
        }
}

TEST(Shuffles, RifflePermutationExamples)
{
    EXPECT_EQ(riffle_permutation(2, 1, Shuffle{{1}, {2}}), P({2, 1}));
    EXPECT_EQ(riffle_permutation(3, 1, Shuffle{{1, 2}, {3}}), P({3, 1, 2}));
    EXPECT_EQ(riffle_permutation(3, 2, Shuffle{{1}, {2, 3}}), P({3, 2, 1}));
    EXPECT_THROW(riffle_permutation(3, 1, Shuffle{{2, 3}, {1}}), std::invalid_argument);
    EXPECT_THROW(riffle_permutation(3, 2, Shuffle{{1, 2}, {3}}), std::invalid_argument);
    EXPECT_THROW(riffle_permutation(3, 3, Shuffle{{}, {1, 2, 3}}), std::invalid_argument);
}

TEST(Shuffles, OmegaExamples)
{
    EXPECT_EQ(omega(1), GroupRingElement::basis(P({1})));

    // Expanding [x1, x2] = x1 x2 - x2 x1 by hand.
    GroupRingElement w2(2);
    w2.add_term(P({1, 2}), 1);
    w2.add_term(P({2, 1}), -1);
    EXPECT_EQ(omega(2), w2);

    // (x1x2 - x2x1)x3 - x3(x1x2 - x2x1).
    GroupRingElement w3(3);
    w3.add_term(P({1, 2, 3}), 1);
    w3.add_term(P({2, 1, 3}), -1);
    w3.add_term(P({3, 1, 2}), -1);
    w3.add_term(P({3, 2, 1}), 1);
    EXPECT_EQ(omega(3), w3);
}

TEST(Shuffles, OmegaShape)
{
    for (int n = 1; n <= 7; ++n)
    {
        const auto &w = omega(n);
        EXPECT_EQ(w.size(), std::size_t{1} << (n - 1));
        for (const auto &[g, c] : w.terms())
            EXPECT_TRUE(c == 1 || c == -1);
        if (n >= 2)
            EXPECT_EQ(augmentation(w), 0);
    }
}

TEST(Shuffles, RifflesDistinctAndStratifiedByPositionOfOne)
{
    for (int n = 1; n <= 7; ++n)
    {
        std::set<Permutation> seen;
        std::size_t count = 0;
        for_each_riffle(n, [&](int i, const Shuffle &, const Permutation &r) {
            EXPECT_EQ(r(i + 1), 1);
            seen.insert(r);
            ++count;
        });
        EXPECT_EQ(count, std::size_t{1} << (n - 1));
        EXPECT_EQ(seen.size(), count);
    }
}

TEST(Shuffles, IndexSetExamples)
{
    const auto &s2 = jacobi_index_sets(2);
    EXPECT_EQ(s2.plus, (std::vector{P({1, 2})}));
    EXPECT_EQ(s2.minus, (std::vector{P({2, 1})}));

    // Inverses of the four omega_3 riffles; [3,1,2]^{-1} = [2,3,1].
    const auto &s3 = jacobi_index_sets(3);
    EXPECT_EQ(std::set<Permutation>(s3.plus.begin(), s3.plus.end()),
              (std::set{P({1, 2, 3}), P({3, 2, 1})}));
    EXPECT_EQ(std::set<Permutation>(s3.minus.begin(), s3.minus.end()),
              (std::set{P({2, 3, 1}), P({2, 1, 3})}));

    const auto &s4 = jacobi_index_sets(4);
    EXPECT_EQ(s4.plus.size(), 4u);
    EXPECT_EQ(s4.minus.size(), 4u);
}

TEST(Shuffles, IndexSetsMatchAntipodeOfOmega)
{
    for (int n = 1; n <= 7; ++n)
    {
        const auto &sets = jacobi_index_sets(n);
        std::size_t plus = 0, minus = 0;
        for (int i = 0; i < n; ++i)
            (i % 2 == 0 ? plus : minus) += binomial(n - 1, i);
        EXPECT_EQ(sets.plus.size(), plus);
        EXPECT_EQ(sets.minus.size(), minus);

        const auto twisted = antipode(omega(n));
        EXPECT_EQ(twisted.size(), sets.plus.size() + sets.minus.size());
        for (const auto &g : sets.plus)
            EXPECT_EQ(twisted.coefficient(g), 1);
        for (const auto &g : sets.minus)
            EXPECT_EQ(twisted.coefficient(g), -1);
    }
}
