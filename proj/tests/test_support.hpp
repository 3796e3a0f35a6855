#pragma once

// Shared fixtures, generators and independent oracles for the test suites.
// Nothing here calls into the code path it is used to check.

#include "jacobi/group_ring.hpp"
#include "jacobi/lattice.hpp"

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace jacobi::testing {

using Perms = std::vector<Permutation>;

inline Permutation P(std::initializer_list<int> v) { return Permutation(v); }

/// The identities displayed in the introduction, as subsets of S_n.
inline Perms antisymmetry() { return {P({1, 2}), P({2, 1})}; }
inline Perms jacobi_identity() { return {P({1, 2, 3}), P({2, 3, 1}), P({3, 1, 2})}; }
inline Perms identity_n4_size4()
{
    return {P({1, 2, 3, 4}), P({3, 4, 1, 2}), P({2, 1, 4, 3}), P({4, 3, 2, 1})};
}
inline Perms identity_n4_size5()
{
    return {P({1, 2, 3, 4}), P({3, 1, 2, 4}), P({4, 1, 2, 3}), P({1, 4, 3, 2}), P({2, 3, 4, 1})};
}
inline Perms identity_n4_size6()
{
    return {P({1, 2, 3, 4}), P({3, 1, 2, 4}), P({2, 1, 4, 3}),
            P({4, 2, 1, 3}), P({1, 4, 3, 2}), P({2, 3, 4, 1})};
}
inline Perms identity_n4_size7()
{
    return {P({1, 2, 3, 4}), P({3, 1, 2, 4}), P({2, 1, 4, 3}), P({4, 2, 1, 3}),
            P({1, 3, 4, 2}), P({3, 4, 1, 2}), P({2, 3, 4, 1})};
}
inline std::vector<Perms> known_n4_identities()
{
    return {identity_n4_size4(), identity_n4_size5(), identity_n4_size6(), identity_n4_size7()};
}

/// Seeded generator: coefficients uniform in [-3, 3] on each permutation
/// with probability 1/2.
class ElementGenerator
{
  public:
    explicit ElementGenerator(std::uint64_t seed) : rng_(seed) {}

    GroupRingElement element(int n)
    {
        std::bernoulli_distribution keep(0.5);
        std::uniform_int_distribution<int> coef(-3, 3);
        GroupRingElement a(n);
        for (std::size_t r = 0; r < factorial(n); ++r)
            if (keep(rng_))
                a.add_term(Permutation::from_lex_rank(n, r), coef(rng_));
        return a;
    }

    Permutation permutation(int n)
    {
        std::uniform_int_distribution<std::size_t> pick(0, factorial(n) - 1);
        return Permutation::from_lex_rank(n, pick(rng_));
    }

    /// Uniform random subset of S_n.
    Perms subset(int n)
    {
        std::bernoulli_distribution keep(0.5);
        Perms out;
        for (std::size_t r = 0; r < factorial(n); ++r)
            if (keep(rng_))
                out.push_back(Permutation::from_lex_rank(n, r));
        return out;
    }

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  private:
    std::mt19937_64 rng_;
};

/// Fraction-free (Bareiss) elimination; returns the rank and, for square
/// input, the determinant. Independent of the Hermite normal form code.
struct BareissResult
{
    std::size_t rank;
    mpz_class determinant;
};

inline BareissResult bareiss(IntegerMatrix m)
{
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    mpz_class prev = 1;
    int sign = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col)
    {
        std::size_t pivot = rank;
        while (pivot < rows && m(pivot, col) == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != rank)
        {
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(m(pivot, j), m(rank, j));
            sign = -sign;
        }
        for (std::size_t i = rank + 1; i < rows; ++i)
        {
            for (std::size_t j = col + 1; j < cols; ++j)
            {
                mpz_class v = m(rank, col) * m(i, j) - m(i, col) * m(rank, j);
                if (!mpz_divisible_p(v.get_mpz_t(), prev.get_mpz_t()))
                    throw std::logic_error("Bareiss step not exact");
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = v;
            }
            m(i, col) = 0;
        }
        prev = m(rank, col);
        ++rank;
    }
    mpz_class det = 0;
    if (rows == cols && rank == rows)
        det = sign * m(rows - 1, cols - 1);
    return {rank, det};
}

} // namespace jacobi::testing
