#pragma once

#include "jacobi/group_ring.hpp"

namespace jacobi {

/// Element of the multilinear degree-n part of Z<x_1, ..., x_n>.
///
/// The monomial x_{sigma(1)} ... x_{sigma(n)} is keyed by sigma. This is a
/// separate type from GroupRingElement: polynomials carry no group product.
class MultilinearPolynomial : public SparseTerms
{
  public:
    explicit MultilinearPolynomial(int degree) : SparseTerms(degree) {}

    MultilinearPolynomial &operator+=(const MultilinearPolynomial &other);
    MultilinearPolynomial &operator-=(const MultilinearPolynomial &other);

    friend bool operator==(const MultilinearPolynomial &, const MultilinearPolynomial &) = default;
};

/// Expands [x_{i_1}, ..., x_{i_n}] = [[x_{i_1}, ..., x_{i_{n-1}}], x_{i_n}]
/// in the free associative ring by iterating [p, x] = px - xp.
///
/// `indices` must list each of 1..n exactly once; a repeated or out of range
/// index throws std::invalid_argument.
MultilinearPolynomial expand_left_normed_bracket(std::span<const int> indices, int n);
MultilinearPolynomial expand_left_normed_bracket(const Permutation &sigma);

/// Word sigma with coefficient c becomes c * sigma.
GroupRingElement phi(const MultilinearPolynomial &p);
MultilinearPolynomial phi_inverse(const GroupRingElement &a);

/// Sum of a(sigma) [x_{sigma(1)}, ..., x_{sigma(n)}], expanded.
MultilinearPolynomial beta_tilde(const GroupRingElement &a);

/// a * omega_n.
GroupRingElement omega_right_multiply(const GroupRingElement &a);

} // namespace jacobi
