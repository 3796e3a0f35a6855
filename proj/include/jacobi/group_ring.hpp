#pragma once

#include "jacobi/permutation.hpp"

#include <gmpxx.h>

#include <map>

namespace jacobi {

/// Sparse finite combination of permutations with exact integer coefficients.
///
/// Zero coefficients are never stored, so two combinations are equal exactly
/// when their term maps are. Terms iterate in lexicographic order of the
/// permutations. Shared storage for group ring elements and multilinear
/// polynomials, which differ only in the operations defined on them.
class SparseTerms
{
  public:
    using Map = std::map<Permutation, mpz_class>;

    explicit SparseTerms(int degree);

    int degree() const { return degree_; }
    const Map &terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient of p (zero when absent).
    mpz_class coefficient(const Permutation &p) const;

    /// Adds c to the coefficient of p, dropping the term if it cancels.
    void add_term(const Permutation &p, const mpz_class &c);

    void check_same_degree(const SparseTerms &other, const char *what) const;

    friend bool operator==(const SparseTerms &, const SparseTerms &) = default;

  protected:
    int degree_;
    Map terms_;
};

/// An element of the integral group ring Z[S_n].
class GroupRingElement : public SparseTerms
{
  public:
    explicit GroupRingElement(int degree) : SparseTerms(degree) {}

    /// The basis element c * p.
    static GroupRingElement basis(const Permutation &p, const mpz_class &c = 1);

    /// Sum of the given permutations with coefficient 1 each; all must have degree n.
    static GroupRingElement sum_of(int n, std::span<const Permutation> perms);

    GroupRingElement &operator+=(const GroupRingElement &other);
    GroupRingElement &operator-=(const GroupRingElement &other);
    GroupRingElement &operator*=(const mpz_class &scalar);

    friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement &b) { return a += b; }
    friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement &b) { return a -= b; }
    friend GroupRingElement operator-(GroupRingElement a) { return a *= -1; }
    friend GroupRingElement operator*(GroupRingElement a, const mpz_class &s) { return a *= s; }

    friend bool operator==(const GroupRingElement &, const GroupRingElement &) = default;
};

GroupRingElement add(const GroupRingElement &a, const GroupRingElement &b);

/// Convolution product: coefficient of g is the sum of a(f) b(h) over f * h = g.
GroupRingElement multiply(const GroupRingElement &a, const GroupRingElement &b);

/// tau * a, i.e. every term sigma becomes compose(tau, sigma).
GroupRingElement translate(const Permutation &tau, const GroupRingElement &a);

/// Linear extension of g -> g^{-1}.
GroupRingElement antipode(const GroupRingElement &a);

/// Untwisted pairing: sum over g of a(g) b(g).
mpz_class scalar_product(const GroupRingElement &a, const GroupRingElement &b);

/// Sum of all coefficients.
mpz_class augmentation(const GroupRingElement &a);

} // namespace jacobi
