#pragma once

#include "jacobi/group_ring.hpp"

#include <vector>

namespace jacobi {

/// Dense row-major matrix of arbitrary precision integers.
class IntegerMatrix
{
  public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols);
    IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntegerMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    mpz_class &operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const mpz_class &operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::span<mpz_class> row(std::size_t i) { return {entries_.data() + i * cols_, cols_}; }
    std::span<const mpz_class> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }

    bool row_is_zero(std::size_t i) const;

    friend bool operator==(const IntegerMatrix &, const IntegerMatrix &) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> entries_;
};

IntegerMatrix operator*(const IntegerMatrix &a, const IntegerMatrix &b);

struct HermiteDecomposition
{
    IntegerMatrix hermite;    // H
    IntegerMatrix transform;  // U, unimodular, U * M = H
    std::size_t rank = 0;     // number of nonzero rows of H
};

/// Row Hermite normal form: pivots positive and strictly moving right,
/// entries above each pivot reduced into [0, pivot), zero rows last.
HermiteDecomposition hermite_normal_form(const IntegerMatrix &m);

/// Z-basis of the left kernel {v : v M = 0}: the rows of U matching the
/// zero rows of H. The basis is saturated.
std::vector<std::vector<mpz_class>> kernel_basis(const IntegerMatrix &m);

/// Row sigma holds the coefficients of sigma * omega_n; rows and columns
/// follow the lex order of S_n. Supported for n <= 6.
IntegerMatrix omega_matrix(int n);

inline constexpr int kMaxLatticeDegree = 6;

/// Basis of the Jacobi elements of Z[S_n] as a lattice, in row Hermite
/// normal form over the lex-ordered permutation basis.
class LatticeBasis
{
  public:
    LatticeBasis(int degree, IntegerMatrix hermite_rows);

    int degree() const { return degree_; }
    std::size_t rank() const { return hnf_.rows(); }
    const IntegerMatrix &matrix() const { return hnf_; }

    /// Basis vectors as group ring elements.
    std::vector<GroupRingElement> elements() const;

    /// Whether a is an integer combination of the basis.
    bool contains(const GroupRingElement &a) const;

  private:
    int degree_;
    IntegerMatrix hnf_;
    std::vector<std::size_t> pivots_;
};

LatticeBasis jacobi_lattice_basis(int n);

bool lattice_membership(const GroupRingElement &a, const LatticeBasis &basis);

} // namespace jacobi
