#pragma once

#include "jacobi/group_ring.hpp"

#include <optional>
#include <vector>

namespace jacobi {

/// The first tau (in lex order) at which a per-tau criterion fails.
struct Witness
{
    Permutation tau;
    /// Value of the violated sum; for subsets, plus_count - minus_count.
    mpz_class value;
    std::size_t plus_count = 0;
    std::size_t minus_count = 0;
};

struct JacobiVerdict
{
    bool is_jacobi = true;
    std::optional<Witness> witness;
};

/// Ground truth: the expanded bracket combination vanishes in the free
/// associative ring, hence in the free Lie ring.
bool is_jacobi_bruteforce(const GroupRingElement &a);

/// a * omega_n == 0.
bool is_jacobi_omega(const GroupRingElement &a);

/// <a, tau * s(omega_n)> == 0 for every tau in S_n.
JacobiVerdict is_jacobi_orthogonality(const GroupRingElement &a, int threads = 1);

/// For every tau: sum over g in I+ of lambda(tau g) minus the same over I-
/// vanishes.
JacobiVerdict is_jacobi_coset_sums(const GroupRingElement &lambda, int threads = 1);

/// |T intersect tau I+| == |T intersect tau I-| for every tau. Members of
/// `subset` must be distinct and of degree n.
JacobiVerdict is_jacobi_subset(std::span<const Permutation> subset, int n, int threads = 1);

struct BalanceRow
{
    Permutation tau;
    std::size_t plus_count;
    std::size_t minus_count;
};

/// The per-tau counts examined by is_jacobi_subset, tau in lex order.
std::vector<BalanceRow> subset_balance_table(std::span<const Permutation> subset, int n);

/// Characteristic element of a subset: coefficient 1 on members.
GroupRingElement indicator(std::span<const Permutation> subset, int n);

} // namespace jacobi
