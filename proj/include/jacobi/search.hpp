#pragma once

#include "jacobi/jacobi.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace jacobi {

using Subset = std::vector<Permutation>;

enum class SearchMode
{
    Automatic, // exhaustive for n <= 4, pruned depth-first for n = 5
    Exhaustive,
    Pruned,
};

struct SearchOptions
{
    int degree = 0;
    std::optional<std::size_t> max_size;
    bool require_nonempty = false;
    bool require_identity = false;
    int threads = 1;
    SearchMode mode = SearchMode::Automatic;
};

/// Raised for option combinations outside the supported search envelope.
class UnsupportedSearch : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

/// Every Jacobi subset of S_n passing the filters. Members of each subset are
/// lex sorted; subsets are ordered by size, then lexicographically. Output
/// does not depend on the thread count.
///
/// Exhaustive mode covers n <= 4 by walking all 2^(n!) subsets in Gray-code
/// order with incremental per-tau balance counters. Pruned mode extends
/// subsets in lex order and needs a max_size; n = 5 allows max_size <= 8.
std::vector<Subset> enumerate_jacobi_subsets(const SearchOptions &options);

/// Raised when deciders that must agree do not.
class InternalDisagreement : public std::logic_error
{
  public:
    using std::logic_error::logic_error;
};

struct DeciderResult
{
    const char *name;
    JacobiVerdict verdict;
};

struct DeciderReport
{
    int degree;
    bool is_jacobi;
    /// bruteforce, omega-kernel, orthogonality, coset-sums and, for subsets,
    /// subset-balance.
    std::vector<DeciderResult> deciders;
};

/// Runs all five checks on T; throws InternalDisagreement if they disagree.
DeciderReport verify_subset_report(std::span<const Permutation> subset, int n, int threads = 1);

/// The four element deciders on a; throws InternalDisagreement if they disagree.
DeciderReport verify_element_report(const GroupRingElement &a, int threads = 1);

} // namespace jacobi
