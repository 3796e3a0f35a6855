#pragma once

#include "jacobi/group_ring.hpp"

#include <vector>

namespace jacobi {

/// An (s,t)-shuffle: two strictly increasing sequences whose values
/// partition {1, ..., s+t}. Both sequences are stored ascending.
struct Shuffle
{
    std::vector<int> alpha;
    std::vector<int> beta;

    int s() const { return static_cast<int>(alpha.size()); }
    int t() const { return static_cast<int>(beta.size()); }

    friend bool operator==(const Shuffle &, const Shuffle &) = default;
};

/// All C(s+t, s) shuffles, lexicographic in alpha.
std::vector<Shuffle> enumerate_shuffles(int s, int t);

/// The shuffles with alpha(1) = 1, C(s+t-1, t) of them. Throws
/// std::invalid_argument for s = 0, where alpha(1) is undefined.
std::vector<Shuffle> enumerate_shuffles_first_fixed(int s, int t);

/// One-line [beta(i), ..., beta(1), alpha(1), ..., alpha(n-i)] for a
/// shuffle in Sh^1(n-i, i).
Permutation riffle_permutation(int n, int i, const Shuffle &sh);

/// Visits every (i, shuffle) pair of Sh^1(n-i, i), i ascending, shuffles
/// in lex order, together with its riffle permutation.
template <class F>
void for_each_riffle(int n, F &&visit)
{
    for (int i = 0; i < n; ++i)
        for (const auto &sh : enumerate_shuffles_first_fixed(n - i, i))
            visit(i, sh, riffle_permutation(n, i, sh));
}

/// Signed sum of all riffle permutations, sign (-1)^i. Cached per degree.
const GroupRingElement &omega(int n);

/// Inverses of the riffle permutations, split by parity of the stratum i.
struct JacobiIndexSets
{
    int degree;
    std::vector<Permutation> plus;  // i even, lex sorted
    std::vector<Permutation> minus; // i odd, lex sorted
};

const JacobiIndexSets &jacobi_index_sets(int n);

} // namespace jacobi
