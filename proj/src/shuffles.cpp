#include "jacobi/shuffles.hpp"

#include <array>
#include <algorithm>
#include <mutex>
#include <optional>

namespace jacobi {

namespace {

void choose_alpha(int total, int s, int next, std::vector<int> &alpha, std::vector<Shuffle> &out)
{
    if (static_cast<int>(alpha.size()) == s)
    {
        Shuffle sh;
        sh.alpha = alpha;
        std::size_t a = 0;
        for (int v = 1; v <= total; ++v)
        {
            if (a < alpha.size() && alpha[a] == v)
                ++a;
            else
                sh.beta.push_back(v);
        }
        out.push_back(std::move(sh));
        return;
    }
    const int remaining = s - static_cast<int>(alpha.size());
    for (int v = next; v <= total - remaining + 1; ++v)
    {
        alpha.push_back(v);
        choose_alpha(total, s, v + 1, alpha, out);
        alpha.pop_back();
    }
}

void check_cached_degree(int n)
{
    if (n < 1 || n > kMaxDegree)
        throw std::invalid_argument("degree " + std::to_string(n) + " out of range");
}

} // namespace

std::vector<Shuffle> enumerate_shuffles(int s, int t)
{
    if (s < 0 || t < 0)
        throw std::invalid_argument("shuffle sizes must be non-negative");
    std::vector<Shuffle> out;
    std::vector<int> alpha;
    choose_alpha(s + t, s, 1, alpha, out);
    return out;
}

std::vector<Shuffle> enumerate_shuffles_first_fixed(int s, int t)
{
    if (s < 1 || t < 0)
        throw std::invalid_argument("Sh^1(s,t) needs s >= 1 and t >= 0");
    std::vector<Shuffle> out;
    std::vector<int> alpha{1};
    choose_alpha(s + t, s, 2, alpha, out);
    return out;
}

Permutation riffle_permutation(int n, int i, const Shuffle &sh)
{
    if (i < 0 || i >= n || sh.s() != n - i || sh.t() != i || sh.alpha.empty() || sh.alpha.front() != 1)
        throw std::invalid_argument("riffle_permutation: shuffle is not in Sh^1(" +
                                    std::to_string(n - i) + "," + std::to_string(i) + ")");
    std::vector<int> images;
    images.reserve(static_cast<std::size_t>(n));
    images.insert(images.end(), sh.beta.rbegin(), sh.beta.rend());
    images.insert(images.end(), sh.alpha.begin(), sh.alpha.end());
    return Permutation(std::span<const int>(images));
}

const GroupRingElement &omega(int n)
{
    check_cached_degree(n);
    static std::array<std::once_flag, kMaxDegree + 1> once;
    static std::array<std::optional<GroupRingElement>, kMaxDegree + 1> cache;
    const auto slot = static_cast<std::size_t>(n);
    std::call_once(once[slot], [&] {
        GroupRingElement w(n);
        for_each_riffle(n, [&](int i, const Shuffle &, const Permutation &r) {
            w.add_term(r, i % 2 == 0 ? 1 : -1);
        });
        cache[slot] = std::move(w);
    });
    return *cache[slot];
}

const JacobiIndexSets &jacobi_index_sets(int n)
{
    check_cached_degree(n);
    static std::array<std::once_flag, kMaxDegree + 1> once;
    static std::array<std::optional<JacobiIndexSets>, kMaxDegree + 1> cache;
    const auto slot = static_cast<std::size_t>(n);
    std::call_once(once[slot], [&] {
        JacobiIndexSets sets{n, {}, {}};
        for_each_riffle(n, [&](int i, const Shuffle &, const Permutation &r) {
            (i % 2 == 0 ? sets.plus : sets.minus).push_back(inverse(r));
        });
        std::sort(sets.plus.begin(), sets.plus.end());
        std::sort(sets.minus.begin(), sets.minus.end());
        cache[slot] = std::move(sets);
    });
    return *cache[slot];
}

} // namespace jacobi
