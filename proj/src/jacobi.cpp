#include "jacobi/jacobi.hpp"

#include "jacobi/free_algebra.hpp"
#include "jacobi/shuffles.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace jacobi {

namespace {

// Runs `check(tau)` over S_n in lex order and returns the lex-first failure.
// The range is split into contiguous blocks, one per worker; since blocks are
// ordered, the first block reporting a failure holds the global minimum.
template <class Check>
JacobiVerdict first_failing_tau(int n, int threads, Check &&check)
{
    const auto group = enumerate_symmetric_group(n);
    const std::size_t workers =
        std::clamp<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), 1, group.size());
    std::vector<std::optional<Witness>> found(workers);

    auto scan = [&](std::size_t w) {
        const std::size_t lo = group.size() * w / workers;
        const std::size_t hi = group.size() * (w + 1) / workers;
        for (std::size_t k = lo; k < hi; ++k)
        {
            if (auto wit = check(group[k]))
            {
                found[w] = std::move(wit);
                return;
            }
        }
    };

    if (workers == 1)
        scan(0);
    else
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back(scan, w);
    }

    JacobiVerdict verdict;
    for (auto &f : found)
        if (f)
        {
            verdict.is_jacobi = false;
            verdict.witness = std::move(f);
            break;
        }
    return verdict;
}

std::set<Permutation> as_checked_set(std::span<const Permutation> subset, int n)
{
    std::set<Permutation> members;
    for (const auto &p : subset)
    {
        if (p.degree() != n)
            throw DegreeMismatch("subset member " + p.to_string() + " has degree " +
                                 std::to_string(p.degree()) + ", expected " + std::to_string(n));
        if (!members.insert(p).second)
            throw std::invalid_argument("subset lists " + p.to_string() + " twice");
    }
    return members;
}

std::size_t coset_hits(const std::set<Permutation> &members, const Permutation &tau,
                       const std::vector<Permutation> &index_set)
{
    std::size_t hits = 0;
    for (const auto &g : index_set)
        hits += members.count(compose(tau, g));
    return hits;
}

} // namespace

bool is_jacobi_bruteforce(const GroupRingElement &a) { return beta_tilde(a).is_zero(); }

bool is_jacobi_omega(const GroupRingElement &a) { return omega_right_multiply(a).is_zero(); }

JacobiVerdict is_jacobi_orthogonality(const GroupRingElement &a, int threads)
{
    const GroupRingElement twisted = antipode(omega(a.degree()));
    return first_failing_tau(a.degree(), threads, [&](const Permutation &tau) -> std::optional<Witness> {
        mpz_class value = scalar_product(a, translate(tau, twisted));
        if (value == 0)
            return std::nullopt;
        return Witness{tau, std::move(value)};
    });
}

JacobiVerdict is_jacobi_coset_sums(const GroupRingElement &lambda, int threads)
{
    const auto &sets = jacobi_index_sets(lambda.degree());
    return first_failing_tau(lambda.degree(), threads, [&](const Permutation &tau) -> std::optional<Witness> {
        mpz_class sum = 0;
        for (const auto &g : sets.plus)
            sum += lambda.coefficient(compose(tau, g));
        for (const auto &g : sets.minus)
            sum -= lambda.coefficient(compose(tau, g));
        if (sum == 0)
            return std::nullopt;
        return Witness{tau, std::move(sum)};
    });
}

JacobiVerdict is_jacobi_subset(std::span<const Permutation> subset, int n, int threads)
{
    const auto members = as_checked_set(subset, n);
    const auto &sets = jacobi_index_sets(n);
    return first_failing_tau(n, threads, [&](const Permutation &tau) -> std::optional<Witness> {
        const std::size_t plus = coset_hits(members, tau, sets.plus);
        const std::size_t minus = coset_hits(members, tau, sets.minus);
        if (plus == minus)
            return std::nullopt;
        mpz_class diff = mpz_class(plus) - mpz_class(minus);
        return Witness{tau, std::move(diff), plus, minus};
    });
}

std::vector<BalanceRow> subset_balance_table(std::span<const Permutation> subset, int n)
{
    const auto members = as_checked_set(subset, n);
    const auto &sets = jacobi_index_sets(n);
    std::vector<BalanceRow> rows;
    for (const auto &tau : enumerate_symmetric_group(n))
        rows.push_back({tau, coset_hits(members, tau, sets.plus), coset_hits(members, tau, sets.minus)});
    return rows;
}

GroupRingElement indicator(std::span<const Permutation> subset, int n)
{
    const auto members = as_checked_set(subset, n);
    GroupRingElement out(n);
    for (const auto &p : members)
        out.add_term(p, 1);
    return out;
}

} // namespace jacobi
