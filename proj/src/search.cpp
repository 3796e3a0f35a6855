#include "jacobi/search.hpp"

#include "jacobi/shuffles.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <mutex>
#include <thread>

namespace jacobi {

namespace {

// For each sigma (by lex rank): the taus whose coset tau I+ contains sigma
// (balance +1) and those whose coset tau I- contains it (balance -1).
// For each tau: the sigma ranks in tau I+ and tau I-, ascending.
struct CosetTables
{
    std::size_t order = 0;
    std::vector<std::vector<std::uint32_t>> raises;
    std::vector<std::vector<std::uint32_t>> lowers;
    std::vector<std::vector<std::uint32_t>> plus_members;
    std::vector<std::vector<std::uint32_t>> minus_members;
    std::size_t plus_size = 0;
    std::size_t minus_size = 0;

    explicit CosetTables(int n)
    {
        const auto group = enumerate_symmetric_group(n);
        const auto &sets = jacobi_index_sets(n);
        order = group.size();
        plus_size = sets.plus.size();
        minus_size = sets.minus.size();
        raises.resize(order);
        lowers.resize(order);
        plus_members.resize(order);
        minus_members.resize(order);
        for (std::size_t t = 0; t < order; ++t)
        {
            for (const auto &g : sets.plus)
            {
                const auto s = static_cast<std::uint32_t>(compose(group[t], g).lex_rank());
                plus_members[t].push_back(s);
                raises[s].push_back(static_cast<std::uint32_t>(t));
            }
            for (const auto &g : sets.minus)
            {
                const auto s = static_cast<std::uint32_t>(compose(group[t], g).lex_rank());
                minus_members[t].push_back(s);
                lowers[s].push_back(static_cast<std::uint32_t>(t));
            }
            std::sort(plus_members[t].begin(), plus_members[t].end());
            std::sort(minus_members[t].begin(), minus_members[t].end());
        }
    }
};

// Per-tau difference |T cap tau I+| - |T cap tau I-| with a count of nonzero entries.
struct Balance
{
    std::vector<int> diff;
    std::size_t nonzero = 0;
    std::size_t size = 0;

    explicit Balance(std::size_t order) : diff(order, 0) {}

    void bump(std::uint32_t tau, int delta)
    {
        int &d = diff[tau];
        if (d == 0)
            ++nonzero;
        d += delta;
        if (d == 0)
            --nonzero;
    }

    void toggle(const CosetTables &tables, std::size_t sigma, bool insert)
    {
        const int sign = insert ? 1 : -1;
        for (auto t : tables.raises[sigma])
            bump(t, sign);
        for (auto t : tables.lowers[sigma])
            bump(t, -sign);
        size = insert ? size + 1 : size - 1;
    }
};

struct Filters
{
    std::size_t max_size;
    bool require_nonempty;
    bool require_identity;

    bool accepts(std::size_t size, bool has_identity) const
    {
        if (size > max_size)
            return false;
        if (require_nonempty && size == 0)
            return false;
        if (require_identity && !has_identity)
            return false;
        return true;
    }
};

std::vector<std::uint64_t> exhaustive_masks(const CosetTables &tables, const Filters &filters, int threads)
{
    const std::size_t bits = tables.order;
    // The identity has lex rank 0; pinning bit 0 halves the walk.
    const std::size_t free_base = filters.require_identity ? 1 : 0;
    const std::size_t free_bits = bits - free_base;
    const std::size_t chunk_bits = free_bits >= 12 ? 6 : 0;
    const std::size_t low_bits = free_bits - chunk_bits;
    const std::uint64_t chunks = std::uint64_t{1} << chunk_bits;

    std::vector<std::vector<std::uint64_t>> per_chunk(chunks);
    std::atomic<std::uint64_t> next_chunk{0};

    auto worker = [&] {
        for (std::uint64_t chunk; (chunk = next_chunk.fetch_add(1)) < chunks;)
        {
            Balance balance(tables.order);
            std::uint64_t mask = chunk << (free_base + low_bits);
            if (filters.require_identity)
                mask |= 1;
            for (std::size_t s = 0; s < bits; ++s)
                if (mask >> s & 1)
                    balance.toggle(tables, s, true);

            auto &found = per_chunk[chunk];
            const std::uint64_t steps = std::uint64_t{1} << low_bits;
            for (std::uint64_t step = 0; step < steps; ++step)
            {
                if (step)
                {
                    const std::size_t s = free_base + static_cast<std::size_t>(std::countr_zero(step));
                    const bool insert = !(mask >> s & 1);
                    mask ^= std::uint64_t{1} << s;
                    balance.toggle(tables, s, insert);
                }
                if (balance.nonzero == 0 && filters.accepts(balance.size, mask & 1))
                    found.push_back(mask);
            }
        }
    };

    const auto workers = static_cast<std::size_t>(std::clamp<std::uint64_t>(
        static_cast<std::uint64_t>(std::max(threads, 1)), 1, chunks));
    if (workers == 1)
        worker();
    else
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back(worker);
    }

    std::vector<std::uint64_t> masks;
    for (auto &f : per_chunk)
        masks.insert(masks.end(), f.begin(), f.end());
    return masks;
}

// Depth-first extension in lex order. A node is abandoned when some tau has
// a deficit that the remaining budget or the remaining eligible coset
// members cannot repair.
class PrunedSearch
{
  public:
    PrunedSearch(const CosetTables &tables, const Filters &filters)
        : tables_(tables), filters_(filters)
    {
    }

    void run_from(const std::vector<std::uint32_t> &seed, std::vector<std::vector<std::uint32_t>> &out) const
    {
        Balance balance(tables_.order);
        std::vector<std::uint32_t> chosen;
        for (auto s : seed)
        {
            balance.toggle(tables_, s, true);
            chosen.push_back(s);
        }
        if (repairable(balance, chosen.back()))
            descend(balance, chosen, out);
    }

  private:
    void descend(Balance &balance, std::vector<std::uint32_t> &chosen,
                 std::vector<std::vector<std::uint32_t>> &out) const
    {
        if (balance.nonzero == 0 && filters_.accepts(chosen.size(), chosen.front() == 0))
            out.push_back(chosen);
        if (chosen.size() >= filters_.max_size)
            return;
        for (auto next = chosen.back() + 1; next < tables_.order; ++next)
        {
            balance.toggle(tables_, next, true);
            chosen.push_back(next);
            if (repairable(balance, next))
                descend(balance, chosen, out);
            chosen.pop_back();
            balance.toggle(tables_, next, false);
        }
    }

    static std::size_t members_after(const std::vector<std::uint32_t> &sorted, std::uint32_t last)
    {
        return static_cast<std::size_t>(sorted.end() - std::upper_bound(sorted.begin(), sorted.end(), last));
    }

    bool repairable(const Balance &balance, std::uint32_t last) const
    {
        if (balance.nonzero == 0)
            return true;
        const std::size_t budget = filters_.max_size - balance.size;
        std::size_t surplus = 0;
        std::size_t shortfall = 0;
        for (std::size_t t = 0; t < tables_.order; ++t)
        {
            const int d = balance.diff[t];
            if (d == 0)
                continue;
            const auto need = static_cast<std::size_t>(d > 0 ? d : -d);
            if (need > budget)
                return false;
            // A surplus on the plus side is repaired only by members of tau I-.
            const auto &repairers = d > 0 ? tables_.minus_members[t] : tables_.plus_members[t];
            if (members_after(repairers, last) < need)
                return false;
            (d > 0 ? surplus : shortfall) += need;
        }
        // Each added sigma lowers |minus_size| balances and raises |plus_size|.
        return surplus <= tables_.minus_size * budget && shortfall <= tables_.plus_size * budget;
    }

    const CosetTables &tables_;
    const Filters &filters_;
};

std::vector<std::vector<std::uint32_t>> pruned_subsets(const CosetTables &tables, const Filters &filters,
                                                       int threads)
{
    std::vector<std::vector<std::uint32_t>> seeds;
    if (filters.require_identity)
    {
        seeds.push_back({0});
        for (std::uint32_t s = 1; s < tables.order; ++s)
            seeds.push_back({0, s});
    }
    else
        for (std::uint32_t s = 0; s < tables.order; ++s)
            seeds.push_back({s});

    const PrunedSearch search(tables, filters);
    std::vector<std::vector<std::vector<std::uint32_t>>> per_seed(seeds.size());
    std::atomic<std::size_t> next_seed{0};
    auto worker = [&] {
        for (std::size_t k; (k = next_seed.fetch_add(1)) < seeds.size();)
        {
            const auto &seed = seeds[k];
            if (seed.size() > filters.max_size)
                continue;
            if (filters.require_identity && seed.size() == 1)
            {
                // Only the node itself; its extensions are the two-element seeds.
                Balance balance(tables.order);
                balance.toggle(tables, 0, true);
                if (balance.nonzero == 0 && filters.accepts(1, true))
                    per_seed[k].push_back(seed);
                continue;
            }
            search.run_from(seed, per_seed[k]);
        }
    };

    const auto workers = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), 1, seeds.size());
    if (workers == 1)
        worker();
    else
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back(worker);
    }

    std::vector<std::vector<std::uint32_t>> out;
    if (!filters.require_identity && filters.accepts(0, false))
        out.emplace_back();
    for (auto &found : per_seed)
        for (auto &s : found)
            out.push_back(std::move(s));
    return out;
}

void check_envelope(const SearchOptions &o, SearchMode mode)
{
    if (o.degree < 1 || o.degree > 5)
        throw UnsupportedSearch("subset search supports 1 <= n <= 5");
    if (mode == SearchMode::Exhaustive && o.degree > 4)
        throw UnsupportedSearch("exhaustive search needs n <= 4");
    if (mode == SearchMode::Pruned)
    {
        if (!o.max_size)
            throw UnsupportedSearch("pruned search needs --max-size");
        if (o.degree == 5 && *o.max_size > 8)
            throw UnsupportedSearch("n = 5 search needs max size <= 8");
    }
}

} // namespace

std::vector<Subset> enumerate_jacobi_subsets(const SearchOptions &options)
{
    SearchMode mode = options.mode;
    if (mode == SearchMode::Automatic)
        mode = options.degree <= 4 ? SearchMode::Exhaustive : SearchMode::Pruned;
    check_envelope(options, mode);

    const CosetTables tables(options.degree);
    const Filters filters{std::min(options.max_size.value_or(tables.order), tables.order),
                          options.require_nonempty, options.require_identity};

    std::vector<std::vector<std::uint32_t>> found;
    if (mode == SearchMode::Exhaustive)
    {
        for (std::uint64_t mask : exhaustive_masks(tables, filters, options.threads))
        {
            std::vector<std::uint32_t> members;
            for (std::uint32_t s = 0; s < tables.order; ++s)
                if (mask >> s & 1)
                    members.push_back(s);
            found.push_back(std::move(members));
        }
    }
    else
        found = pruned_subsets(tables, filters, options.threads);

    std::sort(found.begin(), found.end(), [](const auto &a, const auto &b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    });

    const auto group = enumerate_symmetric_group(options.degree);
    std::vector<Subset> out;
    out.reserve(found.size());
    for (const auto &members : found)
    {
        Subset s;
        s.reserve(members.size());
        for (auto m : members)
            s.push_back(group[m]);
        out.push_back(std::move(s));
    }
    return out;
}

namespace {

DeciderReport assemble(int n, std::vector<DeciderResult> results)
{
    const bool first = results.front().verdict.is_jacobi;
    for (const auto &r : results)
        if (r.verdict.is_jacobi != first)
        {
            std::string msg = "Jacobi deciders disagree:";
            for (const auto &q : results)
                msg += std::string(" ") + q.name + "=" + (q.verdict.is_jacobi ? "yes" : "no");
            throw InternalDisagreement(msg);
        }
    return DeciderReport{n, first, std::move(results)};
}

std::vector<DeciderResult> element_results(const GroupRingElement &a, int threads)
{
    std::vector<DeciderResult> r;
    r.push_back({"bruteforce", JacobiVerdict{is_jacobi_bruteforce(a), std::nullopt}});
    r.push_back({"omega-kernel", JacobiVerdict{is_jacobi_omega(a), std::nullopt}});
    r.push_back({"orthogonality", is_jacobi_orthogonality(a, threads)});
    r.push_back({"coset-sums", is_jacobi_coset_sums(a, threads)});
    return r;
}

} // namespace

DeciderReport verify_element_report(const GroupRingElement &a, int threads)
{
    return assemble(a.degree(), element_results(a, threads));
}

DeciderReport verify_subset_report(std::span<const Permutation> subset, int n, int threads)
{
    auto results = element_results(indicator(subset, n), threads);
    results.push_back({"subset-balance", is_jacobi_subset(subset, n, threads)});
    return assemble(n, std::move(results));
}

} // namespace jacobi
