#include "jacobi/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace jacobi {

namespace {

void check_degree(int n)
{
    if (n < 1 || n > kMaxDegree)
        throw std::invalid_argument("permutation degree " + std::to_string(n) +
                                    " outside supported range 1.." +
                                    std::to_string(kMaxDegree));
}

} // namespace

Permutation::Permutation(std::span<const int> one_line)
{
    const int n = static_cast<int>(one_line.size());
    check_degree(n);
    std::array<bool, kMaxDegree> seen{};
    for (int k = 0; k < n; ++k)
    {
        const int v = one_line[static_cast<std::size_t>(k)];
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
            throw std::invalid_argument("not a permutation of 1.." + std::to_string(n));
        seen[static_cast<std::size_t>(v - 1)] = true;
        images_[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(v - 1);
    }
    degree_ = static_cast<std::uint8_t>(n);
}

Permutation::Permutation(std::initializer_list<int> one_line)
    : Permutation(std::span<const int>(one_line.begin(), one_line.size()))
{
}

Permutation Permutation::identity(int n)
{
    check_degree(n);
    Permutation p;
    p.degree_ = static_cast<std::uint8_t>(n);
    for (int k = 0; k < n; ++k)
        p.images_[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(k);
    return p;
}

Permutation Permutation::from_lex_rank(int n, std::size_t rank)
{
    check_degree(n);
    if (rank >= factorial(n))
        throw std::out_of_range("lex rank exceeds n!");
    std::vector<std::uint8_t> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), std::uint8_t{0});
    Permutation p;
    p.degree_ = static_cast<std::uint8_t>(n);
    for (int k = 0; k < n; ++k)
    {
        const std::size_t block = factorial(n - 1 - k);
        const std::size_t digit = rank / block;
        rank %= block;
        p.images_[static_cast<std::size_t>(k)] = pool[digit];
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
    }
    return p;
}

std::vector<int> Permutation::one_line() const
{
    std::vector<int> out(degree_);
    for (std::size_t k = 0; k < degree_; ++k)
        out[k] = images_[k] + 1;
    return out;
}

std::string Permutation::to_string() const
{
    std::string out;
    for (std::size_t k = 0; k < degree_; ++k)
    {
        if (k)
            out += ' ';
        out += std::to_string(images_[k] + 1);
    }
    return out;
}

bool Permutation::is_identity() const
{
    for (std::size_t k = 0; k < degree_; ++k)
        if (images_[k] != k)
            return false;
    return true;
}

std::size_t Permutation::lex_rank() const
{
    std::size_t rank = 0;
    for (std::size_t k = 0; k < degree_; ++k)
    {
        std::size_t smaller_later = 0;
        for (std::size_t j = k + 1; j < degree_; ++j)
            if (images_[j] < images_[k])
                ++smaller_later;
        rank += smaller_later * factorial(static_cast<int>(degree_ - 1 - k));
    }
    return rank;
}

std::strong_ordering operator<=>(const Permutation &a, const Permutation &b)
{
    if (a.degree_ != b.degree_)
        return a.degree_ <=> b.degree_;
    for (std::size_t k = 0; k < a.degree_; ++k)
        if (a.images_[k] != b.images_[k])
            return a.images_[k] <=> b.images_[k];
    return std::strong_ordering::equal;
}

Permutation compose(const Permutation &sigma, const Permutation &pi)
{
    if (sigma.degree() != pi.degree())
        throw DegreeMismatch("compose: degrees " + std::to_string(sigma.degree()) + " and " +
                             std::to_string(pi.degree()));
    Permutation out;
    out.degree_ = sigma.degree_;
    for (std::size_t k = 0; k < sigma.degree_; ++k)
        out.images_[k] = sigma.images_[pi.images_[k]];
    return out;
}

Permutation inverse(const Permutation &sigma)
{
    Permutation out;
    out.degree_ = sigma.degree_;
    for (std::size_t k = 0; k < sigma.degree_; ++k)
        out.images_[sigma.images_[k]] = static_cast<std::uint8_t>(k);
    return out;
}

std::vector<Permutation> enumerate_symmetric_group(int n)
{
    check_degree(n);
    std::vector<int> current(static_cast<std::size_t>(n));
    std::iota(current.begin(), current.end(), 1);
    std::vector<Permutation> out;
    out.reserve(factorial(n));
    do
        out.emplace_back(std::span<const int>(current));
    while (std::next_permutation(current.begin(), current.end()));
    return out;
}

std::size_t factorial(int n)
{
    std::size_t f = 1;
    for (int k = 2; k <= n; ++k)
        f *= static_cast<std::size_t>(k);
    return f;
}

} // namespace jacobi
