#include "jacobi/free_algebra.hpp"

#include "jacobi/shuffles.hpp"

#include <array>
#include <map>

namespace jacobi {

namespace {

// Words of length <= n over letters 0..n-1; only the first `length` letters are used.
struct Word
{
    std::array<std::uint8_t, kMaxDegree> letters{};
    std::uint8_t length = 0;

    friend auto operator<=>(const Word &, const Word &) = default;
};

using PartialExpansion = std::map<Word, mpz_class>;

void accumulate(PartialExpansion &into, const Word &w, const mpz_class &c)
{
    auto [it, inserted] = into.try_emplace(w, c);
    if (!inserted)
    {
        it->second += c;
        if (it->second == 0)
            into.erase(it);
    }
}

// [p, x] = p x - x p on partial words.
PartialExpansion bracket_with_letter(const PartialExpansion &p, std::uint8_t x)
{
    PartialExpansion out;
    for (const auto &[w, c] : p)
    {
        Word right = w;
        right.letters[right.length++] = x;
        accumulate(out, right, c);

        Word left;
        left.length = static_cast<std::uint8_t>(w.length + 1);
        left.letters[0] = x;
        for (std::size_t k = 0; k < w.length; ++k)
            left.letters[k + 1] = w.letters[k];
        accumulate(out, left, -c);
    }
    return out;
}

} // namespace

MultilinearPolynomial &MultilinearPolynomial::operator+=(const MultilinearPolynomial &other)
{
    check_same_degree(other, "add");
    for (const auto &[p, c] : other.terms())
        add_term(p, c);
    return *this;
}

MultilinearPolynomial &MultilinearPolynomial::operator-=(const MultilinearPolynomial &other)
{
    check_same_degree(other, "subtract");
    for (const auto &[p, c] : other.terms())
        add_term(p, -c);
    return *this;
}

MultilinearPolynomial expand_left_normed_bracket(std::span<const int> indices, int n)
{
    if (n < 1 || n > kMaxDegree)
        throw std::invalid_argument("bracket degree " + std::to_string(n) + " out of range");
    if (static_cast<int>(indices.size()) != n)
        throw std::invalid_argument("bracket needs exactly n = " + std::to_string(n) + " letters");
    std::array<bool, kMaxDegree> used{};
    for (int v : indices)
    {
        if (v < 1 || v > n)
            throw std::invalid_argument("bracket letter " + std::to_string(v) + " out of range");
        if (used[static_cast<std::size_t>(v - 1)])
            throw std::invalid_argument("repeated bracket letter " + std::to_string(v));
        used[static_cast<std::size_t>(v - 1)] = true;
    }

    PartialExpansion current;
    Word first;
    first.length = 1;
    first.letters[0] = static_cast<std::uint8_t>(indices[0] - 1);
    current.emplace(first, 1);
    for (std::size_t k = 1; k < indices.size(); ++k)
        current = bracket_with_letter(current, static_cast<std::uint8_t>(indices[k] - 1));

    MultilinearPolynomial out(n);
    std::array<int, kMaxDegree> images{};
    for (const auto &[w, c] : current)
    {
        for (std::size_t k = 0; k < w.length; ++k)
            images[k] = w.letters[k] + 1;
        out.add_term(Permutation(std::span<const int>(images.data(), w.length)), c);
    }
    return out;
}

MultilinearPolynomial expand_left_normed_bracket(const Permutation &sigma)
{
    const auto images = sigma.one_line();
    return expand_left_normed_bracket(images, sigma.degree());
}

GroupRingElement phi(const MultilinearPolynomial &p)
{
    GroupRingElement out(p.degree());
    for (const auto &[w, c] : p.terms())
        out.add_term(w, c);
    return out;
}

MultilinearPolynomial phi_inverse(const GroupRingElement &a)
{
    MultilinearPolynomial out(a.degree());
    for (const auto &[g, c] : a.terms())
        out.add_term(g, c);
    return out;
}

MultilinearPolynomial beta_tilde(const GroupRingElement &a)
{
    MultilinearPolynomial out(a.degree());
    for (const auto &[sigma, c] : a.terms())
    {
        const auto expansion = expand_left_normed_bracket(sigma);
        for (const auto &[w, d] : expansion.terms())
            out.add_term(w, c * d);
    }
    return out;
}

GroupRingElement omega_right_multiply(const GroupRingElement &a)
{
    return multiply(a, omega(a.degree()));
}

} // namespace jacobi
