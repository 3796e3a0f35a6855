#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace jacobi {

/// Largest supported degree. 8! = 40320 keeps dense per-degree tables small.
inline constexpr int kMaxDegree = 8;

/// Raised when two operands live in symmetric groups of different degree.
class DegreeMismatch : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

/// An element of S_n in one-line notation.
///
/// Externally the images are the 1-based values sigma(1), ..., sigma(n).
/// Internally they are stored 0-based in a fixed-capacity array so that the
/// type is trivially copyable and cheap to use as a map key.
class Permutation
{
  public:
    /// Builds from 1-based one-line images; throws std::invalid_argument
    /// unless the values form a bijection of {1, ..., n} with 1 <= n <= 8.
    explicit Permutation(std::span<const int> one_line);
    Permutation(std::initializer_list<int> one_line);

    static Permutation identity(int n);

    /// The permutation at position `rank` of the lexicographic listing of S_n.
    static Permutation from_lex_rank(int n, std::size_t rank);

    int degree() const { return degree_; }

    /// sigma(k) for 1 <= k <= n.
    int operator()(int k) const { return images_[static_cast<std::size_t>(k - 1)] + 1; }

    /// 0-based image of the 0-based point k.
    int image0(int k) const { return images_[static_cast<std::size_t>(k)]; }

    std::vector<int> one_line() const;
    std::string to_string() const;

    bool is_identity() const;

    /// Position in the lexicographic listing of S_n (Lehmer code).
    std::size_t lex_rank() const;

    friend bool operator==(const Permutation &, const Permutation &) = default;

    /// Lexicographic on one-line notation; degree first when degrees differ.
    friend std::strong_ordering operator<=>(const Permutation &a, const Permutation &b);

  private:
    Permutation() = default;

    friend Permutation compose(const Permutation &sigma, const Permutation &pi);
    friend Permutation inverse(const Permutation &sigma);

    std::array<std::uint8_t, kMaxDegree> images_{};
    std::uint8_t degree_ = 0;
};

/// (sigma * pi)(k) = sigma(pi(k)): the right factor acts first.
Permutation compose(const Permutation &sigma, const Permutation &pi);

Permutation inverse(const Permutation &sigma);

/// All n! permutations of degree n in lexicographic order of one-line notation.
std::vector<Permutation> enumerate_symmetric_group(int n);

std::size_t factorial(int n);

} // namespace jacobi
