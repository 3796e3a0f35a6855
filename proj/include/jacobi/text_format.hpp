#pragma once

#include "jacobi/free_algebra.hpp"
#include "jacobi/search.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace jacobi {

/// Malformed text input; `line()` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error
{
  public:
    ParseError(std::size_t line, const std::string &message);
    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

// Element format: one term per line, `<signed integer> <p1> ... <pn>`.
// `#` starts a comment line, blank lines are skipped, repeated permutations
// are summed. The degree comes from the token count and must not vary.

/// Parses one element. With no terms the degree falls back to
/// `empty_degree`; if that is also absent the input is rejected.
GroupRingElement parse_element(std::string_view text, std::optional<int> empty_degree = std::nullopt);

/// Several elements separated by `---` lines, all of one degree.
std::vector<GroupRingElement> parse_element_stanzas(std::string_view text);

/// Canonical text: lex-ordered terms, one per line, newline terminated.
std::string format_element(const GroupRingElement &a);
std::string format_polynomial(const MultilinearPolynomial &p);

/// Elements joined by `---` lines.
std::string format_element_stanzas(std::span<const GroupRingElement> elements);

// Subset format: one permutation per line in one-line notation; subsets are
// separated by `---` lines. An empty subset is an empty stanza.

struct SubsetList
{
    /// 0 when no permutation appears anywhere in the input.
    int degree = 0;
    std::vector<Subset> subsets;
};

/// Duplicate members within a subset are rejected.
SubsetList parse_subsets(std::string_view text);

std::string format_subsets(std::span<const Subset> subsets);

} // namespace jacobi
