#include "jacobi/text_format.hpp"

#include <charconv>
#include <set>

namespace jacobi {

ParseError::ParseError(std::size_t line, const std::string &message)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message), line_(line)
{
}

namespace {

struct Line
{
    std::size_t number;
    std::vector<std::string_view> tokens;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::vector<std::string_view> split_tokens(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t k = 0;
    while (k < line.size())
    {
        while (k < line.size() && is_space(line[k]))
            ++k;
        const std::size_t start = k;
        while (k < line.size() && !is_space(line[k]))
            ++k;
        if (k > start)
            out.push_back(line.substr(start, k - start));
    }
    return out;
}

bool is_separator(const std::vector<std::string_view> &tokens)
{
    return tokens.size() == 1 && tokens[0] == "---";
}

// Splits into stanzas at `---` lines, dropping comments and blank lines.
std::vector<std::vector<Line>> read_stanzas(std::string_view text)
{
    std::vector<std::vector<Line>> stanzas(1);
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos < text.size())
    {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        const std::string_view raw = text.substr(pos, end - pos);
        pos = end + 1;
        ++number;

        auto tokens = split_tokens(raw);
        if (tokens.empty() || tokens[0].front() == '#')
            continue;
        if (is_separator(tokens))
        {
            stanzas.emplace_back();
            continue;
        }
        stanzas.back().push_back(Line{number, std::move(tokens)});
    }
    return stanzas;
}

int parse_small_int(std::string_view token, std::size_t line)
{
    int value = 0;
    const auto *first = token.data();
    const auto *last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
    return value;
}

mpz_class parse_coefficient(std::string_view token, std::size_t line)
{
    std::string digits(token);
    if (!digits.empty() && digits.front() == '+')
        digits.erase(0, 1);
    const std::size_t body = !digits.empty() && digits.front() == '-' ? 1 : 0;
    if (digits.size() == body ||
        digits.find_first_not_of("0123456789", body) != std::string::npos)
        throw ParseError(line, "expected an integer coefficient, got '" + std::string(token) + "'");
    return mpz_class(digits, 10);
}

Permutation parse_permutation(std::span<const std::string_view> tokens, std::size_t line)
{
    std::vector<int> images;
    images.reserve(tokens.size());
    for (auto t : tokens)
        images.push_back(parse_small_int(t, line));
    try
    {
        return Permutation(std::span<const int>(images));
    }
    catch (const std::invalid_argument &e)
    {
        throw ParseError(line, e.what());
    }
}

void check_width(int &degree, int width, std::size_t line)
{
    if (width < 1)
        throw ParseError(line, "missing permutation");
    if (degree == 0)
        degree = width;
    else if (degree != width)
        throw ParseError(line, "permutation of degree " + std::to_string(width) +
                                   " where earlier lines have degree " + std::to_string(degree));
}

GroupRingElement element_from_lines(const std::vector<Line> &lines, int &degree)
{
    for (const auto &l : lines)
        check_width(degree, static_cast<int>(l.tokens.size()) - 1, l.number);
    if (degree == 0)
        throw ParseError(0, "no terms: cannot infer degree");
    GroupRingElement out(degree);
    for (const auto &l : lines)
    {
        const mpz_class c = parse_coefficient(l.tokens[0], l.number);
        out.add_term(parse_permutation(std::span(l.tokens).subspan(1), l.number), c);
    }
    return out;
}

template <class Terms>
std::string format_terms(const Terms &t)
{
    std::string out;
    for (const auto &[p, c] : t.terms())
    {
        out += c.get_str();
        out += ' ';
        out += p.to_string();
        out += '\n';
    }
    return out;
}

} // namespace

GroupRingElement parse_element(std::string_view text, std::optional<int> empty_degree)
{
    const auto stanzas = read_stanzas(text);
    if (stanzas.size() != 1)
        throw ParseError(0, "expected a single element, found `---` separators");
    int degree = 0;
    if (stanzas[0].empty() && empty_degree)
        return GroupRingElement(*empty_degree);
    return element_from_lines(stanzas[0], degree);
}

std::vector<GroupRingElement> parse_element_stanzas(std::string_view text)
{
    int degree = 0;
    const auto stanzas = read_stanzas(text);
    for (const auto &s : stanzas)
        for (const auto &l : s)
            check_width(degree, static_cast<int>(l.tokens.size()) - 1, l.number);
    std::vector<GroupRingElement> out;
    for (const auto &s : stanzas)
    {
        if (s.empty() && degree != 0)
            out.emplace_back(degree);
        else
            out.push_back(element_from_lines(s, degree));
    }
    return out;
}

std::string format_element(const GroupRingElement &a) { return format_terms(a); }

std::string format_polynomial(const MultilinearPolynomial &p) { return format_terms(p); }

std::string format_element_stanzas(std::span<const GroupRingElement> elements)
{
    std::string out;
    for (std::size_t k = 0; k < elements.size(); ++k)
    {
        if (k)
            out += "---\n";
        out += format_element(elements[k]);
    }
    return out;
}

SubsetList parse_subsets(std::string_view text)
{
    SubsetList out;
    for (const auto &stanza : read_stanzas(text))
    {
        Subset subset;
        std::set<Permutation> seen;
        for (const auto &l : stanza)
        {
            check_width(out.degree, static_cast<int>(l.tokens.size()), l.number);
            auto p = parse_permutation(l.tokens, l.number);
            if (!seen.insert(p).second)
                throw ParseError(l.number, "permutation " + p.to_string() + " repeated in subset");
            subset.push_back(p);
        }
        out.subsets.push_back(std::move(subset));
    }
    return out;
}

std::string format_subsets(std::span<const Subset> subsets)
{
    std::string out;
    for (std::size_t k = 0; k < subsets.size(); ++k)
    {
        if (k)
            out += "---\n";
        for (const auto &p : subsets[k])
        {
            out += p.to_string();
            out += '\n';
        }
    }
    return out;
}

} // namespace jacobi
