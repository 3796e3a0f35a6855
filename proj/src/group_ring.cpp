#include "jacobi/group_ring.hpp"

namespace jacobi {

SparseTerms::SparseTerms(int degree) : degree_(degree)
{
    if (degree < 1 || degree > kMaxDegree)
        throw std::invalid_argument("degree " + std::to_string(degree) + " out of range");
}

mpz_class SparseTerms::coefficient(const Permutation &p) const
{
    auto it = terms_.find(p);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void SparseTerms::add_term(const Permutation &p, const mpz_class &c)
{
    if (p.degree() != degree_)
        throw DegreeMismatch("term of degree " + std::to_string(p.degree()) +
                             " added to combination of degree " + std::to_string(degree_));
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted)
    {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void SparseTerms::check_same_degree(const SparseTerms &other, const char *what) const
{
    if (other.degree_ != degree_)
        throw DegreeMismatch(std::string(what) + ": degrees " + std::to_string(degree_) +
                             " and " + std::to_string(other.degree_));
}

GroupRingElement GroupRingElement::basis(const Permutation &p, const mpz_class &c)
{
    GroupRingElement e(p.degree());
    e.add_term(p, c);
    return e;
}

GroupRingElement GroupRingElement::sum_of(int n, std::span<const Permutation> perms)
{
    GroupRingElement e(n);
    for (const auto &p : perms)
        e.add_term(p, 1);
    return e;
}

GroupRingElement &GroupRingElement::operator+=(const GroupRingElement &other)
{
    check_same_degree(other, "add");
    for (const auto &[p, c] : other.terms_)
        add_term(p, c);
    return *this;
}

GroupRingElement &GroupRingElement::operator-=(const GroupRingElement &other)
{
    check_same_degree(other, "subtract");
    for (const auto &[p, c] : other.terms_)
        add_term(p, -c);
    return *this;
}

GroupRingElement &GroupRingElement::operator*=(const mpz_class &scalar)
{
    if (scalar == 0)
    {
        terms_.clear();
        return *this;
    }
    for (auto &[p, c] : terms_)
        c *= scalar;
    return *this;
}

GroupRingElement add(const GroupRingElement &a, const GroupRingElement &b) { return a + b; }

GroupRingElement multiply(const GroupRingElement &a, const GroupRingElement &b)
{
    a.check_same_degree(b, "multiply");
    GroupRingElement out(a.degree());
    mpz_class prod;
    for (const auto &[f, af] : a.terms())
        for (const auto &[h, bh] : b.terms())
        {
            prod = af * bh;
            out.add_term(compose(f, h), prod);
        }
    return out;
}

GroupRingElement translate(const Permutation &tau, const GroupRingElement &a)
{
    if (tau.degree() != a.degree())
        throw DegreeMismatch("translate: degrees " + std::to_string(tau.degree()) + " and " +
                             std::to_string(a.degree()));
    GroupRingElement out(a.degree());
    for (const auto &[s, c] : a.terms())
        out.add_term(compose(tau, s), c);
    return out;
}

GroupRingElement antipode(const GroupRingElement &a)
{
    GroupRingElement out(a.degree());
    for (const auto &[s, c] : a.terms())
        out.add_term(inverse(s), c);
    return out;
}

mpz_class scalar_product(const GroupRingElement &a, const GroupRingElement &b)
{
    a.check_same_degree(b, "scalar_product");
    const auto &small = a.size() <= b.size() ? a : b;
    const auto &large = a.size() <= b.size() ? b : a;
    mpz_class sum = 0;
    for (const auto &[g, c] : small.terms())
    {
        auto it = large.terms().find(g);
        if (it != large.terms().end())
            sum += c * it->second;
    }
    return sum;
}

mpz_class augmentation(const GroupRingElement &a)
{
    mpz_class sum = 0;
    for (const auto &[g, c] : a.terms())
        sum += c;
    return sum;
}

} // namespace jacobi
