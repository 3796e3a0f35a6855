#include "jacobi/lattice.hpp"

#include "jacobi/shuffles.hpp"

#include <algorithm>

namespace jacobi {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols)
{
}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    entries_.reserve(rows_ * cols_);
    for (const auto &r : rows)
    {
        if (r.size() != cols_)
            throw std::invalid_argument("ragged matrix literal");
        for (long v : r)
            entries_.emplace_back(v);
    }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n)
{
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

bool IntegerMatrix::row_is_zero(std::size_t i) const
{
    return std::all_of(row(i).begin(), row(i).end(), [](const mpz_class &v) { return v == 0; });
}

IntegerMatrix operator*(const IntegerMatrix &a, const IntegerMatrix &b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix product: inner dimensions differ");
    IntegerMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
        {
            if (a(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

namespace {

// Row operations applied simultaneously to the working matrix and to U.
class RowEchelon
{
  public:
    RowEchelon(IntegerMatrix &h, IntegerMatrix &u) : h_(h), u_(u) {}

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (auto *m : {&h_, &u_})
            std::swap_ranges(m->row(a).begin(), m->row(a).end(), m->row(b).begin());
    }

    void negate_row(std::size_t r)
    {
        for (auto *m : {&h_, &u_})
            for (auto &v : m->row(r))
                v = -v;
    }

    // row[target] -= q * row[source]
    void subtract_multiple(std::size_t target, std::size_t source, const mpz_class &q)
    {
        if (q == 0)
            return;
        for (auto *m : {&h_, &u_})
        {
            auto t = m->row(target);
            auto s = m->row(source);
            for (std::size_t k = 0; k < t.size(); ++k)
                if (s[k] != 0)
                    t[k] -= q * s[k];
        }
    }

    // (row a, row b) <- (x a + y b, p a + q b) with x q - y p = 1.
    void combine(std::size_t a, std::size_t b, const mpz_class &x, const mpz_class &y,
                 const mpz_class &p, const mpz_class &q)
    {
        mpz_class na, nb;
        for (auto *m : {&h_, &u_})
        {
            auto ra = m->row(a);
            auto rb = m->row(b);
            for (std::size_t k = 0; k < ra.size(); ++k)
            {
                if (ra[k] == 0 && rb[k] == 0)
                    continue;
                na = x * ra[k] + y * rb[k];
                nb = p * ra[k] + q * rb[k];
                ra[k] = na;
                rb[k] = nb;
            }
        }
    }

  private:
    IntegerMatrix &h_;
    IntegerMatrix &u_;
};

} // namespace

HermiteDecomposition hermite_normal_form(const IntegerMatrix &m)
{
    HermiteDecomposition out{m, IntegerMatrix::identity(m.rows()), 0};
    IntegerMatrix &h = out.hermite;
    RowEchelon ops(h, out.transform);

    std::size_t pivot_row = 0;
    mpz_class g, x, y, a_over_g, b_over_g, quotient;
    for (std::size_t col = 0; col < h.cols() && pivot_row < h.rows(); ++col)
    {
        // Start from the smallest nonzero entry to limit coefficient growth.
        std::size_t best = h.rows();
        for (std::size_t i = pivot_row; i < h.rows(); ++i)
            if (h(i, col) != 0 && (best == h.rows() || abs(h(i, col)) < abs(h(best, col))))
                best = i;
        if (best == h.rows())
            continue;
        ops.swap_rows(pivot_row, best);

        for (std::size_t i = pivot_row + 1; i < h.rows(); ++i)
        {
            if (h(i, col) == 0)
                continue;
            const mpz_class a = h(pivot_row, col);
            const mpz_class b = h(i, col);
            if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()))
            {
                quotient = b / a;
                ops.subtract_multiple(i, pivot_row, quotient);
                continue;
            }
            mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            a_over_g = a / g;
            b_over_g = b / g;
            mpz_class minus_b = -b_over_g;
            ops.combine(pivot_row, i, x, y, minus_b, a_over_g);
        }

        if (h(pivot_row, col) < 0)
            ops.negate_row(pivot_row);

        const mpz_class pivot = h(pivot_row, col);
        for (std::size_t k = 0; k < pivot_row; ++k)
        {
            mpz_fdiv_q(quotient.get_mpz_t(), h(k, col).get_mpz_t(), pivot.get_mpz_t());
            ops.subtract_multiple(k, pivot_row, quotient);
        }
        ++pivot_row;
    }
    out.rank = pivot_row;
    return out;
}

std::vector<std::vector<mpz_class>> kernel_basis(const IntegerMatrix &m)
{
    const auto dec = hermite_normal_form(m);
    std::vector<std::vector<mpz_class>> basis;
    for (std::size_t i = dec.rank; i < m.rows(); ++i)
    {
        const auto r = dec.transform.row(i);
        basis.emplace_back(r.begin(), r.end());
    }
    return basis;
}

IntegerMatrix omega_matrix(int n)
{
    if (n < 1 || n > kMaxLatticeDegree)
        throw std::invalid_argument("omega_matrix supports 1 <= n <= " +
                                    std::to_string(kMaxLatticeDegree));
    const auto group = enumerate_symmetric_group(n);
    const auto &w = omega(n);
    IntegerMatrix m(group.size(), group.size());
    for (std::size_t r = 0; r < group.size(); ++r)
        for (const auto &[g, c] : w.terms())
            m(r, compose(group[r], g).lex_rank()) += c;
    return m;
}

LatticeBasis::LatticeBasis(int degree, IntegerMatrix hermite_rows)
    : degree_(degree), hnf_(std::move(hermite_rows))
{
    if (hnf_.cols() != factorial(degree))
        throw DegreeMismatch("lattice basis width does not match n!");
    for (std::size_t r = 0; r < hnf_.rows(); ++r)
    {
        std::size_t c = 0;
        while (c < hnf_.cols() && hnf_(r, c) == 0)
            ++c;
        if (c == hnf_.cols() || (!pivots_.empty() && c <= pivots_.back()) || hnf_(r, c) < 0)
            throw std::invalid_argument("lattice basis rows are not in Hermite normal form");
        pivots_.push_back(c);
    }
}

std::vector<GroupRingElement> LatticeBasis::elements() const
{
    const auto group = enumerate_symmetric_group(degree_);
    std::vector<GroupRingElement> out;
    out.reserve(hnf_.rows());
    for (std::size_t r = 0; r < hnf_.rows(); ++r)
    {
        GroupRingElement e(degree_);
        for (std::size_t c = 0; c < hnf_.cols(); ++c)
            e.add_term(group[c], hnf_(r, c));
        out.push_back(std::move(e));
    }
    return out;
}

bool LatticeBasis::contains(const GroupRingElement &a) const
{
    if (a.degree() != degree_)
        throw DegreeMismatch("lattice membership: degrees " + std::to_string(a.degree()) + " and " +
                             std::to_string(degree_));
    std::vector<mpz_class> v(hnf_.cols());
    for (const auto &[g, c] : a.terms())
        v[g.lex_rank()] = c;

    mpz_class q;
    for (std::size_t r = 0; r < hnf_.rows(); ++r)
    {
        const std::size_t p = pivots_[r];
        for (std::size_t c = r ? pivots_[r - 1] + 1 : 0; c < p; ++c)
            if (v[c] != 0)
                return false;
        if (!mpz_divisible_p(v[p].get_mpz_t(), hnf_(r, p).get_mpz_t()))
            return false;
        q = v[p] / hnf_(r, p);
        if (q == 0)
            continue;
        for (std::size_t c = p; c < hnf_.cols(); ++c)
            v[c] -= q * hnf_(r, c);
    }
    return std::all_of(v.begin(), v.end(), [](const mpz_class &x) { return x == 0; });
}

LatticeBasis jacobi_lattice_basis(int n)
{
    const auto kernel = kernel_basis(omega_matrix(n));
    const std::size_t width = factorial(n);
    IntegerMatrix rows(kernel.size(), width);
    for (std::size_t r = 0; r < kernel.size(); ++r)
        for (std::size_t c = 0; c < width; ++c)
            rows(r, c) = kernel[r][c];

    // Re-echelon the kernel rows: a unimodular change of basis that keeps
    // the lattice and yields a canonical, small-entry basis.
    auto dec = hermite_normal_form(rows);
    IntegerMatrix hnf(dec.rank, width);
    for (std::size_t r = 0; r < dec.rank; ++r)
        for (std::size_t c = 0; c < width; ++c)
            hnf(r, c) = dec.hermite(r, c);
    return LatticeBasis(n, std::move(hnf));
}

bool lattice_membership(const GroupRingElement &a, const LatticeBasis &basis)
{
    return basis.contains(a);
}

} // namespace jacobi
