#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polyframe {

// Bad parameters, shapes or malformed input. The CLI maps these to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An invariant that should always hold did not.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

using Rat = mpq_class;
using Int = mpz_class;
using RVec = std::vector<Rat>;

inline int sign(const Rat& x) { return sgn(x); }
inline int sign(const Int& x) { return sgn(x); }

inline Rat parse_rat(const std::string& s)
{
    Rat r;
    if (s.empty() || r.set_str(s, 10) != 0)
        throw InputError("not a rational: '" + s + "'");
    if (r.get_den() == 0)
        throw InputError("zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

class RMat {
public:
    RMat() = default;
    RMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    // Builds a matrix whose columns are the given vectors.
    static RMat from_columns(const std::vector<RVec>& cols, std::size_t rows)
    {
        RMat m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows)
                throw InputError("column " + std::to_string(j) + " has wrong length");
            for (std::size_t i = 0; i < rows; ++i)
                m(i, j) = cols[j][i];
        }
        return m;
    }

    static RMat from_rows(const std::vector<RVec>& rows)
    {
        std::size_t c = rows.empty() ? 0 : rows[0].size();
        RMat m(rows.size(), c);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != c)
                throw InputError("ragged matrix rows");
            for (std::size_t j = 0; j < c; ++j)
                m(i, j) = rows[i][j];
        }
        return m;
    }

    static RMat identity(std::size_t n)
    {
        RMat m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    RVec col(std::size_t j) const
    {
        RVec v(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            v[i] = (*this)(i, j);
        return v;
    }

    RVec row(std::size_t i) const
    {
        return RVec(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                    a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    RMat transpose() const
    {
        RMat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    friend bool operator==(const RMat& x, const RMat& y)
    {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

inline RMat operator*(const RMat& x, const RMat& y)
{
    if (x.cols() != y.rows())
        throw InputError("matrix product: shape mismatch");
    RMat m(x.rows(), y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t k = 0; k < x.cols(); ++k) {
            if (x(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < y.cols(); ++j)
                m(i, j) += x(i, k) * y(k, j);
        }
    return m;
}

inline RVec operator*(const RMat& x, const RVec& v)
{
    if (x.cols() != v.size())
        throw InputError("matrix-vector product: shape mismatch");
    RVec r(x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            r[i] += x(i, j) * v[j];
    return r;
}

inline Rat dot(const RVec& a, const RVec& b)
{
    if (a.size() != b.size())
        throw InputError("dot: length mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

inline RVec sub(const RVec& a, const RVec& b)
{
    RVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

inline RVec add(const RVec& a, const RVec& b)
{
    RVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

inline RVec scale(const Rat& s, const RVec& a)
{
    RVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = s * a[i];
    return r;
}

namespace detail {

// Fraction-free elimination on an integer matrix (row-major, n x n). Returns det.
inline Int bareiss(std::vector<Int> m, std::size_t n)
{
    if (n == 0)
        return 1;
    Int prev = 1;
    int sgn_flip = 1;
    auto at = [&](std::size_t i, std::size_t j) -> Int& { return m[i * n + j]; };
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && at(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(at(k, j), at(p, j));
            sgn_flip = -sgn_flip;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                at(i, j) = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(at(i, j).get_mpz_t(), at(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = at(k, k);
    }
    return sgn_flip * at(n - 1, n - 1);
}

// Scales every column by the lcm of its denominators. Returns the integer matrix and
// the positive scaling factor (product of the lcms).
inline std::pair<std::vector<Int>, Int> integer_lift(const RMat& m)
{
    std::size_t n = m.rows();
    std::vector<Int> out(n * m.cols());
    Int total = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        Int l = 1;
        for (std::size_t i = 0; i < n; ++i)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t i = 0; i < n; ++i)
            out[i * m.cols() + j] = m(i, j).get_num() * (l / m(i, j).get_den());
        total *= l;
    }
    return {std::move(out), total};
}

} // namespace detail

inline Rat det(const RMat& m)
{
    if (m.rows() != m.cols())
        throw InputError("det: matrix is not square");
    auto [a, scale_factor] = detail::integer_lift(m);
    Rat r(detail::bareiss(std::move(a), m.rows()), scale_factor);
    r.canonicalize();
    return r;
}

inline int det_sign(const RMat& m)
{
    if (m.rows() != m.cols())
        throw InputError("det_sign: matrix is not square");
    auto lifted = detail::integer_lift(m);
    return sign(detail::bareiss(std::move(lifted.first), m.rows()));
}

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(RMat& m)
{
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0)
            ++p;
        if (p == m.rows())
            continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(p, j), m(r, j));
        Rat inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j)
            m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0)
                continue;
            Rat f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m(i, j) -= f * m(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

inline std::size_t rank(const RMat& m)
{
    RMat c = m;
    return rref(c).size();
}

inline std::optional<RVec> solve(const RMat& m, const RVec& b)
{
    if (m.rows() != b.size())
        throw InputError("solve: rows(m) != len(b)");
    RMat aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    auto piv = rref(aug);
    if (!piv.empty() && piv.back() == m.cols())
        return std::nullopt;
    RVec x(m.cols());
    for (std::size_t r = 0; r < piv.size(); ++r)
        x[piv[r]] = aug(r, m.cols());
    return x;
}

// Basis of {x : m x = 0}.
inline std::vector<RVec> nullspace(const RMat& m)
{
    RMat c = m;
    auto piv = rref(c);
    std::vector<bool> is_piv(m.cols(), false);
    for (auto p : piv)
        is_piv[p] = true;
    std::vector<RVec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_piv[f])
            continue;
        RVec x(m.cols());
        x[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r)
            x[piv[r]] = -c(r, f);
        basis.push_back(std::move(x));
    }
    return basis;
}

inline RMat inverse(const RMat& m)
{
    std::size_t n = m.rows();
    if (n != m.cols())
        throw InputError("inverse: matrix is not square");
    RMat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1)
        throw InputError("inverse: matrix is singular");
    RMat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = aug(i, n + j);
    return inv;
}

// ---------------------------------------------------------------------------
// Exact LP feasibility.

enum class Rel { Le, Lt, Eq };

struct Constraint {
    RVec a;
    Rel rel;
    Rat b;
};

struct LpResult {
    bool feasible = false;
    RVec witness;
};

namespace detail {

// Dense tableau for min c.y subject to A y = b, y >= 0, b >= 0.
class Tableau {
public:
    Tableau(std::size_t m, std::size_t n) : m_(m), n_(n), t_(m + 1, RVec(n + 1)), basis_(m) {}

    Rat& a(std::size_t i, std::size_t j) { return t_[i][j]; }
    Rat& rhs(std::size_t i) { return t_[i][n_]; }
    std::vector<std::size_t>& basis() { return basis_; }
    std::size_t rows() const { return m_; }

    void pivot(std::size_t r, std::size_t c)
    {
        Rat inv = 1 / t_[r][c];
        for (auto& x : t_[r])
            x *= inv;
        for (std::size_t i = 0; i <= m_; ++i) {
            if (i == r || t_[i][c] == 0)
                continue;
            Rat f = t_[i][c];
            for (std::size_t j = 0; j <= n_; ++j)
                if (t_[r][j] != 0)
                    t_[i][j] -= f * t_[r][j];
        }
        basis_[r] = c;
    }

    // Loads objective c (minimise) into the last row as reduced costs.
    void set_objective(const RVec& c)
    {
        RVec& z = t_[m_];
        for (std::size_t j = 0; j < n_; ++j)
            z[j] = c[j];
        z[n_] = 0;
        for (std::size_t i = 0; i < m_; ++i) {
            const Rat& cb = c[basis_[i]];
            if (cb == 0)
                continue;
            for (std::size_t j = 0; j <= n_; ++j)
                z[j] -= cb * t_[i][j];
        }
    }

    // Bland's rule. allowed[j] false excludes column j from entering.
    // Returns false if unbounded.
    bool optimise(const std::vector<bool>& allowed)
    {
        for (;;) {
            std::size_t enter = n_;
            for (std::size_t j = 0; j < n_; ++j)
                if (allowed[j] && t_[m_][j] < 0) {
                    enter = j;
                    break;
                }
            if (enter == n_)
                return true;
            std::size_t leave = m_;
            Rat best;
            for (std::size_t i = 0; i < m_; ++i) {
                if (t_[i][enter] <= 0)
                    continue;
                Rat ratio = t_[i][n_] / t_[i][enter];
                if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == m_)
                return false;
            pivot(leave, enter);
        }
    }

    Rat objective_value() { return -t_[m_][n_]; }

    void drop_row(std::size_t r)
    {
        t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
        --m_;
    }

private:
    std::size_t m_, n_;
    std::vector<RVec> t_;
    std::vector<std::size_t> basis_;
};

} // namespace detail

// Decides whether {x in R^dim : a.x rel b for every constraint} is nonempty.
// With nonneg = true the variables are additionally constrained to x >= 0.
// Strict rows get a shared gap t <= 1 that is maximised; feasible iff t* > 0.
inline LpResult lp_feasible(const std::vector<Constraint>& cons, std::size_t dim, bool nonneg = false)
{
    for (const auto& c : cons)
        if (c.a.size() != dim)
            throw InputError("lp_feasible: constraint has wrong dimension");

    bool strict = std::any_of(cons.begin(), cons.end(), [](const Constraint& c) { return c.rel == Rel::Lt; });
    std::size_t nx = nonneg ? dim : 2 * dim;
    std::size_t t_col = nx;
    std::size_t first_slack = nx + (strict ? 1 : 0);
    std::size_t nslack = 0;
    for (const auto& c : cons)
        if (c.rel != Rel::Eq)
            ++nslack;
    std::size_t m = cons.size() + (strict ? 1 : 0);
    std::size_t first_art = first_slack + nslack + (strict ? 1 : 0);
    std::size_t n = first_art + m;

    detail::Tableau tab(m, n);
    std::size_t s = first_slack;
    for (std::size_t i = 0; i < cons.size(); ++i) {
        const auto& c = cons[i];
        for (std::size_t j = 0; j < dim; ++j) {
            tab.a(i, j) = c.a[j];
            if (!nonneg)
                tab.a(i, dim + j) = -c.a[j];
        }
        if (c.rel == Rel::Lt)
            tab.a(i, t_col) = 1;
        if (c.rel != Rel::Eq)
            tab.a(i, s++) = 1;
        tab.rhs(i) = c.b;
    }
    if (strict) {
        std::size_t r = cons.size();
        tab.a(r, t_col) = 1;
        tab.a(r, s++) = 1;
        tab.rhs(r) = 1;
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (tab.rhs(i) < 0)
            for (std::size_t j = 0; j <= n; ++j)
                tab.a(i, j) = -tab.a(i, j);
        tab.a(i, first_art + i) = 1;
        tab.basis()[i] = first_art + i;
    }

    RVec c1(n);
    for (std::size_t j = first_art; j < n; ++j)
        c1[j] = 1;
    tab.set_objective(c1);
    std::vector<bool> all(n, true);
    tab.optimise(all);
    if (tab.objective_value() > 0)
        return {false, {}};

    // Drive artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < tab.rows();) {
        if (tab.basis()[i] < first_art) {
            ++i;
            continue;
        }
        std::size_t c = first_art;
        for (std::size_t j = 0; j < first_art; ++j)
            if (tab.a(i, j) != 0) {
                c = j;
                break;
            }
        if (c == first_art) {
            tab.drop_row(i);
            continue;
        }
        tab.pivot(i, c);
        ++i;
    }

    std::vector<bool> real(n, true);
    for (std::size_t j = first_art; j < n; ++j)
        real[j] = false;
    if (strict) {
        RVec c2(n);
        c2[t_col] = -1;
        tab.set_objective(c2);
        tab.optimise(real);
        if (-tab.objective_value() <= 0)  // t* = -min(-t)
            return {false, {}};
    }

    RVec y(n);
    for (std::size_t i = 0; i < tab.rows(); ++i)
        y[tab.basis()[i]] = tab.rhs(i);
    RVec x(dim);
    for (std::size_t j = 0; j < dim; ++j)
        x[j] = nonneg ? y[j] : y[j] - y[dim + j];
    return {true, x};
}

inline bool satisfies(const Constraint& c, const RVec& x)
{
    Rat v = dot(c.a, x);
    switch (c.rel) {
    case Rel::Le: return v <= c.b;
    case Rel::Lt: return v < c.b;
    case Rel::Eq: return v == c.b;
    }
    return false;
}

} // namespace polyframe
