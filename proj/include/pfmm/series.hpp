#pragma once

#include <vector>

#include "pfmm/ratfunc.hpp"

namespace pfmm {

// Truncated exact power series over Q. `order()` is the number of stored
// coefficients; `valid()` is the conservative count of trustworthy leading
// coefficients (a derivative loses one). Reading at or past valid() throws
// OrderExhausted rather than returning a silently wrong value.
class PowerSeries {
public:
    PowerSeries() = default;
    explicit PowerSeries(std::size_t order) : c_(order), valid_(order) {}
    PowerSeries(std::vector<Rational> coeffs, std::size_t valid)
        : c_(std::move(coeffs)), valid_(valid) {}

    static PowerSeries constant(const Rational& v, std::size_t order) {
        PowerSeries s(order);
        if (order > 0) s.c_[0] = v;
        return s;
    }
    static PowerSeries one(std::size_t order) { return constant(1, order); }

    std::size_t order() const { return c_.size(); }
    std::size_t valid() const { return valid_; }

    const Rational& at(std::size_t i) const {
        if (i >= valid_) throw OrderExhausted("coefficient index beyond valid order");
        return c_[i];
    }
    Rational& raw(std::size_t i) { return c_[i]; }
    const Rational& raw(std::size_t i) const { return c_[i]; }

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
        PowerSeries r = aligned(a, b);
        for (std::size_t i = 0; i < r.order(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
        PowerSeries r = aligned(a, b);
        for (std::size_t i = 0; i < r.order(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        PowerSeries r = aligned(a, b);
        for (std::size_t i = 0; i < r.order(); ++i)
            for (std::size_t j = 0; j <= i; ++j) r.c_[i] += a.c_[j] * b.c_[i - j];
        return r;
    }
    friend PowerSeries operator*(const Rational& c, const PowerSeries& a) {
        PowerSeries r = a;
        for (auto& v : r.c_) v = c * v;
        return r;
    }

    // multiplicative inverse; requires a unit constant term
    PowerSeries reciprocal() const {
        if (order() == 0 || c_[0] == 0)
            throw NotAUnit("reciprocal of a series with zero constant term");
        PowerSeries r(order());
        r.valid_ = valid_;
        r.c_[0] = 1 / c_[0];
        for (std::size_t i = 1; i < order(); ++i) {
            Rational acc = 0;
            for (std::size_t j = 1; j <= i; ++j) acc += c_[j] * r.c_[i - j];
            r.c_[i] = -acc / c_[0];
        }
        return r;
    }

    // theta = z d/dz; does not consume an order
    PowerSeries theta() const {
        PowerSeries r(order());
        r.valid_ = valid_;
        for (std::size_t i = 0; i < order(); ++i)
            r.c_[i] = Rational(static_cast<long>(i)) * c_[i];
        return r;
    }

    // plain d/dz; top coefficient is an explicit zero and valid drops by one
    PowerSeries derivative() const {
        if (valid_ == 0) throw OrderExhausted("derivative of an exhausted series");
        PowerSeries r(order());
        r.valid_ = valid_ - 1;
        for (std::size_t i = 0; i + 1 < order(); ++i)
            r.c_[i] = Rational(static_cast<long>(i + 1)) * c_[i + 1];
        return r;
    }

    PowerSeries exp() const {
        if (order() > 0 && c_[0] != 0)
            throw BadConstantTerm("exp requires zero constant term");
        // E' = a' E, so (i+1) E_{i+1} = sum_{j} (j+1) a_{j+1} E_{i-j}
        PowerSeries r(order());
        r.valid_ = valid_;
        if (order() == 0) return r;
        r.c_[0] = 1;
        for (std::size_t i = 1; i < order(); ++i) {
            Rational acc = 0;
            for (std::size_t j = 1; j <= i; ++j)
                acc += Rational(static_cast<long>(j)) * c_[j] * r.c_[i - j];
            r.c_[i] = acc / Rational(static_cast<long>(i));
        }
        return r;
    }

    PowerSeries log() const {
        if (order() == 0 || c_[0] != 1)
            throw BadConstantTerm("log requires constant term 1");
        // L' = a'/a; integrate term by term
        PowerSeries r(order());
        r.valid_ = valid_;
        for (std::size_t i = 1; i < order(); ++i) {
            Rational acc = Rational(static_cast<long>(i)) * c_[i];
            for (std::size_t j = 1; j < i; ++j)
                acc -= Rational(static_cast<long>(j)) * r.c_[j] * c_[i - j];
            r.c_[i] = acc / Rational(static_cast<long>(i));
        }
        return r;
    }

    bool is_zero_through(std::size_t n) const {
        for (std::size_t i = 0; i < n && i < order(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    PowerSeries truncated(std::size_t n) const {
        std::vector<Rational> c(c_.begin(), c_.begin() + std::min(n, c_.size()));
        c.resize(n);
        return PowerSeries(std::move(c), std::min(valid_, n));
    }

private:
    static PowerSeries aligned(const PowerSeries& a, const PowerSeries& b) {
        if (a.order() != b.order()) throw Error("series order mismatch");
        PowerSeries r(a.order());
        r.valid_ = std::min(a.valid_, b.valid_);
        return r;
    }

    std::vector<Rational> c_;
    std::size_t valid_ = 0;
};

// Taylor expansion of a rational function regular at the origin.
inline PowerSeries expand_at_zero(const RatFunc& f, std::size_t order) {
    if (f.den().coeff(0) == 0)
        throw PoleAtOrigin("cannot expand a function with a pole at 0");
    PowerSeries num(order), den(order);
    for (std::size_t i = 0; i < order; ++i) {
        num.raw(i) = f.num().coeff(i);
        den.raw(i) = f.den().coeff(i);
    }
    return num * den.reciprocal();
}

namespace detail {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

// Gaussian elimination; returns true and writes x when M x = b is solvable
// (picking the particular solution with free variables set to zero).
inline bool solve_linear(Mat m, Vec b, Vec& x) {
    const std::size_t n = m.size();
    std::vector<long> pivot_col(n, -1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t p = row;
        while (p < n && m[p][col] == 0) ++p;
        if (p == n) continue;
        std::swap(m[p], m[row]);
        std::swap(b[p], b[row]);
        Rational inv = 1 / m[row][col];
        for (std::size_t j = col; j < n; ++j) m[row][j] *= inv;
        b[row] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rational f = m[i][col];
            for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[row][j];
            b[i] -= f * b[row];
        }
        pivot_col[row] = static_cast<long>(col);
        ++row;
    }
    for (std::size_t i = row; i < n; ++i)
        if (b[i] != 0) return false;
    x.assign(n, 0);
    for (std::size_t i = 0; i < row; ++i) x[static_cast<std::size_t>(pivot_col[i])] = b[i];
    return true;
}

inline std::size_t rank(Mat m) {
    const std::size_t n = m.size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t p = row;
        while (p < n && m[p][col] == 0) ++p;
        if (p == n) continue;
        std::swap(m[p], m[row]);
        Rational inv = 1 / m[row][col];
        for (std::size_t j = col; j < n; ++j) m[row][j] *= inv;
        for (std::size_t i = row + 1; i < n; ++i) {
            if (m[i][col] == 0) continue;
            Rational f = m[i][col];
            for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[row][j];
        }
        ++row;
    }
    return row;
}

}  // namespace detail

using RatFuncMatrix = std::vector<std::vector<RatFunc>>;

// Solves theta w = A(z) w for the series solution regular at the origin,
// normalized to w(0) = e_1. Coefficient m solves (m I - A(0)) w_m =
// sum_{i=1..m} A_i w_{m-i}; the matrix is invertible since A(0) is nilpotent.
inline std::vector<PowerSeries> solve_homogeneous(const RatFuncMatrix& a,
                                                  std::size_t order) {
    const std::size_t n = a.size();
    std::vector<std::vector<PowerSeries>> aser(n, std::vector<PowerSeries>(n));
    detail::Mat a0(n, detail::Vec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            aser[i][j] = expand_at_zero(a[i][j], order);
            a0[i][j] = aser[i][j].raw(0);
        }

    // A(0) must kill e_1 and have one-dimensional kernel
    for (std::size_t i = 0; i < n; ++i)
        if (a0[i][0] != 0)
            throw NoRegularSolution("A(0) e_1 != 0");
    if (detail::rank(a0) != n - 1)
        throw NoRegularSolution("kernel of A(0) is not one-dimensional");

    std::vector<detail::Vec> w(order, detail::Vec(n, 0));
    if (order > 0) w[0][0] = 1;
    for (std::size_t m = 1; m < order; ++m) {
        detail::Vec rhs(n, 0);
        for (std::size_t l = 1; l <= m; ++l)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    rhs[i] += aser[i][j].raw(l) * w[m - l][j];
        detail::Mat lhs(n, detail::Vec(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                lhs[i][j] = (i == j ? Rational(static_cast<long>(m)) : Rational(0)) - a0[i][j];
        detail::Vec x;
        if (!detail::solve_linear(lhs, rhs, x))
            throw NoRegularSolution("recursion matrix is singular");
        w[m] = std::move(x);
    }

    std::vector<PowerSeries> out(n, PowerSeries(order));
    for (std::size_t m = 0; m < order; ++m)
        for (std::size_t i = 0; i < n; ++i) out[i].raw(m) = w[m][i];
    return out;
}

// Solves theta v = A(z) v - w0 for the single-valued piece of the second
// solution, normalized so the first component vanishes at the origin.
inline std::vector<PowerSeries> solve_inhomogeneous(const RatFuncMatrix& a,
                                                    const std::vector<PowerSeries>& w0,
                                                    std::size_t order) {
    const std::size_t n = a.size();
    std::vector<std::vector<PowerSeries>> aser(n, std::vector<PowerSeries>(n));
    detail::Mat a0(n, detail::Vec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            aser[i][j] = expand_at_zero(a[i][j], order);
            a0[i][j] = aser[i][j].raw(0);
        }

    // order 0: A(0) v_0 = w0(0), then shift by the kernel (spanned by e_1,
    // when the homogeneous preconditions hold) to make the first component 0
    detail::Vec b0(n);
    for (std::size_t i = 0; i < n; ++i) b0[i] = w0[i].raw(0);
    detail::Vec v0;
    if (!detail::solve_linear(a0, b0, v0))
        throw NoSolution("order-0 equation A(0) v = w0(0) is inconsistent");
    for (std::size_t i = 0; i < n; ++i)
        if (a0[i][0] != 0)
            throw NoSolution("cannot normalize: e_1 is not in the kernel of A(0)");
    v0[0] = 0;

    std::vector<detail::Vec> v(order, detail::Vec(n, 0));
    if (order > 0) v[0] = v0;
    for (std::size_t m = 1; m < order; ++m) {
        detail::Vec rhs(n, 0);
        for (std::size_t l = 1; l <= m; ++l)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    rhs[i] += aser[i][j].raw(l) * v[m - l][j];
        for (std::size_t i = 0; i < n; ++i) rhs[i] -= w0[i].raw(m);
        detail::Mat lhs(n, detail::Vec(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                lhs[i][j] = (i == j ? Rational(static_cast<long>(m)) : Rational(0)) - a0[i][j];
        detail::Vec x;
        if (!detail::solve_linear(lhs, rhs, x))
            throw NoSolution("recursion matrix is singular");
        v[m] = std::move(x);
    }

    std::vector<PowerSeries> out(n, PowerSeries(order));
    for (std::size_t m = 0; m < order; ++m)
        for (std::size_t i = 0; i < n; ++i) out[i].raw(m) = v[m][i];
    return out;
}

}  // namespace pfmm
