#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "hqmap/error.hpp"
#include "hqmap/numeric.hpp"

namespace hqmap {

/// Dense row-major matrix.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_) throw DomainError("DimensionMismatch", "matrix product shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using GaussMatrix = Matrix<Gaussian>;

inline GaussMatrix conjugate_transpose(const GaussMatrix& m)
{
    GaussMatrix t(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j).conj();
    return t;
}

namespace detail {

// Element of Z[i]; only what Bareiss elimination needs.
struct GaussInt {
    Integer re;
    Integer im;

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    friend GaussInt operator*(const GaussInt& a, const GaussInt& b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussInt operator-(const GaussInt& a, const GaussInt& b) { return {a.re - b.re, a.im - b.im}; }
};

// a / b where b is known to divide a in Z[i].
inline GaussInt exact_div(const GaussInt& a, const GaussInt& b)
{
    const Integer n = b.re * b.re + b.im * b.im;
    GaussInt q{a.re * b.re + a.im * b.im, a.im * b.re - a.re * b.im};
    q.re /= n;
    q.im /= n;
    return q;
}

} // namespace detail

/// Exact rank over Q(i) by fraction-free (Bareiss) elimination. Rows are first
/// scaled to Gaussian integers, which does not change the rank.
inline std::size_t rank(const GaussMatrix& m)
{
    using detail::GaussInt;
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<std::vector<GaussInt>> a(R, std::vector<GaussInt>(C));
    for (std::size_t i = 0; i < R; ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < C; ++j) {
            l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(m(i, j).re));
            l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(m(i, j).im));
        }
        for (std::size_t j = 0; j < C; ++j) {
            const Rational re = m(i, j).re * l, im = m(i, j).im * l;
            a[i][j] = {boost::multiprecision::numerator(re), boost::multiprecision::numerator(im)};
        }
    }
    std::vector<std::size_t> colperm(C);
    for (std::size_t j = 0; j < C; ++j) colperm[j] = j;
    auto at = [&](std::size_t i, std::size_t j) -> GaussInt& { return a[i][colperm[j]]; };

    GaussInt prev{1, 0};
    std::size_t k = 0;
    for (; k < std::min(R, C); ++k) {
        std::optional<std::pair<std::size_t, std::size_t>> piv;
        for (std::size_t j = k; j < C && !piv; ++j)
            for (std::size_t i = k; i < R; ++i)
                if (!at(i, j).is_zero()) {
                    piv = {i, j};
                    break;
                }
        if (!piv) break;
        std::swap(a[k], a[piv->first]);
        std::swap(colperm[k], colperm[piv->second]);
        const GaussInt p = at(k, k);
        for (std::size_t i = k + 1; i < R; ++i) {
            const GaussInt f = at(i, k);
            for (std::size_t j = k + 1; j < C; ++j) at(i, j) = detail::exact_div(at(i, j) * p - f * at(k, j), prev);
            at(i, k) = {0, 0};
        }
        prev = p;
    }
    return k;
}

/// Inverse over Q(i) by Gauss-Jordan elimination. Throws Singular.
inline GaussMatrix inverse(const GaussMatrix& m)
{
    const std::size_t n = m.rows();
    if (m.cols() != n) throw DomainError("DimensionMismatch", "inverse needs a square matrix");
    GaussMatrix a = m, inv = GaussMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k).is_zero()) ++p;
        if (p == n) throw DomainError("Singular", "matrix is not invertible");
        if (p != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(k, j), a(p, j));
                std::swap(inv(k, j), inv(p, j));
            }
        const Gaussian piv = Gaussian(1) / a(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) *= piv;
            inv(k, j) *= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k).is_zero()) continue;
            const Gaussian f = a(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

/// Signature pair: counts of positive and negative eigenvalues.
struct SignaturePair {
    std::size_t pos = 0;
    std::size_t neg = 0;

    std::size_t rank() const { return pos + neg; }
    friend bool operator==(const SignaturePair&, const SignaturePair&) = default;
    SignaturePair operator+(const SignaturePair& o) const { return {pos + o.pos, neg + o.neg}; }
};

/// One term sign * weight * u u^* of a Hermitian decomposition.
struct RankOneTerm {
    int sign = 1;
    Rational weight;
    std::vector<Gaussian> vec;
};

/// Symmetric-pivoted block LDL* of an exact Hermitian matrix:
/// H = sum_j sign_j * weight_j * u_j u_j^*, with independent u_j.
/// 1x1 pivots take the nonzero diagonal entry of largest magnitude (lowest
/// index on ties). When the remaining diagonal vanishes, a 2x2 block
/// [[0, c], [conj c, 0]] is split into one positive and one negative term.
inline std::vector<RankOneTerm> hermitian_ldl(GaussMatrix h)
{
    const std::size_t n = h.rows();
    if (h.cols() != n) throw DomainError("DimensionMismatch", "LDL* needs a square matrix");
    std::vector<bool> active(n, true);
    std::vector<RankOneTerm> out;

    auto column = [&](std::size_t p) {
        std::vector<Gaussian> v(n);
        for (std::size_t i = 0; i < n; ++i)
            if (active[i]) v[i] = h(i, p);
        return v;
    };

    for (;;) {
        std::optional<std::size_t> best;
        for (std::size_t i = 0; i < n; ++i) {
            if (!active[i] || h(i, i).re.is_zero()) continue;
            if (!best || abs(h(i, i).re) > abs(h(*best, *best).re)) best = i;
        }
        if (best) {
            const std::size_t p = *best;
            const Rational d = h(p, p).re;
            std::vector<Gaussian> x = column(p);
            for (std::size_t i = 0; i < n; ++i) {
                if (!active[i] || i == p || x[i].is_zero()) continue;
                const Gaussian xi_over_d = x[i] / Gaussian(d);
                for (std::size_t j = 0; j < n; ++j) {
                    if (!active[j] || j == p || x[j].is_zero()) continue;
                    h(i, j) -= xi_over_d * x[j].conj();
                }
            }
            active[p] = false;
            for (auto& v : x) v /= Gaussian(d);
            out.push_back({d.sign(), abs(d), std::move(x)});
            continue;
        }

        std::optional<std::pair<std::size_t, std::size_t>> off;
        for (std::size_t i = 0; i < n && !off; ++i) {
            if (!active[i]) continue;
            for (std::size_t j = i + 1; j < n; ++j)
                if (active[j] && !h(i, j).is_zero()) {
                    off = {i, j};
                    break;
                }
        }
        if (!off) break;

        const auto [p, q] = *off;
        const Gaussian c = h(p, q);
        const std::vector<Gaussian> x = column(p), y = column(q);
        const Gaussian inv_cbar = Gaussian(1) / c.conj();
        const Gaussian inv_c = Gaussian(1) / c;
        for (std::size_t i = 0; i < n; ++i) {
            if (!active[i] || i == p || i == q) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (!active[j] || j == p || j == q) continue;
                if (x[i].is_zero() && y[i].is_zero()) continue;
                h(i, j) -= x[i] * y[j].conj() * inv_cbar + y[i] * x[j].conj() * inv_c;
            }
        }
        active[p] = false;
        active[q] = false;
        std::vector<Gaussian> plus(n), minus(n);
        for (std::size_t i = 0; i < n; ++i) {
            const Gaussian u = x[i] * inv_cbar;
            plus[i] = y[i] + u;
            minus[i] = y[i] - u;
        }
        out.push_back({1, Rational(1, 2), std::move(plus)});
        out.push_back({-1, Rational(1, 2), std::move(minus)});
    }
    return out;
}

/// Exact inertia of a Hermitian matrix (Sylvester: independent of pivot order).
inline SignaturePair inertia(const GaussMatrix& h)
{
    SignaturePair s;
    for (const auto& t : hermitian_ldl(h)) (t.sign > 0 ? s.pos : s.neg)++;
    return s;
}

} // namespace hqmap
