#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library routine it is used to check.

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "hqmap/combinat.hpp"
#include "hqmap/forms.hpp"
#include "hqmap/numeric.hpp"

namespace oracle {

using hqmap::Integer;
using cplx = std::complex<double>;

// binom via Pascal's triangle in 64-bit, independent of hqmap::binom.
inline long long pascal(long long a, long long b)
{
    if (a < 0 || b < 0 || a < b) return 0;
    static std::vector<std::vector<long long>> t;
    while (static_cast<long long>(t.size()) <= a) {
        const std::size_t r = t.size();
        std::vector<long long> row(r + 1, 1);
        for (std::size_t j = 1; j < r; ++j) row[j] = t[r - 1][j - 1] + t[r - 1][j];
        t.push_back(std::move(row));
    }
    return t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

// Every strictly decreasing k_d > ... > k_1 >= 0 with sum binom(k_i, i) = c.
inline std::vector<std::vector<long long>> all_macaulay_reps(long long c, int d)
{
    std::vector<std::vector<long long>> out;
    std::vector<long long> ks(static_cast<std::size_t>(d));
    auto rec = [&](auto&& self, int i, long long upper, long long rest) -> void {
        if (i == 0) {
            if (rest == 0) out.push_back(ks);
            return;
        }
        for (long long k = i - 1; k < upper; ++k) {
            const long long v = pascal(k, i);
            if (v > rest) break;
            ks[static_cast<std::size_t>(d - i)] = k;
            self(self, i - 1, k, rest - v);
        }
    };
    rec(rec, d, c + d + 1, c);
    return out;
}

// K_n(k) by the literal upward scan over N with a degree large enough for every N visited.
inline long long scan_K(int n, long long k)
{
    long long N = 0;
    for (;;) {
        const long long next = N + 1;
        int d = 1;
        while (pascal(n + d, d) < next) ++d;
        if (hqmap::green_G(n, d, Integer(next)) > k) return N;
        N = next;
    }
}

inline cplx to_c(const hqmap::Gaussian& g)
{
    return {static_cast<double>(g.re), static_cast<double>(g.im)};
}

// Counts eigenvalues > tol and < -tol of a Hermitian matrix with Eigen.
inline std::pair<std::size_t, std::size_t> float_inertia(const Eigen::MatrixXcd& h, double tol)
{
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
    std::size_t p = 0, q = 0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        if (es.eigenvalues()(i) > tol) ++p;
        if (es.eigenvalues()(i) < -tol) ++q;
    }
    return {p, q};
}

inline cplx monomial_value(const hqmap::MultiIndex& m, const std::vector<cplx>& z)
{
    cplx v = 1;
    for (std::size_t j = 0; j < m.size(); ++j)
        for (int e = 0; e < m[j]; ++e) v *= z[j];
    return v;
}

// r(z, conj z) evaluated in floating point.
inline double evaluate(const hqmap::HermitianForm& f, const std::vector<cplx>& z)
{
    cplx s = 0;
    for (const auto& [k, c] : f.entries()) s += to_c(c) * monomial_value(k.first, z) * std::conj(monomial_value(k.second, z));
    return s.real();
}

inline cplx evaluate(const hqmap::HoloPoly& p, const std::vector<cplx>& z)
{
    cplx s = 0;
    for (const auto& [m, c] : p.terms()) s += to_c(c) * monomial_value(m, z);
    return s;
}

// Random point of {sum_{j<a} |z_j|^2 - sum_{j>=a} |z_j|^2 = level}, level in {0, 1}.
inline std::vector<cplx> point_on_quadric(int a, int b, double level, std::mt19937_64& rng)
{
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<cplx> z(static_cast<std::size_t>(a + b));
    double neg = 0, pos = 0;
    for (int j = a; j < a + b; ++j) {
        z[static_cast<std::size_t>(j)] = {g(rng), g(rng)};
        neg += std::norm(z[static_cast<std::size_t>(j)]);
    }
    for (int j = 0; j < a; ++j) {
        z[static_cast<std::size_t>(j)] = {g(rng), g(rng)};
        pos += std::norm(z[static_cast<std::size_t>(j)]);
    }
    const double scale = std::sqrt((level + neg) / pos);
    for (int j = 0; j < a; ++j) z[static_cast<std::size_t>(j)] *= scale;
    return z;
}

} // namespace oracle
