#pragma once

// Macaulay representations, Green's hyperplane restriction bound and the
// rank bounds obtained by composing it.

#include <limits>
#include <vector>

#include "hqmap/error.hpp"
#include "hqmap/numeric.hpp"

namespace hqmap {

/// c = binom(k_d, d) + binom(k_{d-1}, d-1) + ... + binom(k_1, 1), k_d > ... > k_1 >= 0.
struct MacaulayRep {
    Integer c;
    int d = 1;
    /// Stored from k_d down to k_1 (ks.front() is k_d).
    std::vector<long long> ks;

    long long k(int i) const { return ks.at(static_cast<std::size_t>(d - i)); }
};

namespace detail {

inline void require(bool ok, const char* what)
{
    if (!ok) throw DomainError("OutOfDomain", what);
}

// Largest k >= i - 1 with binom(k, i) <= c.
inline long long largest_binom_below(const Integer& c, int i)
{
    if (i == 1) {
        require(c <= Integer(std::numeric_limits<long long>::max()), "Macaulay coefficient exceeds 64-bit range");
        return static_cast<long long>(c);
    }
    long long lo = i - 1; // binom(lo, i) = 0 <= c
    long long hi = i;
    while (binom(hi, i) <= c) {
        lo = hi;
        require(hi < (std::numeric_limits<long long>::max() >> 2), "Macaulay coefficient too large");
        hi *= 2;
    }
    // binom(lo, i) <= c < binom(hi, i)
    while (hi - lo > 1) {
        const long long mid = lo + (hi - lo) / 2;
        if (binom(mid, i) <= c)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

} // namespace detail

/// Greedy d-th Macaulay representation. c = 0 gives ks[i] = i - 1.
inline MacaulayRep macaulay_rep(const Integer& c, int d)
{
    detail::require(d >= 1, "macaulay: d must be positive");
    detail::require(c >= 0, "macaulay: c must be nonnegative");
    MacaulayRep rep{c, d, {}};
    rep.ks.reserve(static_cast<std::size_t>(d));
    Integer rest = c;
    for (int i = d; i >= 1; --i) {
        const long long k = detail::largest_binom_below(rest, i);
        rep.ks.push_back(k);
        rest -= binom(k, i);
    }
    return rep;
}

/// c_{<d>}: every k_i in the Macaulay representation lowered by one.
inline Integer macaulay_lower(const Integer& c, int d)
{
    const MacaulayRep rep = macaulay_rep(c, d);
    Integer out = 0;
    for (int i = d; i >= 1; --i) out += binom(rep.k(i) - 1, i);
    return out;
}

/// Green's lower bound G(n, d, N) on the generic hyperplane-restriction rank of
/// a rank-N linear system of degree-d forms in n + 1 variables.
inline Integer green_G(int n, int d, const Integer& N)
{
    detail::require(n >= 2, "green_G: n must be at least 2");
    detail::require(d >= 1, "green_G: d must be positive");
    detail::require(N >= 0, "green_G: N must be nonnegative");
    const Integer full = binom(n + d, d);
    detail::require(N <= full, "green_G: N exceeds binom(n+d, d)");
    return binom(n + d - 1, d) - macaulay_lower(full - N, d);
}

/// Smallest d >= 1 with binom(n + d, d) >= N.
inline int smallest_degree_for(int n, const Integer& N)
{
    int d = 1;
    while (binom(n + d, d) < N) ++d;
    return d;
}

/// Green's bound evaluated at the smallest admissible degree; degree-invariant.
inline Integer green_G_stable(int n, const Integer& N) { return green_G(n, smallest_degree_for(n, N), N); }

/// K_n(k) = max { N : G(n, d, N) <= k }. G is nondecreasing in N and does not
/// depend on d, so the maximum is located by exponential probing and bisection.
inline Integer green_K(int n, const Integer& k)
{
    detail::require(n >= 2, "green_K: n must be at least 2");
    detail::require(k >= 0, "green_K: k must be nonnegative");
    Integer lo = 0; // G(n, ., 0) = 0 <= k
    Integer hi = 1;
    while (green_G_stable(n, hi) <= k) {
        lo = hi;
        hi *= 2;
    }
    while (hi - lo > 1) {
        const Integer mid = (lo + hi) / 2;
        if (green_G_stable(n, mid) <= k)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

/// K_{m,n}(k) = K_{m+1}( K_{m+2}( ... K_n(k) ... ) ): K_n is applied first.
inline Integer compose_K(int m, int n, const Integer& k)
{
    detail::require(n >= 2, "compose_K: n must be at least 2");
    detail::require(m >= 1 && m <= n - 1, "compose_K: need 1 <= m <= n - 1");
    Integer v = k;
    for (int j = n; j >= m + 1; --j) v = green_K(j, v);
    return v;
}

/// R_{m,n}(k): same chain as compose_K with the two-sided step R_j = K_j o K_j.
inline Integer hermitian_R(int m, int n, const Integer& k)
{
    detail::require(n >= 2, "hermitian_R: n must be at least 2");
    detail::require(m >= 1 && m <= n - 1, "hermitian_R: need 1 <= m <= n - 1");
    Integer v = k;
    for (int j = n; j >= m + 1; --j) v = green_K(j, green_K(j, v));
    return v;
}

/// Upper bound N(a, b, B) on A for maps Q(a, b) -> Q(A, B) not contained in a
/// hyperplane: K_{b, a+b}(B + 1).
inline Integer rigidity_bound(int a, int b, const Integer& B)
{
    if (a <= b)
        throw DomainError("NoRigidity", "rigidity needs a > b; there is no rigidity bound when a <= b");
    detail::require(b >= 1 && a >= 2, "rigidity_bound: need a > b >= 1");
    detail::require(B >= 0, "rigidity_bound: B must be nonnegative");
    return compose_K(b, a + b, B + 1);
}

/// Constant M = a^2 + ab - 2a + 1 beyond which the stability sector is filled.
inline long long stability_threshold(long long a, long long b) { return a * a + a * b - 2 * a + 1; }

/// Whether (A, B) lies in the stability sector for source HQ(a, b).
/// Points with A < 2 or B < 2 are outside the theorem's domain and report false.
inline bool stability_region(long long a, long long b, long long A, long long B)
{
    if (b < 2) throw DomainError("OutOfDomain", "stability_region: need b >= 2");
    detail::require(a >= b, "stability_region: need a >= b");
    if (A < 2 || B < 2) return false;
    return A + B >= stability_threshold(a, b) && a * (B - b + 1) >= A * (b - 1) && a * (A - b + 1) >= B * (b - 1);
}

} // namespace hqmap
