#pragma once

// Restriction of forms and linear systems to linear and affine subspaces
// through Veronese restriction matrices T with Z_ambient(E w + t) = T Z_sub(w).

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "hqmap/error.hpp"
#include "hqmap/forms.hpp"
#include "hqmap/linalg.hpp"
#include "hqmap/monomial.hpp"
#include "hqmap/random.hpp"

namespace hqmap {

/// w -> linear * w + translation, C^{n_sub} -> C^{n_ambient}, linear of full column rank.
class AffineEmbedding {
public:
    AffineEmbedding(GaussMatrix linear, std::vector<Gaussian> translation = {})
        : linear_(std::move(linear)), translation_(std::move(translation))
    {
        if (translation_.empty()) translation_.assign(linear_.rows(), Gaussian(0));
        if (translation_.size() != linear_.rows())
            throw DomainError("DimensionMismatch", "translation length differs from the ambient dimension");
        if (rank(linear_) != linear_.cols())
            throw DomainError("RankDeficientEmbedding", "embedding matrix does not have full column rank");
    }

    std::size_t ambient_dim() const { return linear_.rows(); }
    std::size_t sub_dim() const { return linear_.cols(); }
    const GaussMatrix& linear() const { return linear_; }
    const std::vector<Gaussian>& translation() const { return translation_; }
    bool is_linear() const
    {
        return std::all_of(translation_.begin(), translation_.end(), [](const Gaussian& t) { return t.is_zero(); });
    }

private:
    GaussMatrix linear_;
    std::vector<Gaussian> translation_;
};

/// Number of degree-d monomials in n_vars variables: binom(n_vars - 1 + d, d).
inline Integer veronese_dim(long long n_vars, long long d)
{
    if (n_vars < 1) throw DomainError("OutOfDomain", "veronese_dim: need at least one variable");
    return binom(n_vars - 1 + d, d);
}

/// Rows indexed by ambient monomials, columns by subspace monomials.
struct RestrictionMatrix {
    std::vector<MultiIndex> rows;
    std::vector<MultiIndex> cols;
    GaussMatrix T;
};

namespace detail {

// (c_1 w_1 + ... + c_m w_m + t)^e expanded by the multinomial theorem.
inline std::map<MultiIndex, Gaussian> multinomial_power(const std::vector<Gaussian>& c, const Gaussian& t, int e)
{
    const std::size_t m = c.size();
    std::map<MultiIndex, Gaussian> out;
    std::vector<Integer> fact(static_cast<std::size_t>(e) + 1, Integer(1));
    for (int i = 1; i <= e; ++i) fact[static_cast<std::size_t>(i)] = fact[static_cast<std::size_t>(i - 1)] * i;
    auto gpow = [](const Gaussian& g, int k) {
        Gaussian r(1);
        for (int i = 0; i < k; ++i) r *= g;
        return r;
    };
    // kappa_0 is the power of t; kappa_1..kappa_m the powers of w_j.
    std::vector<int> kappa(m + 1, 0);
    auto rec = [&](auto&& self, std::size_t j, int left) -> void {
        if (j == m) {
            kappa[m] = left;
            Gaussian term(Rational(fact[static_cast<std::size_t>(e)]));
            Integer den = 1;
            for (std::size_t i = 0; i <= m; ++i) den *= fact[static_cast<std::size_t>(kappa[i])];
            term *= Gaussian(Rational(1, 1) / Rational(den));
            term *= gpow(t, kappa[m]);
            for (std::size_t i = 0; i < m; ++i) term *= gpow(c[i], kappa[i]);
            if (term.is_zero()) return;
            MultiIndex w(std::vector<int>(kappa.begin(), kappa.begin() + static_cast<std::ptrdiff_t>(m)));
            out[w] += term;
            return;
        }
        for (int v = left; v >= 0; --v) {
            kappa[j] = v;
            self(self, j + 1, left - v);
        }
    };
    rec(rec, 0, e);
    return out;
}

} // namespace detail

/// Restriction matrix over the given ambient monomials. Entry (a, g) is the
/// coefficient of w^g in (E w + t)^a, computed factor by factor with the
/// multinomial theorem. Columns are every subspace monomial that occurs.
inline RestrictionMatrix restriction_matrix_for(const AffineEmbedding& E, const std::vector<MultiIndex>& rows)
{
    const std::size_t n = E.ambient_dim(), m = E.sub_dim();
    std::vector<std::vector<Gaussian>> coeffs(n, std::vector<Gaussian>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) coeffs[i][j] = E.linear()(i, j);

    std::map<std::pair<std::size_t, int>, std::map<MultiIndex, Gaussian>> factor_cache;
    std::vector<std::map<MultiIndex, Gaussian>> images;
    images.reserve(rows.size());
    for (const auto& a : rows) {
        if (a.size() != n) throw DomainError("DimensionMismatch", "row monomial does not match the ambient dimension");
        std::map<MultiIndex, Gaussian> acc{{MultiIndex(m), Gaussian(1)}};
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i] == 0) continue;
            auto key = std::make_pair(i, a[i]);
            auto it = factor_cache.find(key);
            if (it == factor_cache.end())
                it = factor_cache.emplace(key, detail::multinomial_power(coeffs[i], E.translation()[i], a[i])).first;
            std::map<MultiIndex, Gaussian> next;
            for (const auto& [g1, c1] : acc)
                for (const auto& [g2, c2] : it->second) next[g1 + g2] += c1 * c2;
            acc = std::move(next);
        }
        images.push_back(std::move(acc));
    }

    std::set<MultiIndex> colset;
    int maxdeg = 0;
    for (const auto& a : rows) maxdeg = std::max(maxdeg, a.degree());
    if (E.is_linear()) {
        for (const auto& a : rows)
            for (auto& g : monomials_of_degree(m, a.degree())) colset.insert(g);
    } else {
        for (auto& g : monomials_up_to_degree(m, maxdeg)) colset.insert(g);
    }
    RestrictionMatrix R{rows, {colset.begin(), colset.end()}, {}};
    std::map<MultiIndex, std::size_t> cpos;
    for (std::size_t j = 0; j < R.cols.size(); ++j) cpos[R.cols[j]] = j;
    R.T = GaussMatrix(rows.size(), R.cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& [g, c] : images[i])
            if (!c.is_zero()) R.T(i, cpos.at(g)) = c;
    return R;
}

/// T^d for the embedding: pure degree d when E is linear, otherwise the
/// inhomogeneous block over all degrees <= d.
inline RestrictionMatrix restriction_matrix(const AffineEmbedding& E, int d)
{
    return restriction_matrix_for(E, E.is_linear() ? monomials_of_degree(E.ambient_dim(), d)
                                                   : monomials_up_to_degree(E.ambient_dim(), d));
}

/// r o E as the form T^t C conj(T) over the subspace monomials.
inline HermitianForm restrict_form(const HermitianForm& f, const AffineEmbedding& E)
{
    if (f.nvars() != E.ambient_dim())
        throw DomainError("DimensionMismatch", "form has " + std::to_string(f.nvars()) + " variables, embedding targets " +
                                                   std::to_string(E.ambient_dim()));
    HermitianForm out(E.sub_dim());
    if (f.is_zero()) return out;
    const auto basis = f.support();
    const RestrictionMatrix R = restriction_matrix_for(E, basis);
    const GaussMatrix C = f.matrix(basis);
    // (T^t C conj T)[g, h] = sum_a T[a, g] (C conj T)[a, h]
    GaussMatrix CbarT(basis.size(), R.cols.size());
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (C(a, b).is_zero()) continue;
            for (std::size_t h = 0; h < R.cols.size(); ++h)
                if (!R.T(b, h).is_zero()) CbarT(a, h) += C(a, b) * R.T(b, h).conj();
        }
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t g = 0; g < R.cols.size(); ++g) {
            if (R.T(a, g).is_zero()) continue;
            for (std::size_t h = 0; h < R.cols.size(); ++h)
                out.accumulate(R.cols[g], R.cols[h], R.T(a, g) * CbarT(a, h));
        }
    return out;
}

/// Rank of a linear system (rows = polynomials) restricted through E: rank of A T.
inline std::size_t restrict_system_rank(const std::vector<HoloPoly>& system, const AffineEmbedding& E)
{
    if (system.empty()) return 0;
    std::set<MultiIndex> rowset;
    for (const auto& p : system)
        for (const auto& [m, c] : p.terms()) rowset.insert(m);
    const std::vector<MultiIndex> rows(rowset.begin(), rowset.end());
    const RestrictionMatrix R = restriction_matrix_for(E, rows);
    std::map<MultiIndex, std::size_t> rpos;
    for (std::size_t i = 0; i < rows.size(); ++i) rpos[rows[i]] = i;
    GaussMatrix A(system.size(), rows.size());
    for (std::size_t i = 0; i < system.size(); ++i)
        for (const auto& [m, c] : system[i].terms()) A(i, rpos[m]) = c;
    return rank(A * R.T);
}

/// Graph-form embedding w -> (V_lin w + t, w): the first n - m ambient
/// coordinates are dependent. V is drawn first, then (when affine) t, so linear
/// and affine samples from the same seed share their linear part.
inline AffineEmbedding sample_graph_embedding(std::size_t n, std::size_t m, bool affine, Sampler& rng,
                                              long long coeff_bound)
{
    if (m < 1 || m >= n) throw DomainError("OutOfDomain", "need 1 <= sub_dim < n");
    GaussMatrix L(n, m);
    for (std::size_t i = 0; i < n - m; ++i)
        for (std::size_t j = 0; j < m; ++j) L(i, j) = rng.gaussian(coeff_bound);
    for (std::size_t j = 0; j < m; ++j) L(n - m + j, j) = Gaussian(1);
    std::vector<Gaussian> t(n, Gaussian(0));
    if (affine)
        for (std::size_t i = 0; i < n - m; ++i) t[i] = rng.gaussian(coeff_bound);
    return AffineEmbedding(std::move(L), std::move(t));
}

/// Arbitrary random linear embedding (not in graph form), resampled until it has full rank.
inline AffineEmbedding sample_general_embedding(std::size_t n, std::size_t m, Sampler& rng, long long entry_bound)
{
    for (;;) {
        GaussMatrix L(n, m);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j) L(i, j) = rng.small_gaussian(entry_bound);
        if (rank(L) == m) return AffineEmbedding(std::move(L));
    }
}

struct GenericRank {
    std::size_t rank = 0;
    /// Upper bound on the probability that every trial undershot the generic rank.
    double failure_bound = 0.0;
};

struct GenericRankOptions {
    int trials = 3;
    std::uint64_t seed = 0;
    long long coeff_bound = 1000000;
};

namespace detail {

// Every trial fails only if a fixed nonzero minor of degree `minor_degree`
// vanishes at independently drawn coordinates, each atom of probability <= 1/bound.
inline double sz_bound(long long minor_degree, const GenericRankOptions& o)
{
    const double per = std::min(1.0, static_cast<double>(minor_degree) / static_cast<double>(o.coeff_bound));
    double p = 1.0;
    for (int i = 0; i < o.trials; ++i) p *= per;
    return p;
}

} // namespace detail

/// Generic rank of r restricted to (sub_dim)-dimensional linear subspaces,
/// estimated as the max over random Gaussian-rational graph subspaces.
inline GenericRank generic_restriction_rank(const HermitianForm& f, std::size_t sub_dim, const GenericRankOptions& o = {})
{
    if (o.trials < 1) throw DomainError("OutOfDomain", "trials must be at least 1");
    const std::size_t n = f.nvars();
    if (sub_dim < 1 || sub_dim >= n) throw DomainError("OutOfDomain", "need 1 <= sub_dim < n");
    GenericRank out;
    if (f.is_zero()) return out;
    for (int t = 0; t < o.trials; ++t) {
        Sampler rng(derive_seed(o.seed, static_cast<std::uint64_t>(t)));
        const AffineEmbedding E = sample_graph_embedding(n, sub_dim, false, rng, o.coeff_bound);
        out.rank = std::max(out.rank, form_rank(restrict_form(f, E)));
    }
    // Generic rank is at most the support size or the subspace monomial count.
    std::set<int> degs;
    for (const auto& a : f.support()) degs.insert(a.degree());
    Integer cols = 0;
    for (int d : degs) cols += veronese_dim(static_cast<long long>(sub_dim), d);
    const long long rmax = std::min<long long>(static_cast<long long>(f.support().size()), static_cast<long long>(cols));
    // Entries of T^t C conj T have degree <= 2D in the real coordinates of V.
    out.failure_bound = detail::sz_bound(2LL * f.holomorphic_degree() * rmax, o);
    return out;
}

/// Generic hyperplane-type restriction rank of a holomorphic linear system.
inline GenericRank generic_system_restriction_rank(const std::vector<HoloPoly>& system, std::size_t sub_dim,
                                                   const GenericRankOptions& o = {})
{
    if (o.trials < 1) throw DomainError("OutOfDomain", "trials must be at least 1");
    GenericRank out;
    if (system.empty()) return out;
    const std::size_t n = system.front().nvars();
    int D = 0;
    for (const auto& p : system) D = std::max(D, p.degree());
    for (int t = 0; t < o.trials; ++t) {
        Sampler rng(derive_seed(o.seed, static_cast<std::uint64_t>(t)));
        const AffineEmbedding E = sample_graph_embedding(n, sub_dim, false, rng, o.coeff_bound);
        out.rank = std::max(out.rank, restrict_system_rank(system, E));
    }
    const long long rmax = static_cast<long long>(std::min<std::size_t>(system.size(), 1u << 30));
    out.failure_bound = detail::sz_bound(static_cast<long long>(D) * rmax, o);
    return out;
}

struct AffineRankOptions {
    int samples = 20;
    std::uint64_t seed = 0;
    long long coeff_bound = 1000000;
    /// When false, only linear subspaces (translation 0) are sampled.
    bool translate = true;
};

/// Max restriction rank over sampled graph-form affine subspaces of dimension sub_dim.
/// A lower bound for the supremum over the affine Grassmannian.
inline std::size_t max_affine_rank(const HermitianForm& f, std::size_t sub_dim, const AffineRankOptions& o = {})
{
    if (o.samples < 1) throw DomainError("OutOfDomain", "samples must be at least 1");
    const std::size_t n = f.nvars();
    if (sub_dim < 1 || sub_dim >= n) throw DomainError("OutOfDomain", "need 1 <= sub_dim < n");
    std::size_t best = 0;
    if (f.is_zero()) return 0;
    for (int s = 0; s < o.samples; ++s) {
        Sampler rng(derive_seed(o.seed, static_cast<std::uint64_t>(s)));
        const AffineEmbedding E = sample_graph_embedding(n, sub_dim, o.translate, rng, o.coeff_bound);
        best = std::max(best, form_rank(restrict_form(f, E)));
    }
    return best;
}

/// Random skew-Hermitian S with small Gaussian-integer entries; the Cayley
/// transform (I - S)(I + S)^{-1} is then an exactly unitary Gaussian-rational matrix.
inline GaussMatrix random_unitary(std::size_t n, Sampler& rng, long long entry_bound = 3)
{
    GaussMatrix S(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        S(i, i) = Gaussian(0, Rational(rng.uniform(-entry_bound, entry_bound)));
        for (std::size_t j = i + 1; j < n; ++j) {
            S(i, j) = rng.small_gaussian(entry_bound);
            S(j, i) = -S(i, j).conj();
        }
    }
    GaussMatrix I = GaussMatrix::identity(n), minus(n, n), plus(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            minus(i, j) = I(i, j) - S(i, j);
            plus(i, j) = I(i, j) + S(i, j);
        }
    return minus * inverse(plus);
}

/// Affine b-plane inside Q(a, b) = {|z'|^2 - |z''|^2 = 1}, z' in C^a, z'' in C^b:
/// z' = V (z'', 1) with V in M_{a, b+1} having orthonormal columns, z'' = w.
inline AffineEmbedding sample_quadric_plane(std::size_t a, std::size_t b, Sampler& rng)
{
    if (a < b + 1) throw DomainError("OutOfDomain", "planes in Q(a,b) of this type need a > b");
    const GaussMatrix U = random_unitary(a, rng);
    GaussMatrix L(a + b, b);
    std::vector<Gaussian> t(a + b, Gaussian(0));
    for (std::size_t i = 0; i < a; ++i) {
        for (std::size_t j = 0; j < b; ++j) L(i, j) = U(i, j);
        t[i] = U(i, b);
    }
    for (std::size_t j = 0; j < b; ++j) L(a + j, j) = Gaussian(1);
    return AffineEmbedding(std::move(L), std::move(t));
}

} // namespace hqmap
