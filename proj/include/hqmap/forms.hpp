#pragma once

// Real-valued polynomials r(z, conj z) = sum c_{ab} z^a conj(z)^b viewed as
// Hermitian coefficient matrices C = [c_{ab}].

#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "hqmap/error.hpp"
#include "hqmap/linalg.hpp"
#include "hqmap/monomial.hpp"
#include "hqmap/numeric.hpp"
#include "hqmap/polynomial.hpp"

namespace hqmap {

struct FormEntry {
    MultiIndex row;
    MultiIndex col;
    Gaussian value;
};

/// Immutable sparse Hermitian coefficient matrix of a real-valued polynomial.
/// Both (a, b) and (b, a) are stored; zero entries are omitted.
class HermitianForm {
public:
    using Key = std::pair<MultiIndex, MultiIndex>;
    using Entries = std::map<Key, Gaussian>;

    HermitianForm() = default;
    explicit HermitianForm(std::size_t nvars) : n_(nvars) {}

    /// Validating constructor. A listed entry's mirror is inferred when absent;
    /// when both are listed they must be mutual conjugates.
    static HermitianForm from_entries(std::size_t nvars, const std::vector<FormEntry>& list)
    {
        std::map<Key, Gaussian> given;
        for (const auto& e : list) {
            if (e.row.size() != nvars || e.col.size() != nvars)
                throw DomainError("DimensionMismatch", "entry multi-index length differs from n=" + std::to_string(nvars));
            if (e.row == e.col && !e.value.is_real())
                throw DomainError("NonRealDiagonal", "diagonal entry (" + e.row.str() + " ; " + e.col.str() +
                                                         ") has nonzero imaginary part");
            auto [it, inserted] = given.try_emplace({e.row, e.col}, e.value);
            if (!inserted && !(it->second == e.value))
                throw DomainError("DuplicateEntry",
                                  "entry (" + e.row.str() + " ; " + e.col.str() + ") listed twice with different values");
        }
        HermitianForm f(nvars);
        for (const auto& [key, v] : given) {
            const Key mirror{key.second, key.first};
            auto it = given.find(mirror);
            if (it != given.end() && !(it->second == v.conj()))
                throw DomainError("ConjugateMismatch", "entries (" + key.first.str() + " ; " + key.second.str() +
                                                           ") and its mirror are not complex conjugates");
            if (v.is_zero()) continue;
            f.entries_[key] = v;
            f.entries_[mirror] = v.conj();
        }
        return f;
    }

    /// Form with matrix H over the given basis. H is assumed Hermitian.
    static HermitianForm from_matrix(std::size_t nvars, const std::vector<MultiIndex>& basis, const GaussMatrix& h)
    {
        HermitianForm f(nvars);
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < basis.size(); ++j)
                if (!h(i, j).is_zero()) f.entries_[{basis[i], basis[j]}] = h(i, j);
        return f;
    }

    std::size_t nvars() const { return n_; }
    const Entries& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    Gaussian entry(const MultiIndex& a, const MultiIndex& b) const
    {
        auto it = entries_.find({a, b});
        return it == entries_.end() ? Gaussian(0) : it->second;
    }

    /// Monomials with a nonzero row, ascending.
    std::vector<MultiIndex> support() const
    {
        std::set<MultiIndex> s;
        for (const auto& [k, v] : entries_) s.insert(k.first);
        return {s.begin(), s.end()};
    }

    GaussMatrix matrix(const std::vector<MultiIndex>& basis) const
    {
        std::map<MultiIndex, std::size_t> pos;
        for (std::size_t i = 0; i < basis.size(); ++i) pos[basis[i]] = i;
        GaussMatrix m(basis.size(), basis.size());
        for (const auto& [k, v] : entries_) {
            auto r = pos.find(k.first), c = pos.find(k.second);
            if (r == pos.end() || c == pos.end()) throw DomainError("DimensionMismatch", "basis misses part of the support");
            m(r->second, c->second) = v;
        }
        return m;
    }
    GaussMatrix matrix() const { return matrix(support()); }

    /// Degree of the form as a polynomial in (z, conj z).
    int degree() const
    {
        int d = -1;
        for (const auto& [k, v] : entries_) d = std::max(d, k.first.degree() + k.second.degree());
        return d;
    }

    /// Largest holomorphic degree |a| over the support.
    int holomorphic_degree() const
    {
        int d = -1;
        for (const auto& [k, v] : entries_) d = std::max(d, k.first.degree());
        return d;
    }

    /// r(tz, conj z) = r(z, t conj z) = t^d r for some d.
    bool is_bihomogeneous() const
    {
        std::optional<int> d;
        for (const auto& [k, v] : entries_) {
            if (k.first.degree() != k.second.degree()) return false;
            if (d && *d != k.first.degree()) return false;
            d = k.first.degree();
        }
        return true;
    }

    friend bool operator==(const HermitianForm& a, const HermitianForm& b)
    {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }

    HermitianForm& operator+=(const HermitianForm& o)
    {
        if (o.n_ != n_) throw DomainError("DimensionMismatch", "forms over different variable counts");
        for (const auto& [k, v] : o.entries_) accumulate(k.first, k.second, v);
        return *this;
    }
    friend HermitianForm operator+(HermitianForm a, const HermitianForm& b) { return a += b; }
    HermitianForm& operator*=(const Rational& s)
    {
        if (s.is_zero()) entries_.clear();
        for (auto& [k, v] : entries_) v *= Gaussian(s);
        return *this;
    }
    friend HermitianForm operator*(HermitianForm a, const Rational& s) { return a *= s; }
    friend HermitianForm operator-(HermitianForm a, const HermitianForm& b) { return a += b * Rational(-1); }

    /// Pointwise product r1 * r2.
    friend HermitianForm operator*(const HermitianForm& a, const HermitianForm& b)
    {
        if (a.n_ != b.n_) throw DomainError("DimensionMismatch", "forms over different variable counts");
        HermitianForm out(a.n_);
        for (const auto& [ka, va] : a.entries_)
            for (const auto& [kb, vb] : b.entries_) out.accumulate(ka.first + kb.first, ka.second + kb.second, va * vb);
        return out;
    }

    /// Adds v at (a, b) only. Callers keep the result Hermitian by adding the
    /// mirrored contributions themselves.
    void accumulate(const MultiIndex& a, const MultiIndex& b, const Gaussian& v)
    {
        if (v.is_zero()) return;
        auto [it, inserted] = entries_.try_emplace({a, b}, v);
        if (!inserted) {
            it->second += v;
            if (it->second.is_zero()) entries_.erase(it);
        }
    }

private:
    std::size_t n_ = 0;
    Entries entries_;
};

inline HermitianForm form_from_entries(std::size_t nvars, const std::vector<FormEntry>& list)
{
    return HermitianForm::from_entries(nvars, list);
}

/// Exact rank of the coefficient matrix (fraction-free elimination).
inline std::size_t form_rank(const HermitianForm& f) { return f.is_zero() ? 0 : rank(f.matrix()); }

/// Exact signature pair via block LDL*.
inline SignaturePair form_inertia(const HermitianForm& f) { return f.is_zero() ? SignaturePair{} : inertia(f.matrix()); }

/// One signed, weighted holomorphic component sign * weight * |poly|^2.
struct HoloComponent {
    int sign = 1;
    Rational weight;
    HoloPoly poly;
};

/// r = sum_j sign_j * weight_j * |f_j(z)|^2 with linearly independent f_j.
struct WeightedHoloMap {
    std::size_t nvars = 0;
    std::vector<HoloComponent> components;

    SignaturePair signature() const
    {
        SignaturePair s;
        for (const auto& c : components) (c.sign > 0 ? s.pos : s.neg)++;
        return s;
    }
};

/// Coefficient matrix of polynomials (rows) against the union of their supports.
inline GaussMatrix coefficient_matrix(const std::vector<HoloPoly>& polys)
{
    std::set<MultiIndex> cols;
    for (const auto& p : polys)
        for (const auto& [m, c] : p.terms()) cols.insert(m);
    std::map<MultiIndex, std::size_t> pos;
    for (const auto& m : cols) pos.emplace(m, pos.size());
    GaussMatrix a(polys.size(), cols.size());
    for (std::size_t i = 0; i < polys.size(); ++i)
        for (const auto& [m, c] : polys[i].terms()) a(i, pos[m]) = c;
    return a;
}

inline bool linearly_independent(const std::vector<HoloPoly>& polys)
{
    return rank(coefficient_matrix(polys)) == polys.size();
}

/// Holomorphic decomposition read off the block LDL* of C. Weights stay rational.
inline WeightedHoloMap decompose(const HermitianForm& f)
{
    WeightedHoloMap out{f.nvars(), {}};
    if (f.is_zero()) return out;
    const auto basis = f.support();
    for (auto& t : hermitian_ldl(f.matrix(basis))) {
        HoloPoly p(f.nvars());
        for (std::size_t i = 0; i < basis.size(); ++i) p.add(basis[i], t.vec[i]);
        out.components.push_back({t.sign, t.weight, std::move(p)});
    }
    return out;
}

/// |p|^2 as a Hermitian form.
inline HermitianForm abs_squared(const HoloPoly& p)
{
    HermitianForm f(p.nvars());
    for (const auto& [a, ca] : p.terms())
        for (const auto& [b, cb] : p.terms()) f.accumulate(a, b, ca * cb.conj());
    return f;
}

/// sum sign * weight * |poly|^2, minus 1 at the constant entry when subtract_one.
inline HermitianForm norm_difference(const WeightedHoloMap& map, bool subtract_one)
{
    HermitianForm f(map.nvars);
    for (const auto& c : map.components) f += abs_squared(c.poly) * Rational(c.weight * c.sign);
    if (subtract_one) f.accumulate(MultiIndex(map.nvars), MultiIndex(map.nvars), Gaussian(-1));
    return f;
}

/// Substitutes x_k = |z_k|^2: diagonal form with entry (a, a) = coefficient of x^a.
inline HermitianForm form_from_real_poly(const RealPoly& p)
{
    HermitianForm f(p.nvars());
    for (const auto& [m, c] : p.terms()) f.accumulate(m, m, Gaussian(c));
    return f;
}

/// Images of the monomials z^a under z = E w + t, as polynomials in w.
/// E is n_src x n_dst. Powers of each affine coordinate are cached.
class MonomialPullback {
public:
    MonomialPullback(const GaussMatrix& E, const std::vector<Gaussian>& translation)
        : src_(E.rows()), dst_(E.cols())
    {
        if (!translation.empty() && translation.size() != src_)
            throw DomainError("DimensionMismatch", "translation length differs from the ambient dimension");
        coords_.reserve(src_);
        for (std::size_t i = 0; i < src_; ++i) {
            HoloPoly l(dst_);
            for (std::size_t j = 0; j < dst_; ++j) l.add(MultiIndex::unit(dst_, j), E(i, j));
            if (!translation.empty()) l.add(MultiIndex(dst_), translation[i]);
            coords_.push_back({HoloPoly::constant(dst_, Gaussian(1)), std::move(l)});
        }
    }

    const HoloPoly& power(std::size_t i, int e)
    {
        auto& pw = coords_[i];
        while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * pw[1]);
        return pw[static_cast<std::size_t>(e)];
    }

    const HoloPoly& image(const MultiIndex& a)
    {
        if (a.size() != src_) throw DomainError("DimensionMismatch", "monomial does not match the ambient dimension");
        auto it = cache_.find(a);
        if (it != cache_.end()) return it->second;
        HoloPoly p = HoloPoly::constant(dst_, Gaussian(1));
        for (std::size_t i = 0; i < src_; ++i)
            if (a[i] > 0) p *= power(i, a[i]);
        return cache_.emplace(a, std::move(p)).first->second;
    }

    std::size_t source_dim() const { return src_; }
    std::size_t target_dim() const { return dst_; }

private:
    std::size_t src_, dst_;
    std::vector<std::vector<HoloPoly>> coords_;
    std::map<MultiIndex, HoloPoly> cache_;
};

/// Coefficient matrix of r(E w + t, conj(E w + t)) by direct substitution.
inline HermitianForm compose_linear(const HermitianForm& f, const GaussMatrix& E,
                                    const std::vector<Gaussian>& translation = {})
{
    if (E.rows() != f.nvars())
        throw DomainError("DimensionMismatch", "E has " + std::to_string(E.rows()) + " rows but the form has " +
                                                   std::to_string(f.nvars()) + " variables");
    MonomialPullback pull(E, translation);
    HermitianForm out(E.cols());
    for (const auto& [key, c] : f.entries()) {
        const HoloPoly& pa = pull.image(key.first);
        const HoloPoly& pb = pull.image(key.second);
        for (const auto& [g, cg] : pa.terms()) {
            const Gaussian left = c * cg;
            for (const auto& [h, ch] : pb.terms()) out.accumulate(g, h, left * ch.conj());
        }
    }
    return out;
}

/// Complexification: conj(z) replaced by independent w. Variables (z_1..z_n, w_1..w_n).
inline HoloPoly complexify(const HermitianForm& f)
{
    HoloPoly p(2 * f.nvars());
    for (const auto& [k, v] : f.entries()) p.add(k.first.concat(k.second), v);
    return p;
}

} // namespace hqmap
