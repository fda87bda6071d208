#pragma once

// Admissible polynomials for hyperquadric maps and the lattice of signature
// shifts they generate. A real polynomial p(x) in x_1..x_{a+b} with A positive
// and B negative coefficients that is divisible by
//   s = x_1 + ... + x_a - x_{a+1} - ... - x_{a+b}
// gives, after x_k = |z_k|^2, a monomial map HQ(a,b) -> HQ(A,B).

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hqmap/combinat.hpp"
#include "hqmap/error.hpp"
#include "hqmap/forms.hpp"

namespace hqmap {

/// Homogeneous real polynomial in a+b variables tagged with the source signature.
class SignedRealPoly {
public:
    SignedRealPoly(int a, int b, RealPoly p) : a_(a), b_(b), p_(std::move(p))
    {
        if (a < 1 || b < 1) throw DomainError("OutOfDomain", "source signature needs a, b >= 1");
        if (p_.nvars() != static_cast<std::size_t>(a + b))
            throw DomainError("DimensionMismatch", "polynomial must have a+b = " + std::to_string(a + b) + " variables");
        if (!p_.is_homogeneous()) throw DomainError("NotHomogeneous", "admissible polynomials must be homogeneous");
    }

    int a() const { return a_; }
    int b() const { return b_; }
    std::size_t nvars() const { return p_.nvars(); }
    const RealPoly& poly() const { return p_; }
    int degree() const { return p_.degree(); }
    std::size_t size() const { return p_.size(); }

    SignaturePair signature() const
    {
        SignaturePair s;
        for (const auto& [m, c] : p_.terms()) (c.sign() > 0 ? s.pos : s.neg)++;
        return s;
    }

    std::string pretty() const { return p_.pretty("x"); }

    friend bool operator==(const SignedRealPoly& x, const SignedRealPoly& y)
    {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.p_ == y.p_;
    }

private:
    int a_, b_;
    RealPoly p_;
};

inline RealPoly linear_s(int a, int b, int sign = 1)
{
    RealPoly s(static_cast<std::size_t>(a + b));
    for (int j = 0; j < a + b; ++j)
        s.add(MultiIndex::unit(static_cast<std::size_t>(a + b), static_cast<std::size_t>(j)), Rational(j < a ? sign : -sign));
    return s;
}

inline SignedRealPoly s_poly(int a, int b) { return SignedRealPoly(a, b, linear_s(a, b)); }

struct Admissibility {
    bool admissible = false;
    SignaturePair signature;
};

namespace detail {

// Remainder of p on division by s, which is monic in x_1: equal to p evaluated
// at x_1 = -x_2 - ... - x_a + x_{a+1} + ... + x_{a+b}. Computed by synthetic
// division, highest power of x_1 first.
inline RealPoly remainder_mod_s(const RealPoly& p, int a, int b)
{
    const std::size_t n = static_cast<std::size_t>(a + b);
    std::map<MultiIndex, Rational> work(p.terms().begin(), p.terms().end());
    int top = 0;
    for (const auto& [m, c] : work) top = std::max(top, m[0]);
    for (int e = top; e >= 1; --e) {
        std::vector<std::pair<MultiIndex, Rational>> lead;
        for (const auto& [m, c] : work)
            if (m[0] == e) lead.emplace_back(m, c);
        for (const auto& [m, c] : lead) {
            work.erase(m);
            MultiIndex q = m;
            q.set(0, e - 1);
            // c x^m - c x^q s = -c x^q (s - x_1)
            for (std::size_t j = 1; j < n; ++j) {
                MultiIndex t = q;
                t.set(j, t[j] + 1);
                auto [it, inserted] = work.try_emplace(t, Rational(0));
                it->second += static_cast<int>(j) < a ? Rational(-c) : c;
                if (it->second.is_zero()) work.erase(it);
            }
        }
    }
    RealPoly out(n);
    for (const auto& [m, c] : work) out.add(m, c);
    return out;
}

// Same remainder by direct substitution; kept for cross-checking.
inline RealPoly substitute_x1(const RealPoly& p, int a, int b)
{
    const std::size_t n = static_cast<std::size_t>(a + b);
    RealPoly sub(n);
    for (int j = 1; j < a + b; ++j) sub.add(MultiIndex::unit(n, static_cast<std::size_t>(j)), Rational(j < a ? -1 : 1));
    std::map<int, RealPoly> powers;
    RealPoly out(n);
    for (const auto& [m, c] : p.terms()) {
        const int e = m[0];
        auto it = powers.find(e);
        if (it == powers.end()) it = powers.emplace(e, sub.pow(e)).first;
        MultiIndex rest = m;
        rest.set(0, 0);
        out += it->second.shifted(rest) * c;
    }
    return out;
}

} // namespace detail

/// Exact test of s | p.
inline Admissibility is_admissible(const SignedRealPoly& p)
{
    return {!p.poly().is_zero() && detail::remainder_mod_s(p.poly(), p.a(), p.b()).is_zero(), p.signature()};
}

namespace detail {

inline SignedRealPoly checked(int a, int b, RealPoly q)
{
    SignedRealPoly out(a, b, std::move(q));
    if (!is_admissible(out).admissible) throw DomainError("InternalError", "construction lost admissibility");
    return out;
}

inline void require_admissible(const SignedRealPoly& p)
{
    if (!is_admissible(p).admissible) throw DomainError("NotAdmissible", "polynomial is not divisible by s: " + p.pretty());
}

inline bool disjoint(const RealPoly& x, const RealPoly& y)
{
    for (const auto& [m, c] : x.terms())
        if (y.terms().count(m)) return false;
    return true;
}

} // namespace detail

/// x_1^{k-m} p + x_2^{k-1} s (or - s when mirror), k > m minimal with disjoint supports.
/// Signature shifts by (a, b), or (b, a) when mirrored.
inline SignedRealPoly grow(const SignedRealPoly& p, bool mirror)
{
    detail::require_admissible(p);
    const int a = p.a(), b = p.b(), m = p.degree();
    const std::size_t n = p.nvars();
    const RealPoly s = linear_s(a, b, mirror ? -1 : 1);
    for (int k = m + 1;; ++k) {
        const RealPoly left = p.poly().shifted(MultiIndex::unit(n, 0, k - m));
        const RealPoly right = s.shifted(MultiIndex::unit(n, 1, k - 1));
        if (detail::disjoint(left, right)) return detail::checked(a, b, left + right);
    }
}

enum class Shift {
    AB,         // (a, b)     grow
    BA,         // (b, a)     grow, -s
    Am1Bm1,     // (a-1, b-1)
    ABm1,       // (a, b-1)
    Bm1Am1,     // (b-1, a-1)
    BAm1,       // (b, a-1)
    Am1B,       // (a-1, b)
    Bm1A,       // (b-1, a)
};

inline const std::vector<Shift>& all_shifts()
{
    static const std::vector<Shift> v{Shift::AB,     Shift::BA,   Shift::Am1Bm1, Shift::ABm1,
                                      Shift::Bm1Am1, Shift::BAm1, Shift::Am1B,   Shift::Bm1A};
    return v;
}

inline SignaturePair shift_amount(Shift sh, int a, int b)
{
    auto u = [](int v) { return static_cast<std::size_t>(v); };
    switch (sh) {
    case Shift::AB: return {u(a), u(b)};
    case Shift::BA: return {u(b), u(a)};
    case Shift::Am1Bm1: return {u(a - 1), u(b - 1)};
    case Shift::ABm1: return {u(a), u(b - 1)};
    case Shift::Bm1Am1: return {u(b - 1), u(a - 1)};
    case Shift::BAm1: return {u(b), u(a - 1)};
    case Shift::Am1B: return {u(a - 1), u(b)};
    case Shift::Bm1A: return {u(b - 1), u(a)};
    }
    return {};
}

inline std::string shift_name(Shift sh)
{
    switch (sh) {
    case Shift::AB: return "(a,b)";
    case Shift::BA: return "(b,a)";
    case Shift::Am1Bm1: return "(a-1,b-1)";
    case Shift::ABm1: return "(a,b-1)";
    case Shift::Bm1Am1: return "(b-1,a-1)";
    case Shift::BAm1: return "(b,a-1)";
    case Shift::Am1B: return "(a-1,b)";
    case Shift::Bm1A: return "(b-1,a)";
    }
    return "?";
}

namespace detail {

// With y the elimination variable (x_{a+b} for s, x_1 for -s), l = sign*s + y
// no longer involves y and p = c*mono + r with mono free of y:
//   tilde:  c mono l + y r                     = sign c mono s + y p
//   hat:    (c/2) mono l + (c/2) y mono + y r  = sign (c/2) mono s + y p
struct Corner {
    bool hat;
    int s_sign;
    int pivot_sign;
};

inline std::vector<Corner> corners_for(Shift sh)
{
    switch (sh) {
    case Shift::Am1Bm1: return {{false, 1, 1}, {false, -1, -1}};
    case Shift::Bm1Am1: return {{false, 1, -1}, {false, -1, 1}};
    case Shift::ABm1: return {{true, 1, 1}};
    case Shift::Bm1A: return {{true, 1, -1}};
    case Shift::BAm1: return {{true, -1, 1}};
    case Shift::Am1B: return {{true, -1, -1}};
    default: return {};
    }
}

inline RealPoly divide_out_variable(const RealPoly& p, std::size_t y)
{
    int common = -1;
    for (const auto& [m, c] : p.terms()) common = common < 0 ? m[y] : std::min(common, m[y]);
    if (common <= 0) return p;
    RealPoly out(p.nvars());
    const MultiIndex den = MultiIndex::unit(p.nvars(), y, common);
    for (const auto& [m, c] : p.terms()) out.add(m - den, c);
    return out;
}

inline std::optional<SignedRealPoly> try_corner(const SignedRealPoly& p, const Corner& k)
{
    const int a = p.a(), b = p.b();
    const std::size_t n = p.nvars();
    const std::size_t y = k.s_sign > 0 ? n - 1 : 0;
    const RealPoly q = divide_out_variable(p.poly(), y);
    // Terms are stored in canonical order, so the first eligible one is the smallest.
    std::optional<std::pair<MultiIndex, Rational>> pivot;
    for (const auto& [m, c] : q.terms())
        if (m[y] == 0 && c.sign() == k.pivot_sign) {
            pivot.emplace(m, c);
            break;
        }
    if (!pivot) return std::nullopt;
    const auto& [mono, c] = *pivot;
    RealPoly l = linear_s(a, b, k.s_sign);
    l.add(MultiIndex::unit(n, y), Rational(1));
    const MultiIndex ym = MultiIndex::unit(n, y);
    RealPoly r = q;
    r.add(mono, -c);
    const Rational lead = k.hat ? Rational(c / 2) : c;
    RealPoly out = l.shifted(mono) * lead + r.shifted(ym);
    if (k.hat) out.add(mono + ym, lead);
    return checked(a, b, std::move(out));
}

} // namespace detail

/// Admissible polynomial with signature(p) + shift_amount(shift).
inline SignedRealPoly corner_move(const SignedRealPoly& p, Shift shift)
{
    detail::require_admissible(p);
    if (shift == Shift::AB) return grow(p, false);
    if (shift == Shift::BA) return grow(p, true);
    if (p.b() < 2) throw DomainError("OutOfDomain", "corner moves need b >= 2");
    for (const auto& k : detail::corners_for(shift))
        if (auto out = detail::try_corner(p, k)) return *out;
    throw DomainError("NoPivotMonomial", "no pivot monomial of the required sign for shift " + shift_name(shift));
}

// ---------------------------------------------------------------------------
// Lattice search

struct LatticeWitness {
    SignedRealPoly poly;
    int layer;
};

struct LatticeResult {
    std::map<std::pair<std::size_t, std::size_t>, LatticeWitness> nodes;
    bool budget_exhausted = false;
};

namespace detail {

inline bool better(const SignedRealPoly& x, const SignedRealPoly& y)
{
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    return x.size() < y.size();
}

} // namespace detail

/// Layered breadth-first search from s and -s over signatures in [0, maxA] x [0, maxB].
/// One witness per node: lowest degree, then fewest terms, then first found.
inline LatticeResult explore_lattice(int a, int b, std::size_t maxA, std::size_t maxB, std::size_t budget)
{
    if (b < 2 || a < b) throw DomainError("OutOfDomain", "lattice search needs a >= b >= 2");
    using Key = std::pair<std::size_t, std::size_t>;
    LatticeResult res;
    std::vector<Key> frontier;
    auto offer = [&](const SignedRealPoly& p, std::map<Key, SignedRealPoly>& next) {
        const auto sig = p.signature();
        const Key key{sig.pos, sig.neg};
        if (key.first > maxA || key.second > maxB || res.nodes.count(key)) return;
        auto it = next.find(key);
        if (it == next.end())
            next.emplace(key, p);
        else if (detail::better(p, it->second))
            it->second = p;
    };

    std::map<Key, SignedRealPoly> layer_nodes;
    offer(s_poly(a, b), layer_nodes);
    offer(SignedRealPoly(a, b, linear_s(a, b, -1)), layer_nodes);
    for (int layer = 0; !layer_nodes.empty(); ++layer) {
        frontier.clear();
        for (auto& [key, p] : layer_nodes) {
            if (res.nodes.size() >= budget) {
                res.budget_exhausted = true;
                return res;
            }
            res.nodes.emplace(key, LatticeWitness{p, layer});
            frontier.push_back(key);
        }
        std::map<Key, SignedRealPoly> next;
        for (const auto& key : frontier) {
            const SignedRealPoly& p = res.nodes.at(key).poly;
            for (Shift sh : all_shifts()) {
                const auto d = shift_amount(sh, a, b);
                if (key.first + d.pos > maxA || key.second + d.neg > maxB) continue;
                if (res.nodes.count({key.first + d.pos, key.second + d.neg})) continue;
                offer(corner_move(p, sh), next);
            }
        }
        layer_nodes = std::move(next);
    }
    return res;
}

// ---------------------------------------------------------------------------
// Maps

/// A map into a hyperquadric given by weighted components sign * weight * |phi|^2.
/// (A, B) counts the positive and negative components. For a rational map one
/// negative component is the denominator and the target is Q(A, B - 1).
/// homogeneous: source HQ(a,b) in a+b variables; otherwise Q(a,b) in a+b variables.
struct QuadricMap {
    int a = 0;
    int b = 0;
    bool homogeneous = false;
    WeightedHoloMap components;
    std::optional<std::size_t> denominator;

    SignaturePair signature() const { return components.signature(); }
    SignaturePair target() const
    {
        auto s = signature();
        if (denominator) --s.neg;
        return s;
    }
    std::size_t nvars() const { return components.nvars; }
};

namespace detail {

// z^E * D(w_1 := N / z_1) for the complexified D in variables (z_1..z_n, w_1..w_n),
// where N solves the defining equation for w_1.
inline bool vanishes_on_quadric(const HoloPoly& D, int a, int b, bool homogeneous)
{
    const std::size_t n = static_cast<std::size_t>(a + b), N2 = 2 * n;
    if (a < 1) throw DomainError("OutOfDomain", "source needs a >= 1");
    HoloPoly num(N2);
    for (std::size_t j = 1; j < n; ++j) {
        MultiIndex zw(N2);
        zw.set(j, 1);
        zw.set(n + j, 1);
        num.add(zw, Gaussian(static_cast<int>(j) < a ? -1 : 1));
    }
    if (!homogeneous) num.add(MultiIndex(N2), Gaussian(1));

    int E = 0;
    for (const auto& [m, c] : D.terms()) E = std::max(E, m[n]);
    std::vector<HoloPoly> npow{HoloPoly::constant(N2, Gaussian(1))};
    while (static_cast<int>(npow.size()) <= E) npow.push_back(npow.back() * num);

    HoloPoly out(N2);
    for (const auto& [m, c] : D.terms()) {
        const int k = m[n];
        MultiIndex rest = m;
        rest.set(n, 0);
        rest.set(0, rest[0] + E - k);
        out += npow[static_cast<std::size_t>(k)].shifted(rest) * c;
    }
    return out.is_zero();
}

} // namespace detail

/// Exact check that the map sends the source quadric into the target.
inline bool verify_map(const QuadricMap& map)
{
    if (map.nvars() != static_cast<std::size_t>(map.a + map.b)) return false;
    for (const auto& c : map.components.components)
        if (c.poly.nvars() != map.nvars() || c.poly.is_zero() || c.weight.sign() <= 0) return false;
    if (map.denominator && (*map.denominator >= map.components.components.size() ||
                            map.components.components[*map.denominator].sign > 0))
        return false;
    const bool subtract_one = !map.homogeneous && !map.denominator;
    const HermitianForm D = norm_difference(map.components, subtract_one);
    return detail::vanishes_on_quadric(complexify(D), map.a, map.b, map.homogeneous);
}

/// Monomial map HQ(a,b) -> HQ(A,B) of an admissible polynomial: x^alpha -> |z^alpha|^2.
inline QuadricMap monomial_map(const SignedRealPoly& p)
{
    QuadricMap m{p.a(), p.b(), true, {p.nvars(), {}}, std::nullopt};
    for (const auto& [mono, c] : p.poly().terms())
        m.components.components.push_back({c.sign(), abs(c), HoloPoly::monomial(mono, Gaussian(1))});
    return m;
}

/// Witness map for target (A, B), searching the lattice from the seeds.
inline QuadricMap construct_map(int a, int b, long long A, long long B, std::size_t search_budget)
{
    if (b < 2 || a < b) throw DomainError("OutOfDomain", "construct_map needs a >= b >= 2");
    if (A < 2 || B < 2) throw DomainError("OutOfDomain", "construct_map needs A, B >= 2");
    const auto res = explore_lattice(a, b, static_cast<std::size_t>(A), static_cast<std::size_t>(B), search_budget);
    auto it = res.nodes.find({static_cast<std::size_t>(A), static_cast<std::size_t>(B)});
    if (it == res.nodes.end()) {
        const std::string target = "(" + std::to_string(A) + "," + std::to_string(B) + ")";
        if (res.budget_exhausted)
            throw DomainError("NotReached", target + " not reached: search budget of " + std::to_string(search_budget) +
                                                " nodes exhausted; raise --budget");
        if (!stability_region(a, b, A, B))
            throw DomainError("NotReached", target + " lies outside the stability sector and the search did not reach it");
        throw DomainError("NotReached", target + " lies in the stability sector but the search did not reach it");
    }
    QuadricMap m = monomial_map(it->second.poly);
    if (!verify_map(m)) throw DomainError("InternalError", "constructed map failed verification");
    return m;
}

/// Replaces phi_k by phi_k z_1, ..., phi_k z_{a+b}. Only for maps of Q(a,b).
inline QuadricMap tensor_extend(const QuadricMap& map, std::size_t k)
{
    const auto& comps = map.components.components;
    if (k >= comps.size())
        throw DomainError("IndexOutOfRange", "component " + std::to_string(k) + " out of range (map has " +
                                                 std::to_string(comps.size()) + " components)");
    if (map.homogeneous)
        throw DomainError("HomogeneousMap", "tensoring needs a map of Q(a,b); dehomogenize first");
    if (map.denominator && *map.denominator == k)
        throw DomainError("DenominatorComponent", "the denominator component cannot be tensored");
    if (!verify_map(map)) throw DomainError("NotVerified", "input map does not verify");

    const std::size_t n = map.nvars();
    QuadricMap out = map;
    auto& oc = out.components.components;
    oc.clear();
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (i != k) {
            oc.push_back(comps[i]);
            continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
            const int side = static_cast<int>(j) < map.a ? 1 : -1;
            oc.push_back({comps[i].sign * side, comps[i].weight, comps[i].poly.shifted(MultiIndex::unit(n, j))});
        }
    }
    if (map.denominator && *map.denominator > k) out.denominator = *map.denominator + n - 1;
    if (!verify_map(out)) throw DomainError("InternalError", "tensor extension failed verification");
    return out;
}

/// Rational map Q(a, b-1) -> Q(A, B-1) from an admissible polynomial by z_{a+b} := 1.
/// The denominator is the negative component with the largest z_{a+b} exponent (last on ties).
inline QuadricMap dehomogenize(const SignedRealPoly& p)
{
    detail::require_admissible(p);
    const QuadricMap hom = monomial_map(p);
    if (!verify_map(hom)) throw DomainError("InternalError", "homogeneous map failed verification");
    const std::size_t n = p.nvars(), last = n - 1;
    std::optional<std::size_t> den;
    int best = -1;
    const auto& hc = hom.components.components;
    for (std::size_t i = 0; i < hc.size(); ++i) {
        if (hc[i].sign > 0) continue;
        const int e = hc[i].poly.terms().begin()->first[last];
        if (e >= best) {
            best = e;
            den = i;
        }
    }
    if (!den) throw DomainError("NoNegativeComponent", "polynomial has no negative coefficient");

    QuadricMap out{p.a(), p.b() - 1, false, {n - 1, {}}, den};
    for (const auto& c : hc) {
        HoloPoly q(n - 1);
        for (const auto& [m, v] : c.poly.terms()) q.add(m.slice(0, n - 1), v);
        out.components.components.push_back({c.sign, c.weight, std::move(q)});
    }
    if (!verify_map(out)) throw DomainError("InternalError", "dehomogenized map failed verification");
    return out;
}

/// Map of Q(a,b) read off a form vanishing on Q(a,b). The denominator is the
/// negative component of lowest degree (last on ties); a constant denominator
/// is divided out, leaving a polynomial map.
inline QuadricMap map_from_form(const HermitianForm& f, int a, int b)
{
    if (a < 1 || b < 0) throw DomainError("OutOfDomain", "source needs a >= 1, b >= 0");
    if (f.nvars() != static_cast<std::size_t>(a + b))
        throw DomainError("DimensionMismatch", "form must have a+b = " + std::to_string(a + b) + " variables");
    if (f.is_zero()) throw DomainError("ZeroForm", "the zero form defines no map");
    if (!detail::vanishes_on_quadric(complexify(f), a, b, false))
        throw DomainError("NotVanishing", "form does not vanish on Q(" + std::to_string(a) + "," + std::to_string(b) + ")");

    QuadricMap out{a, b, false, decompose(f), std::nullopt};
    const auto& comps = out.components.components;
    std::optional<std::size_t> den;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (comps[i].sign > 0) continue;
        if (!den || comps[i].poly.degree() <= comps[*den].poly.degree()) den = i;
    }
    if (!den) throw DomainError("NoNegativeComponent", "form has no negative eigenvalue");

    const auto& dc = comps[*den];
    if (dc.poly.degree() == 0) {
        const Gaussian c = dc.poly.terms().begin()->second;
        const Rational scale = dc.weight * c.norm();
        std::vector<HoloComponent> rest;
        for (std::size_t i = 0; i < comps.size(); ++i)
            if (i != *den) rest.push_back({comps[i].sign, Rational(comps[i].weight / scale), comps[i].poly});
        out.components.components = std::move(rest);
    } else {
        out.denominator = den;
    }
    if (!verify_map(out)) throw DomainError("InternalError", "map read off the form failed verification");
    return out;
}

/// Identity map of Q(a,b).
inline QuadricMap identity_map(int a, int b)
{
    const std::size_t n = static_cast<std::size_t>(a + b);
    QuadricMap m{a, b, false, {n, {}}, std::nullopt};
    for (std::size_t j = 0; j < n; ++j)
        m.components.components.push_back({static_cast<int>(j) < a ? 1 : -1, Rational(1), HoloPoly::variable(n, j)});
    return m;
}

} // namespace hqmap
