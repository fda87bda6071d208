#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hqmap/monomial.hpp"
#include "hqmap/numeric.hpp"

namespace hqmap {

/// Sparse polynomial in a fixed number of variables. Zero coefficients are never stored.
template <class Coeff>
class Polynomial {
public:
    using Terms = std::map<MultiIndex, Coeff>;

    Polynomial() = default;
    explicit Polynomial(std::size_t nvars) : n_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Coeff& c)
    {
        Polynomial p(nvars);
        p.add(MultiIndex(nvars), c);
        return p;
    }
    static Polynomial monomial(const MultiIndex& m, const Coeff& c = Coeff(1))
    {
        Polynomial p(m.size());
        p.add(m, c);
        return p;
    }
    static Polynomial variable(std::size_t nvars, std::size_t j) { return monomial(MultiIndex::unit(nvars, j)); }

    std::size_t nvars() const { return n_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Coeff coeff(const MultiIndex& m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    void add(const MultiIndex& m, const Coeff& c)
    {
        if (m.size() != n_) throw DomainError("DimensionMismatch", "monomial has wrong variable count");
        if (hqmap::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (hqmap::is_zero(it->second)) terms_.erase(it);
        }
    }

    int degree() const
    {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    /// Lowest degree present; -1 for the zero polynomial.
    int min_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

    bool is_homogeneous() const { return terms_.empty() || min_degree() == degree(); }

    Polynomial& operator+=(const Polynomial& o)
    {
        check(o);
        for (const auto& [m, c] : o.terms_) add(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o)
    {
        check(o);
        for (const auto& [m, c] : o.terms_) add(m, -c);
        return *this;
    }
    Polynomial& operator*=(const Coeff& s)
    {
        if (hqmap::is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Coeff& s) { return a *= s; }
    friend Polynomial operator*(const Coeff& s, Polynomial a) { return a *= s; }
    Polynomial operator-() const { return *this * Coeff(-1); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        a.check(b);
        Polynomial out(a.n_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.add(ma + mb, ca * cb);
        return out;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    /// Multiply by the monomial z^m.
    Polynomial shifted(const MultiIndex& m) const
    {
        Polynomial out(n_);
        for (const auto& [k, c] : terms_) out.terms_.emplace(k + m, c);
        return out;
    }

    Polynomial pow(int e) const
    {
        Polynomial r = constant(n_, Coeff(1));
        Polynomial base = *this;
        while (e > 0) {
            if (e & 1) r *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

    std::string pretty(const char* var = "z") const
    {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            std::string cs = to_string(c);
            bool neg = !cs.empty() && cs[0] == '-';
            if (neg) cs.erase(0, 1);
            s += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
            first = false;
            const bool unit = cs == "1";
            if (m.degree() == 0)
                s += cs;
            else
                s += (unit ? "" : cs + "*") + m.pretty(var);
        }
        return s;
    }

private:
    void check(const Polynomial& o) const
    {
        if (o.n_ != n_) throw DomainError("DimensionMismatch", "polynomials over different variable counts");
    }

    std::size_t n_ = 0;
    Terms terms_;
};

using RealPoly = Polynomial<Rational>;
using HoloPoly = Polynomial<Gaussian>;

} // namespace hqmap
