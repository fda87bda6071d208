#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include "hqmap/error.hpp"

namespace hqmap {

/// Exponent vector of a monomial z^alpha. Ordered graded-lexicographically:
/// lower total degree first, then by larger leading exponent, so that
/// z1^2 < z1 z2 < z2^2 and z1 < z2 < z3.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::size_t nvars) : e_(nvars, 0) {}
    MultiIndex(std::initializer_list<int> e) : e_(e) { recount(); }
    explicit MultiIndex(std::vector<int> e) : e_(std::move(e)) { recount(); }

    /// The monomial z_j (0-based j).
    static MultiIndex unit(std::size_t nvars, std::size_t j, int power = 1)
    {
        MultiIndex m(nvars);
        m.e_[j] = power;
        m.degree_ = power;
        return m;
    }

    std::size_t size() const { return e_.size(); }
    int degree() const { return degree_; }
    int operator[](std::size_t j) const { return e_[j]; }
    const std::vector<int>& exponents() const { return e_; }

    void set(std::size_t j, int v)
    {
        degree_ += v - e_[j];
        e_[j] = v;
    }

    MultiIndex& operator+=(const MultiIndex& o)
    {
        check_same(o);
        for (std::size_t j = 0; j < e_.size(); ++j) e_[j] += o.e_[j];
        degree_ += o.degree_;
        return *this;
    }
    friend MultiIndex operator+(MultiIndex a, const MultiIndex& b) { return a += b; }

    /// True when z^o divides z^this.
    bool divisible_by(const MultiIndex& o) const
    {
        check_same(o);
        for (std::size_t j = 0; j < e_.size(); ++j)
            if (e_[j] < o.e_[j]) return false;
        return true;
    }

    MultiIndex& operator-=(const MultiIndex& o)
    {
        if (!divisible_by(o)) throw DomainError("NotDivisible", "monomial quotient with negative exponent");
        for (std::size_t j = 0; j < e_.size(); ++j) e_[j] -= o.e_[j];
        degree_ -= o.degree_;
        return *this;
    }
    friend MultiIndex operator-(MultiIndex a, const MultiIndex& b) { return a -= b; }

    /// Concatenation (z, w) exponents, used when complexifying.
    MultiIndex concat(const MultiIndex& o) const
    {
        std::vector<int> e = e_;
        e.insert(e.end(), o.e_.begin(), o.e_.end());
        return MultiIndex(std::move(e));
    }

    MultiIndex slice(std::size_t from, std::size_t count) const
    {
        return MultiIndex(std::vector<int>(e_.begin() + static_cast<std::ptrdiff_t>(from),
                                           e_.begin() + static_cast<std::ptrdiff_t>(from + count)));
    }

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.e_ == b.e_; }

    friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b)
    {
        if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
        const std::size_t n = std::min(a.e_.size(), b.e_.size());
        for (std::size_t j = 0; j < n; ++j)
            if (a.e_[j] != b.e_[j]) return b.e_[j] <=> a.e_[j];
        return a.e_.size() <=> b.e_.size();
    }

    /// Space separated exponents, the file-format representation.
    std::string str() const
    {
        std::string s;
        for (std::size_t j = 0; j < e_.size(); ++j) {
            if (j) s += ' ';
            s += std::to_string(e_[j]);
        }
        return s;
    }

    /// Human form: z1^2*z3, or 1 for the constant monomial.
    std::string pretty(const char* var = "z") const
    {
        std::string s;
        for (std::size_t j = 0; j < e_.size(); ++j) {
            if (e_[j] == 0) continue;
            if (!s.empty()) s += '*';
            s += var + std::to_string(j + 1);
            if (e_[j] > 1) s += '^' + std::to_string(e_[j]);
        }
        return s.empty() ? "1" : s;
    }

private:
    void recount()
    {
        degree_ = 0;
        for (int v : e_) {
            if (v < 0) throw DomainError("NegativeExponent", "negative exponent in multi-index");
            degree_ += v;
        }
    }
    void check_same(const MultiIndex& o) const
    {
        if (o.e_.size() != e_.size())
            throw DomainError("DimensionMismatch", "multi-indices over different variable counts");
    }

    std::vector<int> e_;
    int degree_ = 0;
};

/// All monomials of total degree exactly d in n variables, in ascending order.
inline std::vector<MultiIndex> monomials_of_degree(std::size_t n, int d)
{
    std::vector<MultiIndex> out;
    if (n == 0) {
        if (d == 0) out.emplace_back(0);
        return out;
    }
    std::vector<int> e(n, 0);
    // Lexicographically decreasing enumeration of compositions of d.
    auto rec = [&](auto&& self, std::size_t j, int left) -> void {
        if (j + 1 == n) {
            e[j] = left;
            out.emplace_back(e);
            return;
        }
        for (int v = left; v >= 0; --v) {
            e[j] = v;
            self(self, j + 1, left - v);
        }
    };
    rec(rec, 0, d);
    return out;
}

/// All monomials of total degree at most d, ascending.
inline std::vector<MultiIndex> monomials_up_to_degree(std::size_t n, int d)
{
    std::vector<MultiIndex> out;
    for (int k = 0; k <= d; ++k) {
        auto part = monomials_of_degree(n, k);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

} // namespace hqmap
