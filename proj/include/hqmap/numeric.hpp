#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "hqmap/error.hpp"

namespace hqmap {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// binom(a, b) with the convention binom(a, b) = 0 whenever a < b or b < 0.
/// Negative upper arguments also give 0 (only reached as k - 1 with k = 0).
inline Integer binom(long long a, long long b)
{
    if (b < 0 || a < b || a < 0) return 0;
    if (b > a - b) b = a - b;
    Integer r = 1;
    for (long long i = 1; i <= b; ++i) {
        r *= a - b + i;
        r /= i;
    }
    return r;
}

inline int sign(const Rational& q) { return q.sign(); }

inline Rational abs(const Rational& q) { return q.sign() < 0 ? Rational(-q) : q; }

inline std::string to_string(const Integer& z) { return z.str(); }

/// Rationals print as `p/q`, or as a bare integer when q = 1.
inline std::string to_string(const Rational& q)
{
    const Integer num = boost::multiprecision::numerator(q);
    const Integer den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

/// Parses `p`, `-p`, `p/q`. Throws ParseError on anything else or q = 0.
inline Rational parse_rational(std::string_view text)
{
    auto digits = [](std::string_view s, bool allow_sign) {
        if (s.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    if (!digits(num, true) || (slash != std::string_view::npos && !digits(den, false)))
        throw ParseError("malformed rational '" + std::string(text) + "'");
    std::string n(num);
    if (n[0] == '+') n.erase(0, 1);
    Integer p(n);
    Integer q = slash == std::string_view::npos ? Integer(1) : Integer(std::string(den));
    if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(p, q);
}

/// Exact element of Q(i).
struct Gaussian {
    Rational re;
    Rational im;

    Gaussian() = default;
    Gaussian(Rational r) : re(std::move(r)) {}
    Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    Gaussian(long long r) : re(r) {}

    static Gaussian i() { return {0, 1}; }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }

    Gaussian conj() const { return {re, -im}; }
    /// |z|^2, always rational.
    Rational norm() const { return re * re + im * im; }

    Gaussian& operator+=(const Gaussian& o)
    {
        re += o.re;
        im += o.im;
        return *this;
    }
    Gaussian& operator-=(const Gaussian& o)
    {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Gaussian& operator*=(const Gaussian& o)
    {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    Gaussian& operator/=(const Gaussian& o)
    {
        if (o.is_zero()) throw DomainError("DivisionByZero", "division by zero in Q(i)");
        const Rational n = o.norm();
        *this *= o.conj();
        re /= n;
        im /= n;
        return *this;
    }
    Gaussian operator-() const { return {-re, -im}; }

    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
    friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
    friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }
};

inline std::string to_string(const Gaussian& z)
{
    if (z.is_real()) return to_string(z.re);
    return "(" + to_string(z.re) + (z.im.sign() < 0 ? "-" : "+") + to_string(abs(z.im)) + "i)";
}

inline std::ostream& operator<<(std::ostream& os, const Gaussian& z) { return os << to_string(z); }

template <class T>
inline bool is_zero(const T& v) { return v.is_zero(); }

} // namespace hqmap
