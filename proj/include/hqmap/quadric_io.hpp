#pragma once

// Text formats for the quadrics module:
//
//   realpoly n=<a+b> a=<a> b=<b>
//   e1 ... en ; p/q
//
//   map n=<vars> a=<a> b=<b> A=<A> B=<B> homogeneous=<0|1> denominator=<index|none>
//   <+|-> <weight> :: <re>,<im> e1 ... en [; <re>,<im> e1 ... en]...
//
// Component indices are 0-based.

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "hqmap/form_io.hpp"
#include "hqmap/quadrics.hpp"

namespace hqmap::io {

namespace detail {

inline long long header_int(const std::map<std::string, std::string>& kv, const char* key, int line)
{
    auto it = kv.find(key);
    if (it == kv.end()) throw ParseError(std::string("header lacks ") + key + "=", line);
    return parse_int(it->second, line, key);
}

} // namespace detail

inline SignedRealPoly read_realpoly(std::istream& in)
{
    const auto lines = content_lines(in);
    if (lines.empty()) throw ParseError("empty realpoly file");
    const int hl = lines[0].first;
    const auto kv = parse_header(lines[0].second, "realpoly", hl);
    const long long n = detail::header_int(kv, "n", hl), a = detail::header_int(kv, "a", hl),
                    b = detail::header_int(kv, "b", hl);
    if (a < 1 || b < 1 || n != a + b) throw ParseError("need a, b >= 1 and n = a + b", hl);
    RealPoly p(static_cast<std::size_t>(n));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& [no, text] = lines[i];
        const auto fields = split(text, ';');
        if (fields.size() != 2) throw ParseError("expected 'e1 ... en ; p/q'", no);
        const MultiIndex m = parse_exponents(fields[0], static_cast<std::size_t>(n), no);
        const auto c = words(fields[1]);
        if (c.size() != 1) throw ParseError("expected one rational coefficient", no);
        p.add(m, parse_rational_at(c[0], no));
    }
    return SignedRealPoly(static_cast<int>(a), static_cast<int>(b), std::move(p));
}

inline SignedRealPoly read_realpoly(const std::string& text)
{
    std::istringstream in(text);
    return read_realpoly(in);
}

inline void write_realpoly(std::ostream& out, const SignedRealPoly& p)
{
    out << "realpoly n=" << p.nvars() << " a=" << p.a() << " b=" << p.b() << '\n';
    for (const auto& [m, c] : p.poly().terms()) out << m.str() << " ; " << to_string(c) << '\n';
}

inline QuadricMap read_map(std::istream& in)
{
    const auto lines = content_lines(in);
    if (lines.empty()) throw ParseError("empty map file");
    const int hl = lines[0].first;
    const auto kv = parse_header(lines[0].second, "map", hl);
    const long long n = detail::header_int(kv, "n", hl), a = detail::header_int(kv, "a", hl),
                    b = detail::header_int(kv, "b", hl), A = detail::header_int(kv, "A", hl),
                    B = detail::header_int(kv, "B", hl), hom = detail::header_int(kv, "homogeneous", hl);
    if (n < 1 || a < 0 || b < 0 || n != a + b) throw ParseError("need n = a + b >= 1", hl);
    if (hom != 0 && hom != 1) throw ParseError("homogeneous must be 0 or 1", hl);
    auto dit = kv.find("denominator");
    if (dit == kv.end()) throw ParseError("header lacks denominator=", hl);

    QuadricMap m{static_cast<int>(a), static_cast<int>(b), hom == 1, {static_cast<std::size_t>(n), {}}, std::nullopt};
    if (dit->second != "none") {
        const long long d = parse_int(dit->second, hl, "denominator");
        if (d < 0) throw ParseError("denominator index must be nonnegative", hl);
        m.denominator = static_cast<std::size_t>(d);
    }

    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& [no, text] = lines[i];
        const auto sep = text.find("::");
        if (sep == std::string::npos) throw ParseError("expected '<+|-> <weight> :: terms'", no);
        const auto head = words(text.substr(0, sep));
        if (head.size() != 2 || (head[0] != "+" && head[0] != "-"))
            throw ParseError("expected sign '+' or '-' followed by a weight", no);
        HoloComponent c{head[0] == "+" ? 1 : -1, parse_rational_at(head[1], no), HoloPoly(static_cast<std::size_t>(n))};
        if (c.weight.sign() <= 0) throw ParseError("weight must be positive", no);
        for (const auto& term : split(text.substr(sep + 2), ';')) {
            auto ws = words(term);
            if (ws.empty()) throw ParseError("empty term", no);
            const auto comma = ws[0].find(',');
            if (comma == std::string::npos) throw ParseError("coefficient must be '<re>,<im>'", no);
            const Gaussian v(parse_rational_at(ws[0].substr(0, comma), no), parse_rational_at(ws[0].substr(comma + 1), no));
            std::string exps;
            for (std::size_t k = 1; k < ws.size(); ++k) exps += ws[k] + " ";
            c.poly.add(parse_exponents(exps, static_cast<std::size_t>(n), no), v);
        }
        m.components.components.push_back(std::move(c));
    }
    const auto sig = m.signature();
    if (static_cast<long long>(sig.pos) != A || static_cast<long long>(sig.neg) != B)
        throw ParseError("header says A=" + std::to_string(A) + " B=" + std::to_string(B) + " but components give " +
                             std::to_string(sig.pos) + "," + std::to_string(sig.neg),
                         hl);
    if (m.denominator && *m.denominator >= m.components.components.size())
        throw ParseError("denominator index out of range", hl);
    return m;
}

inline QuadricMap read_map(const std::string& text)
{
    std::istringstream in(text);
    return read_map(in);
}

/// sqrt(weight) rendered symbolically, e.g. "1", "2", "sqrt(3)", "sqrt(1/2)".
inline std::string sqrt_weight(const Rational& w)
{
    const Integer p = boost::multiprecision::numerator(w), q = boost::multiprecision::denominator(w);
    const Integer rp = boost::multiprecision::sqrt(p), rq = boost::multiprecision::sqrt(q);
    if (rp * rp == p && rq * rq == q) return to_string(Rational(rp, rq));
    return "sqrt(" + to_string(w) + ")";
}

inline void write_map(std::ostream& out, const QuadricMap& m, bool comments = false)
{
    const auto sig = m.signature();
    out << "map n=" << m.nvars() << " a=" << m.a << " b=" << m.b << " A=" << sig.pos << " B=" << sig.neg
        << " homogeneous=" << (m.homogeneous ? 1 : 0) << " denominator=";
    if (m.denominator)
        out << *m.denominator;
    else
        out << "none";
    out << '\n';
    for (const auto& c : m.components.components) {
        out << (c.sign > 0 ? "+ " : "- ") << to_string(c.weight) << " ::";
        bool first = true;
        for (const auto& [mono, v] : c.poly.terms()) {
            out << (first ? " " : " ; ") << to_string(v.re) << ',' << to_string(v.im) << ' ' << mono.str();
            first = false;
        }
        out << '\n';
    }
    if (!comments) return;
    for (std::size_t i = 0; i < m.components.components.size(); ++i) {
        const auto& c = m.components.components[i];
        const std::string w = sqrt_weight(c.weight);
        out << "# " << i << (c.sign > 0 ? " + " : " - ") << (w == "1" ? "" : w + " * ") << '(' << c.poly.pretty()
            << ')' << (m.denominator && *m.denominator == i ? "  [denominator]" : "") << '\n';
    }
}

} // namespace hqmap::io
