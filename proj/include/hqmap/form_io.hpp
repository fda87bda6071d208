#pragma once

// Text formats shared by the CLI:
//
//   form n=<n>
//   a1 ... an ; b1 ... bn ; re ; im
//
// Rationals are `p/q` or integers, `#` starts a comment, blank lines are ignored.

#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hqmap/error.hpp"
#include "hqmap/forms.hpp"

namespace hqmap::io {

inline std::string strip_comment(std::string_view line)
{
    const auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = line.find_last_not_of(" \t\r");
    return std::string(line.substr(b, e - b + 1));
}

inline std::vector<std::string> split(std::string_view s, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const auto p = s.find(sep, start);
        out.emplace_back(s.substr(start, p == std::string_view::npos ? std::string_view::npos : p - start));
        if (p == std::string_view::npos) break;
        start = p + 1;
    }
    return out;
}

inline std::vector<std::string> words(std::string_view s)
{
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

inline long long parse_int(const std::string& w, int line, const char* what)
{
    try {
        std::size_t used = 0;
        const long long v = std::stoll(w, &used);
        if (used != w.size()) throw std::invalid_argument(w);
        return v;
    } catch (const std::exception&) {
        throw ParseError(std::string("expected integer ") + what + ", got '" + w + "'", line);
    }
}

inline Rational parse_rational_at(const std::string& w, int line)
{
    try {
        return parse_rational(w);
    } catch (const ParseError& e) {
        throw ParseError(e.what(), line);
    }
}

/// Parses `key=value` tokens of a header line that starts with `tag`.
inline std::map<std::string, std::string> parse_header(const std::string& text, std::string_view tag, int line)
{
    const auto ws = words(text);
    if (ws.empty() || ws[0] != tag) throw ParseError("expected header starting with '" + std::string(tag) + "'", line);
    std::map<std::string, std::string> kv;
    for (std::size_t i = 1; i < ws.size(); ++i) {
        const auto eq = ws[i].find('=');
        if (eq == std::string::npos || eq == 0) throw ParseError("malformed header field '" + ws[i] + "'", line);
        kv[ws[i].substr(0, eq)] = ws[i].substr(eq + 1);
    }
    return kv;
}

inline MultiIndex parse_exponents(const std::string& field, std::size_t n, int line)
{
    const auto ws = words(field);
    if (ws.size() != n)
        throw ParseError("expected " + std::to_string(n) + " exponents, got " + std::to_string(ws.size()), line);
    std::vector<int> e;
    for (const auto& w : ws) {
        const long long v = parse_int(w, line, "exponent");
        if (v < 0) throw ParseError("negative exponent", line);
        e.push_back(static_cast<int>(v));
    }
    return MultiIndex(std::move(e));
}

/// Reads nonempty, comment-stripped lines with their 1-based line numbers.
inline std::vector<std::pair<int, std::string>> content_lines(std::istream& in)
{
    std::vector<std::pair<int, std::string>> out;
    std::string raw;
    for (int no = 1; std::getline(in, raw); ++no) {
        std::string s = strip_comment(raw);
        if (!s.empty()) out.emplace_back(no, std::move(s));
    }
    return out;
}

inline HermitianForm read_form(std::istream& in)
{
    const auto lines = content_lines(in);
    if (lines.empty()) throw ParseError("empty form file");
    const auto header = parse_header(lines[0].second, "form", lines[0].first);
    auto it = header.find("n");
    if (it == header.end()) throw ParseError("form header lacks n=<vars>", lines[0].first);
    const long long n = parse_int(it->second, lines[0].first, "n");
    if (n < 1) throw ParseError("n must be positive", lines[0].first);

    std::vector<FormEntry> entries;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& [no, text] = lines[i];
        const auto fields = split(text, ';');
        if (fields.size() != 4) throw ParseError("expected 'a ; b ; re ; im'", no);
        FormEntry e{parse_exponents(fields[0], static_cast<std::size_t>(n), no),
                    parse_exponents(fields[1], static_cast<std::size_t>(n), no), {}};
        const auto re = words(fields[2]), im = words(fields[3]);
        if (re.size() != 1 || im.size() != 1) throw ParseError("expected one rational per re/im field", no);
        e.value = Gaussian(parse_rational_at(re[0], no), parse_rational_at(im[0], no));
        entries.push_back(std::move(e));
    }
    return HermitianForm::from_entries(static_cast<std::size_t>(n), entries);
}

inline HermitianForm read_form(const std::string& text)
{
    std::istringstream in(text);
    return read_form(in);
}

/// Writes every stored entry (both mirrors) in canonical order.
inline void write_form(std::ostream& out, const HermitianForm& f)
{
    out << "form n=" << f.nvars() << '\n';
    for (const auto& [k, v] : f.entries())
        out << k.first.str() << " ; " << k.second.str() << " ; " << to_string(v.re) << " ; " << to_string(v.im) << '\n';
}

} // namespace hqmap::io
