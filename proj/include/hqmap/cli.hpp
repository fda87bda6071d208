#pragma once

// Command-line front end. `run` is callable in-process so tests can drive it
// with string streams; tools/hqmap.cpp is only a main().

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "hqmap/combinat.hpp"
#include "hqmap/error.hpp"
#include "hqmap/form_io.hpp"
#include "hqmap/forms.hpp"
#include "hqmap/quadric_io.hpp"
#include "hqmap/quadrics.hpp"
#include "hqmap/restrict.hpp"

namespace hqmap::cli {

using Json = nlohmann::ordered_json;

struct Config {
    std::uint64_t seed = 0;
    int trials = 3;
    long long coeff_bound = 1000000;
    std::size_t search_budget = 100000;
    bool json = false;
    bool quiet = false;
};

namespace detail {

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Integer big(const std::string& s)
{
    try {
        Integer v(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected integer, got '" + s + "'");
    }
}

inline int small(const std::string& s) { return static_cast<int>(io::parse_int(s, 0, "argument")); }

inline Json sig_json(const SignaturePair& s) { return Json::array({s.pos, s.neg}); }

inline std::string map_text(const QuadricMap& m, bool comments)
{
    std::ostringstream ss;
    io::write_map(ss, m, comments);
    return ss.str();
}

inline Json map_json(const QuadricMap& m)
{
    Json comps = Json::array();
    for (const auto& c : m.components.components) {
        Json terms = Json::array();
        for (const auto& [mono, v] : c.poly.terms())
            terms.push_back({{"re", to_string(v.re)}, {"im", to_string(v.im)}, {"exponents", mono.exponents()}});
        comps.push_back({{"sign", c.sign}, {"weight", to_string(c.weight)}, {"sqrt_weight", io::sqrt_weight(c.weight)},
                         {"poly", c.poly.pretty()}, {"terms", terms}});
    }
    const auto sig = m.signature(), tgt = m.target();
    return {{"n", m.nvars()},
            {"source", {m.a, m.b}},
            {"signature", sig_json(sig)},
            {"target", sig_json(tgt)},
            {"homogeneous", m.homogeneous},
            {"denominator", m.denominator ? Json(*m.denominator) : Json(nullptr)},
            {"components", comps}};
}

inline Shift parse_shift(const std::string& s)
{
    for (Shift sh : all_shifts()) {
        std::string name = shift_name(sh);
        if (s == name || s == name.substr(1, name.size() - 2)) return sh;
    }
    throw ParseError("unknown shift '" + s + "'; expected one of a,b b,a a-1,b-1 a,b-1 b-1,a-1 b,a-1 a-1,b b-1,a");
}

// Region grid, B decreasing downwards and A increasing to the right.
inline std::vector<std::string> region_grid(int a, int b, std::size_t S, const LatticeResult& res)
{
    std::vector<std::string> rows;
    const int w = static_cast<int>(std::to_string(S).size());
    for (long long B = static_cast<long long>(S); B >= 0; --B) {
        std::ostringstream row;
        row << std::setw(w) << B << " |";
        for (long long A = 0; A <= static_cast<long long>(S); ++A) {
            char ch = '.';
            if (res.nodes.count({static_cast<std::size_t>(A), static_cast<std::size_t>(B)}))
                ch = stability_region(a, b, A, B) ? '#' : '@';
            row << ' ' << ch;
        }
        rows.push_back(row.str());
    }
    std::ostringstream axis, labels;
    axis << std::string(static_cast<std::size_t>(w), ' ') << " +" << std::string(2 * (S + 1), '-');
    labels << std::string(static_cast<std::size_t>(w), ' ') << "  ";
    for (std::size_t A = 0; A <= S; ++A) labels << ' ' << (A % 10);
    rows.push_back(axis.str());
    rows.push_back(labels.str());
    return rows;
}

} // namespace detail

/// Runs one invocation. Returns 0 on success, 1 on a domain error and 2 on a parse error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Config cfg;
    CLI::App app{"Exact rank bounds, Hermitian forms and hyperquadric maps", "hqmap"};
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();
    app.add_option("--seed", cfg.seed, "master seed for random sampling");
    app.add_option("--trials", cfg.trials, "random specializations for generic ranks");
    app.add_option("--coeff-bound", cfg.coeff_bound, "numerator/denominator bound for random coefficients");
    app.add_option("--budget", cfg.search_budget, "maximum lattice nodes visited by quadric searches");
    app.add_flag("--json", cfg.json, "structured output");
    app.add_flag("--quiet", cfg.quiet, "omit comment lines");

    std::vector<std::string> pos;
    std::optional<std::size_t> dim, samples, component, max_side;
    bool linear_only = false;
    std::string action;

    auto* mac = app.add_subcommand("macaulay", "Macaulay representation: macaulay <c> <d>");
    mac->add_option("args", pos)->expected(2)->required();

    auto* bound = app.add_subcommand("bound", "bound g|k|compose|hermitian|rigidity|stability ...");
    bound->add_option("kind", action)->required();
    bound->add_option("args", pos)->required();

    auto* form = app.add_subcommand("form", "form rank|inertia|decompose <file>");
    form->add_option("action", action)->required();
    form->add_option("file", pos)->expected(1)->required();

    auto* restr = app.add_subcommand("restrict", "restrict generic|max <file> --dim m");
    restr->add_option("action", action)->required();
    restr->add_option("file", pos)->expected(1)->required();
    restr->add_option("--dim", dim, "subspace dimension")->required();
    restr->add_option("--samples", samples, "sampled subspaces for 'max' (default 20)");
    restr->add_flag("--linear", linear_only, "'max': sample linear subspaces only");

    auto* quad = app.add_subcommand("quadric", "quadric construct|verify|tensor|dehomogenize|admissible|move|from-form|region ...");
    quad->add_option("action", action)->required();
    quad->add_option("args", pos);
    quad->add_option("--component", component, "component index for 'tensor' (0-based)");
    quad->add_option("--max", max_side, "grid side for 'region'");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "ParseError: " << e.what() << '\n';
        return 2;
    }

    Json j{{"schema", 1}};
    std::ostringstream text;
    auto need = [&](std::size_t n, const char* usage) {
        if (pos.size() != n) throw ParseError(std::string("usage: ") + usage);
    };

    try {
        if (mac->parsed()) {
            j["command"] = "macaulay";
            const Integer c = detail::big(pos[0]);
            const int d = detail::small(pos[1]);
            const MacaulayRep rep = macaulay_rep(c, d);
            const Integer low = macaulay_lower(c, d);
            j["c"] = to_string(c);
            j["d"] = d;
            j["ks"] = rep.ks;
            j["lower"] = to_string(low);
            text << to_string(c) << " =";
            for (int i = d; i >= 1; --i) text << (i == d ? " " : " + ") << "binom(" << rep.k(i) << "," << i << ")";
            text << "\nks = [";
            for (std::size_t i = 0; i < rep.ks.size(); ++i) text << (i ? ", " : "") << rep.ks[i];
            text << "]\nlower = " << to_string(low) << '\n';
        } else if (bound->parsed()) {
            j["command"] = "bound " + action;
            auto number = [&](const Integer& v) {
                j["value"] = to_string(v);
                text << to_string(v) << '\n';
            };
            if (action == "g") {
                need(3, "bound g <n> <d> <N>");
                number(green_G(detail::small(pos[0]), detail::small(pos[1]), detail::big(pos[2])));
            } else if (action == "k") {
                need(2, "bound k <n> <k>");
                number(green_K(detail::small(pos[0]), detail::big(pos[1])));
            } else if (action == "compose") {
                need(3, "bound compose <m> <n> <k>");
                number(compose_K(detail::small(pos[0]), detail::small(pos[1]), detail::big(pos[2])));
            } else if (action == "hermitian") {
                need(3, "bound hermitian <m> <n> <k>");
                number(hermitian_R(detail::small(pos[0]), detail::small(pos[1]), detail::big(pos[2])));
            } else if (action == "rigidity") {
                need(3, "bound rigidity <a> <b> <B>");
                number(rigidity_bound(detail::small(pos[0]), detail::small(pos[1]), detail::big(pos[2])));
            } else if (action == "stability") {
                need(4, "bound stability <a> <b> <A> <B>");
                const bool v = stability_region(detail::small(pos[0]), detail::small(pos[1]), detail::small(pos[2]),
                                                detail::small(pos[3]));
                j["value"] = v;
                text << (v ? "true" : "false") << '\n';
            } else {
                throw ParseError("unknown bound '" + action + "'; expected g, k, compose, hermitian, rigidity or stability");
            }
        } else if (form->parsed()) {
            j["command"] = "form " + action;
            const HermitianForm f = io::read_form(detail::read_file(pos[0]));
            if (action == "rank") {
                const auto r = form_rank(f);
                j["rank"] = r;
                text << r << '\n';
            } else if (action == "inertia") {
                const auto s = form_inertia(f);
                j["inertia"] = detail::sig_json(s);
                j["rank"] = s.rank();
                text << s.pos << ' ' << s.neg << '\n';
            } else if (action == "decompose") {
                const auto d = decompose(f);
                Json comps = Json::array();
                for (const auto& c : d.components) {
                    comps.push_back({{"sign", c.sign}, {"weight", to_string(c.weight)}, {"poly", c.poly.pretty()}});
                    text << (c.sign > 0 ? "+ " : "- ") << to_string(c.weight) << " :: " << c.poly.pretty() << '\n';
                }
                j["signature"] = detail::sig_json(d.signature());
                j["components"] = comps;
            } else {
                throw ParseError("unknown form action '" + action + "'; expected rank, inertia or decompose");
            }
        } else if (restr->parsed()) {
            j["command"] = "restrict " + action;
            const HermitianForm f = io::read_form(detail::read_file(pos[0]));
            if (action == "generic") {
                const auto g = generic_restriction_rank(f, *dim, {cfg.trials, cfg.seed, cfg.coeff_bound});
                j["rank"] = g.rank;
                j["failure_bound"] = g.failure_bound;
                text << g.rank << '\n';
                if (!cfg.quiet) text << "# failure probability <= " << g.failure_bound << '\n';
            } else if (action == "max") {
                AffineRankOptions o;
                o.samples = samples ? static_cast<int>(*samples) : 20;
                o.seed = cfg.seed;
                o.coeff_bound = cfg.coeff_bound;
                o.translate = !linear_only;
                const auto r = max_affine_rank(f, *dim, o);
                j["rank"] = r;
                j["samples"] = o.samples;
                j["affine"] = o.translate;
                text << r << '\n';
            } else {
                throw ParseError("unknown restrict action '" + action + "'; expected generic or max");
            }
        } else if (quad->parsed()) {
            j["command"] = "quadric " + action;
            if (action == "construct") {
                need(4, "quadric construct <a> <b> <A> <B>");
                const QuadricMap m = construct_map(detail::small(pos[0]), detail::small(pos[1]), detail::small(pos[2]),
                                                   detail::small(pos[3]), cfg.search_budget);
                j["map"] = detail::map_json(m);
                j["verified"] = true;
                text << detail::map_text(m, !cfg.quiet);
            } else if (action == "verify") {
                need(1, "quadric verify <mapfile>");
                const bool ok = verify_map(io::read_map(detail::read_file(pos[0])));
                j["verified"] = ok;
                text << (ok ? "true" : "false") << '\n';
            } else if (action == "tensor") {
                need(1, "quadric tensor <mapfile> --component i");
                if (!component) throw ParseError("quadric tensor needs --component");
                const QuadricMap m = tensor_extend(io::read_map(detail::read_file(pos[0])), *component);
                j["map"] = detail::map_json(m);
                text << detail::map_text(m, !cfg.quiet);
            } else if (action == "dehomogenize") {
                need(1, "quadric dehomogenize <polyfile>");
                const QuadricMap m = dehomogenize(io::read_realpoly(detail::read_file(pos[0])));
                j["map"] = detail::map_json(m);
                text << detail::map_text(m, !cfg.quiet);
            } else if (action == "admissible") {
                need(1, "quadric admissible <polyfile>");
                const auto r = is_admissible(io::read_realpoly(detail::read_file(pos[0])));
                j["admissible"] = r.admissible;
                j["signature"] = detail::sig_json(r.signature);
                text << (r.admissible ? "true" : "false") << ' ' << r.signature.pos << ' ' << r.signature.neg << '\n';
            } else if (action == "move") {
                need(2, "quadric move <polyfile> <shift>");
                const SignedRealPoly p = corner_move(io::read_realpoly(detail::read_file(pos[0])), detail::parse_shift(pos[1]));
                std::ostringstream ps;
                io::write_realpoly(ps, p);
                j["signature"] = detail::sig_json(p.signature());
                j["poly"] = p.pretty();
                text << ps.str();
            } else if (action == "from-form") {
                need(3, "quadric from-form <formfile> <a> <b>");
                const QuadricMap m =
                    map_from_form(io::read_form(detail::read_file(pos[0])), detail::small(pos[1]), detail::small(pos[2]));
                j["map"] = detail::map_json(m);
                text << detail::map_text(m, !cfg.quiet);
            } else if (action == "region") {
                need(2, "quadric region <a> <b> --max S");
                if (!max_side) throw ParseError("quadric region needs --max");
                const int a = detail::small(pos[0]), b = detail::small(pos[1]);
                const LatticeResult res = explore_lattice(a, b, *max_side, *max_side, cfg.search_budget);
                const auto grid = detail::region_grid(a, b, *max_side, res);
                Json reached = Json::array();
                for (const auto& [k, w] : res.nodes) reached.push_back({k.first, k.second});
                j["a"] = a;
                j["b"] = b;
                j["max"] = *max_side;
                j["threshold"] = stability_threshold(a, b);
                j["budget_exhausted"] = res.budget_exhausted;
                j["reached"] = reached;
                j["grid"] = grid;
                const std::string coef = b == 2 ? "" : std::to_string(b - 1);
                if (!cfg.quiet) {
                    text << "# source HQ(" << a << "," << b << "), A horizontal, B vertical\n"
                         << "# '#' constructed, inside the stability sector\n"
                         << "# '@' constructed, outside the stability sector\n"
                         << "# '.' no map found\n"
                         << "# sector boundaries: A + B = " << stability_threshold(a, b) << "; " << a << "(B - " << b - 1
                         << ") = " << coef << "A; " << a << "(A - " << b - 1 << ") = " << coef << "B\n";
                    if (res.budget_exhausted) text << "# search budget exhausted; grid is partial\n";
                }
                for (const auto& row : grid) text << row << '\n';
            } else {
                throw ParseError("unknown quadric action '" + action + "'");
            }
        }
    } catch (const ParseError& e) {
        err << e.name() << ": " << e.what() << '\n';
        if (cfg.json) out << Json{{"schema", 1}, {"error", e.name()}, {"message", e.what()}}.dump() << '\n';
        return 2;
    } catch (const Error& e) {
        err << e.name() << ": " << e.what() << '\n';
        if (cfg.json) out << Json{{"schema", 1}, {"error", e.name()}, {"message", e.what()}}.dump() << '\n';
        return 1;
    }

    if (cfg.json)
        out << j.dump() << '\n';
    else
        out << text.str();
    return 0;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

} // namespace hqmap::cli
