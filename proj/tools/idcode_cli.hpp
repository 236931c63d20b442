#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "idcode/idcode.hpp"

namespace idcode::cli {

enum ExitCode : int { kOk = 0, kFail = 1, kUsage = 2, kInconclusive = 3 };

struct Options {
    std::string r2;
    std::string R2;
    std::string code;
    std::int64_t s = 0;
    std::int64_t t = 0;
    bool remove = false;
    std::string family;
    std::int64_t k = 0;
    std::int64_t i = 0;
    std::int64_t r = 0;
    std::string frame;
    std::optional<std::int64_t> margin;
    std::optional<std::int64_t> count;
    std::string window = "21x21";
    std::string format = "ascii";
    std::string target = "code";
    std::string direction = "horizontal";
    std::string kind;
    std::uint64_t seed = 1;
    std::uint64_t trials = 1000;
    std::string out;
};

class UsageError : public Error {
public:
    using Error::Error;
};

inline RadiusPair radius_pair(const Options& o) {
    if (o.r2.empty() || o.R2.empty()) throw UsageError("--r2 and --R2 are required");
    return {SqRadius(Rational::parse(o.r2)), SqRadius(Rational::parse(o.R2))};
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// A builtin name or a codespec file; the builtin's radius pair is returned when known.
inline std::pair<PeriodicCode, std::optional<RadiusPair>> load_code(const std::string& spec) {
    if (spec.empty()) throw UsageError("--code is required");
    const auto& names = builtin_names();
    if (std::find(names.begin(), names.end(), spec) != names.end()) {
        NamedCode b = builtin_code(spec);
        return {b.code, b.rp};
    }
    return {parse_codespec(read_file(spec)), std::nullopt};
}

inline RadiusPair radius_pair_or(const Options& o, const std::optional<RadiusPair>& fallback) {
    if (o.r2.empty() && o.R2.empty() && fallback) return *fallback;
    return radius_pair(o);
}

inline std::pair<std::int64_t, std::int64_t> parse_window(const std::string& text) {
    const auto x = text.find('x');
    auto num = [&](const std::string& s) {
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            throw UsageError("--window expects WxH, got '" + text + "'");
        }
        return std::stoll(s);
    };
    if (x == std::string::npos) throw UsageError("--window expects WxH, got '" + text + "'");
    return {num(text.substr(0, x)), num(text.substr(x + 1))};
}

inline std::string approx(const Rational& q) {
    std::ostringstream ss;
    ss << std::fixed << std::setprecision(4) << q.to_double();
    return ss.str();
}

inline void emit(const Options& o, std::ostream& out, const std::string& text) {
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + o.out + "'");
    f << text;
}

inline std::string points_text(const PointSet& s) {
    std::string t;
    for (const Point& p : s) t += "point " + std::to_string(p.x) + " " + std::to_string(p.y) + "\n";
    return t;
}

inline int cmd_exists(const Options& o, std::ostream& out) {
    const RadiusPair rp = radius_pair(o);
    const SqRadius m = delta_m_sq(rp.r2);
    if (exists_code(rp)) {
        out << "code exists (R2 < " << m.str() << ")\n";
        return kOk;
    }
    out << "no code exists (R2 >= " << m.str() << ")\n";
    return kFail;
}

inline int cmd_pattern(const Options& o, std::ostream& out) {
    const RadiusPair rp = radius_pair(o);
    PointSet s;
    if (o.direction == "horizontal") s = horizontal_pattern(rp);
    else if (o.direction == "diagonal") s = diagonal_pattern(rp);
    else throw UsageError("--dir must be horizontal or diagonal");
    std::string text = "pattern " + o.direction + " size " + std::to_string(s.size()) + "\n" + points_text(s);
    emit(o, out, text);
    return s.empty() ? kFail : kOk;
}

inline int cmd_analyze(const Options& o, std::ostream& out) {
    const RadiusPair rp = radius_pair(o);
    std::ostringstream ss;
    ss << "r2 " << rp.r2.str() << " R2 " << rp.R2.str() << "\n";
    ss << "delta_m_sq " << delta_m_sq(rp.r2).str() << "\n";
    ss << "diag_ball " << diag_ball_formula(rp.r2) << "\n";
    if (!exists_code(rp)) {
        ss << "no code exists\n";
        out << ss.str();
        return kFail;
    }
    const PatternSize size = pattern_size(rp);
    const ColumnProfile prof = column_profile(rp);
    const PointSet h = horizontal_pattern(rp);
    ss << "pattern_size " << size.enumerated << " formula " << size.formula << "\n";
    ss << "x0 " << prof.x0 << " (lower bound formula " << prof.x0_formula_lb << ")\n";
    ss << "x1 " << prof.x1;
    if (prof.x1_formula) ss << " (closed form " << *prof.x1_formula << ")";
    ss << "\n";
    ss << "m " << prof.m << " (conjugate form " << prof.m_formula << ")\n";
    ss << "max_mod diagonal " << max_mod(h, LineDirection::diagonal) << "\n";
    ss << "max_mod horizontal of diagonal pattern " << max_mod(diagonal_pattern(rp), LineDirection::horizontal) << "\n";
    ss << "pattern lower bound " << pattern_lower_bound(rp).bound.str() << "\n";
    out << ss.str();
    return kOk;
}

inline int cmd_construct(const Options& o, std::ostream& out) {
    PeriodicCode code;
    std::string header;
    if (o.kind == "grid") {
        code = construct_grid(radius_pair(o));
    } else if (o.kind == "diag") {
        if (o.t == 0) code = construct_diag_only(o.s);
        else code = construct_diag(o.s, o.t, o.remove);
    } else if (o.kind == "int-half") {
        code = construct_int_half(o.r);
    } else if (o.kind == "38") {
        code = construct_38(radius_pair(o));
    } else if (o.kind == "family") {
        CodeFamily f;
        if (o.family == "s4") f = CodeFamily::s4(o.k, o.i);
        else if (o.family == "s6") f = CodeFamily::s6(o.k);
        else if (o.family == "s8") f = CodeFamily::s8(o.k);
        else throw UsageError("--family must be s4, s6 or s8");
        const FamilyConstruction fc = construct_family(f);
        std::ostringstream ss;
        ss << "# family " << o.family << " r2 " << fc.rp.r2.str() << " R2 " << fc.rp.R2.str() << "\n";
        ss << "# pattern size " << fc.report.pattern_size << " residues mod " << f.s() << ":";
        for (auto r : fc.report.diagonal_residues) ss << ' ' << r;
        ss << (fc.report.residues_distinct ? " distinct" : " not distinct") << "\n";
        header = ss.str();
        code = fc.code;
    } else if (o.kind == "builtin") {
        code = load_code(o.code).first;
    } else {
        throw UsageError("construct needs a kind: grid, diag, int-half, 38, family or builtin");
    }
    header += "# density " + code.density().str() + "\n";
    emit(o, out, header + serialize_codespec(code));
    return kOk;
}

inline std::string describe(const VerificationFailure& f) {
    std::string s = std::string("FAIL ") + to_string(f.kind) + " u=" + to_string(f.u);
    if (f.v) s += " v=" + to_string(*f.v);
    return s;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
    auto [code, builtin_rp] = load_code(o.code);
    const RadiusPair rp = radius_pair_or(o, builtin_rp);
    const VerificationReport rep = verify_identifying(code, rp);
    if (rep.ok) {
        out << "OK density " << code.density().str() << "\n";
        return kOk;
    }
    out << describe(*rep.failure) << "\n";
    return kFail;
}

inline int cmd_bound(const Options& o, std::ostream& out) {
    const RadiusPair rp = radius_pair(o);
    if (!o.frame.empty()) {
        const FrameShape f = frame_by_name(o.frame);
        const std::int64_t margin = o.margin.value_or(default_margin(rp));
        const FrameMinResult m = frame_min_count(rp, f, margin);
        if (!m.proved) {
            out << "inconclusive\n";
            return kInconclusive;
        }
        out << "proved min " << m.min_count << ", density ≥ "
            << Rational(m.min_count, static_cast<std::int64_t>(f.cells.size())).str() << "\n";
        return kOk;
    }
    const ReferenceBounds b = reference_bounds(rp);
    std::ostringstream ss;
    ss << "fixed lower reference " << std::setprecision(4) << b.fixed_lower << " (approximate, not exact)\n";
    ss << "pattern " << b.pattern.bound.str() << " [" << to_string(b.pattern.provenance) << "]\n";
    if (b.frame) {
        ss << "frame " << b.frame->count << "/" << b.frame->witness.size() << " = " << b.frame->bound.str() << " ["
           << to_string(b.frame->provenance) << "]\n";
    }
    if (b.grid_upper) ss << "grid upper " << b.grid_upper->str() << " [computed]\n";
    for (const AssertedBound& a : b.asserted) ss << "lower " << a.value << " [paper-asserted: " << a.source << "]\n";
    out << ss.str();
    return kOk;
}

inline int cmd_classify(const Options& o, std::ostream& out) {
    const RadiusPair rp = radius_pair(o);
    if (o.frame.empty()) throw UsageError("classify needs --frame");
    const FrameShape f = frame_by_name(o.frame);
    const std::int64_t margin = o.margin.value_or(default_margin(rp));
    std::int64_t count = 0;
    if (o.count) {
        count = *o.count;
    } else {
        const FrameMinResult m = frame_min_count(rp, f, margin);
        if (!m.proved) {
            out << "inconclusive\n";
            return kInconclusive;
        }
        count = m.min_count;
    }
    const auto classes = classify_min_configs(rp, f, count, margin);
    std::ostringstream ss;
    ss << classes.size() << " classes with " << count << " vertices on " << f.name << "\n";
    for (const ConfigClass& c : classes) {
        ss << "class orbit " << c.orbit_size << ":";
        for (const Point& p : c.representative) ss << ' ' << to_string(p);
        const ForcingClaim claim{ForcingClaim::Mode::some, frame_translates(f, unit_offsets()), count + 1};
        ss << " | some unit neighbour frame >= " << count + 1 << ": " << to_string(check_forcing(rp, f, c, claim, margin))
           << "\n";
    }
    out << ss.str();
    return kOk;
}

inline int cmd_simulate(const Options& o, std::ostream& out) {
    auto [code, builtin_rp] = load_code(o.code);
    const RadiusPair rp = radius_pair_or(o, builtin_rp);
    const VerificationReport rep = verify_identifying(code, rp);
    if (!rep.ok) {
        out << describe(*rep.failure) << "\n";
        return kFail;
    }
    const SimulationReport s = simulate_trials(code, rp, o.trials, o.seed);
    out << "trials " << s.trials << " unique-correct " << s.unique_correct << " ambiguous " << s.ambiguous << " wrong "
        << s.wrong << "\n";
    return s.unique_correct == s.trials ? kOk : kFail;
}

inline int cmd_render(const Options& o, std::ostream& out) {
    const auto [w, h] = parse_window(o.window);
    const Box window = centered_window(w, h);
    PointSet filled, highlighted;
    std::optional<SvgCircles> circles;
    if (o.target == "code") {
        auto [code, builtin_rp] = load_code(o.code);
        filled = code_points_in(code, window);
    } else if (o.target == "ball") {
        if (o.r2.empty()) throw UsageError("render ball needs --r2");
        const SqRadius r2(Rational::parse(o.r2));
        filled = ball({0, 0}, r2);
        if (!o.R2.empty()) circles = SvgCircles{{0, 0}, r2, SqRadius(Rational::parse(o.R2))};
    } else if (o.target == "pattern") {
        const RadiusPair rp = radius_pair(o);
        const Point u = o.direction == "diagonal" ? Point{-1, -1} : Point{-1, 0};
        highlighted = sym_diff_pattern(u, {0, 0}, rp);
        circles = SvgCircles{{0, 0}, rp.r2, rp.R2};
    } else {
        throw UsageError("--target must be code, pattern or ball");
    }
    std::vector<Point> in_window;
    for (const Point& p : filled) if (window.contains(p)) in_window.push_back(p);
    filled = PointSet(std::move(in_window));
    if (o.format == "ascii") emit(o, out, render_ascii(window, filled, highlighted));
    else if (o.format == "svg") emit(o, out, render_svg(window, filled, highlighted, circles));
    else throw UsageError("--format must be ascii or svg");
    return kOk;
}

inline int cmd_table(const Options& o, std::ostream& out) {
    emit(o, out, format_table(compute_table()));
    return kOk;
}

/// Runs one command line (without the program name). Output goes to out, diagnostics to err.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Tolerant identifying codes on the square lattice"};
    app.require_subcommand(1);
    Options o;

    auto radii = [&](CLI::App* c) {
        c->add_option("--r2", o.r2, "squared radius r^2 as N or N/D");
        c->add_option("--R2", o.R2, "squared enlarged radius (r + Delta)^2 as N or N/D");
    };
    auto* analyze = app.add_subcommand("analyze", "pattern, column profile and modular data for a radius pair");
    radii(analyze);
    auto* pattern = app.add_subcommand("pattern", "list the horizontal or diagonal pattern");
    radii(pattern);
    pattern->add_option("--dir", o.direction, "horizontal or diagonal");
    pattern->add_option("--out", o.out, "write to file");
    auto* exists = app.add_subcommand("exists", "decide whether any identifying code exists");
    radii(exists);
    auto* construct = app.add_subcommand("construct", "build a periodic code and print its codespec");
    construct->add_option("kind", o.kind, "grid | diag | int-half | 38 | family | builtin")->required();
    radii(construct);
    construct->add_option("--s", o.s, "diagonal line period");
    construct->add_option("--t", o.t, "horizontal line period (0 for diagonal lines only)");
    construct->add_flag("--remove", o.remove, "drop vertices on both kinds of line");
    construct->add_option("--r", o.r, "integer radius for int-half");
    construct->add_option("--family", o.family, "s4 | s6 | s8");
    construct->add_option("--k", o.k, "family parameter k");
    construct->add_option("--i", o.i, "family parameter i (s4)");
    construct->add_option("--code", o.code, "builtin name for kind builtin");
    construct->add_option("--out", o.out, "write to file");
    auto* verify = app.add_subcommand("verify", "check that a code is identifying");
    radii(verify);
    verify->add_option("--code", o.code, "builtin name or codespec path");
    auto* bound = app.add_subcommand("bound", "density lower bounds");
    radii(bound);
    bound->add_option("--frame", o.frame, "F12 | F20 | F14");
    bound->add_option("--margin", o.margin, "window margin around the frame");
    auto* classify = app.add_subcommand("classify", "classify least frame configurations");
    radii(classify);
    classify->add_option("--frame", o.frame, "F12 | F20 | F14");
    classify->add_option("--margin", o.margin, "window margin around the frame");
    classify->add_option("--count", o.count, "number of frame vertices (default: proved minimum)");
    auto* table = app.add_subcommand("table", "recompute the small-radius table");
    table->add_option("--out", o.out, "write to file");
    auto* simulate = app.add_subcommand("simulate", "seeded fault-localization trials");
    radii(simulate);
    simulate->add_option("--code", o.code, "builtin name or codespec path");
    simulate->add_option("--trials", o.trials, "number of trials");
    simulate->add_option("--seed", o.seed, "random seed");
    auto* render = app.add_subcommand("render", "draw a code, pattern or ball");
    radii(render);
    render->add_option("--target", o.target, "code | pattern | ball");
    render->add_option("--code", o.code, "builtin name or codespec path");
    render->add_option("--dir", o.direction, "pattern direction: horizontal or diagonal");
    render->add_option("--window", o.window, "WxH centered on the origin");
    render->add_option("--format", o.format, "ascii | svg");
    render->add_option("--out", o.out, "write to file");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*analyze) return cmd_analyze(o, out);
        if (*pattern) return cmd_pattern(o, out);
        if (*exists) return cmd_exists(o, out);
        if (*construct) return cmd_construct(o, out);
        if (*verify) return cmd_verify(o, out);
        if (*bound) return cmd_bound(o, out);
        if (*classify) return cmd_classify(o, out);
        if (*table) return cmd_table(o, out);
        if (*simulate) return cmd_simulate(o, out);
        if (*render) return cmd_render(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace idcode::cli
