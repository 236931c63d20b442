#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "lattice.hpp"
#include "rational.hpp"

namespace idcode {

/// Which family of parallel lines a residue refers to.
enum class LineDirection { horizontal, vertical, diagonal, antidiagonal };

inline const char* to_string(LineDirection d) {
    switch (d) {
        case LineDirection::horizontal: return "horizontal";
        case LineDirection::vertical: return "vertical";
        case LineDirection::diagonal: return "diagonal";
        case LineDirection::antidiagonal: return "antidiagonal";
    }
    return "?";
}

/// Line index of p: y, x, y - x or x + y.
constexpr std::int64_t line_index(Point p, LineDirection d) {
    switch (d) {
        case LineDirection::horizontal: return p.y;
        case LineDirection::vertical: return p.x;
        case LineDirection::diagonal: return p.y - p.x;
        case LineDirection::antidiagonal: return p.x + p.y;
    }
    return 0;
}

constexpr std::int64_t positive_mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

/// S(u,v): points of B_r(u) outside B_R(v), together with points of B_r(v) outside B_R(u).
inline PointSet sym_diff_pattern(Point u, Point v, const RadiusPair& rp) {
    if (u == v) throw PreconditionError("sym_diff_pattern needs distinct vertices, got u = v = " + to_string(u));
    std::vector<Point> out;
    for (const Point& p : ball(u, rp.r2)) {
        if (!in_ball(v, rp.R2, p)) out.push_back(p);
    }
    for (const Point& p : ball(v, rp.r2)) {
        if (!in_ball(u, rp.R2, p)) out.push_back(p);
    }
    return PointSet(std::move(out));
}

/// The horizontal pattern S((0,0),(-1,0)).
inline PointSet horizontal_pattern(const RadiusPair& rp) { return sym_diff_pattern({0, 0}, {-1, 0}, rp); }

/// The diagonal pattern S((0,0),(-1,-1)).
inline PointSet diagonal_pattern(const RadiusPair& rp) { return sym_diff_pattern({0, 0}, {-1, -1}, rp); }

/// An (r, Delta)-identifying code exists iff the horizontal pattern is nonempty.
inline bool exists_code(const RadiusPair& rp) { return !horizontal_pattern(rp).empty(); }

/// Largest squared distance from (-1,0) to a point of B_r((0,0)).
/// Codes exist for (r2, R2) exactly when R2 < delta_m_sq(r2).
inline SqRadius delta_m_sq(const SqRadius& r2) {
    // Per column the farthest point from (-1,0) is the topmost one.
    std::int64_t best = 0;
    const std::int64_t reach = r2.floor_root();
    for (std::int64_t x = -reach; x <= reach; ++x) {
        const std::int64_t h = r2.column_half_height(x);
        best = std::max(best, (x + 1) * (x + 1) + h * h);
    }
    return SqRadius(best);
}

// ---------------------------------------------------------------------------
// Column profile of the horizontal pattern.
//
// h(x) = sqrt(r^2 - x^2) - sqrt(R^2 - (x+1)^2) on [0, floor(R - 1)]. It is never
// evaluated in floating point; all comparisons go through compare_sqrt_difference.

/// floor(R - 1), the right end of the domain of h.
inline std::int64_t profile_domain_end(const RadiusPair& rp) { return rp.R2.floor_root() - 1; }

/// Sign of h(x) - theta.
inline int compare_h(const RadiusPair& rp, std::int64_t x, const Rational& theta) {
    const Rational a = rp.r2.value() - Rational(x) * Rational(x);
    const Rational b = rp.R2.value() - Rational(x + 1) * Rational(x + 1);
    if (a.sign() < 0 || b.sign() < 0) {
        throw PreconditionError("h(" + std::to_string(x) + ") is undefined for " + rp.r2.str() + "/" + rp.R2.str());
    }
    return compare_sqrt_difference(a, b, theta);
}

struct ColumnProfile {
    std::int64_t x0 = 0;
    std::int64_t x1 = 0;  // -1 when h > 1 on the whole domain
    std::int64_t m = 0;
    std::int64_t x0_formula_lb = 0;
    std::optional<std::int64_t> x1_formula;
    std::int64_t m_formula = 0;
};

namespace detail {

// sign(sqrt(a) + sqrt(b) - theta)
inline int compare_sqrt_sum(const Rational& a, const Rational& b, const Rational& theta) {
    if (theta.sign() <= 0) {
        if (a.sign() == 0 && b.sign() == 0) return -theta.sign();
        return 1;
    }
    const Rational e = theta * theta - a - b;  // compare 2 sqrt(ab) with e
    if (e.sign() < 0) return 1;
    const Rational lhs = Rational(4) * a * b;
    const Rational rhs = e * e;
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

// ceil(sqrt(a) - sqrt(b)) through the conjugate form (a - b) / (sqrt(a) + sqrt(b)).
inline std::int64_t ceil_radical_difference_conjugate(const Rational& a, const Rational& b) {
    const Rational diff = a - b;
    if (diff.sign() == 0) return 0;
    if (diff.sign() > 0) {
        // least t >= 1 with diff <= t (sqrt a + sqrt b), i.e. sqrt a + sqrt b >= diff / t
        std::int64_t t = 1;
        while (compare_sqrt_sum(a, b, diff / Rational(t)) < 0) ++t;
        return t;
    }
    // value in [-sqrt b, 0): ceil = -(largest t >= 0 with t (sqrt a + sqrt b) <= -diff)
    std::int64_t t = 0;
    while (compare_sqrt_sum(a, b, (-diff) / Rational(t + 1)) <= 0) ++t;
    return -t;
}

}  // namespace detail

/// ceil(h(x)), decided exactly.
inline std::int64_t ceil_h(const RadiusPair& rp, std::int64_t x) {
    const double a = rp.r2.value().to_double() - static_cast<double>(x * x);
    const double b = rp.R2.value().to_double() - static_cast<double>((x + 1) * (x + 1));
    auto t = static_cast<std::int64_t>(std::ceil(std::sqrt(std::max(a, 0.0)) - std::sqrt(std::max(b, 0.0))));
    while (compare_h(rp, x, Rational(t)) > 0) ++t;
    while (compare_h(rp, x, Rational(t - 1)) <= 0) --t;
    return t;
}

namespace detail {

// floor((D - 2 + sqrt(Q)) / 4) with D = R^2 - r^2 and Q = 8 R^2 - D^2 - 4 D - 4, or nullopt if Q < 0.
inline std::optional<std::int64_t> x1_closed_form(const RadiusPair& rp) {
    const Rational D = rp.R2.value() - rp.r2.value();
    const Rational Q = Rational(8) * rp.R2.value() - D * D - Rational(4) * D - Rational(4);
    if (Q.sign() < 0) return std::nullopt;
    // n <= (D - 2 + sqrt Q) / 4  <=>  sqrt Q >= 4n - D + 2
    auto holds = [&](std::int64_t n) {
        const Rational rhs = Rational(4 * n) - D + Rational(2);
        if (rhs.sign() <= 0) return true;
        return Q >= rhs * rhs;
    };
    auto n = static_cast<std::int64_t>(
        std::floor((D.to_double() - 2.0 + std::sqrt(Q.to_double())) / 4.0));
    while (!holds(n)) --n;
    while (holds(n + 1)) ++n;
    return n;
}

}  // namespace detail

/// Column thresholds x0, x1, m of the horizontal pattern, each alongside its closed-form counterpart.
inline ColumnProfile column_profile(const RadiusPair& rp) {
    const PointSet pattern = horizontal_pattern(rp);
    if (pattern.empty()) throw PreconditionError("column_profile: no code exists for " + rp.r2.str() + "/" + rp.R2.str());

    ColumnProfile prof;
    prof.x0 = INT64_MAX;
    for (const Point& p : pattern) {
        if (p.x >= 0) prof.x0 = std::min(prof.x0, p.x);
    }

    const std::int64_t end = profile_domain_end(rp);
    prof.x1 = -1;
    for (std::int64_t x = 0; x <= end; ++x) {
        if (compare_h(rp, x, Rational(1)) <= 0) prof.x1 = x;
        else break;  // h is increasing
    }
    prof.m = end >= 0 ? ceil_h(rp, end) : 0;

    const Rational D = rp.R2.value() - rp.r2.value();
    prof.x0_formula_lb = ((D - Rational(1)) / Rational(2)).ceil();
    prof.x1_formula = detail::x1_closed_form(rp);
    if (end >= 0) {
        const std::int64_t floor_R = rp.R2.floor_root();
        const Rational a = rp.r2.value() - Rational(end) * Rational(end);
        const Rational b = rp.R2.value() - Rational(floor_R) * Rational(floor_R);
        prof.m_formula = detail::ceil_radical_difference_conjugate(a, b);
    }
    return prof;
}

/// |S((0,0),(-1,0))| by enumeration and by the closed column-sum formula.
struct PatternSize {
    std::int64_t enumerated = 0;
    std::int64_t formula = 0;
};

inline std::int64_t pattern_size_formula(const RadiusPair& rp) {
    const std::int64_t floor_r = rp.r2.floor_root();
    const std::int64_t floor_R = rp.R2.floor_root();
    const std::int64_t end = std::min(floor_R - 1, floor_r);
    std::int64_t sum = 0;
    bool started = false;  // columns before the first x with h(x) > 0 contribute nothing
    for (std::int64_t x = 0; x <= end; ++x) {
        const Rational a = rp.r2.value() - Rational(x) * Rational(x);
        const Rational b = rp.R2.value() - Rational(x + 1) * Rational(x + 1);
        if (!started) {
            if (a <= b) continue;
            started = true;
        }
        sum += floor_sqrt(a) - floor_sqrt(b);
    }
    std::int64_t total = 4 * sum;
    if (floor_r == floor_R) {
        total += 4 * floor_sqrt(rp.r2.value() - Rational(floor_r) * Rational(floor_r)) + 2;
    }
    return total;
}

inline PatternSize pattern_size(const RadiusPair& rp) {
    return {static_cast<std::int64_t>(horizontal_pattern(rp).size()), pattern_size_formula(rp)};
}

// ---------------------------------------------------------------------------
// Lines modulo k.

/// True iff every residue class modulo k of lines in direction dir meets s.
inline bool lines_mod_check(const PointSet& s, std::int64_t k, LineDirection dir) {
    if (k <= 0) throw PreconditionError("lines_mod_check needs k >= 1");
    if (static_cast<std::int64_t>(s.size()) < k) return false;
    std::vector<char> seen(static_cast<std::size_t>(k), 0);
    std::int64_t missing = k;
    for (const Point& p : s) {
        auto r = static_cast<std::size_t>(positive_mod(line_index(p, dir), k));
        if (!seen[r]) {
            seen[r] = 1;
            if (--missing == 0) return true;
        }
    }
    return false;
}

/// Largest k such that s meets every line residue class modulo k. Not assumed monotone in k.
inline std::int64_t max_mod(const PointSet& s, LineDirection dir) {
    if (s.empty()) throw PreconditionError("max_mod of an empty set");
    std::int64_t lo = INT64_MAX, hi = INT64_MIN;
    for (const Point& p : s) {
        lo = std::min(lo, line_index(p, dir));
        hi = std::max(hi, line_index(p, dir));
    }
    for (std::int64_t k = hi - lo + 1; k > 1; --k) {
        if (lines_mod_check(s, k, dir)) return k;
    }
    return 1;
}

/// diag(B_r) = 4 floor(r / sqrt 2) + 2 delta + 1, with delta = 1 exactly when the
/// point (-f-1, f) lies in the ball (f = floor(r / sqrt 2)).
inline std::int64_t diag_ball_formula(const SqRadius& r2) {
    const std::int64_t f = floor_sqrt(r2.value() / Rational(2));
    const std::int64_t delta = r2.admits(f * f + (f + 1) * (f + 1)) ? 1 : 0;
    return 4 * f + 2 * delta + 1;
}

}  // namespace idcode
