#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "codes.hpp"
#include "error.hpp"
#include "lattice.hpp"
#include "patterns.hpp"

namespace idcode {

/// Union of every k-th vertical and every k-th horizontal line, k = floor(r) - x1.
/// Density (2k - 1) / k^2.
inline PeriodicCode construct_grid(const RadiusPair& rp) {
    if (!exists_code(rp)) throw PreconditionError("construct_grid: no code exists for " + rp.r2.str() + "/" + rp.R2.str());
    const ColumnProfile prof = column_profile(rp);
    const std::int64_t k = rp.r2.floor_root() - prof.x1;
    if (k <= 1) {
        throw PreconditionError("construct_grid: degenerate line spacing k = " + std::to_string(k) + " (need k >= 2)");
    }
    std::vector<Point> res;
    for (std::int64_t i = 0; i < k; ++i) res.push_back({i, 0});
    for (std::int64_t j = 1; j < k; ++j) res.push_back({0, j});
    return PeriodicCode({k, 0}, {0, k}, res);
}

/// Diagonal lines y - x = 0 mod s together with horizontal lines y = 0 mod t.
/// With remove_intersection the vertices lying on both kinds of line are dropped.
inline PeriodicCode construct_diag(std::int64_t s, std::int64_t t, bool remove_intersection) {
    if (s < 1 || t < 1) throw PreconditionError("construct_diag needs s, t >= 1");
    return PeriodicCode::from_predicate({s, 0}, {t, t}, [&](Point p) {
        const bool on_diag = positive_mod(p.y - p.x, s) == 0;
        const bool on_hor = positive_mod(p.y, t) == 0;
        return remove_intersection ? (on_diag != on_hor) : (on_diag || on_hor);
    });
}

/// Diagonal lines y - x = 0 mod s alone, density 1/s.
inline PeriodicCode construct_diag_only(std::int64_t s) {
    if (s < 1) throw PreconditionError("construct_diag_only needs s >= 1");
    return PeriodicCode({s, 0}, {1, 1}, {{0, 0}});
}

/// Column classes modulo 4r+2 that carry odd ordinates in the density 1/2 code for integer r.
inline std::vector<std::int64_t> int_half_flagged_columns(std::int64_t r) {
    if (r < 1) throw PreconditionError("construct_int_half needs r >= 1");
    std::vector<char> in_x(static_cast<std::size_t>(2 * r + 1), 0);
    if (r % 2 == 1) {
        for (std::int64_t i = 0; i <= 2 * r; ++i) in_x[i] = 1;
    } else {
        for (std::int64_t i = 0; i <= r - 2; i += 2) in_x[i] = 1;
        in_x[r - 1] = 1;
        for (std::int64_t i = r + 1; i <= 2 * r - 3; i += 2) in_x[i] = 1;
        in_x[2 * r] = 1;
    }
    std::vector<std::int64_t> flagged;
    for (std::int64_t i = 0; i < 4 * r + 2; ++i) {
        const bool member = i <= 2 * r ? in_x[i] != 0 : in_x[i - (2 * r + 1)] == 0;
        if (member) flagged.push_back(i);
    }
    return flagged;
}

/// Density 1/2 code for integer r: each column is the odd or the even half of a vertical line.
inline PeriodicCode construct_int_half(std::int64_t r) {
    const std::vector<std::int64_t> flagged = int_half_flagged_columns(r);
    const std::int64_t period = 4 * r + 2;
    std::vector<char> odd(static_cast<std::size_t>(period), 0);
    for (std::int64_t i : flagged) odd[i] = 1;
    return PeriodicCode::from_predicate({period, 0}, {0, 2}, [&](Point p) {
        return (odd[positive_mod(p.x, period)] != 0) == (positive_mod(p.y, 2) == 1);
    });
}

/// Density 3/8 code for radius pairs whose horizontal pattern has exactly four vertices.
inline PeriodicCode construct_38(const RadiusPair& rp) {
    const PointSet s = horizontal_pattern(rp);
    if (s.size() != 4) {
        throw PreconditionError("construct_38 needs a horizontal pattern of size 4, got " + std::to_string(s.size()));
    }
    std::int64_t b = 0;
    bool found = false;
    for (const Point& p : s) {
        if (p.x >= p.y && p.y > 0) {
            b = p.y;
            found = true;
        }
    }
    if (!found) throw PreconditionError("construct_38: pattern has no vertex (a,b) with a >= b > 0");
    std::int64_t k = 0;
    while (b % 2 == 0) {
        b /= 2;
        ++k;
    }
    const std::int64_t modulus = std::int64_t{1} << (k + 2);
    const std::int64_t top = std::int64_t{1} << (k + 1);
    return PeriodicCode::from_predicate({modulus, 0}, {2, 2}, [&](Point p) {
        if (positive_mod(p.x, 2) == 0 && positive_mod(p.y, 2) == 0) return true;
        const std::int64_t d = positive_mod(p.y - p.x, modulus);
        return d >= 2 && d <= top && d % 2 == 0;
    });
}

// ---------------------------------------------------------------------------
// Infinite families with |S| = s and an optimal diagonal code of density 1/s.

struct CodeFamily {
    enum class Kind { s4, s6, s8 };
    Kind kind = Kind::s4;
    std::int64_t k = 0;
    std::int64_t i = 0;  // only used by s4

    static CodeFamily s4(std::int64_t k, std::int64_t i) { return {Kind::s4, k, i}; }
    static CodeFamily s6(std::int64_t k) { return {Kind::s6, k, 0}; }
    static CodeFamily s8(std::int64_t k) { return {Kind::s8, k, 0}; }

    std::int64_t s() const {
        switch (kind) {
            case Kind::s4: return 4;
            case Kind::s6: return 6;
            case Kind::s8: return 8;
        }
        return 0;
    }
};

struct FamilyReport {
    PointSet pattern;
    std::size_t pattern_size = 0;
    std::vector<std::int64_t> diagonal_residues;  // (y - x) mod s, in pattern order
    bool residues_distinct = false;
};

struct FamilyConstruction {
    RadiusPair rp;
    PeriodicCode code;
    FamilyReport report;
};

inline RadiusPair family_radius_pair(const CodeFamily& f) {
    const std::int64_t k = f.k;
    switch (f.kind) {
        case CodeFamily::Kind::s4: {
            if (f.i < 1 || f.i % 2 == 0) throw PreconditionError("family s4: i must be a positive odd integer, got i = " + std::to_string(f.i));
            if (k < 1) throw PreconditionError("family s4: k must be positive");
            if (f.i * f.i >= 2 * k + 1) throw PreconditionError("family s4: need i^2 < 2k + 1");
            const std::int64_t r2 = k * k + f.i * f.i;
            return {SqRadius(r2), SqRadius(r2 + 2 * k)};
        }
        case CodeFamily::Kind::s6: {
            if (k < 1 || k % 2 == 0) throw PreconditionError("family s6: k must be a positive odd integer, got k = " + std::to_string(k));
            if (k % 3 == 0) throw PreconditionError("family s6: k must not be divisible by 3, got k = " + std::to_string(k));
            const std::int64_t r = 2 * k * k + 1;
            return {SqRadius(r * r), SqRadius(r * r + 2 * r - 3)};
        }
        case CodeFamily::Kind::s8: {
            if (k < 18) throw PreconditionError("family s8: need k >= 18, got k = " + std::to_string(k));
            if (k % 16 != 2) throw PreconditionError("family s8: need k = 2 mod 16, got k = " + std::to_string(k));
            const std::int64_t L = (k / 2) * (k / 2) - 1;
            return {SqRadius(L * L + 8), SqRadius(L * L + 2 * L + 4)};
        }
    }
    throw PreconditionError("unknown family");
}

inline FamilyConstruction construct_family(const CodeFamily& f) {
    FamilyConstruction out;
    out.rp = family_radius_pair(f);
    const std::int64_t s = f.s();
    out.code = construct_diag_only(s);
    out.report.pattern = horizontal_pattern(out.rp);
    out.report.pattern_size = out.report.pattern.size();
    std::vector<char> seen(static_cast<std::size_t>(s), 0);
    bool distinct = true;
    for (const Point& p : out.report.pattern) {
        const std::int64_t r = positive_mod(p.y - p.x, s);
        out.report.diagonal_residues.push_back(r);
        if (seen[r]) distinct = false;
        seen[r] = 1;
    }
    out.report.residues_distinct = distinct && static_cast<std::int64_t>(out.report.pattern_size) == s;
    return out;
}

// ---------------------------------------------------------------------------
// Codes drawn in the figures.

struct NamedCode {
    RadiusPair rp;
    PeriodicCode code;
};

inline const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = {"fig1-sqrt5", "fig3-r1", "fig8-sqrt2", "fig10-sqrt5", "fig11-sqrt8"};
    return names;
}

inline NamedCode builtin_code(const std::string& name) {
    if (name == "fig1-sqrt5") {
        return {{SqRadius(5), SqRadius(5)}, PeriodicCode({4, 0}, {0, 4}, {{0, 1}, {2, 3}})};
    }
    if (name == "fig3-r1") {
        return {{SqRadius(1), SqRadius(2)}, PeriodicCode::from_predicate({2, 0}, {0, 6}, [](Point p) {
                    return positive_mod(p.x + static_cast<std::int64_t>(detail::floor_div(p.y + 1, 3)), 2) == 0;
                })};
    }
    if (name == "fig8-sqrt2") {
        return {{SqRadius(2), SqRadius(4)},
                PeriodicCode({3, 3}, {-3, 3}, {{5, -4}, {5, 0}, {4, -2}, {4, -1}, {3, -3}, {3, 1}})};
    }
    if (name == "fig10-sqrt5") {
        return {{SqRadius(5), SqRadius(8)}, PeriodicCode({3, 0}, {0, 3}, {{2, 1}, {0, 2}})};
    }
    if (name == "fig11-sqrt8") {
        return {{SqRadius(8), SqRadius(9)},
                PeriodicCode({14, 0}, {3, 3}, {{0, 0}, {1, 1}, {2, 2}, {7, 0}, {8, 1}, {9, 2}, {11, 0}, {12, 1}})};
    }
    throw PreconditionError("unknown builtin code '" + name + "'");
}

}  // namespace idcode
