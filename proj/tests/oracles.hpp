#pragma once

// Slow, direct reference implementations used to cross-check the library.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "idcode/idcode.hpp"

namespace oracle {

using idcode::Point;
using idcode::PeriodicCode;
using idcode::PointSet;
using idcode::RadiusPair;

/// Pattern by scanning a square window and testing the definition point by point.
inline std::vector<Point> pattern(Point u, Point v, std::int64_t r2, std::int64_t R2) {
    std::vector<Point> out;
    const std::int64_t reach = 2 + static_cast<std::int64_t>(std::sqrt(static_cast<double>(R2))) +
                               std::max(std::abs(u.x - v.x), std::abs(u.y - v.y));
    for (std::int64_t x = std::min(u.x, v.x) - reach; x <= std::max(u.x, v.x) + reach; ++x) {
        for (std::int64_t y = std::min(u.y, v.y) - reach; y <= std::max(u.y, v.y) + reach; ++y) {
            const Point p{x, y};
            const auto du = idcode::sq_dist(p, u), dv = idcode::sq_dist(p, v);
            if ((du <= r2 && dv > R2) || (dv <= r2 && du > R2)) out.push_back(p);
        }
    }
    return out;
}

/// Largest k such that every class of y - x mod k meets s, trying every k up to |s| + 1.
inline std::int64_t max_mod_diagonal(const std::vector<Point>& s) {
    std::int64_t best = 1;
    for (std::int64_t k = 1; k <= static_cast<std::int64_t>(s.size()); ++k) {
        std::vector<bool> seen(static_cast<std::size_t>(k), false);
        for (const Point& p : s) seen[static_cast<std::size_t>(((p.y - p.x) % k + k) % k)] = true;
        bool all = true;
        for (bool b : seen) all = all && b;
        if (all) best = k;
    }
    return best;
}

/// h(x) <= 1 for integer radii, by integer algebra: sqrt a <= 1 + sqrt b.
inline bool h_at_most_one(std::int64_t r2, std::int64_t R2, std::int64_t x) {
    const std::int64_t a = r2 - x * x;
    const std::int64_t b = R2 - (x + 1) * (x + 1);
    const std::int64_t c = a - 1 - b;  // a <= 1 + b + 2 sqrt b  <=>  c <= 2 sqrt b
    if (c <= 0) return true;
    return c * c <= 4 * b;
}

/// x1 by direct scan with the integer predicate.
inline std::int64_t x1(std::int64_t r2, std::int64_t R2) {
    std::int64_t end = 0;
    while ((end + 1) * (end + 1) <= R2) ++end;
    end -= 1;
    std::int64_t best = -1;
    for (std::int64_t x = 0; x <= end; ++x) {
        if (h_at_most_one(r2, R2, x)) best = x;
        else break;
    }
    return best;
}

struct NaiveFailure {
    bool domination = false;
    Point u;
    std::optional<Point> v;
};

/// Identifying check by explicit sets: for each u in the fundamental domain, balls and
/// patterns are materialised and intersected with the code; partners v range over a window
/// of twice the cutoff radius, in lexicographic order.
inline std::optional<NaiveFailure> naive_verify(const PeriodicCode& code, const RadiusPair& rp) {
    const std::int64_t cutoff = idcode::separation_cutoff_sq(rp);
    const std::int64_t reach = 2 * (static_cast<std::int64_t>(std::sqrt(static_cast<double>(cutoff))) + 1);
    const auto domain = code.fundamental_domain();
    auto hits = [&](const PointSet& s) {
        for (const Point& p : s) if (code.contains(p)) return true;
        return false;
    };
    for (const Point& u : domain) {
        if (!hits(idcode::ball(u, rp.r2))) return NaiveFailure{true, u, std::nullopt};
    }
    for (const Point& u : domain) {
        for (std::int64_t dx = -reach; dx <= reach; ++dx) {
            for (std::int64_t dy = -reach; dy <= reach; ++dy) {
                const Point v{u.x + dx, u.y + dy};
                if (v == u) continue;
                if (!hits(idcode::sym_diff_pattern(u, v, rp))) return NaiveFailure{false, u, v};
            }
        }
    }
    return std::nullopt;
}

/// Random periodic code with a small diagonal lattice and random residues.
inline PeriodicCode random_code(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> side(1, 5), shear(0, 4), coin(0, 2);
    const std::int64_t a = side(rng), c = side(rng);
    const std::int64_t b = shear(rng) % a;
    std::vector<Point> res;
    for (std::int64_t y = 0; y < c; ++y) {
        for (std::int64_t x = 0; x < a; ++x) {
            if (coin(rng) != 0) res.push_back({x, y});
        }
    }
    if (res.empty()) res.push_back({0, 0});
    return PeriodicCode({a, 0}, {b, c}, res);
}

}  // namespace oracle
