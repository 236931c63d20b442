#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "error.hpp"
#include "lattice.hpp"
#include "patterns.hpp"
#include "rational.hpp"

namespace idcode {

/// Period lattice in row Hermite normal form: generated by (a, 0) and (b, c) with a, c > 0 and 0 <= b < a.
/// The fundamental domain is [0, a) x [0, c).
struct PeriodLattice {
    std::int64_t a = 1;
    std::int64_t b = 0;
    std::int64_t c = 1;

    std::int64_t det() const { return a * c; }

    /// Canonical representative of p in the fundamental domain.
    Point reduce(Point p) const {
        const auto q = static_cast<std::int64_t>(detail::floor_div(p.y, c));
        const std::int64_t x = p.x - q * b;
        const std::int64_t y = p.y - q * c;
        return {positive_mod(x, a), y};
    }

    std::size_t cell_index(Point reduced) const { return static_cast<std::size_t>(reduced.y * a + reduced.x); }

    Point cell_at(std::size_t index) const {
        const auto i = static_cast<std::int64_t>(index);
        return {i % a, i / a};
    }

    friend bool operator==(const PeriodLattice&, const PeriodLattice&) = default;
};

/// Hermite normal form of the lattice spanned by b1 and b2. Throws if they are dependent.
inline PeriodLattice hermite_form(Point b1, Point b2) {
    const i128 det = static_cast<i128>(b1.x) * b2.y - static_cast<i128>(b1.y) * b2.x;
    if (det == 0) {
        throw PreconditionError("basis vectors " + to_string(b1) + " and " + to_string(b2) + " are linearly dependent");
    }
    // Extended Euclid on the y components: s*b1.y + t*b2.y = g.
    i128 old_r = b1.y, r = b2.y, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        const i128 q = old_r / r;
        std::tie(old_r, r) = std::pair<i128, i128>{r, old_r - q * r};
        std::tie(old_s, s) = std::pair<i128, i128>{s, old_s - q * s};
        std::tie(old_t, t) = std::pair<i128, i128>{t, old_t - q * t};
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    const i128 g = old_r;
    const i128 vx = old_s * b1.x + old_t * b2.x;
    const i128 abs_det = det < 0 ? -det : det;
    PeriodLattice lat;
    lat.c = detail::narrow(g);
    lat.a = detail::narrow(abs_det / g);
    lat.b = detail::narrow(((vx % lat.a) + lat.a) % lat.a);
    return lat;
}

/// An infinite periodic subset of Z^2: a period lattice plus one representative per occupied class.
class PeriodicCode {
public:
    PeriodicCode() = default;

    PeriodicCode(Point b1, Point b2, const std::vector<Point>& residues)
        : lattice_(hermite_form(b1, b2)), occupied_(static_cast<std::size_t>(lattice_.det()), 0) {
        for (const Point& p : residues) {
            const Point r = lattice_.reduce(p);
            char& slot = occupied_[lattice_.cell_index(r)];
            if (slot) {
                throw PreconditionError("residues " + to_string(p) + " and an earlier point coincide modulo the lattice");
            }
            slot = 1;
        }
        std::vector<Point> canonical;
        for (std::size_t i = 0; i < occupied_.size(); ++i) {
            if (occupied_[i]) canonical.push_back(lattice_.cell_at(i));
        }
        residues_ = PointSet(std::move(canonical));
    }

    /// Builds the code {p : member(p)} with the given period lattice.
    template <typename Pred>
    static PeriodicCode from_predicate(Point b1, Point b2, Pred&& member) {
        const PeriodLattice lat = hermite_form(b1, b2);
        std::vector<Point> pts;
        for (std::int64_t y = 0; y < lat.c; ++y) {
            for (std::int64_t x = 0; x < lat.a; ++x) {
                if (member(Point{x, y})) pts.push_back({x, y});
            }
        }
        return PeriodicCode(b1, b2, pts);
    }

    const PeriodLattice& lattice() const { return lattice_; }
    Point basis1() const { return {lattice_.a, 0}; }
    Point basis2() const { return {lattice_.b, lattice_.c}; }

    /// Canonical residues: one per occupied class, inside the fundamental domain, sorted.
    const PointSet& residues() const { return residues_; }

    bool contains(Point p) const { return occupied_[lattice_.cell_index(lattice_.reduce(p))] != 0; }

    /// |residues| / |det|.
    Rational density() const {
        return Rational(static_cast<std::int64_t>(residues_.size()), lattice_.det());
    }

    /// Points of the fundamental domain in lexicographic order.
    std::vector<Point> fundamental_domain() const {
        std::vector<Point> out;
        out.reserve(static_cast<std::size_t>(lattice_.det()));
        for (std::size_t i = 0; i < occupied_.size(); ++i) out.push_back(lattice_.cell_at(i));
        std::sort(out.begin(), out.end());
        return out;
    }

    friend bool operator==(const PeriodicCode& x, const PeriodicCode& y) {
        return x.lattice_ == y.lattice_ && x.residues_ == y.residues_;
    }

private:
    PeriodLattice lattice_;
    std::vector<char> occupied_ = std::vector<char>(1, 0);
    PointSet residues_;
};

inline Rational density(const PeriodicCode& c) { return c.density(); }
inline bool contains(const PeriodicCode& c, Point p) { return c.contains(p); }

/// Points of the code inside a rectangle, row by row.
inline PointSet code_points_in(const PeriodicCode& code, const Box& box) {
    std::vector<Point> out;
    for (std::int64_t y = box.min_y; y <= box.max_y; ++y) {
        for (std::int64_t x = box.min_x; x <= box.max_x; ++x) {
            if (code.contains({x, y})) out.push_back({x, y});
        }
    }
    return PointSet(std::move(out));
}

}  // namespace idcode
