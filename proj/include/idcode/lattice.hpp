#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <ostream>
#include <string>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace idcode {

/// A vertex of the integer lattice Z^2.
struct Point {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend constexpr bool operator==(const Point&, const Point&) = default;
    friend constexpr auto operator<=>(const Point&, const Point&) = default;

    friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Point operator-(Point a) { return {-a.x, -a.y}; }
    friend constexpr Point operator*(std::int64_t k, Point a) { return {k * a.x, k * a.y}; }
};

inline std::ostream& operator<<(std::ostream& os, const Point& p) {
    return os << '(' << p.x << ',' << p.y << ')';
}

inline std::string to_string(const Point& p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

/// Squared Euclidean distance.
constexpr std::int64_t sq_dist(Point u, Point v) {
    const std::int64_t dx = u.x - v.x;
    const std::int64_t dy = u.y - v.y;
    return dx * dx + dy * dy;
}

/// A squared radius r^2 as a nonnegative rational.
class SqRadius {
public:
    SqRadius() = default;
    SqRadius(std::int64_t value) : SqRadius(Rational(value)) {}  // NOLINT(google-explicit-constructor)
    SqRadius(const Rational& value) : value_(value) {             // NOLINT(google-explicit-constructor)
        if (value_.sign() < 0) throw PreconditionError("squared radius must be nonnegative, got " + value_.str());
    }
    SqRadius(std::int64_t num, std::int64_t den) : SqRadius(Rational(num, den)) {}

    const Rational& value() const { return value_; }
    std::int64_t num() const { return value_.num(); }
    std::int64_t den() const { return value_.den(); }

    /// den * d2 <= num, i.e. a point at squared distance d2 lies in the closed ball.
    bool admits(std::int64_t d2) const {
        return static_cast<i128>(value_.den()) * d2 <= static_cast<i128>(value_.num());
    }

    /// floor(r): the largest |coordinate| a ball point can have.
    std::int64_t floor_root() const { return floor_sqrt(value_); }

    /// Half-height of the ball column at horizontal offset dx: max |dy| with dx^2+dy^2 <= r^2, or -1.
    std::int64_t column_half_height(std::int64_t dx) const {
        Rational rest = value_ - Rational(dx) * Rational(dx);
        if (rest.sign() < 0) return -1;
        return floor_sqrt(rest);
    }

    std::string str() const { return value_.str(); }

    friend bool operator==(const SqRadius&, const SqRadius&) = default;
    friend auto operator<=>(const SqRadius& a, const SqRadius& b) { return a.value_ <=> b.value_; }

private:
    Rational value_{0};
};

/// The radii (r, r + Delta) through their squares r2 <= R2.
struct RadiusPair {
    SqRadius r2;
    SqRadius R2;

    RadiusPair() = default;
    RadiusPair(SqRadius small, SqRadius large) : r2(small), R2(large) {
        if (R2 < r2) throw PreconditionError("radius pair needs r2 <= R2, got r2=" + r2.str() + " R2=" + R2.str());
    }

    friend bool operator==(const RadiusPair&, const RadiusPair&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const RadiusPair& rp) {
    return os << "(r2=" << rp.r2.str() << ", R2=" << rp.R2.str() << ")";
}

/// Finite set of points kept sorted lexicographically and free of duplicates.
class PointSet {
public:
    using const_iterator = std::vector<Point>::const_iterator;

    PointSet() = default;
    PointSet(std::initializer_list<Point> pts) : points_(pts) { normalize(); }
    explicit PointSet(std::vector<Point> pts) : points_(std::move(pts)) { normalize(); }

    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    const_iterator begin() const { return points_.begin(); }
    const_iterator end() const { return points_.end(); }
    const Point& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<Point>& points() const { return points_; }

    bool contains(Point p) const { return std::binary_search(points_.begin(), points_.end(), p); }

    bool is_subset_of(const PointSet& other) const {
        return std::includes(other.points_.begin(), other.points_.end(), points_.begin(), points_.end());
    }

    bool intersects(const PointSet& other) const {
        auto a = points_.begin();
        auto b = other.points_.begin();
        while (a != points_.end() && b != other.points_.end()) {
            if (*a == *b) return true;
            if (*a < *b) ++a; else ++b;
        }
        return false;
    }

    PointSet translated(Point t) const {
        std::vector<Point> out;
        out.reserve(points_.size());
        for (const Point& p : points_) out.push_back(p + t);
        PointSet s;
        s.points_ = std::move(out);  // translation preserves lexicographic order
        return s;
    }

    friend bool operator==(const PointSet&, const PointSet&) = default;
    friend auto operator<=>(const PointSet& a, const PointSet& b) { return a.points_ <=> b.points_; }

private:
    void normalize() {
        std::sort(points_.begin(), points_.end());
        points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
    }

    std::vector<Point> points_;
};

inline PointSet set_union(const PointSet& a, const PointSet& b) {
    std::vector<Point> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return PointSet(std::move(out));
}

inline PointSet set_difference(const PointSet& a, const PointSet& b) {
    std::vector<Point> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return PointSet(std::move(out));
}

/// All lattice points within the closed ball of squared radius r2 around center.
inline PointSet ball(Point center, const SqRadius& r2) {
    std::vector<Point> pts;
    const std::int64_t reach = r2.floor_root();
    for (std::int64_t dx = -reach; dx <= reach; ++dx) {
        const std::int64_t h = r2.column_half_height(dx);
        for (std::int64_t dy = -h; dy <= h; ++dy) pts.push_back({center.x + dx, center.y + dy});
    }
    return PointSet(std::move(pts));
}

inline bool in_ball(Point center, const SqRadius& r2, Point p) { return r2.admits(sq_dist(center, p)); }

// ---------------------------------------------------------------------------
// The dihedral group of the square acting on Z^2 around the origin.

/// Integer 2x2 matrix acting as p -> (a*x + b*y, c*x + d*y).
struct Symmetry {
    int a, b, c, d;
    constexpr Point operator()(Point p) const { return {a * p.x + b * p.y, c * p.x + d * p.y}; }
    constexpr Symmetry then(const Symmetry& s) const {
        // (s o this)
        return {s.a * a + s.b * c, s.a * b + s.b * d, s.c * a + s.d * c, s.c * b + s.d * d};
    }
    friend constexpr bool operator==(const Symmetry&, const Symmetry&) = default;
};

/// identity, rotations by 90/180/270 degrees, then the four reflections.
inline constexpr std::array<Symmetry, 8> kD4 = {{
    {1, 0, 0, 1},
    {0, -1, 1, 0},
    {-1, 0, 0, -1},
    {0, 1, -1, 0},
    {-1, 0, 0, 1},
    {1, 0, 0, -1},
    {0, 1, 1, 0},
    {0, -1, -1, 0},
}};

inline PointSet apply(const Symmetry& s, const PointSet& set) {
    std::vector<Point> out;
    out.reserve(set.size());
    for (const Point& p : set) out.push_back(s(p));
    return PointSet(std::move(out));
}

/// Images of s under the 8 symmetries of the square, in kD4 order.
inline std::vector<PointSet> d4_images(const PointSet& s) {
    std::vector<PointSet> out;
    out.reserve(kD4.size());
    for (const Symmetry& g : kD4) out.push_back(apply(g, s));
    return out;
}

/// Bounding box helper.
struct Box {
    std::int64_t min_x, min_y, max_x, max_y;
    std::int64_t width() const { return max_x - min_x + 1; }
    std::int64_t height() const { return max_y - min_y + 1; }
    bool contains(Point p) const { return p.x >= min_x && p.x <= max_x && p.y >= min_y && p.y <= max_y; }
    Box expanded(std::int64_t m) const { return {min_x - m, min_y - m, max_x + m, max_y + m}; }
};

inline Box bounding_box(const PointSet& s) {
    if (s.empty()) throw PreconditionError("bounding box of an empty set");
    Box b{s[0].x, s[0].y, s[0].x, s[0].y};
    for (const Point& p : s) {
        b.min_x = std::min(b.min_x, p.x);
        b.max_x = std::max(b.max_x, p.x);
        b.min_y = std::min(b.min_y, p.y);
        b.max_y = std::max(b.max_y, p.y);
    }
    return b;
}

/// Translate s so that its bounding box starts at the origin.
inline PointSet normalized_to_origin(const PointSet& s) {
    if (s.empty()) return s;
    Box b = bounding_box(s);
    return s.translated({-b.min_x, -b.min_y});
}

}  // namespace idcode
