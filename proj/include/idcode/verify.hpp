#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "codes.hpp"
#include "error.hpp"
#include "lattice.hpp"
#include "patterns.hpp"
#include "rational.hpp"

namespace idcode {

namespace detail {

/// Runs body(i) for i in [0, n) on up to hardware_concurrency threads.
template <typename Body>
void parallel_for(std::size_t n, Body&& body) {
    const std::size_t workers = std::min<std::size_t>(n, std::max(1u, std::thread::hardware_concurrency()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

/// Half-heights of the columns of a ball, indexed by dx + reach.
struct ColumnTable {
    std::int64_t reach = -1;
    std::vector<std::int64_t> half;

    explicit ColumnTable(const SqRadius& r2) : reach(r2.floor_root()) {
        for (std::int64_t dx = -reach; dx <= reach; ++dx) half.push_back(r2.column_half_height(dx));
    }
    /// -1 when the column is empty.
    std::int64_t at(std::int64_t dx) const {
        if (dx < -reach || dx > reach) return -1;
        return half[static_cast<std::size_t>(dx + reach)];
    }
};

}  // namespace detail

/// Squared-distance bound beyond which S(u,v) contains a whole ball: r2 + R2 + 2 ceil(sqrt(r2 R2)).
inline std::int64_t separation_cutoff_sq(const RadiusPair& rp) {
    const Rational prod = rp.r2.value() * rp.R2.value();
    const Rational sum = rp.r2.value() + rp.R2.value() + Rational(2 * ceil_sqrt(prod));
    return sum.ceil();
}

struct VerificationFailure {
    enum class Kind { domination, separation };
    Kind kind = Kind::domination;
    Point u;
    std::optional<Point> v;
};

inline const char* to_string(VerificationFailure::Kind k) {
    return k == VerificationFailure::Kind::domination ? "domination" : "separation";
}

struct VerificationReport {
    bool ok = false;
    std::optional<VerificationFailure> failure;
    std::uint64_t pairs_checked = 0;
    std::int64_t cutoff_sq = 0;
};

/// True iff B_r(center) contains a code vertex.
inline bool ball_hits(const PeriodicCode& code, const detail::ColumnTable& small, Point center) {
    for (std::int64_t dx = -small.reach; dx <= small.reach; ++dx) {
        const std::int64_t h = small.at(dx);
        for (std::int64_t dy = -h; dy <= h; ++dy) {
            if (code.contains({center.x + dx, center.y + dy})) return true;
        }
    }
    return false;
}

namespace detail {

// Does (B_r(a) \ B_R(b)) contain a code vertex? Each column of B_r(a) minus the
// column of B_R(b) is at most two intervals, scanned with early exit.
inline bool half_pattern_hits(const PeriodicCode& code, const ColumnTable& small, const ColumnTable& large,
                              Point a, Point b) {
    for (std::int64_t dx = -small.reach; dx <= small.reach; ++dx) {
        const std::int64_t x = a.x + dx;
        const std::int64_t lo = a.y - small.at(dx);
        const std::int64_t hi = a.y + small.at(dx);
        const std::int64_t H = large.at(x - b.x);
        auto scan = [&](std::int64_t from, std::int64_t to) {
            for (std::int64_t y = from; y <= to; ++y) {
                if (code.contains({x, y})) return true;
            }
            return false;
        };
        if (H < 0) {
            if (scan(lo, hi)) return true;
            continue;
        }
        if (scan(lo, std::min(hi, b.y - H - 1))) return true;
        if (scan(std::max(lo, b.y + H + 1), hi)) return true;
    }
    return false;
}

}  // namespace detail

/// True iff S(u,v) contains a code vertex.
inline bool pattern_hits(const PeriodicCode& code, const RadiusPair& rp, Point u, Point v) {
    const detail::ColumnTable small(rp.r2), large(rp.R2);
    return detail::half_pattern_hits(code, small, large, u, v) || detail::half_pattern_hits(code, small, large, v, u);
}

/// Decides whether code is (r, Delta)-identifying. Domination is checked on one fundamental
/// domain, separation for every u there and every v != u with sq_dist(u,v) <= cutoff.
/// The reported counterexample is the least one: domination failures first, then (u, v) lexicographically.
inline VerificationReport verify_identifying(const PeriodicCode& code, const RadiusPair& rp) {
    if (code.residues().empty()) throw PreconditionError("verify_identifying: the code is empty");
    if (!exists_code(rp)) {
        throw PreconditionError("verify_identifying: no identifying code exists for " + rp.r2.str() + "/" + rp.R2.str());
    }
    VerificationReport report;
    report.cutoff_sq = separation_cutoff_sq(rp);
    const std::vector<Point> domain = code.fundamental_domain();
    const detail::ColumnTable small(rp.r2), large(rp.R2);

    for (const Point& u : domain) {
        if (!ball_hits(code, small, u)) {
            report.failure = VerificationFailure{VerificationFailure::Kind::domination, u, std::nullopt};
            return report;
        }
    }

    // Offsets v - u in lexicographic order.
    std::vector<Point> offsets;
    const std::int64_t reach = isqrt64(report.cutoff_sq);
    for (std::int64_t dx = -reach; dx <= reach; ++dx) {
        for (std::int64_t dy = -reach; dy <= reach; ++dy) {
            const Point d{dx, dy};
            if (d != Point{0, 0} && dx * dx + dy * dy <= report.cutoff_sq) offsets.push_back(d);
        }
    }

    std::vector<std::optional<Point>> first_bad(domain.size());
    std::vector<std::uint64_t> checked(domain.size(), 0);
    detail::parallel_for(domain.size(), [&](std::size_t i) {
        const Point u = domain[i];
        for (const Point& d : offsets) {
            const Point v = u + d;
            ++checked[i];
            if (!detail::half_pattern_hits(code, small, large, u, v) &&
                !detail::half_pattern_hits(code, small, large, v, u)) {
                first_bad[i] = v;
                return;
            }
        }
    });
    for (std::size_t i = 0; i < domain.size(); ++i) {
        report.pairs_checked += checked[i];
        if (first_bad[i] && !report.failure) {
            report.failure = VerificationFailure{VerificationFailure::Kind::separation, domain[i], first_bad[i]};
        }
    }
    report.ok = !report.failure.has_value();
    return report;
}

// ---------------------------------------------------------------------------
// Decoding alarm sets.

/// All vertices u with B_r(u) ∩ C ⊆ alarms ⊆ B_R(u) ∩ C.
inline PointSet decode(const PeriodicCode& code, const RadiusPair& rp, const PointSet& alarms) {
    for (const Point& a : alarms) {
        if (!code.contains(a)) throw PreconditionError("decode: alarm " + to_string(a) + " is not a code vertex");
    }
    if (alarms.empty()) return {};
    std::vector<Point> out;
    const detail::ColumnTable small(rp.r2);
    for (const Point& u : ball(alarms[0], rp.R2)) {
        bool inside_all = true;
        for (const Point& a : alarms) {
            if (!in_ball(u, rp.R2, a)) {
                inside_all = false;
                break;
            }
        }
        if (!inside_all) continue;
        bool covered = true;
        for (std::int64_t dx = -small.reach; dx <= small.reach && covered; ++dx) {
            const std::int64_t h = small.at(dx);
            for (std::int64_t dy = -h; dy <= h; ++dy) {
                const Point p{u.x + dx, u.y + dy};
                if (code.contains(p) && !alarms.contains(p)) {
                    covered = false;
                    break;
                }
            }
        }
        if (covered) out.push_back(u);
    }
    return PointSet(std::move(out));
}

/// PCG32 (XSH-RR output on a 64-bit linear congruential state).
class Pcg32 {
public:
    explicit Pcg32(std::uint64_t seed, std::uint64_t stream = 0xda3e39cb94b95bdbULL) {
        inc_ = (stream << 1u) | 1u;
        next();
        state_ += seed;
        next();
    }

    std::uint32_t next() {
        const std::uint64_t old = state_;
        state_ = old * 6364136223846793005ULL + inc_;
        const auto xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
        const auto rot = static_cast<std::uint32_t>(old >> 59u);
        return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
    }

    /// Uniform in [0, bound) by rejection.
    std::uint32_t below(std::uint32_t bound) {
        const std::uint32_t threshold = (0u - bound) % bound;
        for (;;) {
            const std::uint32_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

private:
    std::uint64_t state_ = 0;
    std::uint64_t inc_ = 0;
};

struct SimulationReport {
    std::uint64_t trials = 0;
    std::uint64_t unique_correct = 0;
    std::uint64_t ambiguous = 0;
    std::uint64_t wrong = 0;
};

/// Seeded fault-localization trials. Each trial draws a fault u uniformly from [-100,100]^2;
/// every sensor c with u in B_r(c) alarms, and every sensor with u in B_R(c) \ B_r(c) alarms
/// with probability 1/2 (sensors visited in lexicographic order). The alarm set is then decoded.
inline SimulationReport simulate_trials(const PeriodicCode& code, const RadiusPair& rp, std::uint64_t trials,
                                        std::uint64_t seed) {
    SimulationReport rep;
    Pcg32 rng(seed);
    const detail::ColumnTable large(rp.R2);
    for (std::uint64_t t = 0; t < trials; ++t) {
        const Point u{static_cast<std::int64_t>(rng.below(201)) - 100, static_cast<std::int64_t>(rng.below(201)) - 100};
        std::vector<Point> alarms;
        for (std::int64_t dx = -large.reach; dx <= large.reach; ++dx) {
            const std::int64_t h = large.at(dx);
            for (std::int64_t dy = -h; dy <= h; ++dy) {
                const Point c{u.x + dx, u.y + dy};
                if (!code.contains(c)) continue;
                if (in_ball(c, rp.r2, u) || (rng.next() >> 31u) != 0) alarms.push_back(c);
            }
        }
        const PointSet result = decode(code, rp, PointSet(std::move(alarms)));
        ++rep.trials;
        if (result.size() == 1 && result[0] == u) ++rep.unique_correct;
        else if (result.size() > 1) ++rep.ambiguous;
        else ++rep.wrong;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Structural lemmas, checked per instance.

/// For every pair on one horizontal or vertical line with 2 <= d <= min(dmax, 4 x0 + 1), some unit
/// pair (u', v') has S(u', v') ⊆ S(u, v).
inline bool check_lemma_dist(const RadiusPair& rp, std::int64_t dmax) {
    if (!exists_code(rp)) throw PreconditionError("check_lemma_dist: no code exists for " + rp.r2.str() + "/" + rp.R2.str());
    const ColumnProfile prof = column_profile(rp);
    const std::int64_t bound = std::min(dmax, 4 * prof.x0 + 1);
    for (std::int64_t d = 2; d <= bound; ++d) {
        for (const Point dir : {Point{1, 0}, Point{0, 1}}) {
            const Point u{0, 0};
            const Point v = d * dir;
            const PointSet target = sym_diff_pattern(u, v, rp);
            bool found = false;
            for (std::int64_t i = -1; i <= d && !found; ++i) {
                for (std::int64_t j = -1; j <= 1 && !found; ++j) {
                    const Point w = i * dir + j * Point{dir.y, dir.x};
                    for (const Point e : {Point{1, 0}, Point{0, 1}}) {
                        if (sym_diff_pattern(w, w + e, rp).is_subset_of(target)) {
                            found = true;
                            break;
                        }
                    }
                }
            }
            if (!found) return false;
        }
    }
    return true;
}

class LemmaPreconditionError : public PreconditionError {
public:
    enum class Kind { modulus_exceeds_ball, pattern_misses_residue, no_code };
    LemmaPreconditionError(Kind kind, const std::string& what) : PreconditionError(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// For every pair on one horizontal or vertical line, up to the separation cutoff, S(u,v)
/// meets every diagonal line residue class modulo s.
inline bool check_lemma_line(const RadiusPair& rp, std::int64_t s) {
    using K = LemmaPreconditionError::Kind;
    if (!exists_code(rp)) throw LemmaPreconditionError(K::no_code, "check_lemma_line: no code exists");
    const std::int64_t diag = diag_ball_formula(rp.r2);
    if (s < 1 || s > diag) {
        throw LemmaPreconditionError(K::modulus_exceeds_ball,
                                     "check_lemma_line: s = " + std::to_string(s) + " exceeds diag(B_r) = " + std::to_string(diag));
    }
    if (!lines_mod_check(horizontal_pattern(rp), s, LineDirection::diagonal)) {
        throw LemmaPreconditionError(K::pattern_misses_residue,
                                     "check_lemma_line: the horizontal pattern misses a diagonal class modulo " + std::to_string(s));
    }
    const std::int64_t reach = isqrt64(separation_cutoff_sq(rp));
    for (std::int64_t d = 1; d <= reach; ++d) {
        for (const Point dir : {Point{1, 0}, Point{0, 1}}) {
            if (!lines_mod_check(sym_diff_pattern({0, 0}, d * dir, rp), s, LineDirection::diagonal)) return false;
        }
    }
    return true;
}

struct MethodConditions {
    bool a = false;  // horizontal pattern meets every diagonal class mod s
    bool b = false;  // diagonal pattern meets every horizontal class mod t
    bool c = false;  // floor(r)^2 + 4 <= r^2 < (floor(r) + 1)^2 and r is irrational
};

inline MethodConditions check_method_conditions(const RadiusPair& rp, std::int64_t s, std::int64_t t) {
    if (!exists_code(rp)) throw PreconditionError("check_method_conditions: no code exists");
    MethodConditions out;
    out.a = lines_mod_check(horizontal_pattern(rp), s, LineDirection::diagonal);
    out.b = lines_mod_check(diagonal_pattern(rp), t, LineDirection::horizontal);
    const std::int64_t f = rp.r2.floor_root();
    const Rational& r2 = rp.r2.value();
    out.c = r2 >= Rational(f * f + 4) && r2 < Rational((f + 1) * (f + 1)) && !is_rational_square(r2);
    return out;
}

/// The part of S((0,0),(-1,-1)) with x, y >= 0 meets every diagonal and every antidiagonal class mod s.
inline bool check_optimal_premise(const RadiusPair& rp, std::int64_t s) {
    if (!exists_code(rp)) throw PreconditionError("check_optimal_premise: no code exists");
    std::vector<Point> quadrant;
    for (const Point& p : diagonal_pattern(rp)) {
        if (p.x >= 0 && p.y >= 0) quadrant.push_back(p);
    }
    const PointSet q(std::move(quadrant));
    if (q.empty()) return false;
    return lines_mod_check(q, s, LineDirection::diagonal) && lines_mod_check(q, s, LineDirection::antidiagonal);
}

}  // namespace idcode
