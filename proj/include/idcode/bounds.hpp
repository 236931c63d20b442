#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "codes.hpp"
#include "constructions.hpp"
#include "error.hpp"
#include "lattice.hpp"
#include "patterns.hpp"
#include "rational.hpp"
#include "verify.hpp"

namespace idcode {

enum class CertificateKind { pattern, frame };
enum class Provenance { machine_proved, paper_asserted };

inline const char* to_string(CertificateKind k) { return k == CertificateKind::pattern ? "pattern" : "frame"; }
inline const char* to_string(Provenance p) {
    return p == Provenance::machine_proved ? "machine-proved" : "paper-asserted";
}

/// A density lower bound m / |witness| where every translate of the witness meets the code m times.
struct Certificate {
    Rational bound;
    std::int64_t count = 0;
    PointSet witness;
    CertificateKind kind = CertificateKind::pattern;
    Provenance provenance = Provenance::machine_proved;
};

/// Text form with the witness as "point x y" lines.
inline std::string to_text(const Certificate& c) {
    std::string out = "certificate " + std::string(to_string(c.kind)) + " " + to_string(c.provenance) + "\n";
    out += "bound " + c.bound.str() + " = " + std::to_string(c.count) + "/" + std::to_string(c.witness.size()) + "\n";
    for (const Point& p : c.witness) out += "point " + std::to_string(p.x) + " " + std::to_string(p.y) + "\n";
    return out;
}

/// Every translate of the horizontal pattern meets a code, hence density >= 1/|S|.
inline Certificate pattern_lower_bound(const RadiusPair& rp) {
    const PointSet s = horizontal_pattern(rp);
    if (s.empty()) throw PreconditionError("pattern_lower_bound: no code exists for " + rp.r2.str() + "/" + rp.R2.str());
    return {Rational(1, static_cast<std::int64_t>(s.size())), 1, s, CertificateKind::pattern, Provenance::machine_proved};
}

/// min over translates v + s of |(v + s) ∩ C|, scanning one fundamental domain.
inline std::int64_t translate_min_count(const PeriodicCode& code, const PointSet& s) {
    if (s.empty()) throw PreconditionError("translate_min_count of an empty set");
    std::int64_t best = static_cast<std::int64_t>(s.size());
    for (const Point& v : code.fundamental_domain()) {
        std::int64_t n = 0;
        for (const Point& p : s) n += code.contains(p + v) ? 1 : 0;
        best = std::min(best, n);
    }
    return best;
}

// ---------------------------------------------------------------------------
// Frames.

struct FrameShape {
    std::string name;
    PointSet cells;
};

/// Boundary of the n x n square [0, n-1]^2.
inline PointSet square_ring(std::int64_t n) {
    std::vector<Point> pts;
    for (std::int64_t x = 0; x < n; ++x) {
        for (std::int64_t y = 0; y < n; ++y) {
            if (x == 0 || y == 0 || x == n - 1 || y == n - 1) pts.push_back({x, y});
        }
    }
    return PointSet(std::move(pts));
}

inline const std::vector<std::string>& frame_names() {
    static const std::vector<std::string> names = {"F12", "F20", "F14"};
    return names;
}

inline FrameShape frame_by_name(const std::string& name) {
    if (name == "F12") return {name, square_ring(4)};
    if (name == "F20") return {name, square_ring(6)};
    if (name == "F14") {
        std::vector<Point> pts;
        for (std::int64_t y = 0; y <= 6; ++y) {
            pts.push_back({0, y});
            pts.push_back({5, y});
        }
        return {name, PointSet(std::move(pts))};
    }
    throw PreconditionError("unknown frame '" + name + "' (expected F12, F20 or F14)");
}

inline std::int64_t default_margin(const RadiusPair& rp) { return ceil_sqrt(rp.R2.value()) + 2; }

namespace detail {

/// Every set that an identifying code must meet and that lies inside the box:
/// balls B_r(w) and patterns S(u, v), without duplicates.
inline std::vector<PointSet> window_constraints(const RadiusPair& rp, const Box& window) {
    std::vector<PointSet> out;
    const PointSet unit_ball = ball({0, 0}, rp.r2);
    auto place = [&](const PointSet& shape) {
        const Box b = bounding_box(shape);
        for (std::int64_t x = window.min_x - b.min_x; x <= window.max_x - b.max_x; ++x) {
            for (std::int64_t y = window.min_y - b.min_y; y <= window.max_y - b.max_y; ++y) {
                out.push_back(shape.translated({x, y}));
            }
        }
    };
    place(unit_ball);
    const std::int64_t cutoff = separation_cutoff_sq(rp);
    const std::int64_t reach = isqrt64(cutoff);
    for (std::int64_t dx = -reach; dx <= reach; ++dx) {
        for (std::int64_t dy = -reach; dy <= reach; ++dy) {
            const Point d{dx, dy};
            if (d == Point{0, 0} || dx * dx + dy * dy > cutoff) continue;
            // S(u, u+d) = S(u+d, u): keep one orientation of each unordered pair.
            if (d < Point{0, 0}) continue;
            const PointSet s = sym_diff_pattern({0, 0}, d, rp);
            const Box b = bounding_box(s);
            if (b.width() > window.width() || b.height() > window.height()) continue;
            place(s);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Removes sets that contain another set of the family (they are implied).
inline void drop_supersets(std::vector<std::vector<int>>& sets) {
    for (auto& s : sets) std::sort(s.begin(), s.end());
    std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<std::vector<int>> kept;
    for (const auto& s : sets) {
        bool implied = false;
        for (const auto& k : kept) {
            if (std::includes(s.begin(), s.end(), k.begin(), k.end())) {
                implied = true;
                break;
            }
        }
        if (!implied) kept.push_back(s);
    }
    sets = std::move(kept);
}

/// Search over n boolean cells for an assignment that meets every hitting set while keeping
/// each budgeted group at or below its cap. Depth first, branching on the unmet hitting set
/// with the fewest open cells; unassigned cells end as 0.
class HittingSearch {
public:
    struct Budget {
        std::vector<int> cells;
        std::int64_t cap = 0;
    };

    HittingSearch(int n, std::vector<std::vector<int>> sets, std::vector<Budget> budgets)
        : n_(n), sets_(std::move(sets)), budgets_(std::move(budgets)), state_(static_cast<std::size_t>(n), 0),
          cell_budgets_(static_cast<std::size_t>(n)) {
        for (std::size_t b = 0; b < budgets_.size(); ++b) {
            for (int c : budgets_[b].cells) cell_budgets_[static_cast<std::size_t>(c)].push_back(b);
        }
        used_.assign(budgets_.size(), 0);
    }

    /// Least number of included cells over all valid assignments, or nullopt if none exists.
    std::optional<std::int64_t> minimum() {
        best_ = INT64_MAX;
        minimise(0);
        if (best_ == INT64_MAX) return std::nullopt;
        return best_;
    }

    /// A valid assignment (included cells), or nullopt.
    std::optional<std::vector<int>> find() {
        if (!search()) return std::nullopt;
        std::vector<int> out;
        for (int c = 0; c < n_; ++c) {
            if (state_[static_cast<std::size_t>(c)] == 1) out.push_back(c);
        }
        return out;
    }

private:
    // state: 0 open, 1 included, -1 excluded
    bool include(int c) {
        state_[static_cast<std::size_t>(c)] = 1;
        bool ok = true;
        for (std::size_t b : cell_budgets_[static_cast<std::size_t>(c)]) {
            if (++used_[b] > budgets_[b].cap) ok = false;
        }
        return ok;
    }
    void undo_include(int c) {
        state_[static_cast<std::size_t>(c)] = 0;
        for (std::size_t b : cell_budgets_[static_cast<std::size_t>(c)]) --used_[b];
    }

    // Index of the unmet set with fewest open cells; -1 if all are met; -2 if one is dead.
    int pick(std::size_t& open_count) const {
        int best = -1;
        open_count = SIZE_MAX;
        for (std::size_t i = 0; i < sets_.size(); ++i) {
            std::size_t open = 0;
            bool hit = false;
            for (int c : sets_[i]) {
                const auto s = state_[static_cast<std::size_t>(c)];
                if (s == 1) {
                    hit = true;
                    break;
                }
                if (s == 0) ++open;
            }
            if (hit) continue;
            if (open == 0) return -2;
            if (open < open_count) {
                open_count = open;
                best = static_cast<int>(i);
            }
        }
        return best;
    }

    bool search() {
        std::size_t open = 0;
        const int i = pick(open);
        if (i == -1) return true;
        if (i == -2) return false;
        std::vector<int> excluded;
        for (int c : sets_[static_cast<std::size_t>(i)]) {
            if (state_[static_cast<std::size_t>(c)] != 0) continue;
            if (include(c) && search()) return true;
            undo_include(c);
            state_[static_cast<std::size_t>(c)] = -1;
            excluded.push_back(c);
        }
        for (int c : excluded) state_[static_cast<std::size_t>(c)] = 0;
        return false;
    }

    void minimise(std::int64_t count) {
        if (count >= best_) return;
        std::size_t open = 0;
        const int i = pick(open);
        if (i == -1) {
            best_ = count;
            return;
        }
        if (i == -2 || count + 1 >= best_) return;
        std::vector<int> excluded;
        for (int c : sets_[static_cast<std::size_t>(i)]) {
            if (state_[static_cast<std::size_t>(c)] != 0) continue;
            if (include(c)) minimise(count + 1);
            undo_include(c);
            state_[static_cast<std::size_t>(c)] = -1;
            excluded.push_back(c);
        }
        for (int c : excluded) state_[static_cast<std::size_t>(c)] = 0;
    }

    int n_;
    std::vector<std::vector<int>> sets_;
    std::vector<Budget> budgets_;
    std::vector<signed char> state_;
    std::vector<std::vector<std::size_t>> cell_budgets_;
    std::vector<std::int64_t> used_;
    std::int64_t best_ = INT64_MAX;
};

/// Constraints of the window that lie inside the frame, as index lists into frame.cells.
inline std::vector<std::vector<int>> frame_internal_constraints(const RadiusPair& rp, const FrameShape& f,
                                                                std::int64_t margin) {
    const Box window = bounding_box(f.cells).expanded(margin);
    std::vector<std::vector<int>> sets;
    for (const PointSet& k : window_constraints(rp, window)) {
        if (!k.is_subset_of(f.cells)) continue;
        std::vector<int> idx;
        for (const Point& p : k) {
            idx.push_back(static_cast<int>(std::lower_bound(f.cells.begin(), f.cells.end(), p) - f.cells.begin()));
        }
        sets.push_back(std::move(idx));
    }
    drop_supersets(sets);
    return sets;
}

inline void require_frame_inputs(const RadiusPair& rp, std::int64_t margin, const char* who) {
    if (margin < 0) throw PreconditionError(std::string(who) + ": margin must be nonnegative, got " + std::to_string(margin));
    if (!exists_code(rp)) {
        throw PreconditionError(std::string(who) + ": no code exists for " + rp.r2.str() + "/" + rp.R2.str());
    }
}

constexpr std::size_t kMaxDecisionCells = 256;

}  // namespace detail

struct FrameMinResult {
    bool proved = false;
    std::int64_t min_count = 0;
    std::size_t constraints = 0;
};

/// Least number of code vertices any translate of the frame can hold.
///
/// Every constraint (ball or pattern) is monotone: adding vertices never breaks it. So a
/// configuration X on the frame extends to an identifying code exactly when it meets every
/// constraint lying inside the frame, the completion being X plus every vertex off the frame.
/// The minimum is therefore a minimum hitting set over those constraints.
inline FrameMinResult frame_min_count(const RadiusPair& rp, const FrameShape& f, std::int64_t margin) {
    detail::require_frame_inputs(rp, margin, "frame_min_count");
    FrameMinResult out;
    if (f.cells.size() > detail::kMaxDecisionCells) return out;
    auto sets = detail::frame_internal_constraints(rp, f, margin);
    out.constraints = sets.size();
    detail::HittingSearch search(static_cast<int>(f.cells.size()), std::move(sets), {});
    const auto m = search.minimum();
    if (!m) return out;
    out.proved = true;
    out.min_count = *m;
    return out;
}

inline FrameMinResult frame_min_count(const RadiusPair& rp, const FrameShape& f) {
    return frame_min_count(rp, f, default_margin(rp));
}

struct ConfigClass {
    PointSet representative;
    std::int64_t orbit_size = 0;
};

/// Symmetries of the square mapping the frame onto itself, each paired with the translation
/// that brings the image back onto the frame.
inline std::vector<std::pair<Symmetry, Point>> frame_stabilizer(const FrameShape& f) {
    const Box home = bounding_box(f.cells);
    std::vector<std::pair<Symmetry, Point>> out;
    for (const Symmetry& g : kD4) {
        const PointSet img = apply(g, f.cells);
        const Box b = bounding_box(img);
        const Point shift{home.min_x - b.min_x, home.min_y - b.min_y};
        if (img.translated(shift) == f.cells) out.push_back({g, shift});
    }
    return out;
}

/// Least image of config under the frame's stabilizer.
inline PointSet canonical_config(const FrameShape& f, const PointSet& config) {
    PointSet best = config;
    for (const auto& [g, shift] : frame_stabilizer(f)) {
        PointSet img = apply(g, config).translated(shift);
        if (img < best) best = std::move(img);
    }
    return best;
}

/// All feasible configurations with exactly count vertices on the frame, one per symmetry class.
inline std::vector<ConfigClass> classify_min_configs(const RadiusPair& rp, const FrameShape& f, std::int64_t count,
                                                     std::int64_t margin) {
    detail::require_frame_inputs(rp, margin, "classify_min_configs");
    const auto sets = detail::frame_internal_constraints(rp, f, margin);
    const auto n = static_cast<int>(f.cells.size());
    if (count < 0 || count > n) return {};
    const auto stab = frame_stabilizer(f);

    std::vector<ConfigClass> classes;
    std::vector<int> pick(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) pick[static_cast<std::size_t>(i)] = i;
    std::vector<char> in(static_cast<std::size_t>(n));
    for (;;) {
        std::fill(in.begin(), in.end(), 0);
        for (int c : pick) in[static_cast<std::size_t>(c)] = 1;
        const bool feasible = std::all_of(sets.begin(), sets.end(), [&](const std::vector<int>& s) {
            return std::any_of(s.begin(), s.end(), [&](int c) { return in[static_cast<std::size_t>(c)] != 0; });
        });
        if (feasible) {
            std::vector<Point> pts;
            for (int c : pick) pts.push_back(f.cells[static_cast<std::size_t>(c)]);
            const PointSet config(std::move(pts));
            std::vector<PointSet> orbit;
            for (const auto& [g, shift] : stab) orbit.push_back(apply(g, config).translated(shift));
            std::sort(orbit.begin(), orbit.end());
            orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
            if (orbit.front() == config) classes.push_back({config, static_cast<std::int64_t>(orbit.size())});
        }
        // next combination
        int i = static_cast<int>(count) - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - count + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < count; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    std::sort(classes.begin(), classes.end(),
              [](const ConfigClass& a, const ConfigClass& b) { return a.representative < b.representative; });
    return classes;
}

inline std::vector<ConfigClass> classify_min_configs(const RadiusPair& rp, const FrameShape& f, std::int64_t count) {
    return classify_min_configs(rp, f, count, default_margin(rp));
}

/// "some" (resp. "every") region holds at least threshold code vertices.
struct ForcingClaim {
    enum class Mode { some, every };
    Mode mode = Mode::some;
    std::vector<PointSet> regions;
    std::int64_t threshold = 0;
};

/// Regions f + o for each offset o.
inline std::vector<PointSet> frame_translates(const FrameShape& f, const std::vector<Point>& offsets) {
    std::vector<PointSet> out;
    for (const Point& o : offsets) out.push_back(f.cells.translated(o));
    return out;
}

inline const std::vector<Point>& unit_offsets() {
    static const std::vector<Point> o = {{-1, 0}, {1, 0}, {0, -1}, {0, 1}};
    return o;
}

enum class ForcingOutcome { proved, inconclusive };

inline const char* to_string(ForcingOutcome o) { return o == ForcingOutcome::proved ? "proved" : "inconclusive"; }

/// Proves claim for every identifying code whose restriction to the frame is the class
/// representative, or reports inconclusive.
///
/// Inside the window, cells on the frame are fixed by the class, cells in some claim region
/// are decided by search, and all other cells are set to 1 (this can only help constraints
/// and never raises a region count). Region cells outside the window are counted as 0,
/// which can only lower counts. A completion violating the claim under these rules is
/// searched for; if none exists the claim holds for every real code.
inline ForcingOutcome check_forcing(const RadiusPair& rp, const FrameShape& f, const ConfigClass& cls,
                                    const ForcingClaim& claim, std::int64_t margin) {
    detail::require_frame_inputs(rp, margin, "check_forcing");
    if (claim.regions.empty()) throw PreconditionError("check_forcing: claim has no regions");
    if (claim.threshold < 1) throw PreconditionError("check_forcing: claim threshold must be positive");
    if (!cls.representative.is_subset_of(f.cells)) throw PreconditionError("check_forcing: class is not a frame configuration");

    const Box window = bounding_box(f.cells).expanded(margin);
    std::vector<Point> decision_pts;
    for (const PointSet& region : claim.regions) {
        for (const Point& p : region) {
            if (window.contains(p) && !f.cells.contains(p)) decision_pts.push_back(p);
        }
    }
    const PointSet decision(std::move(decision_pts));
    if (decision.size() > detail::kMaxDecisionCells) return ForcingOutcome::inconclusive;
    auto index_of = [&](const Point& p) {
        return static_cast<int>(std::lower_bound(decision.begin(), decision.end(), p) - decision.begin());
    };

    std::vector<std::vector<int>> sets;
    for (const PointSet& k : detail::window_constraints(rp, window)) {
        bool satisfied = false;
        std::vector<int> open;
        for (const Point& p : k) {
            if (f.cells.contains(p)) {
                if (cls.representative.contains(p)) {
                    satisfied = true;
                    break;
                }
            } else if (decision.contains(p)) {
                open.push_back(index_of(p));
            } else {
                satisfied = true;
                break;
            }
        }
        if (satisfied) continue;
        if (open.empty()) return ForcingOutcome::proved;  // the class itself admits no code
        sets.push_back(std::move(open));
    }
    detail::drop_supersets(sets);

    auto budget_for = [&](const PointSet& region) {
        detail::HittingSearch::Budget b;
        std::int64_t fixed = 0;
        for (const Point& p : region) {
            if (f.cells.contains(p)) fixed += cls.representative.contains(p) ? 1 : 0;
            else if (decision.contains(p)) b.cells.push_back(index_of(p));
        }
        b.cap = claim.threshold - 1 - fixed;
        return b;
    };

    const int n = static_cast<int>(decision.size());
    if (claim.mode == ForcingClaim::Mode::some) {
        std::vector<detail::HittingSearch::Budget> budgets;
        for (const PointSet& region : claim.regions) {
            budgets.push_back(budget_for(region));
            if (budgets.back().cap < 0) return ForcingOutcome::proved;
        }
        detail::HittingSearch search(n, sets, std::move(budgets));
        return search.find() ? ForcingOutcome::inconclusive : ForcingOutcome::proved;
    }
    for (const PointSet& region : claim.regions) {
        auto b = budget_for(region);
        if (b.cap < 0) continue;
        detail::HittingSearch search(n, sets, {std::move(b)});
        if (search.find()) return ForcingOutcome::inconclusive;
    }
    return ForcingOutcome::proved;
}

inline ForcingOutcome check_forcing(const RadiusPair& rp, const FrameShape& f, const ConfigClass& cls,
                                    const ForcingClaim& claim) {
    return check_forcing(rp, f, cls, claim, default_margin(rp));
}

// ---------------------------------------------------------------------------
// Collected bounds for one radius pair.

struct AssertedBound {
    std::string value;  // as printed in the literature, possibly a decimal
    std::string source;
};

struct ReferenceBounds {
    double fixed_lower = 0.0;  // 1 / (3.22 r + 4), not exact
    Certificate pattern;
    std::optional<Certificate> frame;
    std::optional<Rational> grid_upper;
    std::vector<AssertedBound> asserted;
};

/// The frame most relevant to each small radius pair, when one is known.
inline std::optional<std::string> frame_for(const RadiusPair& rp) {
    if (rp == RadiusPair(SqRadius(2), SqRadius(4))) return "F12";
    if (rp == RadiusPair(SqRadius(5), SqRadius(8))) return "F20";
    if (rp == RadiusPair(SqRadius(8), SqRadius(9))) return "F14";
    return std::nullopt;
}

inline ReferenceBounds reference_bounds(const RadiusPair& rp) {
    if (!exists_code(rp)) throw PreconditionError("reference_bounds: no code exists for " + rp.r2.str() + "/" + rp.R2.str());
    ReferenceBounds out;
    out.fixed_lower = 1.0 / (3.22 * std::sqrt(rp.r2.value().to_double()) + 4.0);
    out.pattern = pattern_lower_bound(rp);
    for (const std::string& name : frame_names()) {
        const FrameShape f = frame_by_name(name);
        const FrameMinResult m = frame_min_count(rp, f);
        if (!m.proved || m.min_count == 0) continue;
        const auto size = static_cast<std::int64_t>(f.cells.size());
        Certificate c{Rational(m.min_count, size), m.min_count, f.cells, CertificateKind::frame, Provenance::machine_proved};
        if (!out.frame || c.bound > out.frame->bound) out.frame = c;
    }
    const ColumnProfile prof = column_profile(rp);
    if (rp.r2.floor_root() - prof.x1 >= 2) out.grid_upper = construct_grid(rp).density();
    if (rp == RadiusPair(SqRadius(2), SqRadius(4))) {
        out.asserted.push_back({"4/15", "discharging over the 12-cell frame, neighbours with four vertices give 1/5"});
        out.asserted.push_back({"16/57", "refined discharging over the 12-cell frame"});
    }
    if (rp == RadiusPair(SqRadius(5), SqRadius(8))) {
        out.asserted.push_back({"0.17", "discharging over the 20-cell frame, average 17/5 per frame"});
    }
    return out;
}

}  // namespace idcode
