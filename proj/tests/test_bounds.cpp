#include <gtest/gtest.h>

#include <cmath>

#include "idcode/bounds.hpp"
#include "idcode/constructions.hpp"
#include "oracles.hpp"

using namespace idcode;

namespace {

RadiusPair rp(std::int64_t r2, std::int64_t R2) { return RadiusPair(SqRadius(r2), SqRadius(R2)); }

// Constraints lying inside the frame, found by scanning vertex pairs directly.
std::vector<PointSet> oracle_frame_constraints(std::int64_t r2, std::int64_t R2, const PointSet& frame) {
    const Box box = bounding_box(frame);
    const auto R = static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(R2))));
    const Box scan = box.expanded(2 * R + 2);
    std::vector<PointSet> out;
    for (std::int64_t x = scan.min_x; x <= scan.max_x; ++x) {
        for (std::int64_t y = scan.min_y; y <= scan.max_y; ++y) {
            const Point u{x, y};
            const PointSet b = ball(u, SqRadius(r2));
            if (b.is_subset_of(frame)) out.push_back(b);
            for (std::int64_t dx = -2 * R - 1; dx <= 2 * R + 1; ++dx) {
                for (std::int64_t dy = -2 * R - 1; dy <= 2 * R + 1; ++dy) {
                    const Point v{x + dx, y + dy};
                    if (!(u < v)) continue;
                    const PointSet s(oracle::pattern(u, v, r2, R2));
                    if (!s.empty() && s.is_subset_of(frame)) out.push_back(s);
                }
            }
        }
    }
    return out;
}

std::int64_t oracle_frame_min(std::int64_t r2, std::int64_t R2, const PointSet& frame) {
    const auto cons = oracle_frame_constraints(r2, R2, frame);
    const std::size_t n = frame.size();
    std::int64_t best = -1;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const auto pop = static_cast<std::int64_t>(__builtin_popcount(mask));
        if (best >= 0 && pop >= best) continue;
        bool ok = true;
        for (const PointSet& c : cons) {
            bool hit = false;
            for (const Point& p : c) {
                const auto idx = static_cast<std::size_t>(std::lower_bound(frame.begin(), frame.end(), p) - frame.begin());
                if (mask & (1u << idx)) hit = true;
            }
            if (!hit) {
                ok = false;
                break;
            }
        }
        if (ok) best = pop;
    }
    return best;
}

ForcingClaim neighbour_claim(const FrameShape& f, std::int64_t threshold) {
    return {ForcingClaim::Mode::some, frame_translates(f, unit_offsets()), threshold};
}

}  // namespace

TEST(PatternBound, Examples) {
    EXPECT_EQ(pattern_lower_bound(rp(2, 4)).bound, Rational(1, 4));
    EXPECT_EQ(pattern_lower_bound(rp(4, 5)).bound, Rational(1, 2));
    EXPECT_EQ(pattern_lower_bound(rp(8, 10)).bound, Rational(1, 4));
    const Certificate c = pattern_lower_bound(rp(1, 2));
    EXPECT_EQ(c.kind, CertificateKind::pattern);
    EXPECT_EQ(c.provenance, Provenance::machine_proved);
    EXPECT_EQ(c.witness, (PointSet{{-2, 0}, {1, 0}}));
    EXPECT_EQ(to_text(c), "certificate pattern machine-proved\nbound 1/2 = 1/2\npoint -2 0\npoint 1 0\n");
    EXPECT_THROW(pattern_lower_bound(rp(1, 4)), PreconditionError);
}

TEST(TranslateMinCount, Examples) {
    const PeriodicCode all({1, 0}, {0, 1}, {{0, 0}});
    const PointSet s = horizontal_pattern(rp(9, 10));
    EXPECT_EQ(translate_min_count(all, s), 6);
    const NamedCode c = builtin_code("fig10-sqrt5");
    EXPECT_GE(translate_min_count(c.code, horizontal_pattern(c.rp)), 1);
    EXPECT_THROW(translate_min_count(all, PointSet{}), PreconditionError);
}

TEST(TranslateMinCount, DensityConsistency) {
    for (const std::string& name : builtin_names()) {
        const NamedCode c = builtin_code(name);
        for (const PointSet& s : {horizontal_pattern(c.rp), diagonal_pattern(c.rp), ball({0, 0}, c.rp.r2)}) {
            const std::int64_t m = translate_min_count(c.code, s);
            EXPECT_GE(c.code.density(), Rational(m, static_cast<std::int64_t>(s.size()))) << name;
        }
    }
}

TEST(Frames, Shapes) {
    EXPECT_EQ(frame_by_name("F12").cells.size(), 12u);
    EXPECT_EQ(frame_by_name("F20").cells.size(), 20u);
    EXPECT_EQ(frame_by_name("F14").cells.size(), 14u);
    EXPECT_THROW(frame_by_name("F7"), PreconditionError);
    EXPECT_EQ(frame_stabilizer(frame_by_name("F12")).size(), 8u);
    EXPECT_EQ(frame_stabilizer(frame_by_name("F14")).size(), 4u);
}

TEST(FrameMin, PaperValues) {
    const FrameMinResult a = frame_min_count(rp(2, 4), frame_by_name("F12"));
    ASSERT_TRUE(a.proved);
    EXPECT_EQ(a.min_count, 3);
    const FrameMinResult b = frame_min_count(rp(5, 8), frame_by_name("F20"));
    ASSERT_TRUE(b.proved);
    EXPECT_EQ(b.min_count, 3);
    const FrameMinResult c = frame_min_count(rp(8, 9), frame_by_name("F14"));
    ASSERT_TRUE(c.proved);
    EXPECT_EQ(c.min_count, 2);
    EXPECT_THROW(frame_min_count(rp(2, 4), frame_by_name("F12"), -1), PreconditionError);
}

TEST(FrameMin, MatchesBruteForce) {
    for (const auto& [p, name] : std::vector<std::pair<RadiusPair, std::string>>{
             {rp(2, 4), "F12"}, {rp(8, 9), "F14"}, {rp(1, 2), "F12"}, {rp(5, 8), "F12"}, {rp(4, 5), "F14"}}) {
        const FrameShape f = frame_by_name(name);
        const FrameMinResult m = frame_min_count(p, f);
        ASSERT_TRUE(m.proved);
        EXPECT_EQ(m.min_count, oracle_frame_min(p.r2.num(), p.R2.num(), f.cells)) << p << " " << name;
    }
}

TEST(FrameMin, NondecreasingInMargin) {
    const RadiusPair p = rp(2, 4);
    const FrameShape f = frame_by_name("F12");
    std::int64_t last = 0;
    for (std::int64_t margin = 0; margin <= 6; ++margin) {
        const FrameMinResult m = frame_min_count(p, f, margin);
        ASSERT_TRUE(m.proved);
        EXPECT_GE(m.min_count, last);
        last = m.min_count;
    }
}

TEST(FrameMin, ConsistentWithVerifiedCodes) {
    for (const std::string& name : builtin_names()) {
        const NamedCode c = builtin_code(name);
        for (const std::string& fname : frame_names()) {
            const FrameShape f = frame_by_name(fname);
            const FrameMinResult m = frame_min_count(c.rp, f);
            if (!m.proved) continue;
            EXPECT_GE(translate_min_count(c.code, f.cells), m.min_count) << name << " " << fname;
            EXPECT_GE(c.code.density(), Rational(m.min_count, static_cast<std::int64_t>(f.cells.size())));
        }
    }
}

TEST(Classify, F12HasFiveClasses) {
    const FrameShape f = frame_by_name("F12");
    const auto classes = classify_min_configs(rp(2, 4), f, 3);
    ASSERT_EQ(classes.size(), 5u);
    std::int64_t total = 0;
    for (const ConfigClass& c : classes) {
        EXPECT_EQ(c.representative.size(), 3u);
        EXPECT_EQ(canonical_config(f, c.representative), c.representative);
        total += c.orbit_size;
    }
    EXPECT_EQ(total, 32);
    EXPECT_EQ(classes[0].representative, (PointSet{{0, 0}, {0, 1}, {1, 3}}));
}

TEST(Classify, F14AndF20) {
    const auto f14 = classify_min_configs(rp(8, 9), frame_by_name("F14"), 2);
    EXPECT_FALSE(f14.empty());
    const FrameShape f20 = frame_by_name("F20");
    const auto classes = classify_min_configs(rp(5, 8), f20, 3);
    ASSERT_FALSE(classes.empty());
    for (const ConfigClass& c : classes) {
        bool corner = false;
        for (Point q : {Point{0, 0}, Point{0, 5}, Point{5, 0}, Point{5, 5}}) corner = corner || c.representative.contains(q);
        EXPECT_TRUE(corner) << "class without a corner vertex";
    }
    EXPECT_TRUE(classify_min_configs(rp(5, 8), f20, 2).empty());
}

TEST(Forcing, F12NeighbourHasFour) {
    const FrameShape f = frame_by_name("F12");
    for (const ConfigClass& c : classify_min_configs(rp(2, 4), f, 3)) {
        EXPECT_EQ(check_forcing(rp(2, 4), f, c, neighbour_claim(f, 4)), ForcingOutcome::proved);
        EXPECT_EQ(check_forcing(rp(2, 4), f, c, neighbour_claim(f, 4), 0), ForcingOutcome::inconclusive);
    }
}

TEST(Forcing, UnprovableClaimIsInconclusive) {
    const FrameShape f = frame_by_name("F12");
    const auto classes = classify_min_configs(rp(2, 4), f, 3);
    ForcingClaim every{ForcingClaim::Mode::every, frame_translates(f, unit_offsets()), 12};
    EXPECT_EQ(check_forcing(rp(2, 4), f, classes[0], every), ForcingOutcome::inconclusive);
}

TEST(Forcing, MalformedClaims) {
    const FrameShape f = frame_by_name("F12");
    const ConfigClass c{PointSet{{0, 0}, {0, 1}, {1, 3}}, 8};
    EXPECT_THROW(check_forcing(rp(2, 4), f, c, ForcingClaim{ForcingClaim::Mode::some, {}, 4}), PreconditionError);
    EXPECT_THROW(check_forcing(rp(2, 4), f, c, neighbour_claim(f, 0)), PreconditionError);
    const ConfigClass off{PointSet{{1, 1}}, 1};
    EXPECT_THROW(check_forcing(rp(2, 4), f, off, neighbour_claim(f, 4)), PreconditionError);
}

TEST(Forcing, F20CornerPositions) {
    // corner c = (0,5); A = c+(3,0), c+(3,-5); B = c+(0,-3), c+(5,-3)
    const RadiusPair p = rp(5, 8);
    const FrameShape f = frame_by_name("F20");
    const ForcingClaim a{ForcingClaim::Mode::some, {PointSet{{3, 5}}, PointSet{{3, 0}}}, 1};
    const ForcingClaim b{ForcingClaim::Mode::some, {PointSet{{0, 2}}, PointSet{{5, 2}}}, 1};
    const ForcingClaim sides{ForcingClaim::Mode::every, frame_translates(f, {{-1, 0}, {0, 1}}), 4};
    for (const ConfigClass& c : classify_min_configs(p, f, 3)) {
        bool proved = false;
        for (const auto& [g, shift] : frame_stabilizer(f)) {
            const PointSet img = apply(g, c.representative).translated(shift);
            if (!img.contains({0, 5})) continue;
            const ConfigClass oriented{img, c.orbit_size};
            proved = proved || (check_forcing(p, f, oriented, a) == ForcingOutcome::proved &&
                                check_forcing(p, f, oriented, b) == ForcingOutcome::proved &&
                                check_forcing(p, f, oriented, sides) == ForcingOutcome::proved);
        }
        EXPECT_TRUE(proved) << "class " << c.representative[0];
    }
}

TEST(ReferenceBounds, LargeRadius) {
    const ReferenceBounds r = reference_bounds(rp(100, 100));
    EXPECT_NEAR(r.fixed_lower, 1.0 / 36.2, 1e-9);
    ASSERT_TRUE(r.grid_upper.has_value());
    EXPECT_EQ(*r.grid_upper, Rational(7, 16));
    EXPECT_TRUE(r.asserted.empty());
}

TEST(ReferenceBounds, SmallCases) {
    const ReferenceBounds a = reference_bounds(rp(2, 4));
    EXPECT_EQ(a.pattern.bound, Rational(1, 4));
    ASSERT_TRUE(a.frame.has_value());
    EXPECT_EQ(a.frame->bound, Rational(1, 4));
    EXPECT_EQ(a.frame->count, 3);
    ASSERT_EQ(a.asserted.size(), 2u);
    EXPECT_EQ(a.asserted[1].value, "16/57");

    const ReferenceBounds b = reference_bounds(rp(5, 8));
    ASSERT_TRUE(b.frame.has_value());
    EXPECT_EQ(b.frame->bound, Rational(3, 20));
    ASSERT_EQ(b.asserted.size(), 1u);
    EXPECT_EQ(b.asserted[0].value, "0.17");
    EXPECT_EQ(b.frame->provenance, Provenance::machine_proved);

    const ReferenceBounds c = reference_bounds(rp(8, 9));
    ASSERT_TRUE(c.frame.has_value());
    EXPECT_EQ(c.frame->bound, Rational(1, 7));
}
