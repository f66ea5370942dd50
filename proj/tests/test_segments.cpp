#include <doctest.h>

#include "support.hpp"
#include "tmdim/errors.hpp"
#include "tmdim/segments.hpp"

using namespace tmdim;
using namespace testing_support;

namespace {

LevelAnalysis analyze(const MeshInput& in, int level, Bidegree m, OrderingStrategy s, bool with_input = false) {
    auto levels = all_levels(in.mesh, in.profile);
    SegmentOptions so;
    so.strategy = s;
    if (with_input)
        if (auto it = in.doc.segment_order.find(level); it != in.doc.segment_order.end()) so.input_order = it->second;
    return analyze_level(in.mesh, in.profile, in.smooth, levels[level - 1], m, so);
}

}  // namespace

TEST_CASE("strategy names") {
    CHECK(parse_strategy("greedy") == OrderingStrategy::Greedy);
    CHECK(parse_strategy("auto") == OrderingStrategy::Auto);
    CHECK(std::string(to_string(OrderingStrategy::Exhaustive)) == "exhaustive");
    CHECK_THROWS_AS(parse_strategy("random"), ParseError);
}

TEST_CASE("maximal segments of the 2x2 grid") {
    MeshInput in = load("grid_2x2.json");
    auto levels = all_levels(in.mesh, in.profile);
    auto segs = maximal_segments(in.mesh, in.profile, in.smooth, levels[0]);
    REQUIRE(segs.size() == 2);
    for (const auto& s : segs) {
        CHECK(s.edges.size() == 2);
        CHECK_FALSE(s.interior);
        CHECK(s.r == 1);
    }
    CHECK(segs[0].e == Bidegree{0, 2});
    CHECK(segs[1].e == Bidegree{2, 0});
    CHECK(segments_meet(segs[0], segs[1]));
}

TEST_CASE("island segments in the second relations fixture") {
    MeshInput in = load("new_relations_b.json");
    auto levels = all_levels(in.mesh, in.profile);
    auto segs = maximal_segments(in.mesh, in.profile, in.smooth, levels[0]);
    int interior = 0;
    for (const auto& s : segs) interior += s.interior;
    CHECK(interior == 4);
    LevelAnalysis ex = analyze(in, 1, {4, 4}, OrderingStrategy::Exhaustive);
    CHECK(ex.h0_upper == 9);
    CHECK(ex.orderings_tried == 24);
    CHECK(ex.h0_plain >= ex.h0_upper);
    // every ordering is valid, the best one is at least as good as greedy
    LevelAnalysis gr = analyze(in, 1, {4, 4}, OrderingStrategy::Greedy);
    CHECK(gr.h0_upper >= ex.h0_upper);
    // the upper bound can never go below the constant part c * dim M
    CHECK(ex.h0_upper >= levels[0].c * 9);
}

TEST_CASE("exact presentation agrees where the bound is tight") {
    MeshInput in = load("new_relations_b.json");
    auto levels = all_levels(in.mesh, in.profile);
    CHECK(h0_ideal_exact(in.mesh, in.profile, in.smooth, levels[0], {4, 4}) == 9);
}

TEST_CASE("input ordering is honoured") {
    MeshInput in = load("test1.json");
    LevelAnalysis inp = analyze(in, 1, {3, 3}, OrderingStrategy::Input, true);
    CHECK(inp.h0_upper == 7);
    LevelAnalysis au = analyze(in, 1, {3, 3}, OrderingStrategy::Auto, true);
    CHECK(au.h0_upper == 7);
    LevelAnalysis gr = analyze(in, 1, {3, 3}, OrderingStrategy::Greedy);
    CHECK(gr.h0_upper >= 7);
}

TEST_CASE("rows expose the arithmetic") {
    MeshInput in = load("test3.json");
    LevelAnalysis la = analyze(in, 1, {6, 6}, OrderingStrategy::Auto);
    int total = 0;
    for (const SegmentRow& r : la.rows) {
        CHECK(r.dim_d <= r.dim_m);
        CHECK(r.dim_d >= r.dim_d_plain);
        total += r.dim_m - r.dim_d;
    }
    CHECK(total == la.h0_upper);
    CHECK(la.h0_upper == 16);
}

TEST_CASE("too many segments for the exhaustive search") {
    // a 10x10 island has 18 interior segments
    MeshDoc doc;
    const int k = 12;
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < k; ++i) {
            doc.rects.push_back({i, j, i + 1, j + 1});
            bool inner = i > 0 && j > 0 && i < k - 1 && j < k - 1;
            doc.deficits.push_back(inner ? Bidegree{0, 0} : Bidegree{1, 1});
        }
    MeshInput in = build_input(doc);
    auto levels = all_levels(in.mesh, in.profile);
    SegmentOptions so;
    so.strategy = OrderingStrategy::Exhaustive;
    CHECK_THROWS_AS(analyze_level(in.mesh, in.profile, in.smooth, levels[0], {3, 3}, so), TooManyForExhaustive);
    so.strategy = OrderingStrategy::Auto;
    CHECK_NOTHROW(analyze_level(in.mesh, in.profile, in.smooth, levels[0], {3, 3}, so));
}
