#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tmdim/active.hpp"
#include "tmdim/graded.hpp"
#include "tmdim/mesh.hpp"

namespace tmdim {

struct MaxSegment {
    Orientation orient;
    Rational line;
    Rational a, b;
    std::vector<int> edges;
    bool interior = false;  // avoids the domain boundary entirely
    int r = -1;
    Bidegree e;   // (0,r+1) horizontal, (r+1,0) vertical
    Bidegree dp;  // u-power gained through the level step
};

// chains of active interior edges, sorted by (orientation, line, start)
std::vector<MaxSegment> maximal_segments(const TMesh& mesh, const LeveledProfile& profile,
                                         const SmoothnessProfile& smooth, const ActiveLevel& level);

bool segments_meet(const MaxSegment& p, const MaxSegment& q);

enum class OrderingStrategy { Input, Greedy, Exhaustive, Auto };
OrderingStrategy parse_strategy(const std::string& s);
const char* to_string(OrderingStrategy s);

// a reference to a segment in a mesh file: orientation, line, span start
struct SegmentKey {
    Orientation orient;
    Rational line;
    Rational start;
};

struct SegmentRow {
    int seg = -1;    // index into the segment list
    int rank = -1;   // position in the ordering, 0 = lowest
    std::vector<int> gamma;
    std::vector<std::pair<int, int>> upsilon;  // all pairs (rho1, rho2)
    bool upsilon_qualified = false;
    std::vector<std::pair<int, int>> theta;
    std::vector<int> lambda;
    int weight = 0;
    int threshold = 0;
    int dim_m = 0;       // dim M_(i)(-e_rho)_m
    int dim_d = 0;       // dim of the full contribution
    int dim_d_plain = 0; // with Gamma alone
};

struct LevelAnalysis {
    int level = 0;
    std::vector<MaxSegment> segments;
    std::vector<int> order;  // interior segment ids, ascending
    std::vector<SegmentRow> rows;  // one per interior segment, in ordering order
    int h0_upper = 0;
    int h0_plain = 0;
    long orderings_tried = 1;
};

struct SegmentOptions {
    OrderingStrategy strategy = OrderingStrategy::Auto;
    std::optional<std::vector<SegmentKey>> input_order;
    bool exact_upsilon = false;  // test the ideal equality instead of the inequality
};

constexpr int kExhaustiveLimit = 8;

LevelAnalysis analyze_level(const TMesh& mesh, const LeveledProfile& profile, const SmoothnessProfile& smooth,
                            const ActiveLevel& level, Bidegree m, const SegmentOptions& opts = {});

// analysis under one fixed ordering (ascending list of interior segment ids)
LevelAnalysis analyze_with_order(const LeveledProfile& profile, const ActiveLevel& level,
                                 std::vector<MaxSegment> segments, std::vector<int> order, Bidegree m,
                                 bool exact_upsilon = false);

// Exact dim H_0 of the ideal complex at this level through its presentation by
// maximal segments; only used for small cross-checks.
int h0_ideal_exact(const TMesh& mesh, const LeveledProfile& profile, const SmoothnessProfile& smooth,
                   const ActiveLevel& level, Bidegree m);

}  // namespace tmdim
