#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tmdim/active.hpp"
#include "tmdim/mesh.hpp"
#include "tmdim/segments.hpp"

namespace tmdim {

struct EulerParts {
    std::vector<long> per_level;  // chi of the quotient complex at level i = 1 .. l+1
    long chi = 0;
    long chi_direct = 0;
};

// throws DecompositionMismatch when the two evaluations disagree
EulerParts euler_characteristic(const TMesh& mesh, const LeveledProfile& profile, const SmoothnessProfile& smooth,
                                const std::vector<ActiveLevel>& levels, Bidegree m);
EulerParts euler_characteristic(const TMesh& mesh, const LeveledProfile& profile, const SmoothnessProfile& smooth,
                                Bidegree m);

struct ConstantDims {
    long h2 = 0, h1 = 0, h0 = 0;
};
ConstantDims constant_complex_dims(const LeveledProfile& profile, const ActiveLevel& level, Bidegree m);

struct Config1 {
    bool holds = true;
    std::vector<int> failing_levels;
};
Config1 configuration1(const TMesh& mesh, const LeveledProfile& profile, const SmoothnessProfile& smooth,
                       const std::vector<ActiveLevel>& levels, Bidegree m);

struct LevelRow {
    int i = 0;
    int c = 0, h = 0;
    long dim_m = 0;     // dim M_(i) in degree m
    long chi = 0;       // this level's share of the Euler characteristic
    long h0_c = 0;      // c_i dim M_(i)
    long h0_upper = 0;
    long h0_plain = 0;
    int interior_segments = 0;
    int min_weight_slack = 0;  // min over segments of weight - threshold (0 if none)
    std::string ordering;

    friend bool operator==(const LevelRow&, const LevelRow&) = default;
};

struct DimReport {
    Bidegree m;
    long chi = 0;
    long chi_direct = 0;
    bool assumptions_ok = true;
    std::string diagnostics;
    std::optional<long> lower_general;
    std::optional<long> lower_special;
    std::optional<long> upper;
    bool upper_clamped = false;
    bool config1 = false;
    bool certified = false;
    std::optional<long> exact;
    std::optional<long> oracle;
    long h2 = 0;
    std::vector<LevelRow> rows;

    friend bool operator==(const DimReport&, const DimReport&) = default;
};

struct BoundsOptions {
    SegmentOptions segments;
    std::map<int, std::vector<SegmentKey>> input_orders;  // per level, used by the input strategy
    bool with_oracle = false;
    bool parallel = true;
};

DimReport bounds(const TMesh& mesh, const LeveledProfile& profile, const SmoothnessProfile& smooth, Bidegree m,
                 const BoundsOptions& opts = {});

struct Certification {
    bool certified = false;
    std::optional<long> exact;
    long slack = 0;  // upper - chi
    std::vector<long> level_slack;  // h0_upper - h0_c per level
};
Certification certify_stable(const DimReport& report);

// throws AssumptionViolated when the report carries diagnostics only
void require_assumptions(const DimReport& report);

std::vector<DimReport> sweep(const TMesh& mesh, const LeveledProfile& profile, const SmoothnessProfile& smooth,
                             const std::vector<Bidegree>& degrees, const BoundsOptions& opts = {});

// inclusive rectangle "m1,m2:M1,M2" (or a single "m1,m2"), colex order
std::vector<Bidegree> parse_degree_range(const std::string& text);

}  // namespace tmdim
