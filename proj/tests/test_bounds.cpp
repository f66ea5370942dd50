#include <doctest.h>

#include <random>

#include "support.hpp"
#include "tmdim/bounds.hpp"
#include "tmdim/errors.hpp"
#include "tmdim/random_mesh.hpp"

using namespace tmdim;
using namespace testing_support;

namespace {

DimReport run(const MeshInput& in, Bidegree m, bool oracle = false) {
    BoundsOptions o;
    o.input_orders = in.doc.segment_order;
    o.with_oracle = oracle;
    return bounds(in.mesh, in.profile, in.smooth, m, o);
}

}  // namespace

TEST_CASE("single face") {
    MeshInput in = load("single_face.json");
    DimReport r = run(in, {3, 3}, true);
    CHECK(r.chi == 16);
    CHECK(r.certified);
    CHECK(r.exact == 16);
    CHECK(r.oracle == 16);
    CHECK(r.rows.size() == 1);
}

TEST_CASE("2x2 grid") {
    MeshInput in = load("grid_2x2.json");
    DimReport r = run(in, {3, 3}, true);
    CHECK(r.chi == 36);
    CHECK(r.lower_special == 36);
    CHECK(r.upper == 36);
    CHECK(r.oracle == 36);
}

TEST_CASE("Euler characteristic splits by level") {
    MeshInput in = load("test2.json");
    EulerParts p = euler_characteristic(in.mesh, in.profile, in.smooth, {4, 4});
    CHECK(p.chi == 75);
    CHECK(p.chi == p.chi_direct);
    long sum = 0;
    for (long x : p.per_level) sum += x;
    CHECK(sum == p.chi);
}

TEST_CASE("configuration check") {
    MeshInput in = load("grid_2x2.json");  // only the top level, nothing to check
    auto levels = all_levels(in.mesh, in.profile);
    CHECK(configuration1(in.mesh, in.profile, in.smooth, levels, {0, 3}).holds);

    MeshInput t3 = load("test3.json");  // r = 2, levels (0,0) (1,1)
    auto l3 = all_levels(t3.mesh, t3.profile);
    Config1 c = configuration1(t3.mesh, t3.profile, t3.smooth, l3, {2, 2});
    CHECK_FALSE(c.holds);
    CHECK(c.failing_levels == std::vector<int>{1});
    CHECK(configuration1(t3.mesh, t3.profile, t3.smooth, l3, {3, 3}).holds);
}

TEST_CASE("constant complex") {
    MeshInput in = load("mesh_homology.json");
    auto levels = all_levels(in.mesh, in.profile);
    REQUIRE(levels.size() == 3);
    CHECK(constant_complex_dims(in.profile, levels[0], {5, 5}).h0 == 11);
    CHECK(constant_complex_dims(in.profile, levels[1], {5, 5}).h0 == 9);
    CHECK(constant_complex_dims(in.profile, levels[2], {5, 5}).h2 == 16);
    DimReport r = run(in, {5, 5}, true);
    CHECK(r.h2 == 16);
    CHECK(r.certified);
    CHECK(r.oracle == r.chi);
}

TEST_CASE("not certified when the upper bound is loose") {
    MeshInput in = load("test3.json");
    DimReport r = run(in, {6, 6});
    CHECK(r.chi == 143);
    CHECK(r.upper == 146);
    CHECK_FALSE(r.certified);
    Certification c = certify_stable(r);
    CHECK(c.slack == 3);
    CHECK(c.level_slack == std::vector<long>{3, 0});
}

TEST_CASE("holes give diagnostics only") {
    MeshInput in = load("ring_hole.json");
    DimReport r = run(in, {3, 3});
    CHECK_FALSE(r.assumptions_ok);
    CHECK_FALSE(r.upper.has_value());
    CHECK_FALSE(r.lower_general.has_value());
    CHECK(r.chi == r.chi_direct);
    CHECK_THROWS_AS(require_assumptions(r), AssumptionViolated);
}

TEST_CASE("sandwich on a few random meshes") {
    std::mt19937_64 rng(17);
    int checked = 0;
    while (checked < 15) {
        MeshInput in = build_input(random_split_doc(rng));
        if (!check_assumptions(all_levels(in.mesh, in.profile)).ok) continue;
        for (Bidegree m : {Bidegree{2, 2}, Bidegree{3, 4}}) {
            DimReport r = run(in, m, true);
            CHECK(*r.lower_general <= *r.oracle);
            CHECK(*r.oracle <= *r.upper);
            if (r.certified) CHECK(*r.oracle == r.chi);
        }
        ++checked;
    }
}

TEST_CASE("sweep matches single calls in parallel and serial") {
    MeshInput in = load("new_relations_a.json");
    auto degrees = parse_degree_range("2,2:4,4");
    BoundsOptions par, ser;
    ser.parallel = false;
    auto a = sweep(in.mesh, in.profile, in.smooth, degrees, par);
    auto b = sweep(in.mesh, in.profile, in.smooth, degrees, ser);
    REQUIRE(a.size() == 9);
    CHECK(a == b);
    for (size_t k = 0; k < degrees.size(); ++k) CHECK(a[k] == bounds(in.mesh, in.profile, in.smooth, degrees[k]));
}

TEST_CASE("degree ranges") {
    auto d = parse_degree_range("1,2:2,3");
    CHECK(d == std::vector<Bidegree>{{1, 2}, {2, 2}, {1, 3}, {2, 3}});
    CHECK(parse_degree_range("3,3") == std::vector<Bidegree>{{3, 3}});
    CHECK_THROWS_AS(parse_degree_range("3"), ParseError);
    CHECK_THROWS_AS(parse_degree_range("3,x"), ParseError);
    CHECK_THROWS_AS(parse_degree_range("3,3:2,2"), ParseError);
    CHECK_THROWS_AS(parse_degree_range("-1,2"), ParseError);
}
