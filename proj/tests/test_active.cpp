#include <doctest.h>

#include <random>

#include "support.hpp"
#include "tmdim/active.hpp"
#include "tmdim/random_mesh.hpp"

using namespace tmdim;
using namespace testing_support;

namespace {

// deficit picture, top row first; '0' is (0,0), '1' is (1,1)
MeshInput from_picture(const std::vector<std::string>& rows) {
    MeshDoc doc;
    const int k = static_cast<int>(rows.size());
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < k; ++i) {
            doc.rects.push_back({i, j, i + 1, j + 1});
            int d = rows[k - 1 - j][i] - '0';
            doc.deficits.push_back({d, d});
        }
    return build_input(doc);
}

}  // namespace

TEST_CASE("top level is the whole mesh") {
    MeshInput in = from_picture({"11", "01"});
    auto levels = all_levels(in.mesh, in.profile);
    REQUIRE(levels.size() == 2);
    CHECK(levels[1].faces.size() == 4);
    CHECK(levels[1].c == 0);
    CHECK(levels[1].h == 0);
    CHECK(levels[0].threshold == Bidegree{0, 0});
    CHECK(levels[1].threshold == Bidegree{1, 1});
}

TEST_CASE("corner blob touches the boundary") {
    MeshInput in = from_picture({"11", "01"});
    ActiveLevel L = active_mesh(in.mesh, in.profile, 1);
    CHECK(L.faces.size() == 1);
    CHECK(L.interior_edges.size() == 2);
    CHECK(L.interior_vertices.size() == 1);
    CHECK(L.c == 0);
    CHECK(L.h == 0);
}

TEST_CASE("island") {
    MeshInput in = from_picture({"111", "101", "111"});
    ActiveLevel L = active_mesh(in.mesh, in.profile, 1);
    CHECK(L.faces.size() == 1);
    CHECK(L.interior_edges.size() == 4);
    CHECK(L.interior_vertices.size() == 4);
    CHECK(L.c == 1);
    CHECK(L.h == 0);
    CHECK(check_assumptions({L}).ok);
}

TEST_CASE("ring") {
    MeshInput in = from_picture({"11111", "10001", "10101", "10001", "11111"});
    ActiveLevel L = active_mesh(in.mesh, in.profile, 1);
    CHECK(L.c == 1);
    CHECK(L.h == 1);
    AssumptionReport ar = check_assumptions(all_levels(in.mesh, in.profile));
    CHECK_FALSE(ar.ok);
    CHECK(ar.levels_with_holes == std::vector<int>{1});
    CHECK(ar.message.find("level 1") != std::string::npos);
}

TEST_CASE("strip touching two boundary pieces encloses a relative hole") {
    // the active column splits the boundary trace into two arcs
    MeshInput in = from_picture({"101", "101", "101"});
    ActiveLevel L = active_mesh(in.mesh, in.profile, 1);
    CHECK(L.c == 0);
    CHECK(L.h == 1);
}

TEST_CASE("two islands") {
    MeshInput in = from_picture({"1111", "1010", "1111", "1111"});
    ActiveLevel L = active_mesh(in.mesh, in.profile, 1);
    CHECK(L.c == 1);  // the right one reaches the boundary
    MeshInput in2 = from_picture({"11111", "10101", "11111", "11111", "11111"});
    CHECK(active_mesh(in2.mesh, in2.profile, 1).c == 2);
}

TEST_CASE("Betti numbers match the Smith form on random grids") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 30; ++t) {
        MeshInput in = build_input(random_grid_doc(rng, 4, 0.5));
        for (const ActiveLevel& L : all_levels(in.mesh, in.profile)) {
            SnfBetti s = snf_betti(in.mesh, L);
            CHECK(L.c == s.c);
            CHECK(L.h == s.h);
        }
    }
}

TEST_CASE("relative complex is a complex") {
    MeshInput in = from_picture({"11111", "10001", "10101", "10001", "11111"});
    RelativeComplex rc = relative_complex(in.mesh, active_mesh(in.mesh, in.profile, 1));
    REQUIRE(rc.n1 > 0);
    for (int v = 0; v < rc.n0; ++v)
        for (int f = 0; f < rc.n2; ++f) {
            mpz_class s = 0;
            for (int e = 0; e < rc.n1; ++e) s += rc.d1[v][e] * rc.d2[e][f];
            CHECK(s == 0);
        }
}
