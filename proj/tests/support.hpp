#pragma once

#include <string>
#include <vector>

#include "tmdim/active.hpp"
#include "tmdim/io.hpp"
#include "tmdim/linalg.hpp"
#include "tmdim/mesh.hpp"
#include "tmdim/poly.hpp"

namespace testing_support {

using namespace tmdim;

inline std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

inline MeshInput load(const std::string& name) { return parse_mesh_file(fixture(name)); }

// Relative chain complex rebuilt from face rectangles alone: each face is
// oriented counterclockwise, each edge from its smaller coordinate to its
// larger one. Cells on the domain boundary are dropped.
struct IndependentComplex {
    std::vector<std::vector<mpz_class>> d1, d2;
    int n0 = 0, n1 = 0, n2 = 0;
};

inline IndependentComplex rebuild_complex(const TMesh& mesh, const ActiveLevel& level) {
    IndependentComplex out;
    std::vector<int> vid(mesh.vertices.size(), -1), eid(mesh.edges.size(), -1);
    for (size_t v = 0; v < mesh.vertices.size(); ++v)
        if (level.vertex_active[v] && !mesh.on_boundary(static_cast<int>(v))) vid[v] = out.n0++;
    for (size_t e = 0; e < mesh.edges.size(); ++e)
        if (level.edge_active[e] && !mesh.edges[e].boundary) eid[e] = out.n1++;
    std::vector<int> fs;
    for (size_t f = 0; f < mesh.faces.size(); ++f)
        if (level.face_active[f]) fs.push_back(static_cast<int>(f));
    out.n2 = static_cast<int>(fs.size());

    out.d1.assign(out.n0, std::vector<mpz_class>(out.n1, 0));
    for (size_t e = 0; e < mesh.edges.size(); ++e) {
        if (eid[e] < 0) continue;
        const Edge& E = mesh.edges[e];
        for (int v : {E.v0, E.v1}) {
            if (vid[v] < 0) continue;
            const Vertex& V = mesh.vertices[v];
            const Rational& along = E.orient == Orientation::Horizontal ? V.x : V.y;
            out.d1[vid[v]][eid[e]] += along == E.b ? 1 : -1;
        }
    }
    out.d2.assign(out.n1, std::vector<mpz_class>(out.n2, 0));
    for (int k = 0; k < out.n2; ++k) {
        const Face& F = mesh.faces[fs[k]];
        for (int e : F.edges) {
            if (eid[e] < 0) continue;
            const Edge& E = mesh.edges[e];
            int sign;
            if (E.orient == Orientation::Horizontal)
                sign = E.line == F.rect.y0 ? 1 : -1;
            else
                sign = E.line == F.rect.x1 ? 1 : -1;
            out.d2[eid[e]][k] += sign;
        }
    }
    return out;
}

inline int snf_rank(const std::vector<std::vector<mpz_class>>& a) {
    if (a.empty() || a[0].empty()) return 0;
    return static_cast<int>(smith_invariants(a).size());
}

struct SnfBetti {
    int c = 0, h = 0;
};

inline SnfBetti snf_betti(const TMesh& mesh, const ActiveLevel& level) {
    IndependentComplex cx = rebuild_complex(mesh, level);
    int r1 = snf_rank(cx.d1), r2 = snf_rank(cx.d2);
    return {cx.n0 - r1, cx.n1 - r1 - r2};
}

}  // namespace testing_support
