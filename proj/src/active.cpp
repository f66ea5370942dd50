#include "tmdim/active.hpp"

#include "tmdim/errors.hpp"
#include "tmdim/linalg.hpp"

namespace tmdim {

namespace {

// +1 when the counter-clockwise boundary of the face runs along the edge direction
int incidence(const TMesh& mesh, int f, int e) {
    const Edge& ed = mesh.edges[e];
    const Rect& r = mesh.faces[f].rect;
    if (ed.orient == Orientation::Horizontal) return ed.line == r.y0 ? 1 : -1;
    return ed.line == r.x1 ? 1 : -1;
}

std::vector<int> index_map(const std::vector<int>& ids, size_t n) {
    std::vector<int> m(n, -1);
    for (size_t k = 0; k < ids.size(); ++k) m[ids[k]] = static_cast<int>(k);
    return m;
}

}  // namespace

ActiveLevel active_mesh(const TMesh& mesh, const LeveledProfile& profile, int i) {
    int top = profile.ell() + 1;
    if (i < 1 || i > top)
        throw IndexOutOfRange("active level " + std::to_string(i) + " outside [1," + std::to_string(top) + "]");
    ActiveLevel L;
    L.index = i;
    L.threshold = profile.levels[i - 1];
    L.face_active.assign(mesh.faces.size(), 0);
    L.edge_active.assign(mesh.edges.size(), 0);
    L.vertex_active.assign(mesh.vertices.size(), 0);
    for (size_t f = 0; f < mesh.faces.size(); ++f) {
        if (i != top && !leq(profile.face_deficit[f], L.threshold)) continue;
        L.face_active[f] = 1;
        for (int e : mesh.faces[f].edges) {
            L.edge_active[e] = 1;
            L.vertex_active[mesh.edges[e].v0] = 1;
            L.vertex_active[mesh.edges[e].v1] = 1;
        }
    }
    for (size_t f = 0; f < mesh.faces.size(); ++f)
        if (L.face_active[f]) L.faces.push_back(static_cast<int>(f));
    for (size_t e = 0; e < mesh.edges.size(); ++e) {
        if (!L.edge_active[e]) continue;
        L.edges.push_back(static_cast<int>(e));
        (mesh.edges[e].boundary ? L.boundary_trace : L.interior_edges).push_back(static_cast<int>(e));
    }
    for (size_t v = 0; v < mesh.vertices.size(); ++v) {
        if (!L.vertex_active[v]) continue;
        L.vertices.push_back(static_cast<int>(v));
        if (!mesh.on_boundary(static_cast<int>(v))) L.interior_vertices.push_back(static_cast<int>(v));
    }
    Betti b = relative_betti(mesh, L);
    L.c = b.c;
    L.h = b.h;
    return L;
}

std::vector<ActiveLevel> all_levels(const TMesh& mesh, const LeveledProfile& profile) {
    std::vector<ActiveLevel> out;
    for (int i = 1; i <= profile.ell() + 1; ++i) out.push_back(active_mesh(mesh, profile, i));
    return out;
}

RelativeComplex relative_complex(const TMesh& mesh, const ActiveLevel& level) {
    RelativeComplex rc;
    rc.n0 = static_cast<int>(level.interior_vertices.size());
    rc.n1 = static_cast<int>(level.interior_edges.size());
    rc.n2 = static_cast<int>(level.faces.size());
    auto vmap = index_map(level.interior_vertices, mesh.vertices.size());
    auto emap = index_map(level.interior_edges, mesh.edges.size());
    rc.d1.assign(rc.n0, std::vector<mpz_class>(rc.n1, 0));
    rc.d2.assign(rc.n1, std::vector<mpz_class>(rc.n2, 0));
    for (int k = 0; k < rc.n1; ++k) {
        const Edge& e = mesh.edges[level.interior_edges[k]];
        if (vmap[e.v0] >= 0) rc.d1[vmap[e.v0]][k] -= 1;
        if (vmap[e.v1] >= 0) rc.d1[vmap[e.v1]][k] += 1;
    }
    for (int k = 0; k < rc.n2; ++k) {
        int f = level.faces[k];
        for (int e : mesh.faces[f].edges)
            if (emap[e] >= 0) rc.d2[emap[e]][k] += incidence(mesh, f, e);
    }
    return rc;
}

Betti relative_betti(const TMesh& mesh, const ActiveLevel& level) {
    RelativeComplex rc = relative_complex(mesh, level);
    std::vector<SparseRow> r1, r2;
    for (auto& row : rc.d1) r1.push_back(make_sparse(row));
    for (auto& row : rc.d2) r2.push_back(make_sparse(row));
    int rank1 = sparse_rank(std::move(r1));
    int rank2 = sparse_rank(std::move(r2));
    return Betti{rc.n0 - rank1, rc.n1 - rank1 - rank2};
}

AssumptionReport check_assumptions(const std::vector<ActiveLevel>& levels) {
    AssumptionReport rep;
    for (const auto& L : levels)
        if (L.h != 0) {
            rep.ok = false;
            rep.levels_with_holes.push_back(L.index);
            if (!rep.message.empty()) rep.message += "; ";
            rep.message += "level " + std::to_string(L.index) + " has " + std::to_string(L.h) +
                           " relative hole(s)";
        }
    return rep;
}

}  // namespace tmdim
