#include "tmdim/mesh.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "tmdim/errors.hpp"

namespace tmdim {

namespace {

using Point = std::pair<Rational, Rational>;  // (x, y)

struct PointLess {
    bool operator()(const Point& p, const Point& q) const {
        int c = cmp(p.second, q.second);
        if (c != 0) return c < 0;
        return cmp(p.first, q.first) < 0;
    }
};

struct EdgeKey {
    Orientation orient;
    Rational line, a, b;
};

struct EdgeKeyLess {
    bool operator()(const EdgeKey& p, const EdgeKey& q) const {
        if (p.orient != q.orient) return p.orient < q.orient;
        if (int c = cmp(p.line, q.line)) return c < 0;
        if (int c = cmp(p.a, q.a)) return c < 0;
        return cmp(p.b, q.b) < 0;
    }
};

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

std::string face_name(size_t k) { return "face " + std::to_string(k); }

}  // namespace

TMesh build_tmesh(const std::vector<Rect>& rects) {
    if (rects.empty()) throw MalformedError("mesh has no faces");
    for (size_t k = 0; k < rects.size(); ++k) {
        const Rect& r = rects[k];
        if (!(r.x0 < r.x1 && r.y0 < r.y1))
            throw MalformedError(face_name(k) + " is a degenerate rectangle");
    }
    for (size_t i = 0; i < rects.size(); ++i)
        for (size_t j = i + 1; j < rects.size(); ++j) {
            const Rect& p = rects[i];
            const Rect& q = rects[j];
            bool ox = std::max(p.x0, q.x0) < std::min(p.x1, q.x1);
            bool oy = std::max(p.y0, q.y0) < std::min(p.y1, q.y1);
            if (ox && oy)
                throw OverlapError("interiors of " + face_name(i) + " and " + face_name(j) +
                                   " intersect");
        }

    std::map<Point, int, PointLess> vid;
    for (const Rect& r : rects) {
        vid.emplace(Point{r.x0, r.y0}, 0);
        vid.emplace(Point{r.x1, r.y0}, 0);
        vid.emplace(Point{r.x0, r.y1}, 0);
        vid.emplace(Point{r.x1, r.y1}, 0);
    }
    TMesh mesh;
    std::vector<Point> pts;
    for (auto& [p, id] : vid) {
        id = static_cast<int>(pts.size());
        pts.push_back(p);
        mesh.vertices.push_back(Vertex{p.first, p.second, {}, VertexClass::Boundary});
    }

    // side == 0: face lies above / right of the edge, side == 1: below / left
    std::map<EdgeKey, std::vector<std::pair<int, int>>, EdgeKeyLess> pieces;
    for (size_t k = 0; k < rects.size(); ++k) {
        const Rect& r = rects[k];
        struct Side {
            Orientation o;
            Rational line, lo, hi;
            int side;
        };
        const Side sides[4] = {{Orientation::Horizontal, r.y0, r.x0, r.x1, 0},
                               {Orientation::Horizontal, r.y1, r.x0, r.x1, 1},
                               {Orientation::Vertical, r.x0, r.y0, r.y1, 0},
                               {Orientation::Vertical, r.x1, r.y0, r.y1, 1}};
        for (const Side& s : sides) {
            std::vector<Rational> cuts;
            for (const Point& p : pts) {
                const Rational& across = s.o == Orientation::Horizontal ? p.second : p.first;
                const Rational& along = s.o == Orientation::Horizontal ? p.first : p.second;
                if (across == s.line && s.lo <= along && along <= s.hi) cuts.push_back(along);
            }
            std::sort(cuts.begin(), cuts.end());
            for (size_t c = 0; c + 1 < cuts.size(); ++c)
                pieces[EdgeKey{s.o, s.line, cuts[c], cuts[c + 1]}].push_back({(int)k, s.side});
        }
    }

    mesh.faces.resize(rects.size());
    for (size_t k = 0; k < rects.size(); ++k) mesh.faces[k].rect = rects[k];
    for (auto& [key, owners] : pieces) {
        int eid = static_cast<int>(mesh.edges.size());
        Edge e;
        e.orient = key.orient;
        e.line = key.line;
        e.a = key.a;
        e.b = key.b;
        if (owners.size() > 2 || (owners.size() == 2 && owners[0].second == owners[1].second))
            throw MalformedError("edge on line " + to_string(key.line) + " is shared by " +
                                 face_name(owners[0].first) + " and " + face_name(owners[1].first) +
                                 " from the same side");
        for (auto [f, side] : owners) {
            e.faces.push_back(f);
            mesh.faces[f].edges.push_back(eid);
        }
        e.boundary = owners.size() == 1;
        if (key.orient == Orientation::Horizontal) {
            e.v0 = vid.at(Point{key.a, key.line});
            e.v1 = vid.at(Point{key.b, key.line});
        } else {
            e.v0 = vid.at(Point{key.line, key.a});
            e.v1 = vid.at(Point{key.line, key.b});
        }
        mesh.vertices[e.v0].edges.push_back(eid);
        mesh.vertices[e.v1].edges.push_back(eid);
        mesh.edges.push_back(std::move(e));
    }

    for (auto& f : mesh.faces) {
        std::set<int> vs;
        for (int e : f.edges) {
            vs.insert(mesh.edges[e].v0);
            vs.insert(mesh.edges[e].v1);
        }
        f.vertices.assign(vs.begin(), vs.end());
    }

    for (size_t v = 0; v < mesh.vertices.size(); ++v) {
        Vertex& vx = mesh.vertices[v];
        int nb = 0, nh = 0, nv = 0;
        for (int e : vx.edges) {
            if (mesh.edges[e].boundary) ++nb;
            (mesh.edges[e].orient == Orientation::Horizontal ? nh : nv)++;
        }
        if (nb > 2)
            throw NotSimplyConnectedError("boundary touches itself at vertex (" + to_string(vx.x) +
                                          "," + to_string(vx.y) + ")");
        if (nb > 0) {
            vx.cls = VertexClass::Boundary;
            continue;
        }
        if (nh == 2 && nv == 2) {
            vx.cls = VertexClass::Crossing;
            ++mesh.crossings;
        } else if ((nh == 2 && nv == 1) || (nh == 1 && nv == 2)) {
            vx.cls = VertexClass::TJunction;
            ++mesh.t_junctions;
        } else {
            throw MalformedError("interior vertex (" + to_string(vx.x) + "," + to_string(vx.y) +
                                 ") is neither a crossing nor a T-junction");
        }
        ++mesh.interior_vertices;
    }
    for (const Edge& e : mesh.edges)
        if (!e.boundary) ++mesh.interior_edges;

    UnionFind uf(static_cast<int>(rects.size()));
    for (const Edge& e : mesh.edges)
        if (e.faces.size() == 2) uf.unite(e.faces[0], e.faces[1]);
    for (size_t k = 1; k < rects.size(); ++k)
        if (uf.find(0) != uf.find(static_cast<int>(k)))
            throw DisconnectedError(face_name(k) + " is not connected to face 0 through shared edges");

    long euler = static_cast<long>(mesh.vertices.size()) - static_cast<long>(mesh.edges.size()) +
                 static_cast<long>(mesh.faces.size());
    if (euler != 1)
        throw NotSimplyConnectedError("V - E + F = " + std::to_string(euler) + ", expected 1");
    return mesh;
}

std::vector<Bidegree> diagonal_first_levels(const std::vector<Bidegree>& sorted_deficits) {
    std::vector<Bidegree> levels{{0, 0}};
    for (Bidegree target : sorted_deficits) {
        Bidegree c = levels.back();
        while (!(c == target)) {
            if (c.m1 < target.m1 && c.m2 < target.m2)
                c = c + Bidegree{1, 1};
            else if (c.m1 < target.m1)
                c = c + Bidegree{1, 0};
            else
                c = c + Bidegree{0, 1};
            levels.push_back(c);
        }
    }
    return levels;
}

LeveledProfile build_profile(const TMesh& mesh, const std::vector<Bidegree>& face_deficits,
                             const std::optional<std::vector<Bidegree>>& explicit_levels) {
    if (face_deficits.size() != mesh.faces.size())
        throw MalformedError("expected " + std::to_string(mesh.faces.size()) + " face deficits, got " +
                             std::to_string(face_deficits.size()));
    LeveledProfile p;
    p.face_deficit = face_deficits;
    std::set<Bidegree, BidegreeLex> dset;
    for (size_t k = 0; k < face_deficits.size(); ++k) {
        if (face_deficits[k].m1 < 0 || face_deficits[k].m2 < 0)
            throw MalformedError("negative deficit on face " + std::to_string(k));
        dset.insert(face_deficits[k]);
    }
    p.deficit_set.assign(dset.begin(), dset.end());
    for (size_t i = 0; i < p.deficit_set.size(); ++i)
        for (size_t j = i + 1; j < p.deficit_set.size(); ++j)
            if (!comparable(p.deficit_set[i], p.deficit_set[j]))
                throw UnorderedDeficitsError("deficits " + to_string(p.deficit_set[i]) + " and " +
                                             to_string(p.deficit_set[j]) + " are not comparable");
    if (!(p.deficit_set.front() == Bidegree{0, 0}))
        throw MissingZeroError("no face carries deficit (0,0)");

    p.edge_deficit.resize(mesh.edges.size());
    for (size_t e = 0; e < mesh.edges.size(); ++e) {
        Bidegree d = face_deficits[mesh.edges[e].faces[0]];
        for (int f : mesh.edges[e].faces) d = bmin(d, face_deficits[f]);
        p.edge_deficit[e] = d;
    }
    p.vertex_deficit.resize(mesh.vertices.size());
    for (size_t v = 0; v < mesh.vertices.size(); ++v) {
        Bidegree d = p.edge_deficit[mesh.vertices[v].edges[0]];
        for (int e : mesh.vertices[v].edges) d = bmin(d, p.edge_deficit[e]);
        p.vertex_deficit[v] = d;
    }

    if (explicit_levels) {
        const auto& L = *explicit_levels;
        if (L.empty() || !(L.front() == Bidegree{0, 0}))
            throw InvalidSequenceError("level sequence must start at (0,0)");
        if (!(L.back() == p.deficit_set.back()))
            throw InvalidSequenceError("level sequence must end at the largest deficit " +
                                       to_string(p.deficit_set.back()));
        for (size_t k = 1; k < L.size(); ++k) {
            Bidegree s = L[k] - L[k - 1];
            bool ok = s == Bidegree{1, 0} || s == Bidegree{0, 1} || s == Bidegree{1, 1};
            if (!ok)
                throw InvalidSequenceError("step " + to_string(L[k - 1]) + " -> " + to_string(L[k]) +
                                           " is not one of (1,0),(0,1),(1,1)");
        }
        for (Bidegree d : p.deficit_set)
            if (std::find(L.begin(), L.end(), d) == L.end())
                throw InvalidSequenceError("level sequence omits deficit " + to_string(d));
        p.levels = L;
    } else {
        p.levels = diagonal_first_levels(p.deficit_set);
    }
    for (size_t k = 1; k < p.levels.size(); ++k) p.steps.push_back(p.levels[k] - p.levels[k - 1]);
    return p;
}

SmoothnessProfile smoothness_from_edges(const TMesh& mesh, std::vector<int> edge_r) {
    SmoothnessProfile sp;
    for (size_t e = 0; e < mesh.edges.size(); ++e)
        if (mesh.edges[e].boundary) edge_r[e] = -1;
    sp.edge_r = std::move(edge_r);
    sp.vertex_pair.assign(mesh.vertices.size(), {-1, -1});
    for (size_t v = 0; v < mesh.vertices.size(); ++v) {
        int rh = -1, rv = -1;
        for (int e : mesh.vertices[v].edges) {
            if (mesh.edges[e].boundary) continue;
            int r = sp.edge_r[e];
            // r_h belongs to the vertical line, r_v to the horizontal one
            int& slot = mesh.edges[e].orient == Orientation::Vertical ? rh : rv;
            if (slot >= 0 && slot != r)
                throw ChainConflictError("collinear edges at (" + to_string(mesh.vertices[v].x) + "," +
                                         to_string(mesh.vertices[v].y) + ") carry r=" +
                                         std::to_string(slot) + " and r=" + std::to_string(r));
            slot = r;
        }
        if (!mesh.on_boundary(static_cast<int>(v))) sp.vertex_pair[v] = {rh, rv};
    }
    return sp;
}

SmoothnessProfile build_smoothness(const TMesh& mesh, int default_r,
                                   const std::vector<SmoothnessOverride>& overrides) {
    if (default_r < 0) throw MalformedError("default smoothness must be >= 0");
    std::vector<int> r(mesh.edges.size(), default_r);
    std::vector<int> owner(mesh.edges.size(), -1);
    for (size_t k = 0; k < overrides.size(); ++k) {
        const auto& ov = overrides[k];
        if (ov.r < 0) throw MalformedError("override " + std::to_string(k) + " has negative r");
        bool hit = false;
        for (size_t e = 0; e < mesh.edges.size(); ++e) {
            const Edge& ed = mesh.edges[e];
            if (ed.boundary || ed.orient != ov.orient || ed.line != ov.line) continue;
            if (ed.a < ov.a || ed.b > ov.b) continue;
            hit = true;
            if (owner[e] >= 0 && r[e] != ov.r)
                throw ChainConflictError("overrides " + std::to_string(owner[e]) + " and " +
                                         std::to_string(k) + " disagree on a shared edge");
            owner[e] = static_cast<int>(k);
            r[e] = ov.r;
        }
        if (!hit)
            throw DanglingOverrideError("override " + std::to_string(k) + " on line " +
                                        to_string(ov.line) + " matches no interior edge");
    }
    return smoothness_from_edges(mesh, std::move(r));
}

std::vector<std::vector<int>> interior_chains(const TMesh& mesh) {
    UnionFind uf(static_cast<int>(mesh.edges.size()));
    for (const Vertex& v : mesh.vertices)
        for (int e : v.edges)
            for (int f : v.edges)
                if (e < f && !mesh.edges[e].boundary && !mesh.edges[f].boundary &&
                    mesh.edges[e].orient == mesh.edges[f].orient)
                    uf.unite(e, f);
    std::map<int, std::vector<int>> groups;
    for (size_t e = 0; e < mesh.edges.size(); ++e)
        if (!mesh.edges[e].boundary) groups[uf.find(static_cast<int>(e))].push_back(static_cast<int>(e));
    std::vector<std::vector<int>> out;
    for (auto& [root, es] : groups) out.push_back(es);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace tmdim
