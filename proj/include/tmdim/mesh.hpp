#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tmdim/bidegree.hpp"
#include "tmdim/rational.hpp"

namespace tmdim {

enum class Orientation { Horizontal, Vertical };
enum class VertexClass { Boundary, Crossing, TJunction };

struct Rect {
    Rational x0, y0, x1, y1;
};

struct Face {
    Rect rect;
    std::vector<int> edges;
    std::vector<int> vertices;
};

// a minimal cell: no vertex lies in its relative interior
struct Edge {
    Orientation orient;
    Rational line;   // y for horizontal, x for vertical
    Rational a, b;   // span along the line, a < b
    int v0 = -1, v1 = -1;
    std::vector<int> faces;
    bool boundary = false;
};

struct Vertex {
    Rational x, y;
    std::vector<int> edges;
    VertexClass cls = VertexClass::Boundary;
};

struct TMesh {
    std::vector<Face> faces;
    std::vector<Edge> edges;
    std::vector<Vertex> vertices;
    int interior_edges = 0;
    int interior_vertices = 0;
    int crossings = 0;
    int t_junctions = 0;

    bool on_boundary(int v) const { return vertices[v].cls == VertexClass::Boundary; }
    bool interior_edge(int e) const { return !edges[e].boundary; }
};

// Rectangles are kept in input order as faces; vertices and edges are sorted
// canonically so any permutation of the input produces the same cell lists.
TMesh build_tmesh(const std::vector<Rect>& rects);

struct LeveledProfile {
    std::vector<Bidegree> face_deficit;
    std::vector<Bidegree> edge_deficit;
    std::vector<Bidegree> vertex_deficit;
    std::vector<Bidegree> deficit_set;  // ascending
    std::vector<Bidegree> levels;       // n_0 .. n_l
    std::vector<Bidegree> steps;        // steps[k] = n_{k+1} - n_k

    int ell() const { return static_cast<int>(levels.size()) - 1; }
};

std::vector<Bidegree> diagonal_first_levels(const std::vector<Bidegree>& sorted_deficits);

LeveledProfile build_profile(const TMesh& mesh, const std::vector<Bidegree>& face_deficits,
                             const std::optional<std::vector<Bidegree>>& explicit_levels = {});

struct SmoothnessOverride {
    Orientation orient;
    Rational line;
    Rational a, b;
    int r = 0;
};

struct SmoothnessProfile {
    std::vector<int> edge_r;                       // -1 on boundary edges
    std::vector<std::pair<int, int>> vertex_pair;  // (r_h, r_v); (-1,-1) on boundary vertices
};

SmoothnessProfile build_smoothness(const TMesh& mesh, int default_r,
                                   const std::vector<SmoothnessOverride>& overrides);

// Validates chain constancy of an explicit per-edge assignment and derives vertex pairs.
SmoothnessProfile smoothness_from_edges(const TMesh& mesh, std::vector<int> edge_r);

// Maximal chains of collinear interior edges joined at shared vertices.
std::vector<std::vector<int>> interior_chains(const TMesh& mesh);

}  // namespace tmdim
