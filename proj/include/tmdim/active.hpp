#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "tmdim/mesh.hpp"

namespace tmdim {

struct ActiveLevel {
    int index = 0;  // 1 .. l+1
    Bidegree threshold;  // n_(i-1)
    std::vector<char> face_active, edge_active, vertex_active;
    std::vector<int> faces, edges, vertices;
    std::vector<int> interior_edges;     // active and not on the domain boundary
    std::vector<int> interior_vertices;  // active and not on the domain boundary
    std::vector<int> boundary_trace;     // active edges lying on the domain boundary
    int c = 0;
    int h = 0;
};

ActiveLevel active_mesh(const TMesh& mesh, const LeveledProfile& profile, int i);
std::vector<ActiveLevel> all_levels(const TMesh& mesh, const LeveledProfile& profile);

// boundary matrices of the chain complex relative to the domain boundary;
// rows index the lower-dimensional cells
struct RelativeComplex {
    std::vector<std::vector<mpz_class>> d1;  // interior vertices x interior edges
    std::vector<std::vector<mpz_class>> d2;  // interior edges x faces
    int n0 = 0, n1 = 0, n2 = 0;
};

RelativeComplex relative_complex(const TMesh& mesh, const ActiveLevel& level);

struct Betti {
    int c = 0;
    int h = 0;
};
Betti relative_betti(const TMesh& mesh, const ActiveLevel& level);

struct AssumptionReport {
    bool ok = true;
    std::vector<int> levels_with_holes;
    std::string message;
};
AssumptionReport check_assumptions(const std::vector<ActiveLevel>& levels);

}  // namespace tmdim
