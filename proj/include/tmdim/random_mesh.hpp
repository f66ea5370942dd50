#pragma once

#include <random>
#include <vector>

#include "tmdim/io.hpp"

namespace tmdim {

struct RandomMeshOptions {
    int max_faces = 12;
    int max_denominator = 8;
    std::vector<Bidegree> deficits{{0, 0}, {1, 1}};
    std::vector<int> smoothness{1, 2};
};

// Repeatedly cuts a random face of the unit square along a random rational line.
// Each maximal chain of interior edges gets its own r.
MeshDoc random_split_doc(std::mt19937_64& rng, const RandomMeshOptions& opts = {});

// k x k unit grid, all deficits (0,0), constant r
MeshDoc tensor_grid_doc(int k, int r);

// k x k grid with deficit (1,1) on a random subset of faces (at least one face keeps (0,0))
MeshDoc random_grid_doc(std::mt19937_64& rng, int k, double p_raised, int r = 1);

}  // namespace tmdim
