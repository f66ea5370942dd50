#pragma once

#include <vector>

#include "tmdim/linalg.hpp"
#include "tmdim/mesh.hpp"

namespace tmdim {

struct ConstraintSystem {
    int unknowns = 0;
    std::vector<int> face_offset;  // first unknown of each face
    std::vector<SparseRow> rows;
};

// Rows are the vanishing conditions on the first r+1 coefficients of the
// difference of neighbouring pieces, expanded around the edge line.
ConstraintSystem assemble_constraints(const TMesh& mesh, const LeveledProfile& profile,
                                      const SmoothnessProfile& smooth, Bidegree m, bool parallel = true);

int oracle_spline_dim(const TMesh& mesh, const LeveledProfile& profile, const SmoothnessProfile& smooth,
                      Bidegree m, bool parallel = true);

// Univariate C^r spline space dimension of degree deg on an interval with the
// given number of interior knots; the tensor-grid cross-check.
int univariate_dim(int deg, int r, int interior_knots);

}  // namespace tmdim
