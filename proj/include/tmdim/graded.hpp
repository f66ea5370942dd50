#pragma once

#include <optional>
#include <vector>

#include "tmdim/bidegree.hpp"
#include "tmdim/poly.hpp"
#include "tmdim/rational.hpp"

namespace tmdim {

using Levels = std::vector<Bidegree>;  // n_0 .. n_l

inline int pos(int x) { return x > 0 ? x : 0; }

// (m1-j+1)_+ (m2-k+1)_+
int dim_shift(Bidegree m, Bidegree shift);

// L_(l+1) is the zero ideal
int dim_L(const Levels& n, int i, Bidegree shift, Bidegree m);
int dim_M(const Levels& n, int i, Bidegree shift, Bidegree m);

int dim_edge_increment(const Levels& n, int i, Bidegree e, Bidegree m);
int dim_vertex_increment(const Levels& n, int i, Bidegree e_h, Bidegree e_v, Bidegree m);
// the two shortcut cases for the vertex increment; nullopt when neither applies
std::optional<int> vertex_increment_shortcut(const Levels& n, int i, Bidegree e_h, Bidegree e_v,
                                             Bidegree m);

// Quotient dimension (I + L_(i-1)) / (I + L_i) for I = (Delta_h u^a, Delta_v u^b) at a
// vertex, where Delta_h has bidegree e_h and Delta_v has e_v. Exact for any a, b,
// by counting monomials after a graded change of coordinates.
int vertex_quotient_dim(const Levels& n, int i, Bidegree a, Bidegree b, Bidegree e_h, Bidegree e_v,
                        Bidegree m);
// dim of the degree-m piece of (Delta_h u^a) + (Delta_v u^b)
int vertex_ideal_dim(Bidegree a, Bidegree b, Bidegree e_h, Bidegree e_v, Bidegree m);

enum class Direction { AlongS, AlongT };  // powers of (s - x u) or of (t - y v)

// sum of powers of distinct linear forms in one direction, ambient shift b
int dim_power_sum(const std::vector<int>& d, Bidegree b, Bidegree m, Direction dir);

struct PowerGenerator {
    Rational knot;
    int d = 0;
    Bidegree extra{0, 0};  // monomial factor u^extra
    Direction dir = Direction::AlongS;
};

struct LevelSelect {
    int i = 0;
    bool pair = true;  // pair: image in M_(i); otherwise the piece inside L_(i)
};

// Closed form when all generators share one extra factor, span oracle otherwise.
int dim_power_sum_in(const Levels& n, LevelSelect sel, const std::vector<PowerGenerator>& gens,
                     Bidegree b, Bidegree m);
// always via the span oracle
int dim_power_sum_in_oracle(const Levels& n, LevelSelect sel, const std::vector<PowerGenerator>& gens,
                            Bidegree b, Bidegree m);

BiPoly to_poly(const PowerGenerator& g);

}  // namespace tmdim
