#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "tmdim/bidegree.hpp"
#include "tmdim/rational.hpp"

namespace tmdim {

// Bi-homogeneous polynomial in (s,u ; t,v). Only the (s,t) exponents are
// stored; the u and v exponents are implied by the bidegree.
struct BiPoly {
    Bidegree deg;
    std::vector<std::vector<mpz_class>> c;  // c[a][b] multiplies s^a t^b

    static BiPoly one();
    static BiPoly monomial_uv(Bidegree uv);       // u^a v^b
    static BiPoly power_s(const Rational& x0, int d);  // (q s - p u)^d for x0 = p/q
    static BiPoly power_t(const Rational& y0, int d);  // (q t - p v)^d for y0 = p/q

    BiPoly operator*(const BiPoly& o) const;
    bool is_zero() const;
};

struct SpanOptions {
    // multipliers must carry at least this u/v power (membership in a level ideal)
    Bidegree mult_floor{0, 0};
    // project away monomials divisible by u^drop.m1 v^drop.m2
    std::optional<Bidegree> drop;
};

// Dimension of the degree-m piece of the ideal generated by gens, or of its
// image modulo the monomial ideal named by opts.drop.
int span_dim(const std::vector<BiPoly>& gens, Bidegree m, const SpanOptions& opts = {});

}  // namespace tmdim
