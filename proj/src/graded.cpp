#include "tmdim/graded.hpp"

#include <map>

#include "tmdim/errors.hpp"

namespace tmdim {

namespace {

int ell_of(const Levels& n) { return static_cast<int>(n.size()) - 1; }

void check_range(const Levels& n, int i, int lo) {
    if (i < lo || i > ell_of(n) + 1)
        throw IndexOutOfRange("level index " + std::to_string(i) + " outside [" + std::to_string(lo) +
                              "," + std::to_string(ell_of(n) + 1) + "]");
}

int along(Bidegree x, Direction d) { return d == Direction::AlongS ? x.m1 : x.m2; }
int across(Bidegree x, Direction d) { return d == Direction::AlongS ? x.m2 : x.m1; }

// membership tests in the monomial picture: s'^al u^U t'^be v^V
struct Mono {
    int al, be, U, V;
};

bool in_level(const Levels& n, int j, const Mono& x) {
    if (j > ell_of(n)) return false;
    return x.U >= n[j].m1 && x.V >= n[j].m2;
}

bool in_vertex_ideal(const Mono& x, Bidegree a, Bidegree b, Bidegree e_h, Bidegree e_v) {
    bool h = x.al >= e_h.m1 && x.be >= e_h.m2 && x.U >= a.m1 && x.V >= a.m2;
    bool v = x.al >= e_v.m1 && x.be >= e_v.m2 && x.U >= b.m1 && x.V >= b.m2;
    return h || v;
}

}  // namespace

int dim_shift(Bidegree m, Bidegree shift) {
    return pos(m.m1 - shift.m1 + 1) * pos(m.m2 - shift.m2 + 1);
}

int dim_L(const Levels& n, int i, Bidegree shift, Bidegree m) {
    check_range(n, i, 0);
    if (i == ell_of(n) + 1) return 0;
    return dim_shift(m - n[i], shift);
}

int dim_M(const Levels& n, int i, Bidegree shift, Bidegree m) {
    check_range(n, i, 1);
    return dim_L(n, i - 1, shift, m) - dim_L(n, i, shift, m);
}

int dim_edge_increment(const Levels& n, int i, Bidegree e, Bidegree m) {
    check_range(n, i, 1);
    return dim_L(n, i - 1, e, m) - dim_L(n, i, e, m);
}

int dim_vertex_increment(const Levels& n, int i, Bidegree e_h, Bidegree e_v, Bidegree m) {
    check_range(n, i, 1);
    Bidegree e = e_h + e_v;
    return dim_L(n, i - 1, e_h, m) + dim_L(n, i - 1, e_v, m) + dim_L(n, i, e, m) -
           dim_L(n, i - 1, e, m) - dim_L(n, i, e_h, m) - dim_L(n, i, e_v, m);
}

std::optional<int> vertex_increment_shortcut(const Levels& n, int i, Bidegree e_h, Bidegree e_v,
                                             Bidegree m) {
    check_range(n, i, 1);
    // r along s comes from the vertical line, r along t from the horizontal one
    Bidegree r{e_v.m1 - 1, e_h.m2 - 1};
    if (i <= ell_of(n) && leq(r, m - n[i])) return dim_M(n, i, {0, 0}, m);
    if (leq(m - n[i - 1], r)) return 0;
    return std::nullopt;
}

int vertex_quotient_dim(const Levels& n, int i, Bidegree a, Bidegree b, Bidegree e_h, Bidegree e_v,
                        Bidegree m) {
    check_range(n, i, 1);
    int count = 0;
    for (int al = 0; al <= m.m1; ++al)
        for (int be = 0; be <= m.m2; ++be) {
            Mono x{al, be, m.m1 - al, m.m2 - be};
            bool I = in_vertex_ideal(x, a, b, e_h, e_v);
            count += (I || in_level(n, i - 1, x)) - (I || in_level(n, i, x));
        }
    return count;
}

int vertex_ideal_dim(Bidegree a, Bidegree b, Bidegree e_h, Bidegree e_v, Bidegree m) {
    int count = 0;
    for (int al = 0; al <= m.m1; ++al)
        for (int be = 0; be <= m.m2; ++be)
            count += in_vertex_ideal(Mono{al, be, m.m1 - al, m.m2 - be}, a, b, e_h, e_v);
    return count;
}

int dim_power_sum(const std::vector<int>& d, Bidegree b, Bidegree m, Direction dir) {
    int N = along(m - b, dir);
    int other = pos(across(m - b, dir) + 1);
    int s = 0;
    for (int dk : d) s += pos(N - dk + 1);
    return other * pos(std::min(N + 1, s));
}

BiPoly to_poly(const PowerGenerator& g) {
    BiPoly lin = g.dir == Direction::AlongS ? BiPoly::power_s(g.knot, g.d) : BiPoly::power_t(g.knot, g.d);
    return BiPoly::monomial_uv(g.extra) * lin;
}

int dim_power_sum_in_oracle(const Levels& n, LevelSelect sel, const std::vector<PowerGenerator>& gens,
                            Bidegree b, Bidegree m) {
    check_range(n, sel.i, sel.pair ? 1 : 0);
    std::vector<BiPoly> polys;
    for (const auto& g : gens) polys.push_back(to_poly(g));
    SpanOptions opts;
    if (sel.pair) {
        opts.mult_floor = n[sel.i - 1];
        if (sel.i <= ell_of(n)) opts.drop = n[sel.i];
    } else {
        if (sel.i > ell_of(n)) return 0;
        opts.mult_floor = n[sel.i];
    }
    return span_dim(polys, m - b, opts);
}

int dim_power_sum_in(const Levels& n, LevelSelect sel, const std::vector<PowerGenerator>& gens,
                     Bidegree b, Bidegree m) {
    check_range(n, sel.i, sel.pair ? 1 : 0);
    if (gens.empty()) return 0;
    Direction dir = gens[0].dir;
    for (const auto& g : gens) {
        if (g.dir != dir) throw MixedDirectionError("generators are not all powers in one direction");
        if (!(g.extra == gens[0].extra)) return dim_power_sum_in_oracle(n, sel, gens, b, m);
    }
    // a repeated knot only contributes its lowest power
    std::map<Rational, int, RationalLess> lowest;
    for (const auto& g : gens) {
        auto it = lowest.find(g.knot);
        if (it == lowest.end() || g.d < it->second) lowest[g.knot] = g.d;
    }
    Bidegree p = gens[0].extra;
    int base = sel.pair ? sel.i - 1 : sel.i;
    if (base > ell_of(n)) return 0;
    Bidegree nb = n[base];
    int D = along(m, dir) - along(b, dir) - along(nb, dir) - along(p, dir);
    int sum = 0;
    for (auto& [knot, dk] : lowest) sum += pos(D - dk + 1);
    int P = pos(std::min(D + 1, sum));
    int Bp = pos(across(m, dir) - across(b, dir) - across(nb, dir) - across(p, dir) + 1);
    if (!sel.pair || sel.i == ell_of(n) + 1) return P * Bp;
    // the part landing in L_(i): one extra power of u or v is needed along each
    // axis where the level step exceeds the monomial factor
    Bidegree dn = n[sel.i] - n[sel.i - 1];
    int Pq = along(p, dir) >= along(dn, dir) ? P : P - (P > 0);
    int Bq = across(p, dir) >= across(dn, dir) ? Bp : pos(Bp - 1);
    return P * Bp - Pq * Bq;
}

}  // namespace tmdim
