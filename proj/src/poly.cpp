#include "tmdim/poly.hpp"

#include <algorithm>

#include "tmdim/linalg.hpp"

namespace tmdim {

namespace {

std::vector<mpz_class> binomial_row(const mpz_class& lead, const mpz_class& tail, int d) {
    // coefficients of (lead*x - tail*y)^d indexed by the x exponent
    std::vector<mpz_class> out(d + 1);
    mpz_class bin = 1;
    for (int k = 0; k <= d; ++k) {
        mpz_class lp, tp;
        mpz_pow_ui(lp.get_mpz_t(), lead.get_mpz_t(), k);
        mpz_pow_ui(tp.get_mpz_t(), tail.get_mpz_t(), d - k);
        out[k] = bin * lp * tp;
        if ((d - k) % 2) out[k] = -out[k];
        bin = bin * (d - k) / (k + 1);
    }
    return out;
}

}  // namespace

BiPoly BiPoly::one() { return BiPoly{{0, 0}, {{1}}}; }

BiPoly BiPoly::monomial_uv(Bidegree uv) {
    BiPoly p;
    p.deg = uv;
    p.c.assign(uv.m1 + 1, std::vector<mpz_class>(uv.m2 + 1, 0));
    p.c[0][0] = 1;
    return p;
}

BiPoly BiPoly::power_s(const Rational& x0, int d) {
    auto row = binomial_row(x0.get_den(), x0.get_num(), d);
    BiPoly p;
    p.deg = {d, 0};
    p.c.assign(d + 1, std::vector<mpz_class>(1));
    for (int a = 0; a <= d; ++a) p.c[a][0] = row[a];
    return p;
}

BiPoly BiPoly::power_t(const Rational& y0, int d) {
    auto row = binomial_row(y0.get_den(), y0.get_num(), d);
    BiPoly p;
    p.deg = {0, d};
    p.c.assign(1, row);
    return p;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    BiPoly r;
    r.deg = deg + o.deg;
    r.c.assign(r.deg.m1 + 1, std::vector<mpz_class>(r.deg.m2 + 1, 0));
    for (size_t a = 0; a < c.size(); ++a)
        for (size_t b = 0; b < c[a].size(); ++b) {
            if (c[a][b] == 0) continue;
            for (size_t x = 0; x < o.c.size(); ++x)
                for (size_t y = 0; y < o.c[x].size(); ++y)
                    if (o.c[x][y] != 0) r.c[a + x][b + y] += c[a][b] * o.c[x][y];
        }
    return r;
}

bool BiPoly::is_zero() const {
    for (auto& row : c)
        for (auto& v : row)
            if (v != 0) return false;
    return true;
}

int span_dim(const std::vector<BiPoly>& gens, Bidegree m, const SpanOptions& opts) {
    if (m.m1 < 0 || m.m2 < 0) return 0;
    const int W = m.m2 + 1;
    auto dropped = [&](int a, int b) {
        return opts.drop && m.m1 - a >= opts.drop->m1 && m.m2 - b >= opts.drop->m2;
    };
    std::vector<SparseRow> rows;
    for (const BiPoly& g : gens) {
        Bidegree k = m - g.deg;
        // multiplier s^al u^(k1-al) t^be v^(k2-be) with u/v powers above the floor
        int amax = k.m1 - opts.mult_floor.m1;
        int bmax = k.m2 - opts.mult_floor.m2;
        if (amax < 0 || bmax < 0) continue;
        for (int al = 0; al <= amax; ++al)
            for (int be = 0; be <= bmax; ++be) {
                SparseRow row;
                for (size_t a = 0; a < g.c.size(); ++a)
                    for (size_t b = 0; b < g.c[a].size(); ++b) {
                        if (g.c[a][b] == 0) continue;
                        int A = static_cast<int>(a) + al, B = static_cast<int>(b) + be;
                        if (dropped(A, B)) continue;
                        row.emplace_back(A * W + B, g.c[a][b]);
                    }
                std::sort(row.begin(), row.end(),
                          [](const auto& x, const auto& y) { return x.first < y.first; });
                if (!row.empty()) rows.push_back(std::move(row));
            }
    }
    return sparse_rank(std::move(rows));
}

}  // namespace tmdim
