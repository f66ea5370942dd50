#include "tmdim/oracle.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace tmdim {

namespace {

struct FaceGrid {
    int offset = 0;
    int A = -1, B = -1;  // caps on the s and t exponents; -1 when the face has no unknowns
    int index(int a, int b) const { return offset + a * (B + 1) + b; }
};

// rows for one edge between faces f (side 0) and g (side 1)
std::vector<SparseRow> edge_rows(const FaceGrid& f, const FaceGrid& g, bool vertical, const Rational& x0,
                                 int r) {
    std::vector<SparseRow> out;
    // "along" is the exponent of the variable crossing the edge, "other" the one along it
    auto cap_along = [&](const FaceGrid& x) { return vertical ? x.A : x.B; };
    auto cap_other = [&](const FaceGrid& x) { return vertical ? x.B : x.A; };
    int Amax = std::max(cap_along(f), cap_along(g));
    int Omax = std::max(cap_other(f), cap_other(g));
    if (Amax < 0) return out;
    const mpz_class p = x0.get_num(), q = x0.get_den();
    std::vector<mpz_class> ppow(Amax + 1), qpow(Amax + 1);
    ppow[0] = qpow[0] = 1;
    for (int k = 1; k <= Amax; ++k) {
        ppow[k] = ppow[k - 1] * p;
        qpow[k] = qpow[k - 1] * q;
    }
    for (int j = 0; j <= std::min(r, Amax); ++j)
        for (int o = 0; o <= Omax; ++o) {
            SparseRow row;
            mpz_class bin = 1;  // C(a, j)
            for (int a = j; a <= Amax; ++a) {
                if (a > j) bin = bin * a / (a - j);
                mpz_class coef = bin * ppow[a - j] * qpow[Amax - (a - j)];
                if (coef == 0) continue;
                const FaceGrid* sides[2] = {&f, &g};
                for (int s = 0; s < 2; ++s) {
                    const FaceGrid& x = *sides[s];
                    if (a > cap_along(x) || o > cap_other(x)) continue;
                    int col = vertical ? x.index(a, o) : x.index(o, a);
                    row.emplace_back(col, s == 0 ? coef : mpz_class(-coef));
                }
            }
            std::sort(row.begin(), row.end(), [](const auto& u, const auto& v) { return u.first < v.first; });
            if (!row.empty()) out.push_back(std::move(row));
        }
    return out;
}

}  // namespace

ConstraintSystem assemble_constraints(const TMesh& mesh, const LeveledProfile& profile,
                                      const SmoothnessProfile& smooth, Bidegree m, bool parallel) {
    ConstraintSystem sys;
    std::vector<FaceGrid> grid(mesh.faces.size());
    for (size_t k = 0; k < mesh.faces.size(); ++k) {
        Bidegree cap = m - profile.face_deficit[k];
        grid[k].offset = sys.unknowns;
        sys.face_offset.push_back(sys.unknowns);
        if (cap.m1 >= 0 && cap.m2 >= 0) {
            grid[k].A = cap.m1;
            grid[k].B = cap.m2;
            sys.unknowns += (cap.m1 + 1) * (cap.m2 + 1);
        }
    }
    // collinear pieces between the same two faces give identical rows
    std::vector<int> work;
    std::set<std::pair<int, int>> seen;
    for (size_t e = 0; e < mesh.edges.size(); ++e) {
        const Edge& ed = mesh.edges[e];
        if (ed.boundary) continue;
        auto key = std::minmax(ed.faces[0], ed.faces[1]);
        if (seen.insert(key).second) work.push_back(static_cast<int>(e));
    }
    std::vector<std::vector<SparseRow>> per_edge(work.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long k = 0; k < static_cast<long>(work.size()); ++k) {
        const Edge& ed = mesh.edges[work[k]];
        per_edge[k] = edge_rows(grid[ed.faces[0]], grid[ed.faces[1]], ed.orient == Orientation::Vertical,
                                ed.line, smooth.edge_r[work[k]]);
    }
    for (auto& rows : per_edge)
        for (auto& r : rows) sys.rows.push_back(std::move(r));
    return sys;
}

int oracle_spline_dim(const TMesh& mesh, const LeveledProfile& profile, const SmoothnessProfile& smooth,
                      Bidegree m, bool parallel) {
    ConstraintSystem sys = assemble_constraints(mesh, profile, smooth, m, parallel);
    return sys.unknowns - sparse_rank(std::move(sys.rows));
}

int univariate_dim(int deg, int r, int interior_knots) {
    if (deg < 0) return 0;
    if (r >= deg) return deg + 1;
    return deg + 1 + interior_knots * (deg - r);
}

}  // namespace tmdim
