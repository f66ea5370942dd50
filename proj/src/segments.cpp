#include "tmdim/segments.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "tmdim/errors.hpp"
#include "tmdim/linalg.hpp"

namespace tmdim {

namespace {

using Cache = std::map<std::string, int>;

bool horizontal(const MaxSegment& s) { return s.orient == Orientation::Horizontal; }

// generators perpendicular to rho move along s when rho is horizontal
Direction perpendicular_dir(const MaxSegment& rho) {
    return horizontal(rho) ? Direction::AlongS : Direction::AlongT;
}

int comp(Bidegree b, const MaxSegment& rho) { return horizontal(rho) ? b.m1 : b.m2; }

std::string cache_key(int i, Bidegree b, Bidegree m, std::vector<PowerGenerator> gens) {
    std::sort(gens.begin(), gens.end(), [](const PowerGenerator& x, const PowerGenerator& y) {
        if (x.d != y.d) return x.d < y.d;
        if (x.extra.m1 != y.extra.m1) return x.extra.m1 < y.extra.m1;
        if (x.extra.m2 != y.extra.m2) return x.extra.m2 < y.extra.m2;
        return cmp(x.knot, y.knot) < 0;
    });
    std::ostringstream os;
    os << i << '|' << b.m1 << ',' << b.m2 << '|' << m.m1 << ',' << m.m2 << '|' << int(gens.empty() ? 0 : (int)gens[0].dir);
    for (auto& g : gens) os << ';' << g.d << ',' << g.extra.m1 << ',' << g.extra.m2 << ',' << g.knot.get_str();
    return os.str();
}

int cached_power_sum(Cache& cache, const Levels& n, int i, const std::vector<PowerGenerator>& gens, Bidegree b,
                     Bidegree m) {
    if (gens.empty()) return 0;
    std::string key = cache_key(i, b, m, gens);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    int v = dim_power_sum_in(n, {i, true}, gens, b, m);
    cache.emplace(std::move(key), v);
    return v;
}

PowerGenerator generator_of(const MaxSegment& s, Bidegree extra, Direction dir) {
    return PowerGenerator{s.line, s.r + 1, extra, dir};
}

LevelAnalysis analyze_impl(const LeveledProfile& profile, const ActiveLevel& level,
                           const std::vector<MaxSegment>& segs, const std::vector<int>& order, Bidegree m,
                           bool exact_upsilon, Cache& cache) {
    const Levels& n = profile.levels;
    const int i = level.index;
    const int ell = profile.ell();
    const Bidegree nprev = n[i - 1];
    const int S = static_cast<int>(segs.size());

    LevelAnalysis out;
    out.level = i;
    out.order = order;
    std::vector<int> rank(S, -1);
    for (size_t k = 0; k < order.size(); ++k) rank[order[k]] = static_cast<int>(k);

    std::vector<std::vector<char>> meet(S, std::vector<char>(S, 0));
    for (int p = 0; p < S; ++p)
        for (int q = 0; q < S; ++q) meet[p][q] = segments_meet(segs[p], segs[q]);

    std::vector<SegmentRow> rows(order.size());
    for (size_t k = 0; k < order.size(); ++k) {
        int rho = order[k];
        SegmentRow& row = rows[k];
        row.seg = rho;
        row.rank = static_cast<int>(k);
        for (int q = 0; q < S; ++q)
            if (meet[rho][q] && (!segs[q].interior || rank[q] < rank[rho])) row.gamma.push_back(q);
        if (i > ell) continue;
        for (int r1 : order) {
            if (r1 == rho || segs[r1].orient != segs[rho].orient) continue;
            if (rank[r1] >= rank[rho] || segs[rho].r < segs[r1].r) continue;
            for (int r2 : order)
                if (meet[rho][r2] && meet[r1][r2]) row.upsilon.emplace_back(r1, r2);
        }
    }

    // Theta: the best qualifying Upsilon subset takes every pair whose first
    // element is at most some rank, so scan those thresholds upward
    std::vector<std::vector<std::pair<int, int>>> theta(S);
    std::vector<char> qualified(S, 0);
    if (i <= ell) {
        for (auto& row : rows) {
            const MaxSegment& R = segs[row.seg];
            std::vector<int> firsts;
            for (auto& [r1, r2] : row.upsilon) firsts.push_back(r1);
            std::sort(firsts.begin(), firsts.end(), [&](int x, int y) { return rank[x] < rank[y]; });
            firsts.erase(std::unique(firsts.begin(), firsts.end()), firsts.end());
            int bound = -2;
            for (int f : firsts) {
                std::set<int> seconds;
                for (auto& [r1, r2] : row.upsilon)
                    if (rank[r1] <= rank[f]) seconds.insert(r2);
                bool ok;
                if (exact_upsilon) {
                    std::vector<PowerGenerator> gens;
                    for (int s2 : seconds) gens.push_back(generator_of(segs[s2], {0, 0}, perpendicular_dir(R)));
                    Bidegree b = R.e + R.dp;
                    ok = cached_power_sum(cache, n, i, gens, b, m) == dim_M(n, i, b, m);
                } else {
                    int md = comp(m, R) - comp(n[i], R);
                    int sum = 0;
                    for (int s2 : seconds) sum += pos(md - segs[s2].r);
                    ok = sum >= md + 1;
                }
                if (ok) {
                    bound = rank[f];
                    break;
                }
            }
            if (bound == -2) continue;
            qualified[row.seg] = 1;
            row.upsilon_qualified = true;
            for (int a : order)
                for (int b : order)
                    if (meet[row.seg][a] && meet[row.seg][b] && segs[b].r >= segs[a].r && rank[b] > rank[a] &&
                        rank[a] > bound)
                        theta[row.seg].emplace_back(a, b);
            row.theta = theta[row.seg];
        }
    }

    for (auto& row : rows) {
        const int rho = row.seg;
        const MaxSegment& R = segs[rho];
        std::set<int> lambda(row.gamma.begin(), row.gamma.end());
        for (int q = 0; q < S; ++q)
            for (auto& [a, b] : theta[q]) {
                if (b == rho) lambda.insert(q);
                if (a == rho && segs[q].dp == Bidegree{0, 0}) lambda.insert(q);
            }
        row.lambda.assign(lambda.begin(), lambda.end());
        int md = comp(m, R) - comp(nprev, R);
        for (int q : row.lambda) row.weight += pos(md - segs[q].r);
        row.threshold = md + 1;

        row.dim_m = dim_M(n, i, R.e, m);
        Direction dir = perpendicular_dir(R);
        std::vector<PowerGenerator> plain, full;
        for (int q : row.gamma) plain.push_back(generator_of(segs[q], {0, 0}, dir));
        for (int q : row.lambda) full.push_back(generator_of(segs[q], {0, 0}, dir));
        std::set<int> seconds;
        for (auto& [r1, r2] : row.upsilon) seconds.insert(r2);
        for (int q : seconds) full.push_back(generator_of(segs[q], R.dp, dir));
        row.dim_d_plain = std::min(row.dim_m, cached_power_sum(cache, n, i, plain, R.e, m));
        if (row.weight >= row.threshold)
            row.dim_d = row.dim_m;
        else
            row.dim_d = std::min(row.dim_m, cached_power_sum(cache, n, i, full, R.e, m));
        out.h0_upper += row.dim_m - row.dim_d;
        out.h0_plain += row.dim_m - row.dim_d_plain;
    }
    out.rows = std::move(rows);
    out.segments = segs;
    return out;
}

std::vector<int> greedy_order(const LeveledProfile& profile, const ActiveLevel& level,
                              const std::vector<MaxSegment>& segs, const std::vector<int>& interior, Bidegree m) {
    const Bidegree nprev = profile.levels[level.index - 1];
    std::vector<int> order;
    std::vector<char> placed(segs.size(), 0);
    std::vector<int> left = interior;
    while (!left.empty()) {
        int best = -1, best_w = -1;
        for (int c : left) {
            int md = comp(m, segs[c]) - comp(nprev, segs[c]);
            int w = 0;
            for (size_t q = 0; q < segs.size(); ++q)
                if (segments_meet(segs[c], segs[q]) && (!segs[q].interior || placed[q]))
                    w += pos(md - segs[q].r);
            if (w > best_w) {
                best_w = w;
                best = c;
            }
        }
        order.push_back(best);
        placed[best] = 1;
        left.erase(std::find(left.begin(), left.end(), best));
    }
    return order;
}

}  // namespace

std::vector<MaxSegment> maximal_segments(const TMesh& mesh, const LeveledProfile& profile,
                                         const SmoothnessProfile& smooth, const ActiveLevel& level) {
    const auto& ids = level.interior_edges;
    std::vector<int> parent(ids.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    std::map<int, std::vector<int>> at_vertex;
    for (size_t k = 0; k < ids.size(); ++k) {
        at_vertex[mesh.edges[ids[k]].v0].push_back(static_cast<int>(k));
        at_vertex[mesh.edges[ids[k]].v1].push_back(static_cast<int>(k));
    }
    for (auto& [v, ks] : at_vertex)
        for (size_t x = 0; x < ks.size(); ++x)
            for (size_t y = x + 1; y < ks.size(); ++y)
                if (mesh.edges[ids[ks[x]]].orient == mesh.edges[ids[ks[y]]].orient) parent[find(ks[x])] = find(ks[y]);
    std::map<int, std::vector<int>> groups;
    for (size_t k = 0; k < ids.size(); ++k) groups[find(static_cast<int>(k))].push_back(ids[k]);

    const int i = level.index;
    Bidegree step = i <= profile.ell() ? profile.steps[i - 1] : Bidegree{0, 0};
    std::vector<MaxSegment> out;
    for (auto& [root, es] : groups) {
        MaxSegment s;
        const Edge& e0 = mesh.edges[es[0]];
        s.orient = e0.orient;
        s.line = e0.line;
        s.a = e0.a;
        s.b = e0.b;
        s.interior = true;
        for (int e : es) {
            const Edge& ed = mesh.edges[e];
            if (ed.a < s.a) s.a = ed.a;
            if (ed.b > s.b) s.b = ed.b;
            if (mesh.on_boundary(ed.v0) || mesh.on_boundary(ed.v1)) s.interior = false;
        }
        std::sort(es.begin(), es.end());
        s.edges = es;
        s.r = smooth.edge_r[es[0]];
        if (s.orient == Orientation::Horizontal) {
            s.e = {0, s.r + 1};
            s.dp = {step.m1, 0};
        } else {
            s.e = {s.r + 1, 0};
            s.dp = {0, step.m2};
        }
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const MaxSegment& p, const MaxSegment& q) {
        if (p.orient != q.orient) return p.orient < q.orient;
        if (int c = cmp(p.line, q.line)) return c < 0;
        return cmp(p.a, q.a) < 0;
    });
    return out;
}

bool segments_meet(const MaxSegment& p, const MaxSegment& q) {
    if (p.orient == q.orient) return false;
    const MaxSegment& h = horizontal(p) ? p : q;
    const MaxSegment& v = horizontal(p) ? q : p;
    return h.a <= v.line && v.line <= h.b && v.a <= h.line && h.line <= v.b;
}

OrderingStrategy parse_strategy(const std::string& s) {
    if (s == "input") return OrderingStrategy::Input;
    if (s == "greedy") return OrderingStrategy::Greedy;
    if (s == "exhaustive") return OrderingStrategy::Exhaustive;
    if (s == "auto") return OrderingStrategy::Auto;
    throw ParseError("unknown ordering strategy '" + s + "'");
}

const char* to_string(OrderingStrategy s) {
    switch (s) {
        case OrderingStrategy::Input: return "input";
        case OrderingStrategy::Greedy: return "greedy";
        case OrderingStrategy::Exhaustive: return "exhaustive";
        case OrderingStrategy::Auto: return "auto";
    }
    return "?";
}

LevelAnalysis analyze_with_order(const LeveledProfile& profile, const ActiveLevel& level,
                                 std::vector<MaxSegment> segments, std::vector<int> order, Bidegree m,
                                 bool exact_upsilon) {
    Cache cache;
    return analyze_impl(profile, level, segments, order, m, exact_upsilon, cache);
}

LevelAnalysis analyze_level(const TMesh& mesh, const LeveledProfile& profile, const SmoothnessProfile& smooth,
                            const ActiveLevel& level, Bidegree m, const SegmentOptions& opts) {
    std::vector<MaxSegment> segs = maximal_segments(mesh, profile, smooth, level);
    std::vector<int> interior;
    for (size_t k = 0; k < segs.size(); ++k)
        if (segs[k].interior) interior.push_back(static_cast<int>(k));
    Cache cache;

    OrderingStrategy strat = opts.strategy;
    if (strat == OrderingStrategy::Auto) {
        SegmentOptions search = opts;
        search.strategy = static_cast<int>(interior.size()) <= kExhaustiveLimit ? OrderingStrategy::Exhaustive
                                                                                : OrderingStrategy::Greedy;
        LevelAnalysis best = analyze_level(mesh, profile, smooth, level, m, search);
        if (opts.input_order) {
            search.strategy = OrderingStrategy::Input;
            LevelAnalysis given = analyze_level(mesh, profile, smooth, level, m, search);
            if (given.h0_upper <= best.h0_upper) return given;
        }
        return best;
    }
    if (strat == OrderingStrategy::Input) {
        std::vector<int> order;
        if (opts.input_order) {
            for (const SegmentKey& key : *opts.input_order)
                for (int s : interior)
                    if (segs[s].orient == key.orient && segs[s].line == key.line && segs[s].a == key.start &&
                        std::find(order.begin(), order.end(), s) == order.end())
                        order.push_back(s);
        }
        for (int s : interior)
            if (std::find(order.begin(), order.end(), s) == order.end()) order.push_back(s);
        return analyze_impl(profile, level, segs, order, m, opts.exact_upsilon, cache);
    }
    if (strat == OrderingStrategy::Greedy)
        return analyze_impl(profile, level, segs, greedy_order(profile, level, segs, interior, m), m,
                            opts.exact_upsilon, cache);

    if (static_cast<int>(interior.size()) > kExhaustiveLimit)
        throw TooManyForExhaustive(std::to_string(interior.size()) + " interior segments at level " +
                                   std::to_string(level.index) + ", limit " + std::to_string(kExhaustiveLimit));
    std::vector<int> perm = interior;
    LevelAnalysis best;
    bool have = false;
    long tried = 0;
    do {
        ++tried;
        LevelAnalysis cur = analyze_impl(profile, level, segs, perm, m, opts.exact_upsilon, cache);
        if (!have || cur.h0_upper < best.h0_upper) {
            best = std::move(cur);
            have = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    best.orderings_tried = tried;
    return best;
}

int h0_ideal_exact(const TMesh& mesh, const LeveledProfile& profile, const SmoothnessProfile& smooth,
                   const ActiveLevel& level, Bidegree m) {
    const Levels& n = profile.levels;
    const int i = level.index;
    const bool top = i > profile.ell();
    const Bidegree lo = n[i - 1];
    std::vector<MaxSegment> segs = maximal_segments(mesh, profile, smooth, level);

    auto in_quotient = [&](Bidegree deg, int a, int b) {
        int U = deg.m1 - a, V = deg.m2 - b;
        if (U < lo.m1 || V < lo.m2) return false;
        return top || U < n[i].m1 || V < n[i].m2;
    };
    // column blocks for interior segments
    std::vector<std::map<std::pair<int, int>, int>> col(segs.size());
    int ncols = 0;
    for (size_t k = 0; k < segs.size(); ++k) {
        if (!segs[k].interior) continue;
        Bidegree deg = m - segs[k].e;
        for (int a = 0; a <= deg.m1; ++a)
            for (int b = 0; b <= deg.m2; ++b)
                if (in_quotient(deg, a, b)) col[k][{a, b}] = ncols++;
    }
    if (ncols == 0) return 0;

    auto delta = [&](const MaxSegment& s) {
        return horizontal(s) ? BiPoly::power_t(s.line, s.r + 1) : BiPoly::power_s(s.line, s.r + 1);
    };
    IntegerEchelon ech;
    for (size_t p = 0; p < segs.size(); ++p)
        for (size_t q = 0; q < segs.size(); ++q) {
            const MaxSegment& h = segs[p];
            const MaxSegment& v = segs[q];
            if (!horizontal(h) || horizontal(v) || !segments_meet(h, v)) continue;
            if (!h.interior && !v.interior) continue;
            Bidegree eg = h.e + v.e;
            Bidegree k = m - eg;
            if (k.m1 < lo.m1 || k.m2 < lo.m2) continue;
            BiPoly dh = delta(h), dv = delta(v);
            for (int al = 0; al <= k.m1 - lo.m1; ++al)
                for (int be = 0; be <= k.m2 - lo.m2; ++be) {
                    std::map<int, mpz_class> acc;
                    // e_h * Delta_v * mono lives in the block of h, minus e_v * Delta_h * mono
                    auto spill = [&](size_t seg, const BiPoly& d, int sign) {
                        if (!segs[seg].interior) return;
                        Bidegree deg = m - segs[seg].e;
                        for (size_t a = 0; a < d.c.size(); ++a)
                            for (size_t b = 0; b < d.c[a].size(); ++b) {
                                if (d.c[a][b] == 0) continue;
                                int A = static_cast<int>(a) + al, B = static_cast<int>(b) + be;
                                if (!in_quotient(deg, A, B)) continue;
                                acc[col[seg].at({A, B})] += sign * d.c[a][b];
                            }
                    };
                    spill(p, dv, 1);
                    spill(q, dh, -1);
                    SparseRow row;
                    for (auto& [c, v2] : acc)
                        if (v2 != 0) row.emplace_back(c, v2);
                    if (!row.empty()) ech.add(std::move(row));
                }
        }
    return ncols - ech.rank();
}

}  // namespace tmdim
