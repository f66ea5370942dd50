#include "tmdim/bounds.hpp"

#include <exception>
#include <sstream>

#include "tmdim/errors.hpp"
#include "tmdim/graded.hpp"
#include "tmdim/oracle.hpp"

namespace tmdim {

namespace {

struct VertexData {
    Bidegree a, b;      // smallest deficits among horizontal / vertical edges at the vertex
    Bidegree e_h, e_v;  // bidegrees of the two difference forms
};

VertexData vertex_data(const TMesh& mesh, const LeveledProfile& profile, const SmoothnessProfile& smooth, int v) {
    VertexData out;
    bool have_h = false, have_v = false;
    for (int e : mesh.vertices[v].edges) {
        const Bidegree d = profile.edge_deficit[e];
        if (mesh.edges[e].orient == Orientation::Horizontal) {
            out.a = have_h ? bmin(out.a, d) : d;
            have_h = true;
        } else {
            out.b = have_v ? bmin(out.b, d) : d;
            have_v = true;
        }
    }
    auto [rh, rv] = smooth.vertex_pair[v];
    out.e_h = {0, rv + 1};
    out.e_v = {rh + 1, 0};
    return out;
}

Bidegree edge_shift(const Edge& e, int r) {
    return e.orient == Orientation::Horizontal ? Bidegree{0, r + 1} : Bidegree{r + 1, 0};
}

std::string segment_label(const MaxSegment& s) {
    std::ostringstream os;
    os << (s.orient == Orientation::Horizontal ? "H y=" : "V x=") << to_string(s.line) << " [" << to_string(s.a)
       << "," << to_string(s.b) << "]";
    return os.str();
}

}  // namespace

EulerParts euler_characteristic(const TMesh& mesh, const LeveledProfile& profile, const SmoothnessProfile& smooth,
                                const std::vector<ActiveLevel>& levels, Bidegree m) {
    const Levels& n = profile.levels;
    EulerParts out;
    for (const ActiveLevel& lv : levels) {
        const int i = lv.index;
        const Bidegree nprev = n[i - 1];
        const long dm = dim_M(n, i, {0, 0}, m);
        long chi = static_cast<long>(lv.faces.size()) * dm;
        for (int e : lv.interior_edges)
            chi -= dm - dim_edge_increment(n, i, edge_shift(mesh.edges[e], smooth.edge_r[e]), m);
        for (int v : lv.interior_vertices) {
            VertexData vd = vertex_data(mesh, profile, smooth, v);
            if (leq(vd.a, nprev) && leq(vd.b, nprev))
                chi += dm - dim_vertex_increment(n, i, vd.e_h, vd.e_v, m);
            else
                chi += vertex_quotient_dim(n, i, vd.a, vd.b, vd.e_h, vd.e_v, m);
        }
        out.per_level.push_back(chi);
        out.chi += chi;
    }

    long direct = 0;
    for (size_t f = 0; f < mesh.faces.size(); ++f) direct += dim_shift(m, profile.face_deficit[f]);
    for (size_t e = 0; e < mesh.edges.size(); ++e) {
        if (mesh.edges[e].boundary) continue;
        Bidegree d = profile.edge_deficit[e];
        direct -= dim_shift(m, d) - dim_shift(m, d + edge_shift(mesh.edges[e], smooth.edge_r[e]));
    }
    for (size_t v = 0; v < mesh.vertices.size(); ++v) {
        if (mesh.on_boundary(static_cast<int>(v))) continue;
        VertexData vd = vertex_data(mesh, profile, smooth, static_cast<int>(v));
        long ideal = dim_shift(m, vd.a + vd.e_h) + dim_shift(m, vd.b + vd.e_v) -
                     dim_shift(m, bmax(vd.a, vd.b) + vd.e_h + vd.e_v);
        direct += dim_shift(m, profile.vertex_deficit[v]) - ideal;
    }
    out.chi_direct = direct;
    if (out.chi != out.chi_direct)
        throw DecompositionMismatch("Euler characteristic: level sum " + std::to_string(out.chi) +
                                    " but direct count " + std::to_string(out.chi_direct) + " at m=" +
                                    to_string(m));
    return out;
}

EulerParts euler_characteristic(const TMesh& mesh, const LeveledProfile& profile, const SmoothnessProfile& smooth,
                                Bidegree m) {
    return euler_characteristic(mesh, profile, smooth, all_levels(mesh, profile), m);
}

ConstantDims constant_complex_dims(const LeveledProfile& profile, const ActiveLevel& level, Bidegree m) {
    ConstantDims out;
    const long dm = dim_M(profile.levels, level.index, {0, 0}, m);
    out.h0 = level.c * dm;
    out.h1 = level.h * dm;
    if (level.index == profile.ell() + 1) out.h2 = dim_L(profile.levels, profile.ell(), {0, 0}, m);
    return out;
}

// the top level needs no check: c vanishes there, so H_0 of the quotient does too
Config1 configuration1(const TMesh& mesh, const LeveledProfile& profile, const SmoothnessProfile& smooth,
                       const std::vector<ActiveLevel>& levels, Bidegree m) {
    (void)mesh;
    Config1 out;
    const int ell = profile.ell();
    for (const ActiveLevel& lv : levels) {
        if (lv.index > ell) continue;
        Bidegree room = m - profile.levels[lv.index];
        for (int v : lv.interior_vertices) {
            auto [rh, rv] = smooth.vertex_pair[v];
            if (room.m1 < rh || room.m2 < rv) {
                out.holds = false;
                out.failing_levels.push_back(lv.index);
                break;
            }
        }
    }
    return out;
}

DimReport bounds(const TMesh& mesh, const LeveledProfile& profile, const SmoothnessProfile& smooth, Bidegree m,
                 const BoundsOptions& opts) {
    DimReport rep;
    rep.m = m;
    std::vector<ActiveLevel> levels = all_levels(mesh, profile);
    EulerParts chi = euler_characteristic(mesh, profile, smooth, levels, m);
    rep.chi = chi.chi;
    rep.chi_direct = chi.chi_direct;

    AssumptionReport ar = check_assumptions(levels);
    rep.assumptions_ok = ar.ok;
    rep.diagnostics = ar.message;
    if (opts.with_oracle) rep.oracle = oracle_spline_dim(mesh, profile, smooth, m, opts.parallel);

    const int ell = profile.ell();
    for (const ActiveLevel& lv : levels) {
        LevelRow row;
        row.i = lv.index;
        row.c = lv.c;
        row.h = lv.h;
        row.dim_m = dim_M(profile.levels, lv.index, {0, 0}, m);
        row.chi = chi.per_level[lv.index - 1];
        row.h0_c = lv.c * row.dim_m;
        if (lv.index == ell + 1) rep.h2 = constant_complex_dims(profile, lv, m).h2;
        if (ar.ok) {
            SegmentOptions so = opts.segments;
            if (auto it = opts.input_orders.find(lv.index); it != opts.input_orders.end()) so.input_order = it->second;
            LevelAnalysis la = analyze_level(mesh, profile, smooth, lv, m, so);
            row.h0_upper = la.h0_upper;
            row.h0_plain = la.h0_plain;
            row.interior_segments = static_cast<int>(la.order.size());
            bool first = true;
            std::string ord;
            for (const SegmentRow& sr : la.rows) {
                int slack = sr.weight - sr.threshold;
                if (first || slack < row.min_weight_slack) row.min_weight_slack = slack;
                if (!first) ord += " < ";
                ord += segment_label(la.segments[sr.seg]);
                first = false;
            }
            row.ordering = ord;
        }
        rep.rows.push_back(row);
    }
    if (!ar.ok) return rep;

    Config1 c1 = configuration1(mesh, profile, smooth, levels, m);
    rep.config1 = c1.holds;
    long sum_c = 0, excess = 0;
    bool tight = true;
    for (const LevelRow& row : rep.rows) {
        sum_c += row.h0_c;
        excess += row.h0_upper - row.h0_c;
        if (row.h0_upper != row.h0_c) tight = false;
    }
    rep.lower_general = rep.chi - sum_c;
    if (c1.holds) rep.lower_special = rep.chi;
    long upper = rep.chi + excess;
    long floor = rep.lower_special ? *rep.lower_special : *rep.lower_general;
    if (upper < floor) {
        upper = floor;
        rep.upper_clamped = true;
    }
    rep.upper = upper;
    rep.certified = c1.holds && tight;
    if (rep.certified) rep.exact = rep.chi;
    return rep;
}

Certification certify_stable(const DimReport& report) {
    Certification out;
    out.certified = report.certified;
    out.exact = report.exact;
    if (report.upper) out.slack = *report.upper - report.chi;
    for (const LevelRow& row : report.rows) out.level_slack.push_back(row.h0_upper - row.h0_c);
    return out;
}

void require_assumptions(const DimReport& report) {
    if (!report.assumptions_ok)
        throw AssumptionViolated(report.diagnostics.empty() ? "active region has holes" : report.diagnostics);
}

std::vector<DimReport> sweep(const TMesh& mesh, const LeveledProfile& profile, const SmoothnessProfile& smooth,
                             const std::vector<Bidegree>& degrees, const BoundsOptions& opts) {
    std::vector<DimReport> out(degrees.size());
    std::vector<std::exception_ptr> errors(degrees.size());
    BoundsOptions inner = opts;
    inner.parallel = false;  // one level of parallelism is enough
#pragma omp parallel for schedule(dynamic) if (opts.parallel)
    for (long k = 0; k < static_cast<long>(degrees.size()); ++k) {
        try {
            out[k] = bounds(mesh, profile, smooth, degrees[k], inner);
        } catch (...) {
            errors[k] = std::current_exception();
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

std::vector<Bidegree> parse_degree_range(const std::string& text) {
    auto parse_pair = [&](const std::string& s) {
        auto comma = s.find(',');
        if (comma == std::string::npos) throw ParseError("degree '" + s + "' must be m1,m2");
        try {
            size_t used1 = 0, used2 = 0;
            int a = std::stoi(s.substr(0, comma), &used1);
            int b = std::stoi(s.substr(comma + 1), &used2);
            if (used1 != comma || used2 != s.size() - comma - 1) throw std::invalid_argument(s);
            if (a < 0 || b < 0) throw ParseError("negative degree in '" + s + "'");
            return Bidegree{a, b};
        } catch (const std::logic_error&) {
            throw ParseError("degree '" + s + "' must be m1,m2");
        }
    };
    auto colon = text.find(':');
    Bidegree lo = parse_pair(text.substr(0, colon));
    Bidegree hi = colon == std::string::npos ? lo : parse_pair(text.substr(colon + 1));
    if (!leq(lo, hi)) throw ParseError("degree range '" + text + "' is empty");
    std::vector<Bidegree> out;
    for (int b = lo.m2; b <= hi.m2; ++b)
        for (int a = lo.m1; a <= hi.m1; ++a) out.push_back({a, b});
    return out;
}

}  // namespace tmdim
