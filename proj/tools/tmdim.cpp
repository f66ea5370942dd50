#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tmdim/bounds.hpp"
#include "tmdim/errors.hpp"
#include "tmdim/io.hpp"
#include "tmdim/oracle.hpp"
#include "tmdim/svg.hpp"

using namespace tmdim;
using Json = nlohmann::ordered_json;

namespace {

struct Common {
    std::string mesh_path;
    std::string degrees = "3,3";
    std::string ordering = "auto";
    std::string report = "text";
    bool with_oracle = false;
    bool serial = false;
    std::string out;
};

void emit(const Common& c, const std::string& text) {
    if (c.out.empty())
        std::cout << text;
    else
        atomic_write(c.out, text);
}

BoundsOptions options_for(const Common& c, const MeshInput& in) {
    BoundsOptions o;
    o.segments.strategy = parse_strategy(c.ordering);
    o.input_orders = in.doc.segment_order;
    o.with_oracle = c.with_oracle;
    o.parallel = !c.serial;
    return o;
}

const char* orient_name(Orientation o) { return o == Orientation::Horizontal ? "h" : "v"; }

int cmd_analyze(const Common& c) {
    MeshInput in = parse_mesh_file(c.mesh_path);
    auto levels = all_levels(in.mesh, in.profile);
    AssumptionReport ar = check_assumptions(levels);
    Json j;
    j["faces"] = in.mesh.faces.size();
    j["edges"] = in.mesh.edges.size();
    j["vertices"] = in.mesh.vertices.size();
    j["interior_edges"] = in.mesh.interior_edges;
    j["interior_vertices"] = in.mesh.interior_vertices;
    j["crossings"] = in.mesh.crossings;
    j["t_junctions"] = in.mesh.t_junctions;
    Json seq = Json::array();
    for (Bidegree b : in.profile.levels) seq.push_back({b.m1, b.m2});
    j["levels"] = seq;
    Json lv = Json::array();
    for (const ActiveLevel& L : levels) {
        Json segs = Json::array();
        for (const MaxSegment& s : maximal_segments(in.mesh, in.profile, in.smooth, L))
            segs.push_back({{"orientation", orient_name(s.orient)},
                            {"line", to_string(s.line)},
                            {"span", {to_string(s.a), to_string(s.b)}},
                            {"r", s.r},
                            {"interior", s.interior}});
        lv.push_back({{"i", L.index},
                      {"threshold", {L.threshold.m1, L.threshold.m2}},
                      {"faces", L.faces.size()},
                      {"interior_edges", L.interior_edges.size()},
                      {"interior_vertices", L.interior_vertices.size()},
                      {"c", L.c},
                      {"h", L.h},
                      {"segments", segs}});
    }
    j["active_levels"] = lv;
    j["assumptions_ok"] = ar.ok;
    j["diagnostics"] = ar.message;
    if (c.report == "machine") {
        emit(c, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "mesh: " << in.mesh.faces.size() << " faces, " << in.mesh.interior_edges << " interior edges, "
           << in.mesh.interior_vertices << " interior vertices (" << in.mesh.crossings << " crossings, "
           << in.mesh.t_junctions << " T-junctions)\n";
        os << "levels:";
        for (Bidegree b : in.profile.levels) os << " " << to_string(b);
        os << "\n";
        for (const auto& L : j["active_levels"]) {
            os << "level " << L["i"].get<int>() << ": " << L["faces"].get<int>() << " faces, c=" << L["c"].get<int>()
               << " h=" << L["h"].get<int>() << "\n";
            for (const auto& s : L["segments"])
                os << "  " << s["orientation"].get<std::string>() << " " << s["line"].get<std::string>() << " ["
                   << s["span"][0].get<std::string>() << "," << s["span"][1].get<std::string>()
                   << "] r=" << s["r"].get<int>() << (s["interior"].get<bool>() ? " interior" : "") << "\n";
        }
        os << "assumptions: " << (ar.ok ? "ok" : ar.message) << "\n";
        emit(c, os.str());
    }
    return ar.ok ? 0 : 2;
}

int cmd_bounds(const Common& c) {
    MeshInput in = parse_mesh_file(c.mesh_path);
    auto reports = sweep(in.mesh, in.profile, in.smooth, parse_degree_range(c.degrees), options_for(c, in));
    emit(c, c.report == "machine" ? report_to_machine(reports) : report_to_text(reports));
    for (const auto& r : reports)
        if (!r.assumptions_ok) {
            std::cerr << "AssumptionViolated: " << r.diagnostics << "\n";
            return 2;
        }
    return 0;
}

int cmd_oracle(const Common& c) {
    MeshInput in = parse_mesh_file(c.mesh_path);
    auto degrees = parse_degree_range(c.degrees);
    std::vector<int> dims(degrees.size());
    for (size_t k = 0; k < degrees.size(); ++k)
        dims[k] = oracle_spline_dim(in.mesh, in.profile, in.smooth, degrees[k], !c.serial);
    if (c.report == "machine") {
        Json list = Json::array();
        for (size_t k = 0; k < degrees.size(); ++k) list.push_back({{"m", {degrees[k].m1, degrees[k].m2}}, {"dim", dims[k]}});
        emit(c, Json{{"oracle", list}}.dump(2) + "\n");
    } else {
        std::ostringstream os;
        for (size_t k = 0; k < degrees.size(); ++k) os << to_string(degrees[k]) << " " << dims[k] << "\n";
        emit(c, os.str());
    }
    return 0;
}

int cmd_certify(const Common& c) {
    MeshInput in = parse_mesh_file(c.mesh_path);
    auto reports = sweep(in.mesh, in.profile, in.smooth, parse_degree_range(c.degrees), options_for(c, in));
    for (const auto& r : reports) require_assumptions(r);
    if (c.report == "machine") {
        Json list = Json::array();
        for (const auto& r : reports) {
            Certification cert = certify_stable(r);
            list.push_back({{"m", {r.m.m1, r.m.m2}},
                            {"certified", cert.certified},
                            {"exact", cert.exact ? Json(*cert.exact) : Json(nullptr)},
                            {"lower", r.lower_special ? *r.lower_special : *r.lower_general},
                            {"upper", *r.upper},
                            {"slack", cert.slack},
                            {"level_slack", cert.level_slack}});
        }
        emit(c, Json{{"certify", list}}.dump(2) + "\n");
    } else {
        std::ostringstream os;
        for (const auto& r : reports) {
            Certification cert = certify_stable(r);
            long lower = r.lower_special ? *r.lower_special : *r.lower_general;
            os << to_string(r.m) << ": " << (cert.certified ? "certified" : "not certified");
            if (cert.exact) os << ", dim = " << *cert.exact;
            os << ", bounds " << lower << "/" << *r.upper << ", slack " << cert.slack << " (per level";
            for (long s : cert.level_slack) os << " " << s;
            os << ")";
            if (!r.config1) os << ", practical configuration fails";
            os << "\n";
        }
        emit(c, os.str());
    }
    return 0;
}

int cmd_svg(const Common& c) {
    MeshInput in = parse_mesh_file(c.mesh_path);
    namespace fs = std::filesystem;
    std::string prefix = c.out.empty() ? fs::path(c.mesh_path).stem().string() : c.out;
    for (const ActiveLevel& L : all_levels(in.mesh, in.profile)) {
        std::string path = prefix + "_level" + std::to_string(L.index) + ".svg";
        atomic_write(path, render_level_svg(in.mesh, in.profile, in.smooth, L));
        std::cout << path << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dimension bounds for splines of non-uniform bi-degree on T-meshes"};
    app.require_subcommand(1);
    Common c;
    auto add_common = [&](CLI::App* sub, bool degrees) {
        sub->add_option("mesh", c.mesh_path, "mesh file")->required()->check(CLI::ExistingFile);
        if (degrees) {
            sub->add_option("--degrees", c.degrees, "bi-degree or range m1,m2:M1,M2");
            sub->add_option("--ordering", c.ordering, "segment ordering")
                ->check(CLI::IsMember({"input", "greedy", "exhaustive", "auto"}));
            sub->add_flag("--with-oracle", c.with_oracle, "also compute the exact dimension");
            sub->add_flag("--serial", c.serial, "disable the parallel kernels");
        }
        sub->add_option("--report", c.report, "output style")->check(CLI::IsMember({"text", "machine"}));
        sub->add_option("--out", c.out, "output path (svg: file prefix)");
    };
    auto* analyze = app.add_subcommand("analyze", "levels, Betti numbers, segments and assumptions");
    auto* bounds_cmd = app.add_subcommand("bounds", "dimension bounds over a degree range");
    auto* oracle = app.add_subcommand("oracle", "exact dimensions over a degree range");
    auto* certify = app.add_subcommand("certify", "stability verdicts with slack per level");
    auto* svg = app.add_subcommand("svg", "one drawing per level");
    add_common(analyze, false);
    add_common(bounds_cmd, true);
    add_common(oracle, true);
    add_common(certify, true);
    add_common(svg, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    try {
        if (*analyze) return cmd_analyze(c);
        if (*bounds_cmd) return cmd_bounds(c);
        if (*oracle) return cmd_oracle(c);
        if (*certify) return cmd_certify(c);
        if (*svg) return cmd_svg(c);
    } catch (const Error& e) {
        std::cerr << e.kind() << ": " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
