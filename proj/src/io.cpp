#include "tmdim/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "tmdim/errors.hpp"

namespace tmdim {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError(where + ": " + what);
}

Rational rational_at(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(mpz_class(std::to_string(j.get<long long>())));
    if (!j.is_string()) fail(where, "expected an integer or a rational string");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
        fail(where, e.what());
    }
}

int int_at(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) fail(where, "expected an integer");
    return j.get<int>();
}

Bidegree bidegree_at(const Json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) fail(where, "expected a pair [d1, d2]");
    return {int_at(j[0], where + "[0]"), int_at(j[1], where + "[1]")};
}

Orientation orientation_at(const Json& j, const std::string& where) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "h" || s == "H") return Orientation::Horizontal;
        if (s == "v" || s == "V") return Orientation::Vertical;
    }
    fail(where, "orientation must be \"h\" or \"v\"");
}

const char* orientation_name(Orientation o) { return o == Orientation::Horizontal ? "h" : "v"; }

Json opt(const std::optional<long>& v) { return v ? Json(*v) : Json(nullptr); }

std::optional<long> opt_at(const Json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<long>();
}

}  // namespace

bool operator==(const MeshDoc& a, const MeshDoc& b) {
    auto same_rect = [](const Rect& x, const Rect& y) {
        return x.x0 == y.x0 && x.y0 == y.y0 && x.x1 == y.x1 && x.y1 == y.y1;
    };
    auto same_ov = [](const SmoothnessOverride& x, const SmoothnessOverride& y) {
        return x.orient == y.orient && x.line == y.line && x.a == y.a && x.b == y.b && x.r == y.r;
    };
    auto same_key = [](const SegmentKey& x, const SegmentKey& y) {
        return x.orient == y.orient && x.line == y.line && x.start == y.start;
    };
    if (a.rects.size() != b.rects.size() || a.overrides.size() != b.overrides.size()) return false;
    for (size_t k = 0; k < a.rects.size(); ++k)
        if (!same_rect(a.rects[k], b.rects[k])) return false;
    for (size_t k = 0; k < a.overrides.size(); ++k)
        if (!same_ov(a.overrides[k], b.overrides[k])) return false;
    if (a.segment_order.size() != b.segment_order.size()) return false;
    for (const auto& [lvl, keys] : a.segment_order) {
        auto it = b.segment_order.find(lvl);
        if (it == b.segment_order.end() || it->second.size() != keys.size()) return false;
        for (size_t k = 0; k < keys.size(); ++k)
            if (!same_key(keys[k], it->second[k])) return false;
    }
    return a.deficits == b.deficits && a.default_r == b.default_r && a.levels == b.levels && a.name == b.name;
}

MeshDoc parse_mesh_doc(const std::string& text, const std::string& source) {
    Json root;
    try {
        root = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(source, std::string("malformed text at byte ") + std::to_string(e.byte) + " (" + e.what() + ")");
    }
    if (!root.is_object()) fail(source, "top level must be an object");
    MeshDoc doc;
    if (root.contains("name")) {
        if (!root["name"].is_string()) fail(source + ".name", "expected a string");
        doc.name = root["name"].get<std::string>();
    }
    if (!root.contains("faces") || !root["faces"].is_array()) fail(source + ".faces", "missing face list");
    const Json& faces = root["faces"];
    for (size_t k = 0; k < faces.size(); ++k) {
        std::string where = source + ".faces[" + std::to_string(k) + "]";
        const Json& f = faces[k];
        if (!f.is_object() || !f.contains("rect")) fail(where, "expected {\"rect\": [...]}");
        const Json& r = f["rect"];
        if (!r.is_array() || r.size() != 4) fail(where + ".rect", "expected [x0, y0, x1, y1]");
        Rect rect{rational_at(r[0], where + ".rect[0]"), rational_at(r[1], where + ".rect[1]"),
                  rational_at(r[2], where + ".rect[2]"), rational_at(r[3], where + ".rect[3]")};
        doc.rects.push_back(rect);
        doc.deficits.push_back(f.contains("deficit") ? bidegree_at(f["deficit"], where + ".deficit") : Bidegree{0, 0});
    }
    if (root.contains("smoothness")) {
        const Json& s = root["smoothness"];
        std::string where = source + ".smoothness";
        if (!s.is_object()) fail(where, "expected an object");
        if (s.contains("default")) doc.default_r = int_at(s["default"], where + ".default");
        if (s.contains("overrides")) {
            if (!s["overrides"].is_array()) fail(where + ".overrides", "expected a list");
            for (size_t k = 0; k < s["overrides"].size(); ++k) {
                const Json& o = s["overrides"][k];
                std::string w = where + ".overrides[" + std::to_string(k) + "]";
                if (!o.is_object() || !o.contains("orientation") || !o.contains("line") || !o.contains("span") ||
                    !o.contains("r"))
                    fail(w, "override needs orientation, line, span and r");
                const Json& sp = o["span"];
                if (!sp.is_array() || sp.size() != 2) fail(w + ".span", "expected [a, b]");
                doc.overrides.push_back({orientation_at(o["orientation"], w + ".orientation"),
                                         rational_at(o["line"], w + ".line"), rational_at(sp[0], w + ".span[0]"),
                                         rational_at(sp[1], w + ".span[1]"), int_at(o["r"], w + ".r")});
            }
        }
    }
    if (root.contains("levels")) {
        const Json& l = root["levels"];
        if (!l.is_array()) fail(source + ".levels", "expected a list of pairs");
        std::vector<Bidegree> levels;
        for (size_t k = 0; k < l.size(); ++k)
            levels.push_back(bidegree_at(l[k], source + ".levels[" + std::to_string(k) + "]"));
        doc.levels = levels;
    }
    if (root.contains("segment_order")) {
        const Json& so = root["segment_order"];
        std::string where = source + ".segment_order";
        if (!so.is_object()) fail(where, "expected an object keyed by level");
        for (const auto& [key, list] : so.items()) {
            int lvl = 0;
            try {
                lvl = std::stoi(key);
            } catch (const std::logic_error&) {
                fail(where, "level key '" + key + "' is not an integer");
            }
            if (!list.is_array()) fail(where + "." + key, "expected a list");
            std::vector<SegmentKey> keys;
            for (size_t k = 0; k < list.size(); ++k) {
                std::string w = where + "." + key + "[" + std::to_string(k) + "]";
                const Json& e = list[k];
                if (!e.is_array() || e.size() != 3) fail(w, "expected [orientation, line, start]");
                keys.push_back({orientation_at(e[0], w), rational_at(e[1], w + "[1]"), rational_at(e[2], w + "[2]")});
            }
            doc.segment_order[lvl] = keys;
        }
    }
    return doc;
}

std::string serialize_mesh_doc(const MeshDoc& doc) {
    Json root = Json::object();
    if (!doc.name.empty()) root["name"] = doc.name;
    Json faces = Json::array();
    for (size_t k = 0; k < doc.rects.size(); ++k) {
        const Rect& r = doc.rects[k];
        Json f;
        f["rect"] = {to_string(r.x0), to_string(r.y0), to_string(r.x1), to_string(r.y1)};
        f["deficit"] = {doc.deficits[k].m1, doc.deficits[k].m2};
        faces.push_back(f);
    }
    root["faces"] = faces;
    Json ovs = Json::array();
    for (const auto& o : doc.overrides)
        ovs.push_back({{"orientation", orientation_name(o.orient)},
                       {"line", to_string(o.line)},
                       {"span", {to_string(o.a), to_string(o.b)}},
                       {"r", o.r}});
    root["smoothness"] = {{"default", doc.default_r}, {"overrides", ovs}};
    if (doc.levels) {
        Json l = Json::array();
        for (Bidegree b : *doc.levels) l.push_back({b.m1, b.m2});
        root["levels"] = l;
    }
    if (!doc.segment_order.empty()) {
        Json so = Json::object();
        for (const auto& [lvl, keys] : doc.segment_order) {
            Json list = Json::array();
            for (const auto& k : keys) list.push_back({orientation_name(k.orient), to_string(k.line), to_string(k.start)});
            so[std::to_string(lvl)] = list;
        }
        root["segment_order"] = so;
    }
    return root.dump(2) + "\n";
}

MeshInput build_input(MeshDoc doc) {
    MeshInput in;
    in.mesh = build_tmesh(doc.rects);
    in.profile = build_profile(in.mesh, doc.deficits, doc.levels);
    in.smooth = build_smoothness(in.mesh, doc.default_r, doc.overrides);
    in.doc = std::move(doc);
    return in;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseError(path + ": cannot open file");
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

MeshInput parse_mesh_file(const std::string& path) {
    return build_input(parse_mesh_doc(read_file(path), path));
}

void atomic_write(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw ParseError(path + ": cannot write");
        f << content;
        if (!f.flush()) throw ParseError(path + ": write failed");
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw ParseError(path + ": rename failed: " + ec.message());
    }
}

std::string report_to_machine(const std::vector<DimReport>& reports) {
    Json list = Json::array();
    for (const DimReport& r : reports) {
        Json rows = Json::array();
        for (const LevelRow& l : r.rows)
            rows.push_back({{"i", l.i},
                            {"c", l.c},
                            {"h", l.h},
                            {"dim_m", l.dim_m},
                            {"chi", l.chi},
                            {"h0_c", l.h0_c},
                            {"h0_upper", l.h0_upper},
                            {"h0_plain", l.h0_plain},
                            {"interior_segments", l.interior_segments},
                            {"min_weight_slack", l.min_weight_slack},
                            {"ordering", l.ordering}});
        list.push_back({{"m", {r.m.m1, r.m.m2}},
                        {"chi", r.chi},
                        {"chi_direct", r.chi_direct},
                        {"assumptions_ok", r.assumptions_ok},
                        {"diagnostics", r.diagnostics},
                        {"lower_general", opt(r.lower_general)},
                        {"lower_special", opt(r.lower_special)},
                        {"upper", opt(r.upper)},
                        {"upper_clamped", r.upper_clamped},
                        {"config1", r.config1},
                        {"certified", r.certified},
                        {"exact", opt(r.exact)},
                        {"oracle", opt(r.oracle)},
                        {"h2", r.h2},
                        {"levels", rows}});
    }
    Json root = {{"format", "tmdim-report"}, {"version", 1}, {"reports", list}};
    return root.dump(2) + "\n";
}

std::vector<DimReport> report_from_machine(const std::string& text) {
    std::vector<DimReport> out;
    try {
        Json root = Json::parse(text);
        if (root.value("format", "") != "tmdim-report") throw ParseError("not a report document");
        for (const Json& j : root.at("reports")) {
            DimReport r;
            r.m = {j.at("m").at(0).get<int>(), j.at("m").at(1).get<int>()};
            r.chi = j.at("chi").get<long>();
            r.chi_direct = j.at("chi_direct").get<long>();
            r.assumptions_ok = j.at("assumptions_ok").get<bool>();
            r.diagnostics = j.at("diagnostics").get<std::string>();
            r.lower_general = opt_at(j, "lower_general");
            r.lower_special = opt_at(j, "lower_special");
            r.upper = opt_at(j, "upper");
            r.upper_clamped = j.at("upper_clamped").get<bool>();
            r.config1 = j.at("config1").get<bool>();
            r.certified = j.at("certified").get<bool>();
            r.exact = opt_at(j, "exact");
            r.oracle = opt_at(j, "oracle");
            r.h2 = j.at("h2").get<long>();
            for (const Json& l : j.at("levels")) {
                LevelRow row;
                row.i = l.at("i").get<int>();
                row.c = l.at("c").get<int>();
                row.h = l.at("h").get<int>();
                row.dim_m = l.at("dim_m").get<long>();
                row.chi = l.at("chi").get<long>();
                row.h0_c = l.at("h0_c").get<long>();
                row.h0_upper = l.at("h0_upper").get<long>();
                row.h0_plain = l.at("h0_plain").get<long>();
                row.interior_segments = l.at("interior_segments").get<int>();
                row.min_weight_slack = l.at("min_weight_slack").get<int>();
                row.ordering = l.at("ordering").get<std::string>();
                r.rows.push_back(row);
            }
            out.push_back(std::move(r));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("report: ") + e.what());
    }
    return out;
}

std::string report_to_text(const std::vector<DimReport>& reports) {
    auto cell = [](const std::optional<long>& v) { return v ? std::to_string(*v) : std::string("-"); };
    std::ostringstream os;
    os << std::left << std::setw(9) << "m" << std::right << std::setw(8) << "chi" << std::setw(9) << "lower"
       << std::setw(9) << "lower*" << std::setw(9) << "upper" << std::setw(7) << "cert" << std::setw(9) << "exact"
       << std::setw(9) << "oracle" << "\n";
    for (const DimReport& r : reports) {
        os << std::left << std::setw(9) << to_string(r.m) << std::right << std::setw(8) << r.chi << std::setw(9)
           << cell(r.lower_general) << std::setw(9) << cell(r.lower_special) << std::setw(9) << cell(r.upper)
           << std::setw(7) << (r.certified ? "yes" : "no") << std::setw(9) << cell(r.exact) << std::setw(9)
           << cell(r.oracle) << (r.upper_clamped ? "  (upper clamped)" : "") << "\n";
        if (!r.assumptions_ok) os << "    assumptions violated: " << r.diagnostics << "\n";
        for (const LevelRow& l : r.rows) {
            os << "    level " << l.i << ": c=" << l.c << " h=" << l.h << " dimM=" << l.dim_m << " chi=" << l.chi
               << " h0C=" << l.h0_c;
            if (r.assumptions_ok) os << " h0I<=" << l.h0_upper << " slack=" << (l.h0_upper - l.h0_c);
            if (l.i == static_cast<int>(r.rows.size())) os << " h2=" << r.h2;
            if (l.interior_segments > 0) os << " segments=" << l.interior_segments << " min_weight_slack=" << l.min_weight_slack;
            os << "\n";
            if (!l.ordering.empty()) os << "      order: " << l.ordering << "\n";
        }
    }
    return os.str();
}

}  // namespace tmdim
