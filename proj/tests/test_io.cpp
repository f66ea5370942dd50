#include <doctest.h>

#include <filesystem>

#include "support.hpp"
#include "tmdim/errors.hpp"
#include "tmdim/io.hpp"

using namespace tmdim;
using namespace testing_support;

namespace {

std::string message_of(const std::string& text) {
    try {
        build_input(parse_mesh_doc(text, "m"));
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("minimal file") {
    MeshDoc d = parse_mesh_doc(R"({"faces": [{"rect": [0, 0, 1, 1]}]})");
    REQUIRE(d.rects.size() == 1);
    CHECK(d.deficits[0] == Bidegree{0, 0});
    CHECK(d.default_r == 1);
    CHECK_FALSE(d.levels.has_value());
    MeshInput in = build_input(d);
    CHECK(in.mesh.faces.size() == 1);
}

TEST_CASE("rationals round trip") {
    std::string text = R"({"name": "thirds", "faces": [
        {"rect": [0, 0, "1/3", 1], "deficit": [0, 0]},
        {"rect": ["1/3", 0, "2/6", 1], "deficit": [1, 1]}]})";
    MeshDoc d = parse_mesh_doc(text);
    CHECK(d.rects[0].x1 == Rational(1, 3));
    CHECK(d.rects[1].x1 == Rational(1, 3));  // reduced on input
    MeshDoc again = parse_mesh_doc(serialize_mesh_doc(d));
    CHECK(again == d);
    CHECK(serialize_mesh_doc(again).find("\"1/3\"") != std::string::npos);
}

TEST_CASE("fixtures round trip") {
    for (const char* f : {"test1.json", "test3.json", "mesh_homology.json"}) {
        MeshDoc d = parse_mesh_doc(read_file(fixture(f)));
        CHECK(parse_mesh_doc(serialize_mesh_doc(d)) == d);
    }
}

TEST_CASE("errors point at the offending field") {
    CHECK(message_of("{").find("malformed") != std::string::npos);
    CHECK(message_of(R"({"faces": [{"rect": [0, 0, 1]}]})").find("m.faces[0].rect") != std::string::npos);
    CHECK(message_of(R"({"faces": [{"rect": [0, 0, 1, "a/b"]}]})").find("m.faces[0].rect[3]") != std::string::npos);
    CHECK(message_of(R"({"faces": [{"rect": [0, 0, 1, 1], "deficit": [1]}]})").find("deficit") !=
          std::string::npos);
    std::string ov = R"({"faces": [{"rect": [0, 0, 1, 1]}],
        "smoothness": {"overrides": [{"orientation": "x", "line": 0, "span": [0, 1], "r": 1}]}})";
    CHECK(message_of(ov).find("m.smoothness.overrides[0]") != std::string::npos);
    std::string overlap = R"({"faces": [{"rect": [0, 0, 2, 1]}, {"rect": [0, 1, 2, 2]}, {"rect": [1, 0, 2, 2]}]})";
    std::string msg = message_of(overlap);
    CHECK(msg.find("face 0") != std::string::npos);
    CHECK(msg.find("face 2") != std::string::npos);
}

TEST_CASE("explicit levels and segment order are read") {
    MeshInput in = load("test1.json");
    CHECK(in.doc.segment_order.count(1) == 1);
    CHECK(in.doc.segment_order.at(1).size() == 9);
    MeshInput h = load("mesh_homology.json");
    REQUIRE(h.doc.levels.has_value());
    CHECK(h.profile.levels.size() == 3);
}

TEST_CASE("reports round trip") {
    MeshInput in = load("test3.json");
    BoundsOptions o;
    o.with_oracle = true;
    std::vector<DimReport> reps{bounds(in.mesh, in.profile, in.smooth, {6, 6}, o),
                                bounds(in.mesh, in.profile, in.smooth, {2, 2})};
    auto back = report_from_machine(report_to_machine(reps));
    CHECK(back == reps);
    std::string text = report_to_text(reps);
    CHECK(text.find("146") != std::string::npos);
    CHECK_THROWS_AS(report_from_machine(R"({"format": "other"})"), ParseError);
}

TEST_CASE("holed report round trip") {
    MeshInput in = load("ring_hole.json");
    std::vector<DimReport> reps{bounds(in.mesh, in.profile, in.smooth, {3, 3})};
    CHECK(report_from_machine(report_to_machine(reps)) == reps);
}

TEST_CASE("atomic write replaces the file") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "tmdim_io_test";
    fs::create_directories(dir);
    std::string p = (dir / "out.txt").string();
    atomic_write(p, "first");
    atomic_write(p, "second");
    CHECK(read_file(p) == "second");
    int files = 0;
    for ([[maybe_unused]] auto& e : fs::directory_iterator(dir)) ++files;
    CHECK(files == 1);
    fs::remove_all(dir);
    CHECK_THROWS_AS(read_file((dir / "missing.json").string()), ParseError);
}
