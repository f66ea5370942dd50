#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tmdim/bounds.hpp"
#include "tmdim/mesh.hpp"
#include "tmdim/segments.hpp"

namespace tmdim {

// the data model of a mesh file, before any validation
struct MeshDoc {
    std::vector<Rect> rects;
    std::vector<Bidegree> deficits;
    int default_r = 1;
    std::vector<SmoothnessOverride> overrides;
    std::optional<std::vector<Bidegree>> levels;
    std::map<int, std::vector<SegmentKey>> segment_order;  // level -> preferred ascending order
    std::string name;

    friend bool operator==(const MeshDoc&, const MeshDoc&);
};

struct MeshInput {
    MeshDoc doc;
    TMesh mesh;
    LeveledProfile profile;
    SmoothnessProfile smooth;
};

MeshDoc parse_mesh_doc(const std::string& text, const std::string& source = "<input>");
std::string serialize_mesh_doc(const MeshDoc& doc);
MeshInput build_input(MeshDoc doc);
MeshInput parse_mesh_file(const std::string& path);

std::string report_to_machine(const std::vector<DimReport>& reports);
std::vector<DimReport> report_from_machine(const std::string& text);
std::string report_to_text(const std::vector<DimReport>& reports);

std::string read_file(const std::string& path);
// writes to a sibling temporary and renames it over the target
void atomic_write(const std::string& path, const std::string& content);

}  // namespace tmdim
