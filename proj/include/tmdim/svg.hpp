#pragma once

#include <string>

#include "tmdim/active.hpp"
#include "tmdim/mesh.hpp"

namespace tmdim {

// One drawing of level i: faces shaded by deficit, inactive faces hatched grey,
// the active boundary drawn thick, interior maximal segments in colour and
// components away from the domain boundary labelled as islands.
std::string render_level_svg(const TMesh& mesh, const LeveledProfile& profile, const SmoothnessProfile& smooth,
                             const ActiveLevel& level);

}  // namespace tmdim
