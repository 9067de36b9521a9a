#pragma once

#include <optional>
#include <string>
#include <utility>

#include "gitstab/torus.hpp"

namespace gitstab::cli {

// Static 2-D picture of a state polytope: the weight points, their hull,
// the origin, and (when given) the segment to the nearest point. Weights are
// projected to the drawing plane either through the sum-zero plane of SL_3
// (n = 2, SL mode) or through a user-selected coordinate pair. Hull edges are
// computed exactly; floating point appears only in the final coordinates of
// the picture.
std::string render_state_svg(const gitcore::State& state,
                             const std::optional<gitcore::WeightVector>& nearest,
                             std::optional<std::pair<int, int>> coord_projection);

}  // namespace gitstab::cli
