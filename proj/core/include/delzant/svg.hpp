#pragma once

#include "delzant/geometry.hpp"
#include "delzant/reconstruct.hpp"

#include <string>
#include <vector>

namespace delzant {

// Standalone SVG: one <path> per polygon, overlays drawn translucent,
// vertex labels and outward normal arrows on the first polygon.
// Output depends only on the input, so it is stable across runs.
std::string render_svg(const DelzantPolygon& polygon, const std::vector<DelzantPolygon>& overlays = {});

// Throws Error(Unsupported) for 3-dimensional input.
std::string render_svg(const Polytope& polytope, const std::vector<DelzantPolygon>& overlays = {});

}  // namespace delzant
