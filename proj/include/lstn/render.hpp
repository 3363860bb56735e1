#pragma once

#include <string>

#include "lstn/approx.hpp"
#include "lstn/instance.hpp"

namespace lstn {

// Deterministic SVG: region vertices as dots colored per region, tree edges as blue
// line segments, chosen representatives as green dots; viewBox fitted to the data
// with a 5% margin. Throws std::invalid_argument for dim != 2.
std::string render_svg(const Instance& inst, const Solution* sol);

}  // namespace lstn
