#pragma once

#include <optional>
#include <string>

#include "tlab/caps.hpp"
#include "tlab/generators.hpp"

namespace tlab {

// Renders a 2D instance as polygons (with an optional realization overlay),
// and a 3D instance as two labeled orthographic projections (xy and xz).
// Coordinates are converted to doubles for drawing only; nothing downstream
// consumes them.
std::string render_svg(const Instance& inst, const Realization2* overlay = nullptr);

}  // namespace tlab
