#pragma once

#include <optional>
#include <string>

#include "pyrageo/dsl/interpreter.hpp"

namespace pyrageo::dsl {

struct Viewport {
    double min_x = -1.0;
    double min_y = -1.0;
    double max_x = 1.0;
    double max_y = 1.0;
};

// Bounding box of all points and circles in the environment, padded by 10%.
// Lines do not contribute; an environment without points or circles gives
// the default [-1, 1] square.
Viewport fit_viewport(const Env& env);

// SVG 1.1 document. The viewBox is expressed in construction units with the
// y axis flipped (document y = -world y), so circle radii and point
// coordinates appear unscaled. Elements follow binding order and each carries
// its identifier as a text label; numbers and angles are not drawn.
std::string render_svg(const Env& env, const std::optional<Viewport>& viewport = std::nullopt);

}  // namespace pyrageo::dsl
