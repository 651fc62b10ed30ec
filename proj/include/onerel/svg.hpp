#pragma once

#include <string>

#include "onerel/word.hpp"

namespace onerel {

// Deterministic SVG of a rank-2 trace: the walk edges, the convex hull, both
// supporting lines parallel to the displacement (when it is nonzero), and
// the rank-2 certificate element highlighted when the criterion holds.
// Identical input gives byte-identical output; all coordinates are integers.
std::string render_trace_svg(const Word& w);

}  // namespace onerel
