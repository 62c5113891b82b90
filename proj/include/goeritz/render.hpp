#pragma once

#include "goeritz/curve.hpp"

#include <string>

namespace goeritz {

// Static SVG: the four hexagons in a 2x2 net with labelled sides and the
// curve's normal arcs drawn as chords. Sides are laid out in each hexagon's
// own counterclockwise order.
std::string render_svg(const CurveWord& w);

} // namespace goeritz
