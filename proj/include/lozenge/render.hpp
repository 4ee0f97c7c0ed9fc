// Text and SVG pictures of tilings.

#pragma once

#include <string>

#include "lozenge/tiling.hpp"

namespace lozenge {

// Character-grid picture: one text row per vertex row, '_' for horizontal
// tile edges, '/' and '\' for the slanted ones.  Hidden diagonals are not
// drawn, so each lozenge reads as an open rhombus.
std::string render_ascii(const Tiling& t);

// One filled polygon per lozenge, coloured by orientation.
std::string render_svg(const Tiling& t);

}  // namespace lozenge
