#pragma once

#include <cstdint>
#include <vector>

#include "sfc/curves.hpp"

namespace sfc {

/// Hilbert-style traversal of an arbitrary W x H rectangle: visits every
/// cell exactly once with every consecutive pair of cells 4-adjacent.
/// On square power-of-two grids the order coincides with hilbert_d2xy.
std::vector<GridPoint> gilbert_traversal(std::uint32_t width, std::uint32_t height);

} // namespace sfc
