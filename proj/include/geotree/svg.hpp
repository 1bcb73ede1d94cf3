#pragma once

#include <span>
#include <string>

#include "geotree/geometry.hpp"
#include "geotree/trees.hpp"

namespace geotree {

/// 1000x1000 SVG drawing: hull faint, tree edges solid, forbidden edges
/// dashed, points labeled by index. `assignment` may be empty to draw only
/// the points and forbidden edges.
std::string render_svg(const PointSet& s, const Tree& t,
                       std::span<const int> assignment,
                       const EdgeSet& forbidden = {});

}  // namespace geotree
