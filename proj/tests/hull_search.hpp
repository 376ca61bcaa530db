#pragma once

// Test-only oracle: finds convex grid polygons by trying every subset of
// lattice points as a vertex set, independent of the bound-sextuple encoding.

#include <set>
#include <vector>

#include "trinet/net.hpp"

namespace trinet::testing {

/// Each polygon as its sorted vertex set, with the edge count.
struct HullPolygon {
  std::vector<TriCoord> vertices;  // sorted ascending

  friend auto operator<=>(const HullPolygon&, const HullPolygon&) = default;
};

/// Every subset S of net points with 3 <= |S| <= max_points that is exactly
/// the set of strict vertices of its convex hull (so positive area) and
/// whose hull edges all run along grid lines. Exponential in the number of
/// net points; max_points = 0 means no cap.
std::set<HullPolygon> hull_search(NetSize n, std::size_t max_points = 0);

}  // namespace trinet::testing
