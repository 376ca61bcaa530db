#include "hull_search.hpp"

#include <algorithm>

namespace trinet::testing {

namespace {

// Andrew's monotone chain on the planar embedding; drops collinear points.
std::vector<std::size_t> strict_hull(const std::vector<PlanarPoint>& pts, std::vector<std::size_t> idx) {
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return pts[a] < pts[b]; });
  std::vector<std::size_t> h(2 * idx.size());
  std::size_t k = 0;
  for (std::size_t i : idx) {
    while (k >= 2 && orientation(pts[h[k - 2]], pts[h[k - 1]], pts[i]) <= 0) --k;
    h[k++] = i;
  }
  for (std::size_t j = idx.size() - 1, lower = k + 1; j-- > 0;) {
    const std::size_t i = idx[j];
    while (k >= lower && orientation(pts[h[k - 2]], pts[h[k - 1]], pts[i]) <= 0) --k;
    h[k++] = i;
  }
  h.resize(k - 1);
  return h;
}

bool on_common_grid_line(const TriCoord& p, const TriCoord& q) {
  return p.alpha == q.alpha || p.beta == q.beta || p.gamma == q.gamma;
}

}  // namespace

std::set<HullPolygon> hull_search(NetSize n, std::size_t max_points) {
  const auto net = lattice_points(n);
  std::vector<PlanarPoint> planar;
  for (const auto& p : net) planar.push_back(embed(p, n));

  std::set<HullPolygon> found;
  const std::size_t m = net.size();
  std::vector<std::size_t> chosen;
  const std::size_t cap = max_points == 0 ? m : max_points;
  auto walk = [&](auto&& self, std::size_t next) -> void {
    if (chosen.size() >= 3) {
      const auto hull = strict_hull(planar, chosen);
      if (hull.size() == chosen.size()) {
        bool grid = true;
        for (std::size_t i = 0; i < hull.size() && grid; ++i)
          grid = on_common_grid_line(net[hull[i]], net[hull[(i + 1) % hull.size()]]);
        if (grid) {
          HullPolygon poly;
          for (std::size_t i : hull) poly.vertices.push_back(net[i]);
          std::sort(poly.vertices.begin(), poly.vertices.end());
          found.insert(std::move(poly));
        }
      }
    }
    if (chosen.size() == cap) return;
    for (std::size_t i = next; i < m; ++i) {
      chosen.push_back(i);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  walk(walk, 0);
  return found;
}

}  // namespace trinet::testing
