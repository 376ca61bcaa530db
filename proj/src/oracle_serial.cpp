// Single-thread reference kernels.

#include "oracle_kernel.hpp"
#include "trinet/oracle.hpp"

namespace trinet::serial {

CountTable count_by_class(NetSize n) {
  CountTable table;
  table.n = n.value();
  for (std::int64_t la = 0; la < n.value(); ++la)
    detail::for_each_bounds_in_slice(n.value(), la,
                                     [&](const BoundSextuple&, int edges) { ++table.counts[edges - 3]; });
  return table;
}

CountTable count_touching_table(NetSize n, SideSet required) {
  CountTable table;
  table.n = n.value();
  for (std::int64_t la = 0; la < n.value(); ++la)
    detail::for_each_bounds_in_slice(n.value(), la, [&](const BoundSextuple& b, int edges) {
      if (detail::touches_all(b, required)) ++table.counts[edges - 3];
    });
  return table;
}

AngleLawSummary angle_law_check(NetSize n) {
  AngleLawSummary s;
  for (std::int64_t la = 0; la < n.value(); ++la)
    detail::for_each_bounds_in_slice(n.value(), la, [&](const BoundSextuple& b, int) {
      const LatticePolygon poly = polygon_from_bounds(b, n);
      int acute = 0;
      ++s.polygons;
      if (!detail::angle_law_holds(poly, acute)) ++s.violations;
      if (poly.cls == PolygonClass::Pentagon) {
        ++s.pentagons;
        if (acute == 1) ++s.pentagons_with_one_acute;
      }
    });
  return s;
}

}  // namespace trinet::serial
