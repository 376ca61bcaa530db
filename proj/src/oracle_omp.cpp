// OpenMP kernels. Work is split by lo_alpha; slices shrink as lo_alpha grows,
// so scheduling is dynamic. All reductions are integer sums, hence
// independent of thread count and schedule.

#include <omp.h>

#include "oracle_kernel.hpp"
#include "trinet/oracle.hpp"

namespace trinet {

CountTable count_by_class(NetSize n) {
  const std::int64_t m = n.value();
  std::uint64_t c[4] = {0, 0, 0, 0};
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : c[:4])
  for (std::int64_t la = 0; la < m; ++la)
    detail::for_each_bounds_in_slice(m, la, [&](const BoundSextuple&, int edges) { ++c[edges - 3]; });
  CountTable table;
  table.n = m;
  for (int i = 0; i < 4; ++i) table.counts[i] = c[i];
  return table;
}

CountTable count_touching_table(NetSize n, SideSet required) {
  const std::int64_t m = n.value();
  std::uint64_t c[4] = {0, 0, 0, 0};
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : c[:4])
  for (std::int64_t la = 0; la < m; ++la)
    detail::for_each_bounds_in_slice(m, la, [&](const BoundSextuple& b, int edges) {
      if (detail::touches_all(b, required)) ++c[edges - 3];
    });
  CountTable table;
  table.n = m;
  for (int i = 0; i < 4; ++i) table.counts[i] = c[i];
  return table;
}

AngleLawSummary angle_law_check(NetSize n) {
  const std::int64_t m = n.value();
  std::uint64_t polygons = 0, violations = 0, pentagons = 0, one_acute = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : polygons, violations, pentagons, one_acute)
  for (std::int64_t la = 0; la < m; ++la)
    detail::for_each_bounds_in_slice(m, la, [&](const BoundSextuple& b, int) {
      const LatticePolygon poly = polygon_from_bounds(b, n);
      int acute = 0;
      ++polygons;
      if (!detail::angle_law_holds(poly, acute)) ++violations;
      if (poly.cls == PolygonClass::Pentagon) {
        ++pentagons;
        if (acute == 1) ++one_acute;
      }
    });
  return {polygons, violations, one_acute, pentagons};
}

void set_threads(int threads) {
  if (threads > 0) omp_set_num_threads(threads);
  else omp_set_num_threads(omp_get_num_procs());
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace trinet
