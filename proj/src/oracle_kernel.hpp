#pragma once

// Inner enumeration loop shared by the serial and OpenMP kernels.

#include "trinet/oracle.hpp"

namespace trinet::detail {

inline int positive_edges(std::int64_t t, std::int64_t ca, std::int64_t cb, std::int64_t cg) noexcept {
  return (ca > 0) + (cb > 0) + (cg > 0) + (t - cb - cg > 0) + (t - ca - cg > 0) + (t - ca - cb > 0);
}

/// Visits every non-degenerate sextuple with the given lo_alpha, in
/// ascending (lo_beta, lo_gamma, cut_alpha, cut_beta, cut_gamma) order.
/// `fn(const BoundSextuple&, int edges)`.
template <typename Fn>
inline void for_each_bounds_in_slice(std::int64_t n, std::int64_t lo_alpha, Fn&& fn) {
  BoundSextuple b;
  b.lo_alpha = lo_alpha;
  for (std::int64_t lb = 0; lo_alpha + lb < n; ++lb) {
    b.lo_beta = lb;
    for (std::int64_t lg = 0; lo_alpha + lb + lg < n; ++lg) {
      b.lo_gamma = lg;
      const std::int64_t t = n - lo_alpha - lb - lg;
      for (std::int64_t ca = 0; ca <= t; ++ca) {
        b.cut_alpha = ca;
        for (std::int64_t cb = 0; ca + cb <= t; ++cb) {
          b.cut_beta = cb;
          const std::int64_t cg_max = t - (ca > cb ? ca : cb);
          for (std::int64_t cg = 0; cg <= cg_max; ++cg) {
            const int edges = positive_edges(t, ca, cb, cg);
            if (edges < 3) continue;
            b.cut_gamma = cg;
            fn(static_cast<const BoundSextuple&>(b), edges);
          }
        }
      }
    }
  }
}

inline bool touches_all(const BoundSextuple& b, SideSet required) noexcept {
  return (!required.contains(Side::OA) || b.lo_gamma == 0) && (!required.contains(Side::OB) || b.lo_beta == 0) &&
         (!required.contains(Side::AB) || b.lo_alpha == 0);
}

/// True if every vertex angle is 60 or 120 and the 60-degree count is 6 - edges.
inline bool angle_law_holds(const LatticePolygon& poly, int& acute) noexcept {
  acute = 0;
  try {
    for (int a : poly.interior_angles()) {
      if (a == 60) ++acute;
      else if (a != 120) return false;
    }
  } catch (const std::exception&) {
    return false;
  }
  return acute == 6 - edge_count(poly.cls);
}

}  // namespace trinet::detail
