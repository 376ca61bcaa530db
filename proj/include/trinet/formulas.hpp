#pragma once

/// \file formulas.hpp
/// \brief Closed forms and order-2 recurrences for convex pentagons and
/// hexagons in an n-triangular net.
///
/// Every count is split by parity: n = 2k+1 (k >= 0) and n = 2k (k >= 1).
///
///   P(n)  pentagons, numerator / 10
///   H(n)  hexagons,  numerator / 60
///   f(n)  pentagons with a vertex on OA_n and a vertex on OB_n
///   g(n)  hexagons  with a vertex on OA_n and a vertex on OB_n
///
/// and the counts obey S(n) = 2 S(n-1) - S(n-2) + forcing(n) with
/// S(1) = S(2) = 0, forcing f for pentagons and g for hexagons.

#include <functional>
#include <vector>

#include "trinet/exact_count.hpp"
#include "trinet/net.hpp"

namespace trinet::formulas {

/// n = 2k or n = 2k+1.
struct ParitySplit {
  bool odd = false;
  Int128 k = 0;
};

inline ParitySplit split(NetSize n) noexcept {
  return {n.value() % 2 == 1, static_cast<Int128>(n.value() / 2)};
}

// Raw numerators before the exact division, exposed for divisibility checks.
Int128 pentagon_numerator(NetSize n);  // divide by 10
Int128 hexagon_numerator(NetSize n);   // divide by 60

ExactCount pentagon_closed(NetSize n);
ExactCount hexagon_closed(NetSize n);
ExactCount f_closed(NetSize n);
ExactCount g_closed(NetSize n);

/// S(n) = 2 S(n-1) - S(n-2) + forcing(n) for n >= 3, with S(1), S(2) given.
struct Order2Recurrence {
  ExactCount first{0};
  ExactCount second{0};
  std::function<ExactCount(NetSize)> forcing;
};

/// S(n), telescoped step by step from the bases. O(n) exact additions.
ExactCount solve_order2(const Order2Recurrence& rec, NetSize n);

/// S(1), ..., S(n_max) in one O(n_max) pass; index i holds S(i + 1).
std::vector<ExactCount> order2_sequence(const Order2Recurrence& rec, NetSize n_max);

Order2Recurrence pentagon_recurrence_def();
Order2Recurrence hexagon_recurrence_def();

ExactCount pentagon_recurrence(NetSize n);
ExactCount hexagon_recurrence(NetSize n);

}  // namespace trinet::formulas
