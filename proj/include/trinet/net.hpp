#pragma once

/// \file net.hpp
/// \brief The n-triangular net: lattice points, grid lines and exact angles.
///
/// A net of order n is a triangle O, A_n, B_n with every side cut into n
/// equal parts and all dividing points joined by segments parallel to the
/// sides. A net vertex is addressed by a coordinate triple (alpha, beta,
/// gamma) with alpha + beta + gamma = n:
///
///   alpha -- distance toward corner O   (side A_nB_n is alpha == 0)
///   beta  -- distance toward corner A_n (side OB_n   is beta  == 0)
///   gamma -- distance toward corner B_n (side OA_n   is gamma == 0)
///
/// Counting does not depend on the shape of the base triangle (any two
/// triangles are affinely equivalent), so geometry is done on a fixed
/// equilateral embedding with exact integer coordinates.

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace trinet {

class InvalidCoordinate : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DegenerateVertex : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Order of a net. Always >= 1.
class NetSize {
 public:
  explicit NetSize(std::int64_t n);

  std::int64_t value() const noexcept { return n_; }

  friend auto operator<=>(const NetSize&, const NetSize&) = default;

 private:
  std::int64_t n_;
};

struct TriCoord {
  std::int64_t alpha = 0;
  std::int64_t beta = 0;
  std::int64_t gamma = 0;

  std::int64_t sum() const noexcept { return alpha + beta + gamma; }
  bool valid_for(NetSize n) const noexcept {
    return alpha >= 0 && beta >= 0 && gamma >= 0 && sum() == n.value();
  }

  std::string to_string() const;

  friend auto operator<=>(const TriCoord&, const TriCoord&) = default;
};

enum class Family : std::uint8_t { Alpha = 0, Beta = 1, Gamma = 2 };

/// The set of net points whose `family` coordinate equals `index`.
struct GridLine {
  Family family = Family::Alpha;
  std::int64_t index = 0;

  bool contains(const TriCoord& p) const noexcept;

  friend auto operator<=>(const GridLine&, const GridLine&) = default;
};

/// All 3(n+1) grid lines, the three sides included.
std::vector<GridLine> grid_lines(NetSize n);

/// One of the six unit lattice steps, numbered counterclockwise starting
/// from the direction A_n -> B_n. Step d turns 60 degrees left of step d-1.
class EdgeDirection {
 public:
  explicit EdgeDirection(int dir);

  int index() const noexcept { return dir_; }
  EdgeDirection opposite() const noexcept { return EdgeDirection((dir_ + 3) % 6); }
  EdgeDirection rotated(int steps) const noexcept {
    return EdgeDirection(((dir_ + steps) % 6 + 6) % 6);
  }
  /// Coordinate change of one unit step; components sum to zero.
  std::array<std::int64_t, 3> delta() const noexcept;

  /// Direction of the step p -> q if it runs along a grid line, else throws.
  static EdgeDirection between(const TriCoord& p, const TriCoord& q);

  friend auto operator<=>(const EdgeDirection&, const EdgeDirection&) = default;

 private:
  int dir_;
};

/// Planar position on the equilateral embedding with A_n = (0, 0),
/// B_n = (n, 0), O = (n/2, n*sqrt(3)/2). Stored exactly as
/// x = x_halves / 2 and y = y_sqrt3_halves * sqrt(3) / 2.
struct PlanarPoint {
  std::int64_t x_halves = 0;
  std::int64_t y_sqrt3_halves = 0;

  friend auto operator<=>(const PlanarPoint&, const PlanarPoint&) = default;
};

/// All net points in lexicographic (alpha, beta) order; (n+1)(n+2)/2 of them.
std::vector<TriCoord> lattice_points(NetSize n);

PlanarPoint embed(const TriCoord& p, NetSize n);

/// Sign-exact orientation of (a, b, c) on the embedding: > 0 for a left
/// turn. Proportional to twice the signed area in units of sqrt(3)/4.
std::int64_t orientation(const PlanarPoint& a, const PlanarPoint& b, const PlanarPoint& c) noexcept;

/// Interior angle in degrees at a convex vertex entered along `prev_dir` and
/// left along `next_dir` on a counterclockwise boundary walk. Only left
/// turns of one or two steps are convex vertices.
int interior_angle(EdgeDirection prev_dir, EdgeDirection next_dir);

}  // namespace trinet
