#pragma once

/// \file oracle.hpp
/// \brief Brute-force enumeration of every convex grid polygon in a net.
///
/// A convex polygon whose edges lie on net segments is the intersection of
/// the net with six half-planes, two per line family. Shifting by the
/// coordinate minima (lo_alpha, lo_beta, lo_gamma) leaves a triangle of side
/// t = n - lo_alpha - lo_beta - lo_gamma, and the polygon is that triangle
/// with its three corners cut at depths (cut_alpha, cut_beta, cut_gamma).
/// The six numbers identify the polygon uniquely, so enumeration is a plain
/// integer loop with no duplicate detection.
///
/// Edge lengths, in (cut_alpha, cut_beta, cut_gamma, opposite sides) order:
///
///   (ca, cb, cg, t - cb - cg, t - ca - cg, t - ca - cb)
///
/// and the polygon's class is the number of positive entries.
///
/// The counting kernels come in two flavours: the default ones split the
/// work over lo_alpha with OpenMP; the ones in `serial::` are the reference
/// single-thread loops kept for cross-checking.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trinet/net.hpp"

namespace trinet {

class DegenerateRegion : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class PolygonClass : std::uint8_t { Triangle = 3, Quadrilateral = 4, Pentagon = 5, Hexagon = 6 };

inline constexpr std::array<PolygonClass, 4> kAllClasses = {
    PolygonClass::Triangle, PolygonClass::Quadrilateral, PolygonClass::Pentagon, PolygonClass::Hexagon};

inline int edge_count(PolygonClass c) noexcept { return static_cast<int>(c); }
std::string_view class_name(PolygonClass c) noexcept;
/// Accepts "triangle", "quadrilateral", "pentagon", "hexagon" (case-insensitive).
std::optional<PolygonClass> parse_class(std::string_view name);

/// The three sides of the net.
enum class Side : std::uint8_t {
  OA = 1,  // gamma == 0
  OB = 2,  // beta == 0
  AB = 4,  // alpha == 0
};

/// Bitmask of sides.
class SideSet {
 public:
  constexpr SideSet() = default;
  constexpr SideSet(std::initializer_list<Side> sides) {
    for (Side s : sides) bits_ |= static_cast<std::uint8_t>(s);
  }
  constexpr bool contains(Side s) const noexcept { return (bits_ & static_cast<std::uint8_t>(s)) != 0; }
  constexpr bool subset_of(SideSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  constexpr std::uint8_t bits() const noexcept { return bits_; }
  static constexpr SideSet from_bits(std::uint8_t b) {
    SideSet s;
    s.bits_ = b & 7;
    return s;
  }

  friend constexpr bool operator==(SideSet, SideSet) = default;

 private:
  std::uint8_t bits_ = 0;
};

struct Touches {
  bool oa = false;
  bool ob = false;
  bool ab = false;

  SideSet as_set() const noexcept;
  bool covers(SideSet required) const noexcept { return required.subset_of(as_set()); }

  friend bool operator==(const Touches&, const Touches&) = default;
};

struct BoundSextuple {
  std::int64_t lo_alpha = 0;
  std::int64_t lo_beta = 0;
  std::int64_t lo_gamma = 0;
  std::int64_t cut_alpha = 0;
  std::int64_t cut_beta = 0;
  std::int64_t cut_gamma = 0;

  /// Side of the triangle left after removing the lower bounds.
  std::int64_t span(NetSize n) const noexcept { return n.value() - lo_alpha - lo_beta - lo_gamma; }
  std::array<std::int64_t, 6> edge_lengths(NetSize n) const noexcept;
  Touches touches() const noexcept { return {lo_gamma == 0, lo_beta == 0, lo_alpha == 0}; }

  /// Throws DegenerateRegion unless this describes a polygon of positive area in the n-net.
  void validate(NetSize n) const;

  friend auto operator<=>(const BoundSextuple&, const BoundSextuple&) = default;
};

struct LatticePolygon {
  BoundSextuple bounds;
  PolygonClass cls = PolygonClass::Triangle;
  std::vector<TriCoord> vertices;  // counterclockwise on the embedding
  Touches touches;

  /// Interior angle at each vertex, same order as `vertices`.
  std::vector<int> interior_angles() const;
};

PolygonClass classify_bounds(const BoundSextuple& b, NetSize n);
LatticePolygon polygon_from_bounds(const BoundSextuple& b, NetSize n);

/// Minima and cut depths recovered from a vertex list; inverse of polygon_from_bounds.
BoundSextuple bounds_from_vertices(const std::vector<TriCoord>& vertices, NetSize n);

/// Per-class totals for one net.
struct CountTable {
  std::int64_t n = 1;
  std::array<std::uint64_t, 4> counts{};  // triangle .. hexagon

  std::uint64_t operator[](PolygonClass c) const noexcept { return counts[edge_count(c) - 3]; }
  std::uint64_t& operator[](PolygonClass c) noexcept { return counts[edge_count(c) - 3]; }
  std::uint64_t total() const noexcept { return counts[0] + counts[1] + counts[2] + counts[3]; }

  friend bool operator==(const CountTable&, const CountTable&) = default;
};

struct AngleLawSummary {
  std::uint64_t polygons = 0;
  std::uint64_t violations = 0;
  std::uint64_t pentagons_with_one_acute = 0;
  std::uint64_t pentagons = 0;

  friend bool operator==(const AngleLawSummary&, const AngleLawSummary&) = default;
};

/// Calls `visit` on every polygon in deterministic order (lo_alpha, lo_beta,
/// lo_gamma, cut_alpha, cut_beta, cut_gamma ascending). With a filter, only
/// polygons of that class are built.
void for_each_polygon(NetSize n, std::optional<PolygonClass> filter,
                      const std::function<void(const LatticePolygon&)>& visit);

std::vector<LatticePolygon> enumerate_polygons(NetSize n, std::optional<PolygonClass> filter = std::nullopt);

// OpenMP kernels. Results are independent of the thread count.
CountTable count_by_class(NetSize n);
/// Per-class counts of polygons touching every side in `required`.
CountTable count_touching_table(NetSize n, SideSet required);
std::uint64_t count_touching(NetSize n, PolygonClass cls, SideSet required);
/// Builds every polygon's vertex cycle and checks (#60-degree angles) == 6 - edges.
AngleLawSummary angle_law_check(NetSize n);

namespace serial {
CountTable count_by_class(NetSize n);
CountTable count_touching_table(NetSize n, SideSet required);
AngleLawSummary angle_law_check(NetSize n);
}  // namespace serial

/// Sets the thread count for the OpenMP kernels; <= 0 restores the runtime default.
void set_threads(int threads);
int max_threads();

}  // namespace trinet
