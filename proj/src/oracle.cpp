#include <algorithm>
#include <cctype>

#include "oracle_kernel.hpp"
#include "trinet/oracle.hpp"

namespace trinet {

std::string_view class_name(PolygonClass c) noexcept {
  switch (c) {
    case PolygonClass::Triangle: return "triangle";
    case PolygonClass::Quadrilateral: return "quadrilateral";
    case PolygonClass::Pentagon: return "pentagon";
    case PolygonClass::Hexagon: return "hexagon";
  }
  return "?";
}

std::optional<PolygonClass> parse_class(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  for (PolygonClass c : kAllClasses)
    if (class_name(c) == lower) return c;
  return std::nullopt;
}

SideSet Touches::as_set() const noexcept {
  std::uint8_t bits = 0;
  if (oa) bits |= static_cast<std::uint8_t>(Side::OA);
  if (ob) bits |= static_cast<std::uint8_t>(Side::OB);
  if (ab) bits |= static_cast<std::uint8_t>(Side::AB);
  return SideSet::from_bits(bits);
}

std::array<std::int64_t, 6> BoundSextuple::edge_lengths(NetSize n) const noexcept {
  const std::int64_t t = span(n);
  return {cut_alpha, cut_beta, cut_gamma, t - cut_beta - cut_gamma, t - cut_alpha - cut_gamma,
          t - cut_alpha - cut_beta};
}

void BoundSextuple::validate(NetSize n) const {
  if (lo_alpha < 0 || lo_beta < 0 || lo_gamma < 0) throw DegenerateRegion("negative lower bound");
  if (cut_alpha < 0 || cut_beta < 0 || cut_gamma < 0) throw DegenerateRegion("negative cut depth");
  if (span(n) < 1) throw DegenerateRegion("lower bounds leave no room (t < 1)");
  int positive = 0;
  for (std::int64_t len : edge_lengths(n)) {
    if (len < 0) throw DegenerateRegion("corner cuts overlap (negative edge length)");
    positive += len > 0;
  }
  if (positive < 3) throw DegenerateRegion("region has zero area");
}

PolygonClass classify_bounds(const BoundSextuple& b, NetSize n) {
  b.validate(n);
  return static_cast<PolygonClass>(
      detail::positive_edges(b.span(n), b.cut_alpha, b.cut_beta, b.cut_gamma));
}

LatticePolygon polygon_from_bounds(const BoundSextuple& b, NetSize n) {
  LatticePolygon poly;
  poly.cls = classify_bounds(b, n);
  poly.bounds = b;
  poly.touches = b.touches();

  const std::int64_t t = b.span(n);
  const auto [ca, cb, cg] = std::array{b.cut_alpha, b.cut_beta, b.cut_gamma};
  // Walk counterclockwise from the left end of the bottom support line
  // (alpha = lo_alpha); the k-th entry is the length along EdgeDirection k.
  const std::array<std::int64_t, 6> walk = {t - cb - cg, cg, t - ca - cg, ca, t - ca - cb, cb};
  TriCoord cur{b.lo_alpha, b.lo_beta + t - cb, b.lo_gamma + cb};
  poly.vertices.reserve(6);
  for (int d = 0; d < 6; ++d) {
    if (walk[d] == 0) continue;
    poly.vertices.push_back(cur);
    const auto step = EdgeDirection(d).delta();
    cur.alpha += step[0] * walk[d];
    cur.beta += step[1] * walk[d];
    cur.gamma += step[2] * walk[d];
  }
  return poly;
}

BoundSextuple bounds_from_vertices(const std::vector<TriCoord>& vertices, NetSize n) {
  if (vertices.empty()) throw DegenerateRegion("empty vertex list");
  for (const auto& v : vertices)
    if (!v.valid_for(n)) throw InvalidCoordinate(v.to_string() + " is not a net point");
  auto [amin, amax] = std::minmax_element(vertices.begin(), vertices.end(),
                                          [](const TriCoord& x, const TriCoord& y) { return x.alpha < y.alpha; });
  auto [bmin, bmax] = std::minmax_element(vertices.begin(), vertices.end(),
                                          [](const TriCoord& x, const TriCoord& y) { return x.beta < y.beta; });
  auto [gmin, gmax] = std::minmax_element(vertices.begin(), vertices.end(),
                                          [](const TriCoord& x, const TriCoord& y) { return x.gamma < y.gamma; });
  BoundSextuple b;
  b.lo_alpha = amin->alpha;
  b.lo_beta = bmin->beta;
  b.lo_gamma = gmin->gamma;
  const std::int64_t t = b.span(n);
  b.cut_alpha = t - (amax->alpha - b.lo_alpha);
  b.cut_beta = t - (bmax->beta - b.lo_beta);
  b.cut_gamma = t - (gmax->gamma - b.lo_gamma);
  return b;
}

std::vector<int> LatticePolygon::interior_angles() const {
  const std::size_t m = vertices.size();
  std::vector<int> angles;
  angles.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const TriCoord& prev = vertices[(i + m - 1) % m];
    const TriCoord& here = vertices[i];
    const TriCoord& next = vertices[(i + 1) % m];
    angles.push_back(interior_angle(EdgeDirection::between(prev, here), EdgeDirection::between(here, next)));
  }
  return angles;
}

void for_each_polygon(NetSize n, std::optional<PolygonClass> filter,
                      const std::function<void(const LatticePolygon&)>& visit) {
  for (std::int64_t la = 0; la < n.value(); ++la) {
    detail::for_each_bounds_in_slice(n.value(), la, [&](const BoundSextuple& b, int edges) {
      if (filter && edge_count(*filter) != edges) return;
      visit(polygon_from_bounds(b, n));
    });
  }
}

std::vector<LatticePolygon> enumerate_polygons(NetSize n, std::optional<PolygonClass> filter) {
  std::vector<LatticePolygon> out;
  for_each_polygon(n, filter, [&](const LatticePolygon& p) { out.push_back(p); });
  return out;
}

std::uint64_t count_touching(NetSize n, PolygonClass cls, SideSet required) {
  return count_touching_table(n, required)[cls];
}

}  // namespace trinet
