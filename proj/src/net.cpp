#include "trinet/net.hpp"


namespace trinet {

namespace {

// Unit steps in (alpha, beta, gamma), counterclockwise from A_n -> B_n.
constexpr std::array<std::array<std::int64_t, 3>, 6> kSteps = {{
    {0, -1, 1},
    {1, -1, 0},
    {1, 0, -1},
    {0, 1, -1},
    {-1, 1, 0},
    {-1, 0, 1},
}};

}  // namespace

NetSize::NetSize(std::int64_t n) : n_(n) {
  if (n < 1) throw std::invalid_argument("net size must be >= 1, got " + std::to_string(n));
}

std::string TriCoord::to_string() const {
  return "(" + std::to_string(alpha) + "," + std::to_string(beta) + "," + std::to_string(gamma) + ")";
}

bool GridLine::contains(const TriCoord& p) const noexcept {
  switch (family) {
    case Family::Alpha: return p.alpha == index;
    case Family::Beta: return p.beta == index;
    case Family::Gamma: return p.gamma == index;
  }
  return false;
}

std::vector<GridLine> grid_lines(NetSize n) {
  std::vector<GridLine> lines;
  lines.reserve(static_cast<std::size_t>(3 * (n.value() + 1)));
  for (Family f : {Family::Alpha, Family::Beta, Family::Gamma})
    for (std::int64_t i = 0; i <= n.value(); ++i) lines.push_back({f, i});
  return lines;
}

EdgeDirection::EdgeDirection(int dir) : dir_(dir) {
  if (dir < 0 || dir > 5) throw std::invalid_argument("edge direction out of range");
}

std::array<std::int64_t, 3> EdgeDirection::delta() const noexcept { return kSteps[dir_]; }

EdgeDirection EdgeDirection::between(const TriCoord& p, const TriCoord& q) {
  const std::int64_t da = q.alpha - p.alpha;
  const std::int64_t db = q.beta - p.beta;
  const std::int64_t dg = q.gamma - p.gamma;
  if (da + db + dg != 0 || (da == 0 && db == 0))
    throw InvalidCoordinate("no grid direction between " + p.to_string() + " and " + q.to_string());
  std::int64_t len = 0;
  if (da == 0) len = db < 0 ? -db : db;
  else if (db == 0) len = da < 0 ? -da : da;
  else if (dg == 0) len = da < 0 ? -da : da;
  else
    throw InvalidCoordinate("segment " + p.to_string() + "-" + q.to_string() + " is not on a grid line");
  for (int d = 0; d < 6; ++d) {
    const auto& s = kSteps[d];
    if (s[0] * len == da && s[1] * len == db && s[2] * len == dg) return EdgeDirection(d);
  }
  throw InvalidCoordinate("unreachable grid direction");
}

std::vector<TriCoord> lattice_points(NetSize n) {
  const std::int64_t m = n.value();
  std::vector<TriCoord> pts;
  pts.reserve(static_cast<std::size_t>((m + 1) * (m + 2) / 2));
  for (std::int64_t a = 0; a <= m; ++a)
    for (std::int64_t b = 0; a + b <= m; ++b) pts.push_back({a, b, m - a - b});
  return pts;
}

PlanarPoint embed(const TriCoord& p, NetSize n) {
  if (!p.valid_for(n))
    throw InvalidCoordinate(p.to_string() + " is not a point of the " + std::to_string(n.value()) + "-net");
  // alpha * O + beta * A_n + gamma * B_n with A_n = (0,0), B_n = (1,0), O = (1/2, sqrt3/2).
  return {p.alpha + 2 * p.gamma, p.alpha};
}

std::int64_t orientation(const PlanarPoint& a, const PlanarPoint& b, const PlanarPoint& c) noexcept {
  return (b.x_halves - a.x_halves) * (c.y_sqrt3_halves - a.y_sqrt3_halves) -
         (b.y_sqrt3_halves - a.y_sqrt3_halves) * (c.x_halves - a.x_halves);
}

int interior_angle(EdgeDirection prev_dir, EdgeDirection next_dir) {
  const int turn = ((next_dir.index() - prev_dir.index()) % 6 + 6) % 6;
  if (turn == 0) throw DegenerateVertex("collinear edges meet at vertex");
  if (turn == 3) throw DegenerateVertex("edge reverses at vertex");
  if (turn > 3) throw DegenerateVertex("reflex turn on a counterclockwise walk");
  return 180 - 60 * turn;
}

}  // namespace trinet
