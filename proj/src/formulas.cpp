#include "trinet/formulas.hpp"

namespace trinet::formulas {

using checked::exact_div;
using checked::horner;
using checked::mul;

Int128 pentagon_numerator(NetSize n) {
  const auto [odd, k] = split(n);
  if (odd) {
    static constexpr Int128 c[] = {12, 25, 5, -10, -2, 0};
    return horner(c, k);
  }
  static constexpr Int128 c[] = {12, -5, -15, 5, 3, 0};
  return horner(c, k);
}

Int128 hexagon_numerator(NetSize n) {
  const auto [odd, k] = split(n);
  if (odd) {
    static constexpr Int128 c[] = {8, 24, 25, 10, -3, -4, 0};
    return horner(c, k);
  }
  static constexpr Int128 c[] = {8, 0, -5, 0, -3, 0, 0};
  return horner(c, k);
}

ExactCount pentagon_closed(NetSize n) {
  return ExactCount::from_signed(exact_div(pentagon_numerator(n), 10, "P(n)"), "P(n)");
}

ExactCount hexagon_closed(NetSize n) {
  return ExactCount::from_signed(exact_div(hexagon_numerator(n), 60, "H(n)"), "H(n)");
}

ExactCount f_closed(NetSize n) {
  const auto [odd, k] = split(n);
  static constexpr Int128 odd_c[] = {4, -1, -1, 0};
  static constexpr Int128 even_c[] = {4, -7, 3, 0};
  const Int128 inner = odd ? horner(odd_c, k) : horner(even_c, k);
  return ExactCount::from_signed(exact_div(mul(3, inner), 2, "f(n)"), "f(n)");
}

ExactCount g_closed(NetSize n) {
  const auto [odd, k] = split(n);
  if (odd) return ExactCount::from_signed(mul(mul(k, k), mul(k, k)), "g(n)");
  static constexpr Int128 quad[] = {2, -2, 1};
  const Int128 num = mul(mul(k, k - 1), horner(quad, k));
  return ExactCount::from_signed(exact_div(num, 2, "g(n)"), "g(n)");
}

std::vector<ExactCount> order2_sequence(const Order2Recurrence& rec, NetSize n_max) {
  const std::int64_t m = n_max.value();
  std::vector<ExactCount> out;
  out.reserve(static_cast<std::size_t>(m));
  out.push_back(rec.first);
  if (m >= 2) out.push_back(rec.second);
  Int128 prev2 = rec.first.as_signed();
  Int128 prev1 = rec.second.as_signed();
  for (std::int64_t i = 3; i <= m; ++i) {
    const Int128 forcing = rec.forcing ? rec.forcing(NetSize(i)).as_signed() : 0;
    const Int128 cur = checked::add(checked::sub(mul(2, prev1), prev2), forcing);
    out.push_back(ExactCount::from_signed(cur, "order-2 recurrence"));
    prev2 = prev1;
    prev1 = cur;
  }
  return out;
}

ExactCount solve_order2(const Order2Recurrence& rec, NetSize n) {
  if (n.value() == 1) return rec.first;
  if (n.value() == 2) return rec.second;
  Int128 prev2 = rec.first.as_signed();
  Int128 prev1 = rec.second.as_signed();
  for (std::int64_t i = 3; i <= n.value(); ++i) {
    const Int128 forcing = rec.forcing ? rec.forcing(NetSize(i)).as_signed() : 0;
    const Int128 cur = checked::add(checked::sub(mul(2, prev1), prev2), forcing);
    prev2 = prev1;
    prev1 = cur;
  }
  return ExactCount::from_signed(prev1, "order-2 recurrence");
}

Order2Recurrence pentagon_recurrence_def() { return {ExactCount(0), ExactCount(0), f_closed}; }
Order2Recurrence hexagon_recurrence_def() { return {ExactCount(0), ExactCount(0), g_closed}; }

ExactCount pentagon_recurrence(NetSize n) { return solve_order2(pentagon_recurrence_def(), n); }
ExactCount hexagon_recurrence(NetSize n) { return solve_order2(hexagon_recurrence_def(), n); }

}  // namespace trinet::formulas
