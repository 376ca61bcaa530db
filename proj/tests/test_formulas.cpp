#include <doctest.h>

#include "trinet/formulas.hpp"

using namespace trinet;
using namespace trinet::formulas;

namespace {

std::uint64_t u(ExactCount c) {
  REQUIRE(c.fits_u64());
  return static_cast<std::uint64_t>(c.value());
}

// Values confirmed by exhaustive convex-hull search over lattice-point subsets.
constexpr std::uint64_t kPentagons[] = {0, 0, 3, 21, 78};
constexpr std::uint64_t kHexagons[] = {0, 0, 1, 7, 29};
constexpr std::uint64_t kF[] = {0, 0, 3, 15, 39};
constexpr std::uint64_t kG[] = {0, 0, 1, 5, 16};

}  // namespace

TEST_CASE("closed forms at small n") {
  for (int n = 1; n <= 5; ++n) {
    CAPTURE(n);
    CHECK(u(pentagon_closed(NetSize(n))) == kPentagons[n - 1]);
    CHECK(u(hexagon_closed(NetSize(n))) == kHexagons[n - 1]);
    CHECK(u(f_closed(NetSize(n))) == kF[n - 1]);
    CHECK(u(g_closed(NetSize(n))) == kG[n - 1]);
  }
}

TEST_CASE("recurrences at small n") {
  for (int n = 1; n <= 5; ++n) {
    CAPTURE(n);
    CHECK(u(pentagon_recurrence(NetSize(n))) == kPentagons[n - 1]);
    CHECK(u(hexagon_recurrence(NetSize(n))) == kHexagons[n - 1]);
  }
  CHECK(u(pentagon_recurrence(NetSize(4))) == 2 * 3 - 0 + 15);
}

TEST_CASE("solve_order2") {
  SUBCASE("f forcing from zero bases") {
    CHECK(u(solve_order2({ExactCount(0), ExactCount(0), f_closed}, NetSize(3))) == 3);
  }
  SUBCASE("g forcing at n=5 telescopes to 2*7 - 1 + 16") {
    CHECK(u(solve_order2({ExactCount(0), ExactCount(0), g_closed}, NetSize(5))) == 29);
  }
  SUBCASE("zero forcing keeps zero") {
    const Order2Recurrence zero{ExactCount(0), ExactCount(0), [](NetSize) { return ExactCount(0); }};
    for (int n : {1, 2, 3, 10, 1000}) CHECK(u(solve_order2(zero, NetSize(n))) == 0);
    const Order2Recurrence empty{ExactCount(0), ExactCount(0), {}};
    CHECK(u(solve_order2(empty, NetSize(50))) == 0);
  }
  SUBCASE("homogeneous part is linear in n") {
    const Order2Recurrence lin{ExactCount(4), ExactCount(7), {}};
    for (int n = 1; n <= 20; ++n) CHECK(u(solve_order2(lin, NetSize(n))) == static_cast<std::uint64_t>(1 + 3 * n));
  }
  SUBCASE("sequence agrees with pointwise solve") {
    const auto seq = order2_sequence(hexagon_recurrence_def(), NetSize(40));
    REQUIRE(seq.size() == 40);
    for (int n = 1; n <= 40; ++n) CHECK(seq[n - 1] == solve_order2(hexagon_recurrence_def(), NetSize(n)));
  }
  SUBCASE("going negative is an error") {
    const Order2Recurrence down{ExactCount(5), ExactCount(0), {}};
    CHECK_THROWS_AS(solve_order2(down, NetSize(3)), InexactDivision);
  }
}

TEST_CASE("closed form equals recurrence up to 2000") {
  const auto p = order2_sequence(pentagon_recurrence_def(), NetSize(2000));
  const auto h = order2_sequence(hexagon_recurrence_def(), NetSize(2000));
  for (int n = 1; n <= 2000; ++n) {
    CHECK(p[n - 1] == pentagon_closed(NetSize(n)));
    CHECK(h[n - 1] == hexagon_closed(NetSize(n)));
  }
}

TEST_CASE("divisibility of the numerators") {
  for (int n = 1; n <= 5000; ++n) {
    CHECK(pentagon_numerator(NetSize(n)) % 10 == 0);
    CHECK(hexagon_numerator(NetSize(n)) % 60 == 0);
  }
}

TEST_CASE("first differences") {
  for (Int128 k = 1; k <= 300; ++k) {
    const std::int64_t kk = static_cast<std::int64_t>(k);
    const Int128 p_odd = pentagon_closed(NetSize(2 * kk + 1)).as_signed() - pentagon_closed(NetSize(2 * kk)).as_signed();
    const Int128 p_even = pentagon_closed(NetSize(2 * kk)).as_signed() - pentagon_closed(NetSize(2 * kk - 1)).as_signed();
    CHECK(2 * p_odd == 2 * (3 * k * k * k * k + 2 * k * k * k) - 3 * k * k - k);
    CHECK(p_even == 3 * k * k * k * k - 4 * k * k * k + k);

    const Int128 h_even = hexagon_closed(NetSize(2 * kk)).as_signed() - hexagon_closed(NetSize(2 * kk - 1)).as_signed();
    const Int128 h_odd = hexagon_closed(NetSize(2 * kk + 1)).as_signed() - hexagon_closed(NetSize(2 * kk)).as_signed();
    CHECK(30 * h_even == k * (12 * k * k * k * k - 15 * k * k * k + 5 * k * k - 2));
    CHECK(30 * h_odd == k * (12 * k * k * k * k + 15 * k * k * k + 5 * k * k - 2));

    const Int128 f_even = f_closed(NetSize(2 * kk)).as_signed() - f_closed(NetSize(2 * kk - 1)).as_signed();
    const Int128 f_odd = f_closed(NetSize(2 * kk + 1)).as_signed() - f_closed(NetSize(2 * kk)).as_signed();
    CHECK(f_even == 3 * (3 * k * k - 5 * k + 2));
    CHECK(f_odd == 3 * (3 * k * k - 2 * k));

    const Int128 g_odd = g_closed(NetSize(2 * kk + 1)).as_signed() - g_closed(NetSize(2 * kk)).as_signed();
    const Int128 g_even = g_closed(NetSize(2 * kk)).as_signed() - g_closed(NetSize(2 * kk - 1)).as_signed();
    CHECK(2 * g_odd == k * (4 * k * k - 3 * k + 1));
    CHECK(2 * g_even == (k - 1) * (4 * k * k - 5 * k + 2));
  }
}

TEST_CASE("monotone, strictly from n=3") {
  for (int n = 2; n <= 500; ++n) {
    CHECK(pentagon_closed(NetSize(n)) >= pentagon_closed(NetSize(n - 1)));
    CHECK(hexagon_closed(NetSize(n)) >= hexagon_closed(NetSize(n - 1)));
    if (n >= 3) {
      CHECK(pentagon_closed(NetSize(n)) > pentagon_closed(NetSize(n - 1)));
      CHECK(hexagon_closed(NetSize(n)) > hexagon_closed(NetSize(n - 1)));
    }
  }
}

TEST_CASE("leading coefficients") {
  const double n = 1e4;
  const double p = pentagon_closed(NetSize(10000)).to_double() * 10 / (n * n * n * n * n);
  const double h = hexagon_closed(NetSize(10000)).to_double() * 60 / (n * n * n * n * n * n);
  CHECK(p == doctest::Approx(12.0 / 32).epsilon(0.01));
  CHECK(h == doctest::Approx(8.0 / 64).epsilon(0.01));
}

TEST_CASE("exact count helpers") {
  CHECK(ExactCount::parse("0") == ExactCount(0));
  CHECK(ExactCount::parse("340282366920938463463374607431768211455").value() == ~UInt128{0});
  CHECK_THROWS_AS(ExactCount::parse("340282366920938463463374607431768211456"), std::invalid_argument);
  CHECK_THROWS_AS(ExactCount::parse("12a"), std::invalid_argument);
  CHECK_THROWS_AS(ExactCount::parse(""), std::invalid_argument);
  CHECK(to_string(Int128{-42}) == "-42");
  CHECK(checked::exact_div(60, 10, "x") == 6);
  CHECK_THROWS_AS(checked::exact_div(61, 10, "x"), InexactDivision);
  CHECK_THROWS_AS(checked::mul(Int128{1} << 100, Int128{1} << 30), ArithmeticOverflow);
  CHECK_THROWS_AS(ExactCount::from_signed(-1, "x"), InexactDivision);
}

TEST_CASE("hexagon count past 64 bits") {
  const ExactCount h = hexagon_closed(NetSize(10000));
  CHECK_FALSE(h.fits_u64());
  CHECK(h == hexagon_recurrence(NetSize(10000)));
}

TEST_CASE("overflow is reported, not wrapped") {
  // Horner intermediates leave 128 bits just past n = 3.3e6
  CHECK_THROWS_AS(hexagon_closed(NetSize(3'329'022)), ArithmeticOverflow);
  CHECK_NOTHROW(hexagon_closed(NetSize(3'329'021)));
  CHECK_NOTHROW(hexagon_closed(NetSize(1'000'000)));
}
