#pragma once

/// \file exact_count.hpp
/// \brief 128-bit exact counts with checked arithmetic.
///
/// Hexagon counts pass 2^64 at n = 4549, so every count is carried in
/// 128 bits. Arithmetic helpers throw instead of wrapping.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace trinet {

using Int128 = __int128;
using UInt128 = unsigned __int128;

class ArithmeticOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// A closed form produced a non-integer or negative value. Indicates a
/// transcription error in a polynomial; never fires for valid input.
class InexactDivision : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace checked {

inline Int128 add(Int128 a, Int128 b) {
  Int128 r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("128-bit addition overflow");
  return r;
}

inline Int128 sub(Int128 a, Int128 b) {
  Int128 r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("128-bit subtraction overflow");
  return r;
}

inline Int128 mul(Int128 a, Int128 b) {
  Int128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("128-bit multiplication overflow");
  return r;
}

/// a / d, throwing InexactDivision unless d divides a.
Int128 exact_div(Int128 a, Int128 d, std::string_view what);

/// Horner evaluation of sum coeffs[i] * x^(deg - i), highest degree first.
template <std::size_t N>
Int128 horner(const Int128 (&coeffs)[N], Int128 x) {
  Int128 acc = 0;
  for (Int128 c : coeffs) acc = add(mul(acc, x), c);
  return acc;
}

}  // namespace checked

std::string to_string(Int128 v);
std::string to_string(UInt128 v);

/// Nonnegative exact integer count.
class ExactCount {
 public:
  constexpr ExactCount() = default;
  constexpr explicit ExactCount(UInt128 v) : v_(v) {}
  constexpr explicit ExactCount(std::uint64_t v) : v_(v) {}
  constexpr explicit ExactCount(int v) : v_(static_cast<UInt128>(v)) {}

  /// Throws InexactDivision if v is negative.
  static ExactCount from_signed(Int128 v, std::string_view what);
  /// Parses a decimal string; throws std::invalid_argument on bad input.
  static ExactCount parse(std::string_view text);

  constexpr UInt128 value() const noexcept { return v_; }
  Int128 as_signed() const;
  bool fits_u64() const noexcept { return v_ <= UINT64_MAX; }
  double to_double() const noexcept { return static_cast<double>(v_); }
  std::string to_string() const { return trinet::to_string(v_); }

  friend constexpr auto operator<=>(const ExactCount&, const ExactCount&) = default;

 private:
  UInt128 v_ = 0;
};

}  // namespace trinet
