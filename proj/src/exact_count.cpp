#include "trinet/exact_count.hpp"

#include <algorithm>

namespace trinet {

namespace checked {

Int128 exact_div(Int128 a, Int128 d, std::string_view what) {
  if (d == 0) throw InexactDivision(std::string(what) + ": division by zero");
  if (a % d != 0)
    throw InexactDivision(std::string(what) + ": " + to_string(a) + " is not divisible by " + to_string(d));
  return a / d;
}

}  // namespace checked

std::string to_string(UInt128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

std::string to_string(Int128 v) {
  if (v >= 0) return to_string(static_cast<UInt128>(v));
  // -(v + 1) + 1 avoids negating INT128_MIN
  return "-" + to_string(static_cast<UInt128>(-(v + 1)) + 1);
}

ExactCount ExactCount::from_signed(Int128 v, std::string_view what) {
  if (v < 0) throw InexactDivision(std::string(what) + ": negative count " + trinet::to_string(v));
  return ExactCount(static_cast<UInt128>(v));
}

ExactCount ExactCount::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty count");
  UInt128 v = 0;
  for (char c : text) {
    if (c < '0' || c > '9') throw std::invalid_argument("bad digit in count: " + std::string(text));
    UInt128 next;
    if (__builtin_mul_overflow(v, UInt128{10}, &next) ||
        __builtin_add_overflow(next, UInt128(c - '0'), &next))
      throw std::invalid_argument("count out of 128-bit range: " + std::string(text));
    v = next;
  }
  return ExactCount(v);
}

Int128 ExactCount::as_signed() const {
  if (v_ > static_cast<UInt128>(~UInt128{0} >> 1)) throw ArithmeticOverflow("count exceeds signed 128-bit range");
  return static_cast<Int128>(v_);
}

}  // namespace trinet
