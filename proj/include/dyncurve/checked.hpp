#pragma once

#include <cstdint>
#include <limits>

#include "error.hpp"

namespace dyncurve {

using Int = std::int64_t;

// Overflow in any coordinate computation is a hard error.
inline Int add(Int x, Int y) {
  Int r;
  if (__builtin_add_overflow(x, y, &r)) throw CurveError(ErrorKind::Overflow, "integer addition overflow");
  return r;
}

inline Int sub(Int x, Int y) {
  Int r;
  if (__builtin_sub_overflow(x, y, &r)) throw CurveError(ErrorKind::Overflow, "integer subtraction overflow");
  return r;
}

inline Int mul(Int x, Int y) {
  Int r;
  if (__builtin_mul_overflow(x, y, &r)) throw CurveError(ErrorKind::Overflow, "integer multiplication overflow");
  return r;
}

inline Int abs_checked(Int x) {
  if (x == std::numeric_limits<Int>::min()) throw CurveError(ErrorKind::Overflow, "integer abs overflow");
  return x < 0 ? -x : x;
}

inline Int neg(Int x) { return sub(0, x); }

inline Int twice(Int x) { return mul(2, x); }

/// x^+ = max(x, 0)
inline Int pos(Int x) { return x > 0 ? x : 0; }

inline bool is_even(Int x) { return x % 2 == 0; }

}  // namespace dyncurve
