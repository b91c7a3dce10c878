#pragma once

#include <cstdint>
#include <span>

#include "nsq/errors.hpp"

namespace nsq {

using i64 = std::int64_t;

// All semigroup arithmetic goes through these helpers.  Inputs near 10^14
// show up in the quotient-sum stress identities, so wraparound must surface
// as errc::overflow, never as a silent negative.
inline i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) fail(errc::overflow, "64-bit addition overflow");
  return r;
}

inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) fail(errc::overflow, "64-bit multiplication overflow");
  return r;
}

inline i64 checked_sum(std::span<const i64> xs) {
  i64 r = 0;
  for (i64 x : xs) r = checked_add(r, x);
  return r;
}

}  // namespace nsq
