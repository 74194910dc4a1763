#pragma once

#include <cstdint>
#include <stdexcept>

namespace coinflip::detail {

inline std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("coinflip: integer overflow in addition");
  return r;
}

inline std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_sub_overflow(x, y, &r)) throw std::overflow_error("coinflip: integer overflow in subtraction");
  return r;
}

inline std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("coinflip: integer overflow in multiplication");
  return r;
}

inline std::int64_t checked_neg(std::int64_t x) { return checked_sub(0, x); }

}  // namespace coinflip::detail
