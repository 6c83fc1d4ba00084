#ifndef SRGB_CHECKED_HPP
#define SRGB_CHECKED_HPP

#include <cstdint>
#include <limits>
#include <numeric>

#include "error.hpp"

// Overflow-checked 64-bit integer helpers. Overflow throws, it never wraps.
namespace srgb::checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("integer overflow in addition");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    throw OverflowError("integer overflow in subtraction");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("integer overflow in multiplication");
  return r;
}

/// Exact integer square root, or -1 when n is not a perfect square.
inline std::int64_t exact_sqrt(std::int64_t n) {
  if (n < 0)
    return -1;
  auto r = static_cast<std::int64_t>(__builtin_sqrtl(static_cast<long double>(n)));
  while (r > 0 && r * r > n)
    --r;
  while ((r + 1) * (r + 1) <= n)
    ++r;
  return r * r == n ? r : -1;
}

/// ceil(a / b) for a >= 0, b > 0.
inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return a / b + (a % b != 0 ? 1 : 0);
}

} // namespace srgb::checked

#endif // SRGB_CHECKED_HPP
