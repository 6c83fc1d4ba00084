#ifndef SRGB_RANK_HPP
#define SRGB_RANK_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"
#include "field.hpp"

namespace srgb {

/// Dense row-major integer matrix.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  std::int64_t &operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

namespace detail {

struct Int128Overflow {};

struct CheckedInt128 {
  __int128 v = 0;

  static CheckedInt128 from(std::int64_t x) { return {x}; }
  bool is_zero() const { return v == 0; }
  friend CheckedInt128 operator*(CheckedInt128 a, CheckedInt128 b) {
    __int128 r;
    if (__builtin_mul_overflow(a.v, b.v, &r))
      throw Int128Overflow{};
    return {r};
  }
  friend CheckedInt128 operator-(CheckedInt128 a, CheckedInt128 b) {
    __int128 r;
    if (__builtin_sub_overflow(a.v, b.v, &r))
      throw Int128Overflow{};
    return {r};
  }
  friend CheckedInt128 operator/(CheckedInt128 a, CheckedInt128 b) { return {a.v / b.v}; }
};

struct BigInt {
  boost::multiprecision::cpp_int v;

  static BigInt from(std::int64_t x) { return {x}; }
  bool is_zero() const { return v.is_zero(); }
  friend BigInt operator*(const BigInt &a, const BigInt &b) { return {a.v * b.v}; }
  friend BigInt operator-(const BigInt &a, const BigInt &b) { return {a.v - b.v}; }
  friend BigInt operator/(const BigInt &a, const BigInt &b) { return {a.v / b.v}; }
};

/// Fraction-free (Bareiss) elimination to row echelon form; returns the rank.
/// After each pivot step every active entry is a minor of the input, so the
/// division by the previous pivot is exact.
template <typename Int> std::size_t bareiss_rank(const IntMatrix &in) {
  const std::size_t n = in.rows, m = in.cols;
  std::vector<Int> a;
  a.reserve(n * m);
  for (auto x : in.data)
    a.push_back(Int::from(x));
  auto at = [&](std::size_t i, std::size_t j) -> Int & { return a[i * m + j]; };

  Int prev = Int::from(1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m && rank < n; ++col) {
    std::size_t piv = rank;
    while (piv < n && at(piv, col).is_zero())
      ++piv;
    if (piv == n)
      continue;
    if (piv != rank)
      for (std::size_t j = col; j < m; ++j)
        std::swap(at(piv, j), at(rank, j));
    const Int pivot = at(rank, col);
    for (std::size_t i = rank + 1; i < n; ++i) {
      const Int lead = at(i, col);
      for (std::size_t j = col + 1; j < m; ++j)
        at(i, j) = (pivot * at(i, j) - lead * at(rank, j)) / prev;
      at(i, col) = Int::from(0);
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

} // namespace detail

/// Exact rank over the rationals. Runs with overflow-checked 128-bit integers
/// and restarts with arbitrary precision if an intermediate overflows.
inline std::size_t exact_rank(const IntMatrix &m) {
  try {
    return detail::bareiss_rank<detail::CheckedInt128>(m);
  } catch (const detail::Int128Overflow &) {
    return detail::bareiss_rank<detail::BigInt>(m);
  }
}

/// Rank over GF(p). Never exceeds the rational rank.
inline std::size_t modular_rank(const IntMatrix &in, std::uint32_t p) {
  if (!is_prime(p) || p >= (1U << 31))
    throw InvalidArgument("modular rank needs a prime below 2^31");
  const std::size_t n = in.rows, m = in.cols;
  const std::uint64_t P = p;
  std::vector<std::uint32_t> a(n * m);
  for (std::size_t i = 0; i < n * m; ++i) {
    const std::int64_t r = in.data[i] % static_cast<std::int64_t>(P);
    a[i] = static_cast<std::uint32_t>(r < 0 ? r + static_cast<std::int64_t>(P) : r);
  }
  const PrimeField f(p);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m && rank < n; ++col) {
    std::size_t piv = rank;
    while (piv < n && a[piv * m + col] == 0)
      ++piv;
    if (piv == n)
      continue;
    if (piv != rank)
      for (std::size_t j = col; j < m; ++j)
        std::swap(a[piv * m + j], a[rank * m + j]);
    const std::uint64_t inv = f.inv(a[rank * m + col]);
    const std::uint32_t *prow = &a[rank * m];
    for (std::size_t i = rank + 1; i < n; ++i) {
      std::uint32_t *row = &a[i * m];
      if (row[col] == 0)
        continue;
      const std::uint64_t factor = P - (row[col] * inv % P);
      for (std::size_t j = col + 1; j < m; ++j)
        row[j] = static_cast<std::uint32_t>((row[j] + factor * prow[j]) % P);
      row[col] = 0;
    }
    ++rank;
  }
  return rank;
}

} // namespace srgb

#endif // SRGB_RANK_HPP
