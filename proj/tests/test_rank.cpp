#include <gtest/gtest.h>

#include <Eigen/Dense>

#include "support.hpp"

using namespace srgb;

namespace {

IntMatrix random_matrix(std::mt19937_64 &rng, std::size_t r, std::size_t c, std::int64_t range, std::size_t rank) {
  // Product of r×rank and rank×c factors, so the rank is at most `rank`.
  IntMatrix a(r, rank), b(rank, c), m(r, c);
  for (auto &x : a.data)
    x = static_cast<std::int64_t>(uniform_below(rng, 2 * range + 1)) - range;
  for (auto &x : b.data)
    x = static_cast<std::int64_t>(uniform_below(rng, 2 * range + 1)) - range;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      for (std::size_t k = 0; k < rank; ++k)
        m(i, j) += a(i, k) * b(k, j);
  return m;
}

std::size_t eigen_rank(const IntMatrix &m) {
  Eigen::MatrixXd d(static_cast<Eigen::Index>(m.rows), static_cast<Eigen::Index>(m.cols));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = static_cast<double>(m(i, j));
  Eigen::FullPivLU<Eigen::MatrixXd> lu(d);
  lu.setThreshold(1e-9);
  return static_cast<std::size_t>(lu.rank());
}

} // namespace

TEST(Rank, SmallExamples) {
  IntMatrix z(3, 3);
  EXPECT_EQ(exact_rank(z), 0u);
  IntMatrix id(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    id(i, i) = 1;
  EXPECT_EQ(exact_rank(id), 4u);
  IntMatrix m(2, 3);
  m.data = {1, 2, 3, 2, 4, 6};
  EXPECT_EQ(exact_rank(m), 1u);
  EXPECT_EQ(exact_rank(IntMatrix(0, 0)), 0u);
}

TEST(Rank, AgreesWithFloatingPointOnSmallEntries) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const auto r = 1 + uniform_below(rng, 12), c = 1 + uniform_below(rng, 12);
    const auto k = 1 + uniform_below(rng, std::min(r, c));
    const auto m = random_matrix(rng, r, c, 3, k);
    const auto exact = exact_rank(m);
    EXPECT_EQ(exact, eigen_rank(m));
    EXPECT_LE(exact, k);
    EXPECT_EQ(modular_rank(m, 1000000007U), exact);
  }
}

TEST(Rank, BigIntegerFallback) {
  // Entries near 2^62 overflow the 128-bit path during elimination.
  const std::int64_t big = std::int64_t{1} << 61;
  IntMatrix m(4, 4);
  m.data = {big, big - 1, big - 3, 7, big - 5, big, 3, big - 7, 11, big - 2, big, big - 13, big - 1, 5, big - 17, big};
  EXPECT_EQ(detail::bareiss_rank<detail::BigInt>(m), 4u);
  EXPECT_THROW(detail::bareiss_rank<detail::CheckedInt128>(m), detail::Int128Overflow);
  EXPECT_EQ(exact_rank(m), 4u);
  // Third row is the sum of the first two.
  IntMatrix n(3, 4);
  for (std::size_t j = 0; j < 4; ++j) {
    n(0, j) = m(0, j) / 4;
    n(1, j) = m(1, j) / 4;
    n(2, j) = n(0, j) + n(1, j);
  }
  EXPECT_EQ(exact_rank(n), 2u);
}

TEST(Rank, ModularRankIsALowerBound) {
  IntMatrix m(2, 2);
  m.data = {7, 0, 0, 1};
  EXPECT_EQ(modular_rank(m, 7), 1u);
  EXPECT_EQ(exact_rank(m), 2u);
  EXPECT_THROW(modular_rank(m, 8), InvalidArgument);
}
