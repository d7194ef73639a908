#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rigidlab/linalg.hpp"
#include "rigidlab/random.hpp"

namespace {

using namespace rigidlab;

Matrix<Rational> to_matrix(const std::vector<oracle::Row>& rows, std::size_t cols) {
  Matrix<Rational> m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  return m;
}

std::vector<oracle::Row> random_rows(Rng& rng, std::size_t rows, std::size_t cols, int rank_hint) {
  // Low-rank products make rank deficiency common.
  std::vector<oracle::Row> a(rows, oracle::Row(static_cast<std::size_t>(rank_hint))),
      b(static_cast<std::size_t>(rank_hint), oracle::Row(cols));
  for (auto& r : a)
    for (auto& x : r) x = Rational(static_cast<long>(uniform_in(rng, -3, 3)), static_cast<long>(uniform_in(rng, 1, 4)));
  for (auto& r : b)
    for (auto& x : r) x = Rational(static_cast<long>(uniform_in(rng, -3, 3)));
  std::vector<oracle::Row> out(rows, oracle::Row(cols, Rational(0)));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

TEST(Linalg, IdentityAndZero) {
  Matrix<Rational> id(5, 5), zero(4, 6);
  for (std::size_t i = 0; i < 5; ++i) id(i, i) = 1;
  EXPECT_EQ(rank_exact(id), 5U);
  EXPECT_EQ(rank_exact(zero), 0U);
}

TEST(Linalg, RankAgreesWithGaussJordan) {
  Rng rng(11);
  for (int t = 0; t < 60; ++t) {
    const auto rows = static_cast<std::size_t>(uniform_in(rng, 1, 7));
    const auto cols = static_cast<std::size_t>(uniform_in(rng, 1, 7));
    const auto hint = static_cast<int>(uniform_in(rng, 1, 5));
    const auto m = random_rows(rng, rows, cols, hint);
    const auto expected = oracle::rank(m);
    EXPECT_EQ(rank_exact(to_matrix(m, cols)), expected);
    EXPECT_EQ(bareiss_rank(integer_rows(to_matrix(m, cols))), expected);
    EXPECT_LE(rank_mod_prime(integer_rows(to_matrix(m, cols))), expected);
  }
}

TEST(Linalg, CertifiedRankFallsBackBelowBound) {
  Matrix<Rational> m(3, 3);
  m(0, 0) = 1;
  m(1, 1) = 1;
  const auto r = rank_certified(m, 3);
  EXPECT_EQ(r.rank, 2U);
  EXPECT_EQ(r.method, "bareiss");
  EXPECT_EQ(rank_certified(m, 2).method, "modular-certified");
}

TEST(Linalg, NullspaceIsKernelOfRightDimension) {
  Rng rng(5);
  for (int t = 0; t < 30; ++t) {
    const std::size_t rows = 4, cols = 6;
    const auto m = random_rows(rng, rows, cols, static_cast<int>(uniform_in(rng, 1, 4)));
    const auto basis = nullspace(to_matrix(m, cols));
    EXPECT_EQ(basis.size(), cols - oracle::rank(m));
    for (const auto& v : basis)
      for (std::size_t r = 0; r < rows; ++r) {
        Rational s = 0;
        for (std::size_t c = 0; c < cols; ++c) s += m[r][c] * v[c];
        EXPECT_EQ(s, 0);
      }
    EXPECT_EQ(oracle::rank(basis), basis.size());
  }
}

TEST(Linalg, BitMatrixRankOverZ2) {
  // Rows 110, 011, 101 sum to zero over Z2.
  BitMatrix b(3, 3);
  b.set(0, 0, true), b.set(0, 1, true);
  b.set(1, 1, true), b.set(1, 2, true);
  b.set(2, 0, true), b.set(2, 2, true);
  EXPECT_EQ(b.rank(), 2U);
  EXPECT_EQ(b.nullity(), 1U);
  BitMatrix wide(2, 130);
  wide.set(0, 129, true);
  wide.set(1, 64, true);
  EXPECT_EQ(wide.rank(), 2U);
}

TEST(Random, DerivedSeedsAreStableAndDistinct) {
  EXPECT_EQ(derive_seed(1, 0), derive_seed(1, 0));
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
  Rng a(3), b(3);
  std::vector<int> x{1, 2, 3, 4, 5}, y = x;
  seeded_shuffle(x, a);
  seeded_shuffle(y, b);
  EXPECT_EQ(x, y);
}

}  // namespace
