#include <gtest/gtest.h>

#include <random>

#include "nil/error.hpp"
#include "nil/linalg.hpp"

using namespace nil;

TEST(Linalg, Primes) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(32003));
  EXPECT_TRUE(is_prime(2147483647));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(32001));
  EXPECT_THROW(ModMatrix(2, 2, 4), std::exception);
}

TEST(Linalg, SmallRanks) {
  // [[1,2],[3,6]] has rank 1 everywhere; 2I vanishes over GF(2).
  std::vector<Entry> dep = {{0, 0, 1}, {0, 1, 2}, {1, 0, 3}, {1, 1, 6}};
  EXPECT_EQ(rank_mod_p(2, 2, dep, 2), 1U);
  EXPECT_EQ(rank_mod_p(2, 2, dep, 32003), 1U);
  std::vector<Entry> two = {{0, 0, 2}, {1, 1, 2}};
  EXPECT_EQ(rank_mod_p(2, 2, two, 2), 0U);
  EXPECT_EQ(rank_mod_p(2, 2, two, 3), 2U);
  // Boundary of a triangle: rank 2 in any characteristic.
  std::vector<Entry> tri = {{0, 0, -1}, {1, 0, 1}, {0, 1, -1}, {2, 1, 1}, {1, 2, -1}, {2, 2, 1}};
  EXPECT_EQ(rank_mod_p(3, 3, tri, 2), 2U);
  EXPECT_EQ(rank_mod_p(3, 3, tri, 7), 2U);
  EXPECT_EQ(rank_mod_p(0, 5, {}, 2), 0U);
}

TEST(Linalg, BitMatrixAgreesWithDenseModTwo) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = rng() % 70 + 1;
    const std::size_t cols = rng() % 140 + 1;
    BitMatrix bits(rows, cols);
    ModMatrix dense(rows, cols, 2);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        if (rng() % 3 == 0) {
          bits.set(r, c);
          dense.set(r, c, 1);
        }
      }
    }
    ASSERT_EQ(bits.eliminate(), dense.eliminate());
  }
}

TEST(Linalg, RankOfProductIsBounded) {
  // A (r x k) times B (k x c) has rank at most k; a random square matrix over
  // a large field is almost surely full rank.
  std::mt19937_64 rng(5);
  const std::uint32_t p = 32003;
  ModMatrix full(6, 6, p);
  for (std::size_t r = 0; r < 6; ++r) {
    for (std::size_t c = 0; c < 6; ++c) full.set(r, c, static_cast<std::int64_t>(rng() % p));
  }
  EXPECT_EQ(full.eliminate(), 6U);

  ModMatrix low(8, 8, p);
  std::vector<std::vector<std::int64_t>> a(8, std::vector<std::int64_t>(2));
  std::vector<std::vector<std::int64_t>> b(2, std::vector<std::int64_t>(8));
  for (auto& row : a) for (auto& x : row) x = static_cast<std::int64_t>(rng() % p);
  for (auto& row : b) for (auto& x : row) x = static_cast<std::int64_t>(rng() % p);
  for (std::size_t r = 0; r < 8; ++r) {
    for (std::size_t c = 0; c < 8; ++c) {
      std::int64_t s = 0;
      for (int k = 0; k < 2; ++k) s = (s + a[r][k] * b[k][c]) % p;
      low.set(r, c, s);
    }
  }
  EXPECT_LE(low.eliminate(), 2U);
}

TEST(Linalg, NegativeEntriesWrap) {
  ModMatrix m(1, 1, 5);
  m.set(0, 0, -1);
  EXPECT_EQ(m.get(0, 0), 4U);
}
