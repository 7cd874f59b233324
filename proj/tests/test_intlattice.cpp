#include <gtest/gtest.h>

#include <random>

#include "crys/intlattice.hpp"

using namespace crys;

TEST(IntLattice, IndexOfDiagonalLattice) {
  IntLattice L(2, {{2, 0}, {0, 3}});
  EXPECT_EQ(L.index(), 6);
  EXPECT_TRUE(L.contains({4, -3}));
  EXPECT_FALSE(L.contains({1, 0}));
}

TEST(IntLattice, PreimageReconstructsVector) {
  IntMat gens{{1, 1, 0}, {0, 2, 1}, {3, 1, 1}};
  IntLattice L(3, gens);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int t = 0; t < 200; ++t) {
    IntVec c{d(rng), d(rng), d(rng)};
    IntVec v(3, 0);
    for (int k = 0; k < 3; ++k) v = add(v, scale(c[k], gens[k]));
    auto pre = L.preimage(v);
    ASSERT_TRUE(pre.has_value());
    IntVec back(3, 0);
    for (int k = 0; k < 3; ++k) back = add(back, scale((*pre)[k], gens[k]));
    EXPECT_EQ(back, v);
  }
}

TEST(IntLattice, IndexMatchesDeterminant) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int t = 0; t < 100; ++t) {
    IntMat m(3, IntVec(3));
    for (auto& row : m)
      for (auto& x : row) x = d(rng);
    mpz_class det = determinant(m);
    if (det == 0) continue;
    EXPECT_EQ(IntLattice(3, m).index(), mpz_class(abs(det)).get_si());
    std::int64_t prod = 1;
    for (auto f : invariant_factors(m)) prod *= f;
    EXPECT_EQ(prod, mpz_class(abs(det)).get_si());
  }
}

TEST(IntLattice, InvariantFactorsDivisibility) {
  auto f = invariant_factors({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0], 2);
  EXPECT_EQ(f[1], 6);
  EXPECT_EQ(f[2], 12);
}

TEST(IntLattice, SolveRational) {
  auto x = solve_rational({{2, 0}, {0, 4}}, {1, 1});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0], mpq_class(1, 2));
  EXPECT_EQ((*x)[1], mpq_class(1, 4));
  EXPECT_FALSE(solve_rational({{1, 1}}, {1, 0}).has_value());
}
