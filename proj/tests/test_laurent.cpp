#include <gtest/gtest.h>

#include <random>

#include "crys/errors.hpp"
#include "crys/laurent.hpp"

using namespace crys;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng, std::uint32_t p, int lo, int hi) {
  std::uniform_int_distribution<int> c(0, static_cast<int>(p) - 1);
  std::vector<std::int64_t> v;
  for (int d = lo; d <= hi; ++d) v.push_back(c(rng));
  return LaurentPoly::from_coeffs(p, lo, v);
}

LoopMatrix random_matrix(std::mt19937_64& rng, std::size_t n, std::uint32_t p) {
  LoopMatrix m(n, p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = random_poly(rng, p, -2, 2);
  return m;
}

}  // namespace

TEST(Laurent, Basics) {
  auto f = LaurentPoly::from_coeffs(5, -2, {1, 0, 3, 0});
  EXPECT_EQ(f.valuation(), -2);
  EXPECT_EQ(f.degree(), 0);
  EXPECT_EQ(f.coeff(0), 3u);
  EXPECT_EQ(f.polar_part(), LaurentPoly::monomial(5, 1, -2));
  EXPECT_TRUE(LaurentPoly::from_coeffs(5, 3, {5, 10}).is_zero());
  EXPECT_EQ(LaurentPoly::monomial(7, -1, 0).coeff(0), 6u);
  EXPECT_THROW(LaurentPoly(5) + LaurentPoly(7), UsageError);
}

TEST(Laurent, RingAxiomsAndDerivations) {
  std::mt19937_64 rng(3);
  for (std::uint32_t p : {2u, 3u, 5u, 7u})
    for (int t = 0; t < 100; ++t) {
      auto f = random_poly(rng, p, -3, 3), g = random_poly(rng, p, -2, 4), h = random_poly(rng, p, 0, 2);
      EXPECT_EQ((f * g) * h, f * (g * h));
      EXPECT_EQ(f * (g + h), f * g + f * h);
      EXPECT_EQ(f - f, LaurentPoly(p));
      EXPECT_EQ((f * g).derivative(), f.derivative() * g + f * g.derivative());
      EXPECT_EQ((f * g).frobenius(), f.frobenius() * g.frobenius());
      EXPECT_TRUE(f.frobenius().derivative().is_zero());
      if (!f.is_zero() && !g.is_zero()) EXPECT_EQ((f * g).valuation(), f.valuation() + g.valuation());
    }
}

TEST(Laurent, InverseSeries) {
  std::mt19937_64 rng(5);
  for (std::uint32_t p : {3u, 5u})
    for (int t = 0; t < 50; ++t) {
      auto f = random_poly(rng, p, 1, 4) + LaurentPoly::constant(p, 1 + t % (p - 1));
      auto g = inverse_series(f, 12);
      EXPECT_EQ((f * g).truncate_above(11), LaurentPoly::constant(p, 1));
    }
  EXPECT_THROW(inverse_series(LaurentPoly::monomial(5, 1, 1), 4), PreconditionError);
}

TEST(LoopMatrix, DeterminantAndAdjugate) {
  std::mt19937_64 rng(9);
  for (std::size_t n : {1u, 2u, 3u, 4u})
    for (int t = 0; t < 20; ++t) {
      auto a = random_matrix(rng, n, 5), b = random_matrix(rng, n, 5);
      EXPECT_EQ((a * b).det(), a.det() * b.det());
      EXPECT_EQ(a * a.adjugate(), LoopMatrix::identity(n, 5).scaled(a.det()));
    }
}

TEST(LoopMatrix, InverseForMonomialDeterminant) {
  LoopMatrix m(2, 3);
  m.at(0, 0) = LaurentPoly::monomial(3, 1, 2);
  m.at(0, 1) = LaurentPoly::from_coeffs(3, -1, {1, 2, 1});
  m.at(1, 1) = LaurentPoly::monomial(3, 2, -1);
  auto inv = m.inverse();
  EXPECT_EQ(m * inv, LoopMatrix::identity(2, 3));
  EXPECT_EQ(inv * m, LoopMatrix::identity(2, 3));
  LoopMatrix s(2, 3);
  s.at(0, 0) = LaurentPoly::from_coeffs(3, 0, {1, 1});
  s.at(1, 1) = LaurentPoly::constant(3, 1);
  EXPECT_THROW(s.inverse(), PreconditionError);
  EXPECT_THROW(LoopMatrix(2, 3).inverse(), PreconditionError);
}
