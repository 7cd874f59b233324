#include <gtest/gtest.h>

#include <random>

#include "crys/errors.hpp"
#include "crys/monodromy.hpp"
#include "crys/series.hpp"

using namespace crys;

namespace {

// Coefficient of u^n in prod_{k >= i} (1 - u^(p^k)/p), read off from base-p digits.
mpq_class lambda_coeff_oracle(std::uint32_t p, unsigned i, std::int64_t n) {
  if (n == 0) return 1;
  std::int64_t m = n, digits = 0;
  for (unsigned k = 0; k < i; ++k) {
    if (m % p) return 0;
    m /= p;
  }
  for (; m > 0; m /= p) {
    const std::int64_t d = m % p;
    if (d > 1) return 0;
    digits += d;
  }
  mpq_class r = 1;
  for (std::int64_t t = 0; t < digits; ++t) r *= mpq_class(-1, p);
  return r;
}

TruncSeries random_series(std::mt19937_64& rng, std::uint32_t p, std::int64_t D, bool unit) {
  std::uniform_int_distribution<int> num(-6, 6), den_exp(0, 2);
  std::vector<mpq_class> c(static_cast<std::size_t>(D + 1));
  for (auto& x : c) {
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), p, static_cast<unsigned long>(den_exp(rng)));
    x = mpq_class(num(rng), den);
    x.canonicalize();
  }
  if (unit && c[0] == 0) c[0] = 1;
  return TruncSeries::from_poly(p, QPoly(c));
}

mpz_class falling(std::int64_t a, std::int64_t k) {
  mpz_class r = 1;
  for (std::int64_t t = 0; t < k; ++t) r *= a - t;
  return r;
}

mpz_class ipow(std::uint32_t p, std::int64_t e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, static_cast<unsigned long>(e));
  return r;
}

}  // namespace

TEST(Series, LambdaCoefficientsMatchDigitOracle) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u})
    for (unsigned i : {0u, 1u, 2u}) {
      auto f = phi_lambda_series(p, i, 300);
      for (std::int64_t n = 0; n <= 300; ++n) ASSERT_EQ(f.coeff(n), lambda_coeff_oracle(p, i, n)) << p << ' ' << i;
      EXPECT_TRUE(f.envelope_consistent());
    }
}

TEST(Series, LambdaPinnedValues) {
  EXPECT_EQ(lambda_series(5, 10).coeff(0), 1);
  EXPECT_EQ(lambda_series(5, 10).coeff(1), mpq_class(-1, 5));
}

TEST(Series, EInverseCoefficients) {
  for (std::uint32_t p : {3u, 5u}) {
    auto f = TruncSeries::e_inverse(p, 20);
    for (std::int64_t n = 0; n <= 20; ++n) EXPECT_EQ(f.coeff(n), -1 / mpq_class(ipow(p, n + 1)));
    EXPECT_TRUE(f.envelope_consistent());
  }
}

TEST(Series, ArithmeticKeepsEnvelopes) {
  std::mt19937_64 rng(17);
  for (std::uint32_t p : {3u, 5u})
    for (int t = 0; t < 30; ++t) {
      auto a = random_series(rng, p, 8, true), b = random_series(rng, p, 6, false);
      auto lam = lambda_series(p, 40);
      std::vector<TruncSeries> made = {a.inverse(40),
                                       a.inverse(40) * lam,
                                       (a * lam).derivative(),
                                       lam.phi(60) + b,
                                       a.inverse(40).shift(3).phi(80),
                                       (lam * a).inverse(40) * TruncSeries::e_inverse(p, 40)};
      for (const auto& f : made) EXPECT_TRUE(f.envelope_consistent()) << f.to_string();
      auto one = a * a.inverse(30);
      EXPECT_TRUE(one.agrees_with(TruncSeries::constant(p, 1)));
    }
}

TEST(Series, PrecisionPropagation) {
  auto lam = lambda_series(5, 20);
  EXPECT_EQ(lam.derivative().trunc_degree(), 19);
  EXPECT_EQ(lam.phi().trunc_degree(), 104);
  EXPECT_EQ(lam.phi(50).trunc_degree(), 50);
  EXPECT_EQ((lam * lambda_series(5, 30)).trunc_degree(), 20);
  EXPECT_EQ(lam.shift(2).trunc_degree(), 22);
  EXPECT_THROW(lam.coeff(21), PrecisionError);
  auto e = TruncSeries::from_poly(5, QPoly::linear_e(5));
  EXPECT_TRUE((e * e).exact());
  EXPECT_EQ((e * lam).trunc_degree(), 20);
}

TEST(Series, EvaluationOfPolynomialsIsExact) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 30; ++t) {
    auto f = random_series(rng, 5, 7, false);
    QPoly q(std::vector<mpq_class>([&] {
      std::vector<mpq_class> v;
      for (std::int64_t n = 0; n <= f.trunc_degree(); ++n) v.push_back(f.coeff(n));
      return v;
    }()));
    for (unsigned k = 0; k < 4; ++k) {
      auto pv = evaluate_at_p(f, k);
      EXPECT_TRUE(pv.exact);
      EXPECT_EQ(pv.value, q.evaluate_derivative(k, 5));
    }
  }
}

TEST(Series, TrivialQuotient) {
  EXPECT_EQ(valuation_at(TruncSeries::constant(5, 1), 0).value, 0);
  EXPECT_TRUE(valuation_at(TruncSeries::constant(5, 1), 0).certified);
  // lambda / lambda is 1 coefficientwise, but lambda(p) = 0, so the truncated
  // quotient has no usable tail bound at u = p and is reported uncertified.
  for (std::int64_t D : {20, 40}) {
    auto lam = lambda_series(5, D);
    auto q = lam * lam.inverse(D);
    EXPECT_TRUE(q.agrees_with(TruncSeries::constant(5, 1)));
    EXPECT_FALSE(valuation_at(q, 0).certified);
  }
}

// d^n phi^i(lambda)/du^n at u = p has valuation p^i + i - 1 - n, with leading term
// -(p^i - 1)!/(p^i - n)! p^(p^i + i - 1 - n).
TEST(Series, PhiLambdaDerivativeValuations) {
  for (std::uint32_t p : {3u, 5u, 7u})
    for (unsigned i : {1u, 2u}) {
      const std::int64_t pi = ipow(p, i).get_si();
      auto make = [&](std::int64_t D) { return phi_lambda_series(p, i, D); };
      auto unit = valuation_certify(make, 0);
      EXPECT_EQ(unit.value, 0) << "phi^i(lambda)(p) is a unit";
      for (unsigned n = 1; n < p; ++n) {
        auto c = valuation_certify(make, n);
        ASSERT_TRUE(c.certified);
        EXPECT_EQ(c.value, pi + i - 1 - n) << "p=" << p << " i=" << i << " n=" << n;
        auto c2 = valuation_at(make(2 * c.D_used), n);
        EXPECT_TRUE(c2.certified);
        EXPECT_EQ(c2.value, c.value);
        // Leading term agrees modulo p^(p^i + i - n).
        auto pv = evaluate_at_p(make(2 * c.D_used), n);
        mpq_class lead = -mpq_class(falling(pi - 1, n - 1)) * mpq_class(ipow(p, pi + i - 1 - n));
        ASSERT_TRUE(pv.tail_bound);
        EXPECT_GE(*pv.tail_bound, pi + i - n);
        EXPECT_GE(padic_valuation(pv.value - lead, p), pi + static_cast<std::int64_t>(i) - n);
      }
    }
}

TEST(Series, PinnedValuations) {
  auto c1 = valuation_certify([](std::int64_t D) { return phi_lambda_series(3, 1, D); }, 1);
  EXPECT_EQ(c1.value, 2);
  auto c2 = valuation_certify([](std::int64_t D) { return phi_lambda_series(5, 2, D); }, 1);
  EXPECT_EQ(c2.value, 25);
}

TEST(Series, UncertifiableThrows) {
  // 1/E diverges at u = p.
  EXPECT_THROW(valuation_certify([](std::int64_t D) { return TruncSeries::e_inverse(5, D); }, 0, 8, 64),
               PrecisionError);
}

TEST(Series, CertifyLowerBound) {
  // E lambda = -E^2 phi(lambda) / p vanishes at u = p.
  auto make = [](std::int64_t D) {
    return lambda_series(5, D) * TruncSeries::from_poly(5, QPoly::linear_e(5));
  };
  auto c = certify_lower_bound(make, 0, 10);
  EXPECT_TRUE(c.certified);
  EXPECT_GE(c.value, 10);
}
