#include "crys/monodromy.hpp"

#include <algorithm>

#include "crys/errors.hpp"

namespace crys {

namespace {

using PolyMat = std::vector<std::vector<QPoly>>;

TruncSeries e_series(std::uint32_t p) { return TruncSeries::from_poly(p, QPoly::linear_e(p)); }

TruncSeries e_power_series(std::uint32_t p, unsigned k) {
  return TruncSeries::from_poly(p, QPoly::linear_e(p).pow(k));
}

PolyMat poly_identity(std::size_t n) {
  PolyMat m(n, std::vector<QPoly>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = QPoly::constant(1);
  return m;
}

PolyMat poly_mul(const PolyMat& a, const PolyMat& b) {
  const std::size_t n = a.size();
  PolyMat r(n, std::vector<QPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) r[i][j] = r[i][j] + a[i][k] * b[k][j];
  return r;
}

PolyMat random_unimodular(std::mt19937_64& rng, std::size_t n) {
  PolyMat m = poly_identity(n);
  if (n < 2) return m;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2), deg(0, 1);
  for (int t = 0; t < 3; ++t) {
    std::size_t i = idx(rng), j = idx(rng);
    while (j == i) j = idx(rng);
    PolyMat el = poly_identity(n);
    el[i][j] = QPoly::monomial(coef(rng), static_cast<std::size_t>(deg(rng)));
    m = poly_mul(m, el);
  }
  return m;
}

}  // namespace

TruncSeries phi_lambda_series(std::uint32_t p, unsigned i, std::int64_t D) {
  if (D < 1) throw UsageError("phi_lambda_series: D must be >= 1");
  std::vector<mpq_class> c(static_cast<std::size_t>(D + 1));
  c[0] = 1;
  const mpq_class minus_inv_p(-1, p);
  std::int64_t step = 1;
  for (unsigned k = 0; k < i && step <= D; ++k) step *= p;
  // Factors with p^k > D are 1 modulo u^(D+1).
  for (; step <= D; step *= p)
    for (std::int64_t n = D; n >= step; --n) c[n] += c[n - step] * minus_inv_p;
  // The coefficient of u^n is (-1/p)^s where n has s base-p digits, all in {0,1};
  // s <= 1 + n/p in general and s <= n/p^i when p^i divides n.
  TailEnvelope env;
  if (i == 0) {
    env = {-1, mpq_class(1, p)};
  } else {
    mpz_class pi;
    mpz_ui_pow_ui(pi.get_mpz_t(), p, i);
    env = {0, mpq_class(1, pi)};
  }
  return TruncSeries(p, D, std::move(c), env, false);
}

TruncSeries n_nabla(const TruncSeries& f, std::int64_t D) {
  TruncSeries lam = lambda_series(f.p(), D);
  return (f.derivative() * lam).shift(1).scaled(-1).truncate(D);
}

TruncSeries z_series(unsigned i, std::uint32_t p, unsigned h, std::int64_t D) {
  if (h < 1) throw UsageError("z_series: h must be >= 1");
  mpz_class pi;
  mpz_ui_pow_ui(pi.get_mpz_t(), p, i);
  TruncSeries z = phi_lambda_series(p, i + 1, D).shift(pi.get_si()).scaled(mpq_class(-1, p));
  TruncSeries einv = TruncSeries::e_inverse(p, D);
  for (unsigned j = 1; j <= i; ++j) {
    einv = einv.phi(D);
    for (unsigned t = 0; t + 1 < h; ++t) z = z * einv;
  }
  return z.truncate(D);
}

EMatrix l1_exact(const EMatrix& C, unsigned h) {
  return (C.derivative() * C.inverse()).scaled(EFrac::e_power(C.p(), h));
}

EMatrix a_c_exact(const EMatrix& C, unsigned h, const EMatrix& X) {
  if (!X.is_integral()) throw PreconditionError("A_C: argument has an E-pole");
  return (C * X.frobenius() * C.inverse()).scaled(EFrac::e_power(C.p(), h));
}

bool adjoint_height_ok(const EMatrix& C, unsigned h) {
  const EMatrix Cinv = C.inverse();
  const EFrac eh = EFrac::e_power(C.p(), h);
  const std::size_t n = C.n();
  // C E_ij C^-1 has (a, b) entry C[a][i] Cinv[j][b].
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          if (!(eh * C.at(a, i) * Cinv.at(j, b)).is_integral()) return false;
          if (!(eh * Cinv.at(a, i) * C.at(j, b)).is_integral()) return false;
        }
  return true;
}

EMatrix L1(const EMatrix& C, unsigned h) {
  if (!adjoint_height_ok(C, h)) throw PreconditionError("L1: adjoint height exceeds h");
  EMatrix r = l1_exact(C, h);
  if (!r.is_integral()) throw PreconditionError("L1: result has an E-pole");
  return r;
}

EMatrix l2_exact(const EMatrix& C, unsigned h) { return a_c_exact(C, h, L1(C, h)); }

SeriesMatrix l1_series(const EMatrix& C, unsigned h, std::int64_t D) {
  return SeriesMatrix::from_exact(l1_exact(C, h), D).truncate(D);
}

SeriesMatrix a_c_series(const EMatrix& C, unsigned h, const SeriesMatrix& X, std::int64_t D) {
  SeriesMatrix Cs = SeriesMatrix::from_exact(C, D);
  SeriesMatrix Ci = SeriesMatrix::from_exact(C.inverse(), D);
  return (Cs * X.phi(D) * Ci).scaled(e_power_series(C.p(), h)).truncate(D);
}

std::vector<SeriesMatrix> n_sequence(const EMatrix& C, unsigned steps, std::int64_t D) {
  const std::uint32_t p = C.p();
  SeriesMatrix Cs = SeriesMatrix::from_exact(C, D);
  SeriesMatrix Ci = SeriesMatrix::from_exact(C.inverse(), D);
  SeriesMatrix dC = SeriesMatrix::from_exact(C.derivative(), D);
  std::vector<SeriesMatrix> out;
  out.emplace_back(C.n(), p);
  if (steps == 0) return out;
  SeriesMatrix delta = (dC * Ci).scaled(lambda_series(p, D).shift(1)).truncate(D);
  out.push_back(delta);
  const TruncSeries e = e_series(p);
  for (unsigned s = 1; s < steps; ++s) {
    delta = (Cs * delta.phi(D) * Ci).scaled(e).truncate(D);
    out.push_back(out.back() + delta);
  }
  return out;
}

TelescopeReport telescope_check(const EMatrix& C, unsigned h, unsigned i_max, std::int64_t D) {
  const std::uint32_t p = C.p();
  TelescopeReport rep;
  std::vector<SeriesMatrix> N = n_sequence(C, i_max + 1, D);
  SeriesMatrix A = SeriesMatrix::from_exact(L1(C, h), D);
  const TruncSeries eh1 = e_power_series(p, h - 1);
  for (unsigned i = 0; i <= i_max; ++i) {
    if (i > 0) A = a_c_series(C, h, A, D);
    SeriesMatrix lhs = (N[i + 1] - N[i]).scaled(eh1).truncate(D);
    SeriesMatrix rhs = A.scaled(z_series(i, p, h, D)).truncate(D);
    TelescopeRow row;
    row.i = i;
    row.compared_degree = D;
    for (std::size_t a = 0; a < C.n(); ++a)
      for (std::size_t b = 0; b < C.n(); ++b) {
        std::int64_t upto = 0;
        lhs.at(a, b).agrees_with(rhs.at(a, b), &upto);
        if (!lhs.at(a, b).exact() || !rhs.at(a, b).exact())
          row.compared_degree = std::min(row.compared_degree, upto);
        for (std::int64_t k = 0; k <= upto; ++k)
          if (lhs.at(a, b).coeff(k) != rhs.at(a, b).coeff(k)) ++row.mismatches;
      }
    rep.pass = rep.pass && row.mismatches == 0;
    rep.rows.push_back(row);
  }
  return rep;
}

ModpReport modp_monodromy_check(const LoopMatrix& C) {
  const LaurentPoly det = C.det();
  if (det.is_zero()) throw PreconditionError("modp_monodromy_check: C is not invertible");
  const std::int64_t d = det.valuation();
  const LaurentPoly w = det.shift(-d);  // unit power series
  // u C' C^-1 = u^(1-d) C' adj(C) w^-1.
  const LoopMatrix Y = (C.derivative() * C.adjugate()).shift(1 - d);
  ModpReport rep;
  for (std::size_t i = 0; i < C.n(); ++i)
    for (std::size_t j = 0; j < C.n(); ++j) {
      const LaurentPoly& y = Y.at(i, j);
      if (y.is_zero() || y.valuation() >= 0) continue;
      LaurentPoly polar = (y * inverse_series(w, -y.valuation())).polar_part();
      if (polar.is_zero()) continue;
      rep.defects.push_back({i, j, -polar.valuation()});
    }
  rep.pass = rep.defects.empty();
  return rep;
}

std::int64_t modp_l1_vanishing_order(const LoopMatrix& C, unsigned h) {
  const LaurentPoly det = C.det();
  if (det.is_zero()) throw PreconditionError("modp_l1_vanishing_order: C is not invertible");
  // w^-1 is a unit, so valuations are those of u^(h-d) C' adj(C).
  const std::int64_t v = (C.derivative() * C.adjugate()).valuation();
  if (v == LaurentPoly::kInfiniteValuation) return v;
  return v + static_cast<std::int64_t>(h) - det.valuation();
}

EMatrix CartanInstance::matrix() const {
  return EMatrix::from_poly(k1, p) * EMatrix::e_diagonal(p, mu) * EMatrix::from_poly(k2, p);
}

LoopMatrix CartanInstance::reduction() const {
  auto reduce = [&](const PolyMat& m) {
    LoopMatrix r(m.size(), p);
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j) {
        std::vector<std::int64_t> c;
        for (const auto& x : m[i][j].coeffs()) {
          if (padic_valuation(x, p) < 0) throw PreconditionError("reduction: coefficient is not p-integral");
          mpz_class num = x.get_num() % mpz_class(p), den = x.get_den() % mpz_class(p);
          c.push_back(static_cast<std::int64_t>(mod_reduce(num.get_si(), p)) *
                      mod_inverse(mod_reduce(den.get_si(), p), p));
        }
        r.at(i, j) = LaurentPoly::from_coeffs(p, 0, c);
      }
    return r;
  };
  return reduce(k1) * LoopMatrix::diagonal_monomial(p, mu) * reduce(k2);
}

CartanInstance random_cartan_instance(std::mt19937_64& rng, std::size_t n, std::uint32_t p, unsigned h_max) {
  CartanInstance inst;
  inst.p = p;
  inst.k1 = random_unimodular(rng, n);
  inst.k2 = random_unimodular(rng, n);
  std::uniform_int_distribution<int> base(-1, 1), spread(0, static_cast<int>(h_max));
  const int b = base(rng);
  inst.mu.resize(n);
  for (auto& m : inst.mu) m = b + spread(rng);
  std::sort(inst.mu.rbegin(), inst.mu.rend());
  inst.h = static_cast<unsigned>(std::max<std::int64_t>(1, inst.mu.front() - inst.mu.back()));
  return inst;
}

}  // namespace crys
