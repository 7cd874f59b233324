#include "crys/series.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "crys/errors.hpp"

namespace crys {

namespace {

constexpr std::int64_t kNoLimit = std::numeric_limits<std::int64_t>::max();

std::int64_t limit_of(const TruncSeries& f) { return f.exact() ? kNoLimit : f.trunc_degree(); }

mpz_class ceil_of(const mpq_class& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

// Tight envelope for a polynomial: slope 0, offset the minimal coefficient valuation.
TailEnvelope poly_envelope(const std::vector<mpq_class>& c, std::uint32_t p) {
  std::int64_t v = kValInfinity;
  for (const auto& x : c) v = std::min(v, padic_valuation(x, p));
  return {mpq_class(v == kValInfinity ? 0 : v), 0};
}

}  // namespace

TruncSeries::TruncSeries(std::uint32_t p, std::int64_t D, std::vector<mpq_class> coeffs, TailEnvelope env,
                         bool exact)
    : p_(p), D_(D), c_(std::move(coeffs)), env_(std::move(env)), exact_(exact) {
  if (D_ < 0) throw PrecisionError("TruncSeries: no coefficients are known");
  if (env_.slope < 0) throw UsageError("TruncSeries: envelope slope must be nonnegative");
  if (exact_) {
    while (c_.size() > 1 && c_.back() == 0) c_.pop_back();
    if (c_.empty()) c_.push_back(0);
    D_ = static_cast<std::int64_t>(c_.size()) - 1;
    env_ = poly_envelope(c_, p_);
  } else {
    c_.resize(static_cast<std::size_t>(D_ + 1));
  }
}

TruncSeries TruncSeries::zero(std::uint32_t p) { return TruncSeries(p, 0, {mpq_class(0)}, {}, true); }

TruncSeries TruncSeries::constant(std::uint32_t p, const mpq_class& c) { return TruncSeries(p, 0, {c}, {}, true); }

TruncSeries TruncSeries::from_poly(std::uint32_t p, const QPoly& f) {
  if (f.is_zero()) return zero(p);
  return TruncSeries(p, f.degree(), f.coeffs(), {}, true);
}

TruncSeries TruncSeries::e_inverse(std::uint32_t p, std::int64_t D) {
  return from_poly(p, QPoly::linear_e(p)).inverse(D);
}

mpq_class TruncSeries::coeff(std::int64_t n) const {
  if (n < 0) return 0;
  if (n > D_) {
    if (exact_) return 0;
    throw PrecisionError("TruncSeries: coefficient beyond the truncation degree");
  }
  return c_[static_cast<std::size_t>(n)];
}

bool TruncSeries::is_zero() const { return exact_ && c_.size() == 1 && c_[0] == 0; }

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
  if (o.p_ != p_) throw UsageError("TruncSeries: mixed primes");
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  const bool ex = exact_ && o.exact_;
  const std::int64_t D = ex ? std::max(D_, o.D_) : std::min(limit_of(*this), limit_of(o));
  std::vector<mpq_class> r(static_cast<std::size_t>(D + 1));
  for (std::int64_t n = 0; n <= D; ++n) r[n] = coeff(n) + o.coeff(n);
  TailEnvelope env{std::min(env_.offset, o.env_.offset), std::max(env_.slope, o.env_.slope)};
  return TruncSeries(p_, D, std::move(r), env, ex);
}

TruncSeries TruncSeries::operator-() const { return scaled(-1); }

TruncSeries TruncSeries::operator-(const TruncSeries& o) const { return *this + (-o); }

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
  if (o.p_ != p_) throw UsageError("TruncSeries: mixed primes");
  if (is_zero() || o.is_zero()) return zero(p_);
  const bool ex = exact_ && o.exact_;
  const std::int64_t D = ex ? D_ + o.D_ : std::min(limit_of(*this), limit_of(o));
  std::vector<mpq_class> r(static_cast<std::size_t>(D + 1));
  for (std::int64_t i = 0; i <= std::min(D, D_); ++i) {
    if (c_[i] == 0) continue;
    for (std::int64_t j = 0; j <= std::min(D - i, o.D_); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  TailEnvelope env{env_.offset + o.env_.offset, std::max(env_.slope, o.env_.slope)};
  return TruncSeries(p_, D, std::move(r), env, ex);
}

TruncSeries TruncSeries::scaled(const mpq_class& r) const {
  if (r == 0) return zero(p_);
  std::vector<mpq_class> v(c_);
  for (auto& x : v) x *= r;
  TailEnvelope env{env_.offset + padic_valuation(r, p_), env_.slope};
  return TruncSeries(p_, D_, std::move(v), env, exact_);
}

TruncSeries TruncSeries::shift(std::int64_t m) const {
  if (m < 0) throw UsageError("TruncSeries::shift: negative shift");
  std::vector<mpq_class> v(static_cast<std::size_t>(m));
  v.insert(v.end(), c_.begin(), c_.end());
  TailEnvelope env{env_.offset + env_.slope * m, env_.slope};
  return TruncSeries(p_, D_ + m, std::move(v), env, exact_);
}

TruncSeries TruncSeries::derivative() const {
  if (exact_ && D_ == 0) return zero(p_);
  if (D_ < 1) throw PrecisionError("TruncSeries::derivative: truncation degree exhausted");
  std::vector<mpq_class> v(static_cast<std::size_t>(D_));
  for (std::int64_t n = 1; n <= D_; ++n) v[n - 1] = c_[n] * n;
  // n a_n has valuation >= offset - slope n = (offset - slope) - slope (n - 1).
  TailEnvelope env{env_.offset - env_.slope, env_.slope};
  return TruncSeries(p_, D_ - 1, std::move(v), env, exact_);
}

TruncSeries TruncSeries::phi(std::int64_t cap) const {
  std::int64_t D = exact_ ? D_ * p_ : (D_ + 1) * p_ - 1;
  if (!exact_ && cap >= 0) D = std::min(D, cap);
  std::vector<mpq_class> v(static_cast<std::size_t>(D + 1));
  for (std::int64_t n = 0; n * p_ <= D; ++n) v[n * p_] = c_[n];
  TailEnvelope env{env_.offset, env_.slope / p_};
  return TruncSeries(p_, D, std::move(v), env, exact_);
}

TruncSeries TruncSeries::inverse(std::int64_t D) const {
  if (c_[0] == 0) throw PreconditionError("TruncSeries::inverse: constant term vanishes");
  if (!exact_) D = std::min(D, D_);
  if (exact_ && D_ == 0) return constant(p_, 1 / c_[0]);
  const mpq_class inv0 = 1 / c_[0];
  std::vector<mpq_class> b(static_cast<std::size_t>(D + 1));
  b[0] = inv0;
  for (std::int64_t n = 1; n <= D; ++n) {
    mpq_class acc = 0;
    for (std::int64_t k = 1; k <= std::min(n, D_); ++k) acc += c_[k] * b[n - k];
    b[n] = -acc * inv0;
  }
  // f = a0 (1 - g) with v(g_n) >= cg - s n and cg <= 0; the n-th coefficient of
  // sum g^k only sees k <= n, so it has valuation >= n (cg - s).
  const std::int64_t v0 = padic_valuation(c_[0], p_);
  const mpq_class cg = env_.offset - v0;
  TailEnvelope env{mpq_class(-v0), env_.slope - cg};
  return TruncSeries(p_, D, std::move(b), env, false);
}

TruncSeries TruncSeries::truncate(std::int64_t D) const {
  if (D >= D_) return *this;
  std::vector<mpq_class> v(c_.begin(), c_.begin() + D + 1);
  return TruncSeries(p_, D, std::move(v), env_, false);
}

bool TruncSeries::envelope_consistent() const {
  for (std::int64_t n = 0; n <= D_; ++n) {
    if (c_[n] == 0) continue;
    if (padic_valuation(c_[n], p_) < env_.offset - env_.slope * n) return false;
  }
  return true;
}

bool TruncSeries::agrees_with(const TruncSeries& o, std::int64_t* compared) const {
  std::int64_t D = std::min(limit_of(*this), limit_of(o));
  if (D == kNoLimit) D = std::max(D_, o.D_);
  if (compared) *compared = D;
  for (std::int64_t n = 0; n <= D; ++n)
    if (coeff(n) != o.coeff(n)) return false;
  return true;
}

std::string TruncSeries::to_string() const {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (std::int64_t n = 0; n <= D_; ++n) {
    if (c_[n] == 0) continue;
    if (!first) os << ", ";
    first = false;
    os << '(' << n << ", " << c_[n].get_num() << ", " << c_[n].get_den() << ')';
  }
  os << "] + " << (exact_ ? "exact" : "O(u^" + std::to_string(D_ + 1) + ")");
  return os.str();
}

PointValue evaluate_at_p(const TruncSeries& f, unsigned k) {
  PointValue pv;
  const std::int64_t D = f.trunc_degree();
  const mpz_class p = f.p();
  mpq_class acc = 0;
  for (std::int64_t n = k; n <= D; ++n) {
    const mpq_class a = f.coeff(n);
    if (a == 0) continue;
    mpz_class falling = 1, pw;
    for (std::int64_t t = 0; t < static_cast<std::int64_t>(k); ++t) falling *= (n - t);
    mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(n - k));
    acc += a * mpq_class(falling * pw);
  }
  pv.value = acc;
  pv.exact = f.exact();
  if (!pv.exact) {
    // Term n > D has valuation >= offset - slope n + (n - k), smallest at n = D + 1 when slope <= 1.
    const auto& env = f.envelope();
    if (env.slope <= 1) pv.tail_bound = env.offset - static_cast<long>(k) + (1 - env.slope) * (D + 1);
  }
  return pv;
}

ValuationCertificate valuation_at(const TruncSeries& f, unsigned k) {
  ValuationCertificate c;
  c.D_used = f.trunc_degree();
  PointValue pv = evaluate_at_p(f, k);
  const bool is_zero = pv.value == 0;
  const std::int64_t v = is_zero ? kValInfinity : padic_valuation(pv.value, f.p());
  if (pv.exact) {
    c.certified = true;
    c.zero = is_zero;
    c.value = v;
    return c;
  }
  if (!pv.tail_bound) {
    c.value = std::numeric_limits<std::int64_t>::min();
    return c;
  }
  const mpz_class tail = ceil_of(*pv.tail_bound);
  if (!is_zero && mpz_class(v) < tail) {
    c.certified = true;
    c.value = v;
  } else {
    c.value = is_zero ? tail.get_si() : std::min<std::int64_t>(v, tail.get_si());
  }
  return c;
}

ValuationCertificate valuation_certify(const SeriesFactory& make, unsigned k, std::int64_t D0, std::int64_t cap) {
  for (std::int64_t D = std::max<std::int64_t>(D0, 1); D <= cap; D *= 2) {
    ValuationCertificate c = valuation_at(make(D), k);
    if (c.certified) return c;
  }
  throw PrecisionError("valuation_certify: not certified up to D = " + std::to_string(cap));
}

ValuationCertificate certify_lower_bound(const SeriesFactory& make, unsigned k, std::int64_t claim, std::int64_t D0,
                                         std::int64_t cap) {
  ValuationCertificate last;
  for (std::int64_t D = std::max<std::int64_t>(D0, 1); D <= cap; D *= 2) {
    last = valuation_at(make(D), k);
    if (last.zero || last.value >= claim) {
      last.certified = true;
      return last;
    }
    // A certified exact value below the claim will not move with D.
    if (last.certified) {
      last.certified = false;
      return last;
    }
  }
  last.certified = false;
  return last;
}

SeriesMatrix::SeriesMatrix(std::size_t n, std::uint32_t p) : n_(n), p_(p), e_(n * n, TruncSeries::zero(p)) {}

SeriesMatrix SeriesMatrix::identity(std::size_t n, std::uint32_t p) {
  SeriesMatrix m(n, p);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = TruncSeries::constant(p, 1);
  return m;
}

SeriesMatrix SeriesMatrix::from_exact(const EMatrix& m, std::int64_t D) {
  SeriesMatrix r(m.n(), m.p());
  const TruncSeries einv = TruncSeries::e_inverse(m.p(), D);
  for (std::size_t i = 0; i < m.n(); ++i)
    for (std::size_t j = 0; j < m.n(); ++j) {
      const EFrac& f = m.at(i, j);
      TruncSeries s = TruncSeries::from_poly(m.p(), f.num());
      for (std::int64_t k = 0; k < f.pole_order(); ++k) s = s * einv;
      r.at(i, j) = s;
    }
  return r;
}

SeriesMatrix SeriesMatrix::operator*(const SeriesMatrix& o) const {
  if (o.n_ != n_) throw UsageError("SeriesMatrix: shape mismatch");
  SeriesMatrix r(n_, p_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      TruncSeries acc = TruncSeries::zero(p_);
      for (std::size_t k = 0; k < n_; ++k) acc = acc + at(i, k) * o.at(k, j);
      r.at(i, j) = acc;
    }
  return r;
}

SeriesMatrix SeriesMatrix::operator+(const SeriesMatrix& o) const {
  SeriesMatrix r(*this);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
  return r;
}

SeriesMatrix SeriesMatrix::operator-(const SeriesMatrix& o) const {
  SeriesMatrix r(*this);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
  return r;
}

SeriesMatrix SeriesMatrix::scaled(const TruncSeries& f) const {
  SeriesMatrix r(*this);
  for (auto& x : r.e_) x = x * f;
  return r;
}

SeriesMatrix SeriesMatrix::derivative() const {
  SeriesMatrix r(*this);
  for (auto& x : r.e_) x = x.derivative();
  return r;
}

SeriesMatrix SeriesMatrix::phi(std::int64_t cap) const {
  SeriesMatrix r(*this);
  for (auto& x : r.e_) x = x.phi(cap);
  return r;
}

SeriesMatrix SeriesMatrix::truncate(std::int64_t D) const {
  SeriesMatrix r(*this);
  for (auto& x : r.e_) x = x.truncate(D);
  return r;
}

std::int64_t SeriesMatrix::trunc_degree() const {
  std::int64_t d = kNoLimit, hi = 0;
  for (const auto& x : e_) {
    hi = std::max(hi, x.trunc_degree());
    if (!x.exact()) d = std::min(d, x.trunc_degree());
  }
  return d == kNoLimit ? hi : d;
}

}  // namespace crys
