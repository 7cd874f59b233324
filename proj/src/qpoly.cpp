#include "crys/qpoly.hpp"

#include <algorithm>

#include "crys/errors.hpp"

namespace crys {

std::int64_t padic_valuation(const mpq_class& x, std::uint32_t p) {
  if (x == 0) return kValInfinity;
  mpz_class prime = p, rest;
  auto count = [&](const mpz_class& z) {
    mpz_class tmp = z;
    return static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), tmp.get_mpz_t(), prime.get_mpz_t()));
  };
  return count(x.get_num()) - count(x.get_den());
}

QPoly::QPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { normalize(); }

QPoly QPoly::constant(const mpq_class& c) { return QPoly({c}); }

QPoly QPoly::monomial(const mpq_class& c, std::size_t degree) {
  std::vector<mpq_class> v(degree + 1);
  v[degree] = c;
  return QPoly(std::move(v));
}

QPoly QPoly::linear_e(std::uint32_t p) { return QPoly({mpq_class(-static_cast<long>(p)), mpq_class(1)}); }

void QPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return QPoly(std::move(r));
}

QPoly QPoly::operator-() const { return scaled(-1); }

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<mpq_class> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return QPoly(std::move(r));
}

QPoly QPoly::scaled(const mpq_class& r) const {
  std::vector<mpq_class> v(c_);
  for (auto& x : v) x *= r;
  return QPoly(std::move(v));
}

QPoly QPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<mpq_class> v(c_.size() - 1);
  for (std::size_t n = 1; n < c_.size(); ++n) v[n - 1] = c_[n] * static_cast<long>(n);
  return QPoly(std::move(v));
}

QPoly QPoly::frobenius(std::uint32_t p) const {
  if (is_zero()) return {};
  std::vector<mpq_class> v((c_.size() - 1) * p + 1);
  for (std::size_t n = 0; n < c_.size(); ++n) v[n * p] = c_[n];
  return QPoly(std::move(v));
}

QPoly QPoly::pow(unsigned k) const {
  QPoly r = constant(1);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

mpq_class QPoly::evaluate(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

mpq_class QPoly::evaluate_derivative(unsigned k, const mpq_class& x) const {
  QPoly d = *this;
  for (unsigned i = 0; i < k; ++i) d = d.derivative();
  return d.evaluate(x);
}

QPoly QPoly::divide_linear(const mpq_class& a, mpq_class* rem) const {
  if (is_zero()) {
    if (rem) *rem = 0;
    return {};
  }
  // Synthetic division from the top coefficient down.
  std::vector<mpq_class> q(c_.size() - 1);
  mpq_class carry = 0;
  for (std::size_t k = c_.size(); k-- > 0;) {
    carry = carry * a + c_[k];
    if (k > 0) q[k - 1] = carry;
  }
  if (rem) *rem = carry;
  return QPoly(std::move(q));
}

std::int64_t QPoly::content_valuation(std::uint32_t p) const {
  std::int64_t v = kValInfinity;
  for (const auto& x : c_) v = std::min(v, padic_valuation(x, p));
  return v;
}

EFrac::EFrac(std::uint32_t p, QPoly num, std::int64_t e_pow) : p_(p), num_(std::move(num)), e_pow_(e_pow) {
  reduce();
}

EFrac EFrac::e_power(std::uint32_t p, std::int64_t k) { return EFrac(p, QPoly::constant(1), -k); }

void EFrac::reduce() {
  if (num_.is_zero()) {
    e_pow_ = 0;
    return;
  }
  if (e_pow_ < 0) {
    num_ = num_ * QPoly::linear_e(p_).pow(static_cast<unsigned>(-e_pow_));
    e_pow_ = 0;
  }
  const mpq_class root = static_cast<long>(p_);
  while (e_pow_ > 0) {
    mpq_class rem;
    QPoly q = num_.divide_linear(root, &rem);
    if (rem != 0) break;
    num_ = std::move(q);
    --e_pow_;
  }
}

QPoly EFrac::as_poly() const {
  if (!is_integral()) throw PreconditionError("EFrac::as_poly: fraction has an E-pole");
  return num_;
}

EFrac EFrac::operator+(const EFrac& o) const {
  if (o.p_ != p_) throw UsageError("EFrac: mixed primes");
  const std::int64_t k = std::max(e_pow_, o.e_pow_);
  QPoly e = QPoly::linear_e(p_);
  QPoly a = num_ * e.pow(static_cast<unsigned>(k - e_pow_));
  QPoly b = o.num_ * e.pow(static_cast<unsigned>(k - o.e_pow_));
  return EFrac(p_, a + b, k);
}

EFrac EFrac::operator-() const { return EFrac(p_, -num_, e_pow_); }

EFrac EFrac::operator-(const EFrac& o) const { return *this + (-o); }

EFrac EFrac::operator*(const EFrac& o) const {
  if (o.p_ != p_) throw UsageError("EFrac: mixed primes");
  return EFrac(p_, num_ * o.num_, e_pow_ + o.e_pow_);
}

EFrac EFrac::derivative() const {
  // (n / E^k)' = (n' E - k n) / E^(k+1)
  QPoly e = QPoly::linear_e(p_);
  return EFrac(p_, num_.derivative() * e - num_.scaled(e_pow_), e_pow_ + 1);
}

EMatrix::EMatrix(std::size_t n, std::uint32_t p) : n_(n), p_(p), e_(n * n, EFrac(p, QPoly())) {}

EMatrix EMatrix::identity(std::size_t n, std::uint32_t p) {
  EMatrix m(n, p);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = EFrac(p, QPoly::constant(1));
  return m;
}

EMatrix EMatrix::from_poly(const std::vector<std::vector<QPoly>>& m, std::uint32_t p) {
  EMatrix r(m.size(), p);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != m.size()) throw UsageError("EMatrix: matrix is not square");
    for (std::size_t j = 0; j < m.size(); ++j) r.at(i, j) = EFrac(p, m[i][j]);
  }
  return r;
}

EMatrix EMatrix::e_diagonal(std::uint32_t p, const std::vector<std::int64_t>& exponents) {
  EMatrix r(exponents.size(), p);
  for (std::size_t i = 0; i < exponents.size(); ++i) r.at(i, i) = EFrac::e_power(p, exponents[i]);
  return r;
}

EMatrix EMatrix::operator*(const EMatrix& o) const {
  if (o.n_ != n_) throw UsageError("EMatrix: shape mismatch");
  EMatrix r(n_, p_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (!o.at(k, j).is_zero()) r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
    }
  return r;
}

EMatrix EMatrix::operator+(const EMatrix& o) const {
  EMatrix r(*this);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = r.e_[k] + o.e_[k];
  return r;
}

EMatrix EMatrix::operator-(const EMatrix& o) const {
  EMatrix r(*this);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = r.e_[k] - o.e_[k];
  return r;
}

EMatrix EMatrix::scaled(const EFrac& f) const {
  EMatrix r(*this);
  for (auto& x : r.e_) x = x * f;
  return r;
}

EMatrix EMatrix::derivative() const {
  EMatrix r(*this);
  for (auto& x : r.e_) x = x.derivative();
  return r;
}

EFrac EMatrix::minor(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  const std::size_t k = rows.size();
  if (k == 0) return EFrac(p_, QPoly::constant(1));
  if (k == 1) return at(rows[0], cols[0]);
  EFrac total(p_, QPoly());
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t j = 0; j < k; ++j) {
    if (at(rows[0], cols[j]).is_zero()) continue;
    std::vector<std::size_t> sub_cols;
    for (std::size_t c = 0; c < k; ++c)
      if (c != j) sub_cols.push_back(cols[c]);
    EFrac term = at(rows[0], cols[j]) * minor(sub_rows, sub_cols);
    total = (j % 2 == 0) ? total + term : total - term;
  }
  return total;
}

EFrac EMatrix::det() const {
  std::vector<std::size_t> all(n_);
  for (std::size_t i = 0; i < n_; ++i) all[i] = i;
  return minor(all, all);
}

EMatrix EMatrix::adjugate() const {
  EMatrix r(n_, p_);
  if (n_ == 1) {
    r.at(0, 0) = EFrac(p_, QPoly::constant(1));
    return r;
  }
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      std::vector<std::size_t> rows, cols;
      for (std::size_t k = 0; k < n_; ++k) {
        if (k != j) rows.push_back(k);
        if (k != i) cols.push_back(k);
      }
      EFrac m = minor(rows, cols);
      r.at(i, j) = ((i + j) % 2 == 0) ? m : -m;
    }
  return r;
}

EMatrix EMatrix::inverse() const {
  EFrac d = det();
  if (d.is_zero()) throw PreconditionError("EMatrix: singular matrix");
  // Split det = c E^m; the numerator may still carry positive powers of E.
  QPoly num = d.num();
  std::int64_t m = -d.e_pow();
  const mpq_class root = static_cast<long>(p_);
  while (num.degree() > 0) {
    mpq_class rem;
    QPoly q = num.divide_linear(root, &rem);
    if (rem != 0) break;
    num = std::move(q);
    ++m;
  }
  if (num.degree() != 0)
    throw PreconditionError("EMatrix::inverse: determinant is not a unit times a power of E");
  EFrac dinv(p_, QPoly::constant(1 / num.coeff(0)), m);
  return adjugate().scaled(dinv);
}

bool EMatrix::is_integral() const {
  return std::all_of(e_.begin(), e_.end(), [](const EFrac& f) { return f.is_integral(); });
}

std::int64_t EMatrix::max_pole_order() const {
  std::int64_t m = 0;
  for (const auto& f : e_) m = std::max(m, f.pole_order());
  return m;
}

EMatrix EMatrix::frobenius() const {
  EMatrix r(n_, p_);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = EFrac(p_, e_[k].as_poly().frobenius(p_));
  return r;
}

}  // namespace crys
