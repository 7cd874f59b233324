#include "crys/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "crys/errors.hpp"

namespace crys {

std::uint32_t mod_reduce(std::int64_t a, std::uint32_t p) {
  std::int64_t r = a % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw PreconditionError("mod_inverse: zero has no inverse");
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

LaurentPoly::LaurentPoly(std::uint32_t p) : p_(p) {
  if (p < 2) throw UsageError("LaurentPoly: characteristic must be at least 2");
}

LaurentPoly LaurentPoly::monomial(std::uint32_t p, std::int64_t coeff, std::int64_t degree) {
  LaurentPoly f(p);
  f.low_ = degree;
  f.coeffs_ = {mod_reduce(coeff, p)};
  f.normalize();
  return f;
}

LaurentPoly LaurentPoly::from_coeffs(std::uint32_t p, std::int64_t low, const std::vector<std::int64_t>& coeffs) {
  LaurentPoly f(p);
  f.low_ = low;
  for (auto c : coeffs) f.coeffs_.push_back(mod_reduce(c, p));
  f.normalize();
  return f;
}

void LaurentPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<std::int64_t>(lead);
  }
  if (coeffs_.empty()) low_ = 0;
}

void LaurentPoly::check_same_field(const LaurentPoly& o) const {
  if (o.p_ != p_) throw UsageError("LaurentPoly: mixed characteristics");
}

std::int64_t LaurentPoly::valuation() const { return is_zero() ? kInfiniteValuation : low_; }

std::int64_t LaurentPoly::degree() const {
  if (is_zero()) throw PreconditionError("degree of the zero Laurent polynomial");
  return low_ + static_cast<std::int64_t>(coeffs_.size()) - 1;
}

std::uint32_t LaurentPoly::coeff(std::int64_t d) const {
  if (is_zero() || d < low_ || d > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(d - low_)];
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  check_same_field(o);
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  LaurentPoly r(p_);
  r.low_ = std::min(low_, o.low_);
  const std::int64_t hi = std::max(degree(), o.degree());
  r.coeffs_.assign(static_cast<std::size_t>(hi - r.low_ + 1), 0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[static_cast<std::size_t>(low_ - r.low_) + k] = coeffs_[k];
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
    auto& c = r.coeffs_[static_cast<std::size_t>(o.low_ - r.low_) + k];
    c = (c + o.coeffs_[k]) % p_;
  }
  r.normalize();
  return r;
}

LaurentPoly LaurentPoly::operator-() const { return scaled(p_ - 1); }

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  check_same_field(o);
  LaurentPoly r(p_);
  if (is_zero() || o.is_zero()) return r;
  r.low_ = low_ + o.low_;
  std::vector<std::uint64_t> acc(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i]) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(coeffs_[i]) * o.coeffs_[j]) % p_;
  }
  r.coeffs_.assign(acc.begin(), acc.end());
  r.normalize();
  return r;
}

LaurentPoly LaurentPoly::scaled(std::uint32_t c) const {
  LaurentPoly r(*this);
  for (auto& x : r.coeffs_) x = static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * (c % p_) % p_);
  r.normalize();
  return r;
}

LaurentPoly LaurentPoly::shift(std::int64_t k) const {
  LaurentPoly r(*this);
  if (!r.is_zero()) r.low_ += k;
  return r;
}

LaurentPoly LaurentPoly::derivative() const {
  LaurentPoly r(p_);
  if (is_zero()) return r;
  r.low_ = low_ - 1;
  r.coeffs_.resize(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const std::uint32_t d = mod_reduce(low_ + static_cast<std::int64_t>(k), p_);
    r.coeffs_[k] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(coeffs_[k]) * d % p_);
  }
  r.normalize();
  return r;
}

LaurentPoly LaurentPoly::frobenius() const {
  LaurentPoly r(p_);
  if (is_zero()) return r;
  r.low_ = low_ * p_;
  r.coeffs_.assign((coeffs_.size() - 1) * p_ + 1, 0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[k * p_] = coeffs_[k];
  return r;
}

LaurentPoly LaurentPoly::polar_part() const { return truncate_above(-1); }

LaurentPoly LaurentPoly::truncate_above(std::int64_t max_degree) const {
  LaurentPoly r(*this);
  if (r.is_zero() || max_degree < low_) return LaurentPoly(p_);
  if (max_degree < degree()) r.coeffs_.resize(static_cast<std::size_t>(max_degree - low_ + 1));
  r.normalize();
  return r;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!coeffs_[k]) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[k];
    const std::int64_t d = low_ + static_cast<std::int64_t>(k);
    if (d != 0) os << "u^" << d;
  }
  return os.str();
}

LaurentPoly inverse_series(const LaurentPoly& unit, std::int64_t precision) {
  const std::uint32_t p = unit.p();
  if (unit.valuation() != 0) throw PreconditionError("inverse_series: constant term must be a unit");
  std::vector<std::int64_t> g(static_cast<std::size_t>(std::max<std::int64_t>(precision, 0)), 0);
  const std::uint32_t inv0 = mod_inverse(unit.coeff(0), p);
  for (std::int64_t n = 0; n < precision; ++n) {
    std::uint64_t s = (n == 0) ? 1 : 0;
    for (std::int64_t k = 1; k <= n; ++k)
      s = (s + static_cast<std::uint64_t>(p - unit.coeff(k)) * static_cast<std::uint64_t>(g[static_cast<std::size_t>(n - k)])) % p;
    g[static_cast<std::size_t>(n)] = static_cast<std::int64_t>(s * inv0 % p);
  }
  return LaurentPoly::from_coeffs(p, 0, g);
}

LoopMatrix::LoopMatrix(std::size_t n, std::uint32_t p) : n_(n), p_(p), e_(n * n, LaurentPoly(p)) {}

LoopMatrix LoopMatrix::identity(std::size_t n, std::uint32_t p) {
  LoopMatrix m(n, p);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = LaurentPoly::constant(p, 1);
  return m;
}

LoopMatrix LoopMatrix::diagonal_monomial(std::uint32_t p, const std::vector<std::int64_t>& exponents) {
  LoopMatrix m(exponents.size(), p);
  for (std::size_t i = 0; i < exponents.size(); ++i) m.at(i, i) = LaurentPoly::monomial(p, 1, exponents[i]);
  return m;
}

LoopMatrix LoopMatrix::operator*(const LoopMatrix& o) const {
  if (o.n_ != n_ || o.p_ != p_) throw UsageError("LoopMatrix: shape mismatch");
  LoopMatrix r(n_, p_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j) r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
    }
  return r;
}

LoopMatrix LoopMatrix::operator+(const LoopMatrix& o) const {
  if (o.n_ != n_ || o.p_ != p_) throw UsageError("LoopMatrix: shape mismatch");
  LoopMatrix r(*this);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = r.e_[k] + o.e_[k];
  return r;
}

LoopMatrix LoopMatrix::operator-(const LoopMatrix& o) const {
  if (o.n_ != n_ || o.p_ != p_) throw UsageError("LoopMatrix: shape mismatch");
  LoopMatrix r(*this);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = r.e_[k] - o.e_[k];
  return r;
}

LoopMatrix LoopMatrix::scaled(const LaurentPoly& f) const {
  LoopMatrix r(*this);
  for (auto& x : r.e_) x = x * f;
  return r;
}

LoopMatrix LoopMatrix::shift(std::int64_t k) const {
  LoopMatrix r(*this);
  for (auto& x : r.e_) x = x.shift(k);
  return r;
}

LoopMatrix LoopMatrix::derivative() const {
  LoopMatrix r(*this);
  for (auto& x : r.e_) x = x.derivative();
  return r;
}

LoopMatrix LoopMatrix::frobenius() const {
  LoopMatrix r(*this);
  for (auto& x : r.e_) x = x.frobenius();
  return r;
}

LaurentPoly LoopMatrix::minor(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  const std::size_t k = rows.size();
  if (k == 0) return LaurentPoly::constant(p_, 1);
  if (k == 1) return at(rows[0], cols[0]);
  // Laplace expansion along the first selected row; sizes here are at most 4.
  LaurentPoly total(p_);
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t j = 0; j < k; ++j) {
    if (at(rows[0], cols[j]).is_zero()) continue;
    std::vector<std::size_t> sub_cols;
    for (std::size_t c = 0; c < k; ++c)
      if (c != j) sub_cols.push_back(cols[c]);
    LaurentPoly term = at(rows[0], cols[j]) * minor(sub_rows, sub_cols);
    total = (j % 2 == 0) ? total + term : total - term;
  }
  return total;
}

LaurentPoly LoopMatrix::det() const {
  std::vector<std::size_t> all(n_);
  for (std::size_t i = 0; i < n_; ++i) all[i] = i;
  return minor(all, all);
}

LoopMatrix LoopMatrix::adjugate() const {
  LoopMatrix r(n_, p_);
  if (n_ == 1) {
    r.at(0, 0) = LaurentPoly::constant(p_, 1);
    return r;
  }
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      std::vector<std::size_t> rows, cols;
      for (std::size_t k = 0; k < n_; ++k) {
        if (k != j) rows.push_back(k);
        if (k != i) cols.push_back(k);
      }
      LaurentPoly m = minor(rows, cols);
      r.at(i, j) = ((i + j) % 2 == 0) ? m : -m;
    }
  return r;
}

bool LoopMatrix::det_is_monomial() const {
  LaurentPoly d = det();
  return !d.is_zero() && d.coeffs().size() == 1;
}

LoopMatrix LoopMatrix::inverse() const {
  LaurentPoly d = det();
  if (d.is_zero()) throw PreconditionError("LoopMatrix: singular matrix");
  if (d.coeffs().size() != 1)
    throw PreconditionError("LoopMatrix::inverse: determinant is not a monomial c*u^d");
  LaurentPoly dinv = LaurentPoly::monomial(p_, mod_inverse(d.coeffs()[0], p_), -d.low());
  return adjugate().scaled(dinv);
}

std::int64_t LoopMatrix::valuation() const {
  std::int64_t v = LaurentPoly::kInfiniteValuation;
  for (const auto& x : e_) v = std::min(v, x.valuation());
  return v;
}

}  // namespace crys
