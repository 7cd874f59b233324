#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace crys {

constexpr std::int64_t kValInfinity = std::numeric_limits<std::int64_t>::max();

// p-adic valuation of a rational; kValInfinity for zero.
std::int64_t padic_valuation(const mpq_class& x, std::uint32_t p);

// Dense polynomial over Q.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<mpq_class> coeffs);
  static QPoly constant(const mpq_class& c);
  static QPoly monomial(const mpq_class& c, std::size_t degree);
  static QPoly linear_e(std::uint32_t p);  // E(u) = u - p

  bool is_zero() const { return c_.empty(); }
  std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  mpq_class coeff(std::size_t n) const { return n < c_.size() ? c_[n] : mpq_class(0); }

  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator-() const;
  QPoly operator*(const QPoly& o) const;
  QPoly scaled(const mpq_class& r) const;
  QPoly derivative() const;
  QPoly frobenius(std::uint32_t p) const;  // u -> u^p
  QPoly pow(unsigned k) const;
  bool operator==(const QPoly& o) const { return c_ == o.c_; }

  mpq_class evaluate(const mpq_class& x) const;
  // k-th derivative evaluated at x.
  mpq_class evaluate_derivative(unsigned k, const mpq_class& x) const;
  // Division by (u - a): returns quotient; remainder written to *rem.
  QPoly divide_linear(const mpq_class& a, mpq_class* rem) const;
  // Minimal p-adic valuation of the coefficients.
  std::int64_t content_valuation(std::uint32_t p) const;

 private:
  void normalize();
  std::vector<mpq_class> c_;
};

// num / E(u)^e_pow with E = u - p, kept reduced (E does not divide num when e_pow > 0).
class EFrac {
 public:
  EFrac() = default;
  EFrac(std::uint32_t p, QPoly num, std::int64_t e_pow = 0);
  static EFrac e_power(std::uint32_t p, std::int64_t k);  // E^k, k of any sign

  std::uint32_t p() const { return p_; }
  const QPoly& num() const { return num_; }
  std::int64_t pole_order() const { return e_pow_ > 0 ? e_pow_ : 0; }
  std::int64_t e_pow() const { return e_pow_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integral() const { return e_pow_ <= 0; }
  // Polynomial value; requires is_integral().
  QPoly as_poly() const;

  EFrac operator+(const EFrac& o) const;
  EFrac operator-(const EFrac& o) const;
  EFrac operator-() const;
  EFrac operator*(const EFrac& o) const;
  EFrac derivative() const;
  bool operator==(const EFrac& o) const { return p_ == o.p_ && e_pow_ == o.e_pow_ && num_ == o.num_; }

 private:
  void reduce();
  std::uint32_t p_ = 2;
  QPoly num_;
  std::int64_t e_pow_ = 0;
};

// Square matrix over Q[u, 1/E].
class EMatrix {
 public:
  EMatrix(std::size_t n, std::uint32_t p);
  static EMatrix identity(std::size_t n, std::uint32_t p);
  static EMatrix from_poly(const std::vector<std::vector<QPoly>>& m, std::uint32_t p);
  static EMatrix e_diagonal(std::uint32_t p, const std::vector<std::int64_t>& exponents);

  std::size_t n() const { return n_; }
  std::uint32_t p() const { return p_; }
  EFrac& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
  const EFrac& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

  EMatrix operator*(const EMatrix& o) const;
  EMatrix operator+(const EMatrix& o) const;
  EMatrix operator-(const EMatrix& o) const;
  EMatrix scaled(const EFrac& f) const;
  EMatrix derivative() const;
  bool operator==(const EMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }

  EFrac det() const;
  EMatrix adjugate() const;
  // Requires det = c * E^m with c a nonzero rational.
  EMatrix inverse() const;

  bool is_integral() const;
  std::int64_t max_pole_order() const;
  // Entrywise u -> u^p; requires an integral matrix.
  EMatrix frobenius() const;

 private:
  EFrac minor(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  std::size_t n_;
  std::uint32_t p_;
  std::vector<EFrac> e_;
};

}  // namespace crys
