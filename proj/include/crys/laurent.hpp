#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace crys {

// Finitely supported Laurent polynomial over the prime field F_p.
class LaurentPoly {
 public:
  static constexpr std::int64_t kInfiniteValuation = std::numeric_limits<std::int64_t>::max();

  explicit LaurentPoly(std::uint32_t p = 2);
  static LaurentPoly monomial(std::uint32_t p, std::int64_t coeff, std::int64_t degree);
  static LaurentPoly constant(std::uint32_t p, std::int64_t c) { return monomial(p, c, 0); }
  // coeffs[k] is the coefficient of u^(low + k).
  static LaurentPoly from_coeffs(std::uint32_t p, std::int64_t low, const std::vector<std::int64_t>& coeffs);

  std::uint32_t p() const { return p_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t valuation() const;  // kInfiniteValuation for 0
  std::int64_t degree() const;     // undefined for 0; throws
  std::uint32_t coeff(std::int64_t d) const;
  std::int64_t low() const { return low_; }
  const std::vector<std::uint32_t>& coeffs() const { return coeffs_; }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly scaled(std::uint32_t c) const;
  LaurentPoly shift(std::int64_t k) const;  // multiply by u^k
  LaurentPoly derivative() const;           // d/du
  LaurentPoly frobenius() const;            // u -> u^p
  LaurentPoly polar_part() const;           // terms of negative degree
  LaurentPoly truncate_above(std::int64_t max_degree) const;
  bool operator==(const LaurentPoly& o) const = default;

  std::string to_string() const;

 private:
  void normalize();
  void check_same_field(const LaurentPoly& o) const;

  std::uint32_t p_;
  std::int64_t low_ = 0;
  std::vector<std::uint32_t> coeffs_;
};

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);
std::uint32_t mod_reduce(std::int64_t a, std::uint32_t p);

// Inverse mod u^precision of a power series with nonzero constant term.
LaurentPoly inverse_series(const LaurentPoly& unit, std::int64_t precision);

// Square matrix over F_p((u)) with Laurent-polynomial entries.
class LoopMatrix {
 public:
  LoopMatrix(std::size_t n, std::uint32_t p);
  static LoopMatrix identity(std::size_t n, std::uint32_t p);
  static LoopMatrix diagonal_monomial(std::uint32_t p, const std::vector<std::int64_t>& exponents);

  std::size_t n() const { return n_; }
  std::uint32_t p() const { return p_; }
  LaurentPoly& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
  const LaurentPoly& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

  LoopMatrix operator*(const LoopMatrix& o) const;
  LoopMatrix operator+(const LoopMatrix& o) const;
  LoopMatrix operator-(const LoopMatrix& o) const;
  LoopMatrix scaled(const LaurentPoly& f) const;
  LoopMatrix shift(std::int64_t k) const;
  LoopMatrix derivative() const;
  LoopMatrix frobenius() const;
  bool operator==(const LoopMatrix& o) const = default;

  LaurentPoly det() const;
  LoopMatrix adjugate() const;
  LaurentPoly minor(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  // Exact inverse; requires det = c u^d.
  LoopMatrix inverse() const;
  bool det_is_monomial() const;
  std::int64_t valuation() const;  // min entry valuation

 private:
  std::size_t n_;
  std::uint32_t p_;
  std::vector<LaurentPoly> e_;
};

}  // namespace crys
