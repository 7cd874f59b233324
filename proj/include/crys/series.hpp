#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "crys/qpoly.hpp"

namespace crys {

// Certified lower bound for the p-adic valuation of every coefficient:
// v_p(a_n) >= offset - slope * n for all n >= 0 (kept and discarded alike).
struct TailEnvelope {
  mpq_class offset = 0;
  mpq_class slope = 0;  // always >= 0
};

// Power series over Q known exactly in degrees 0..D.  When `exact` is set the
// coefficients beyond D are zero and the series is a polynomial.
class TruncSeries {
 public:
  TruncSeries(std::uint32_t p, std::int64_t D, std::vector<mpq_class> coeffs, TailEnvelope env, bool exact);
  static TruncSeries zero(std::uint32_t p);
  static TruncSeries constant(std::uint32_t p, const mpq_class& c);
  static TruncSeries from_poly(std::uint32_t p, const QPoly& f);
  // 1 / E(u) with E = u - p.
  static TruncSeries e_inverse(std::uint32_t p, std::int64_t D);

  std::uint32_t p() const { return p_; }
  std::int64_t trunc_degree() const { return D_; }
  bool exact() const { return exact_; }
  const TailEnvelope& envelope() const { return env_; }
  mpq_class coeff(std::int64_t n) const;
  bool is_zero() const;

  TruncSeries operator+(const TruncSeries& o) const;
  TruncSeries operator-(const TruncSeries& o) const;
  TruncSeries operator-() const;
  TruncSeries operator*(const TruncSeries& o) const;
  TruncSeries scaled(const mpq_class& r) const;
  TruncSeries shift(std::int64_t m) const;  // times u^m, m >= 0
  TruncSeries derivative() const;
  // u -> u^p; the result is truncated at min(p(D+1)-1, cap) when cap >= 0.
  TruncSeries phi(std::int64_t cap = -1) const;
  // Reciprocal to degree min(D, own D); needs a nonzero constant term.
  TruncSeries inverse(std::int64_t D) const;
  TruncSeries truncate(std::int64_t D) const;

  // True iff every stored coefficient satisfies the envelope.
  bool envelope_consistent() const;
  // Coefficients 0..min(D, o.D) agree.
  bool agrees_with(const TruncSeries& o, std::int64_t* compared = nullptr) const;

  std::string to_string() const;  // sparse (degree, num, den) triples

 private:
  std::uint32_t p_;
  std::int64_t D_;
  std::vector<mpq_class> c_;  // size D_ + 1
  TailEnvelope env_;
  bool exact_;
};

// Value of the k-th derivative at u = p together with a bound on the omitted terms.
struct PointValue {
  mpq_class value;             // from the stored coefficients
  std::optional<mpq_class> tail_bound;  // v_p(omitted) >= tail_bound; empty if unbounded
  bool exact = false;          // nothing omitted
};

PointValue evaluate_at_p(const TruncSeries& f, unsigned k);

struct ValuationCertificate {
  std::int64_t value = 0;   // exact valuation if certified, else a lower bound
  bool certified = false;
  bool zero = false;        // the value is exactly 0
  std::int64_t D_used = 0;
};

// Valuation of the k-th derivative at u = p at the series' own truncation.
ValuationCertificate valuation_at(const TruncSeries& f, unsigned k);

using SeriesFactory = std::function<TruncSeries(std::int64_t D)>;

// Doubles D from D0 until the valuation is certified; throws PrecisionError past cap.
ValuationCertificate valuation_certify(const SeriesFactory& make, unsigned k, std::int64_t D0 = 16,
                                       std::int64_t cap = 1024);
// Doubles D until the valuation is certified to be >= claim.
ValuationCertificate certify_lower_bound(const SeriesFactory& make, unsigned k, std::int64_t claim,
                                         std::int64_t D0 = 16, std::int64_t cap = 1024);

// Square matrix of truncated series.
class SeriesMatrix {
 public:
  SeriesMatrix(std::size_t n, std::uint32_t p);
  static SeriesMatrix identity(std::size_t n, std::uint32_t p);
  static SeriesMatrix from_exact(const EMatrix& m, std::int64_t D);

  std::size_t n() const { return n_; }
  std::uint32_t p() const { return p_; }
  TruncSeries& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
  const TruncSeries& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

  SeriesMatrix operator*(const SeriesMatrix& o) const;
  SeriesMatrix operator+(const SeriesMatrix& o) const;
  SeriesMatrix operator-(const SeriesMatrix& o) const;
  SeriesMatrix scaled(const TruncSeries& f) const;
  SeriesMatrix derivative() const;
  SeriesMatrix phi(std::int64_t cap) const;
  SeriesMatrix truncate(std::int64_t D) const;
  std::int64_t trunc_degree() const;  // min over inexact entries

 private:
  std::size_t n_;
  std::uint32_t p_;
  std::vector<TruncSeries> e_;
};

}  // namespace crys
