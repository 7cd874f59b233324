#include "crys/schubert.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "crys/errors.hpp"
#include "crys/flrange.hpp"

namespace crys {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

TangentSpaceBasis sorted(std::vector<BasisElement> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return {std::move(v)};
}

}  // namespace

bool TangentSpaceBasis::contains(const BasisElement& b) const {
  return std::binary_search(basis.begin(), basis.end(), b);
}

bool TangentSpaceBasis::subset_of(const TangentSpaceBasis& other) const {
  return std::includes(other.basis.begin(), other.basis.end(), basis.begin(), basis.end());
}

GradedTangentVector::GradedTangentVector(const RootDatum& datum, std::uint32_t p) : datum_(&datum), p_(p) {}

void GradedTangentVector::set(ComponentKey key, const LaurentPoly& f) {
  const std::size_t bound = key.kind == ComponentKey::Kind::Torus ? datum_->rank() : datum_->num_roots();
  if (key.index >= bound) throw UsageError("GradedTangentVector: component key out of range");
  LaurentPoly polar = f.polar_part();
  if (polar.is_zero())
    comp_.erase(key);
  else
    comp_.insert_or_assign(key, polar);
}

void GradedTangentVector::add_term(ComponentKey key, std::int64_t degree, std::int64_t coeff) {
  LaurentPoly cur = comp_.count(key) ? comp_.at(key) : LaurentPoly(p_);
  set(key, cur + LaurentPoly::monomial(p_, coeff, degree));
}

GradedTangentVector liemono_operator(const GradedTangentVector& y, const Coweight& mu_prime) {
  GradedTangentVector out(y.datum(), y.p());
  const std::uint32_t p = y.p();
  for (const auto& [key, f] : y.components()) {
    // u d/du multiplies u^i by i; the bracket contributes -<mu', alpha> on g_alpha.
    const std::int64_t twist = key.kind == ComponentKey::Kind::Root ? y.datum().pairing(mu_prime, key.index) : 0;
    LaurentPoly g = f.derivative().shift(1) - f.scaled(mod_reduce(twist, p));
    out.set(key, g);
  }
  return out;
}

TangentSpaceBasis open_cell_tangent(const RootDatum& datum, const Coweight& mu_prime) {
  std::vector<BasisElement> out;
  for (std::size_t a = 0; a < datum.num_roots(); ++a) {
    const std::int64_t m = datum.pairing(mu_prime, a);
    for (std::int64_t i = m; i <= -1; ++i) out.push_back({{ComponentKey::Kind::Root, a}, i});
  }
  return sorted(std::move(out));
}

bool center_is_etale(const RootDatum& datum, std::int64_t p) {
  if (datum.tag() == IsogenyTag::GLLike) return true;
  return datum.derived_center_order() % p != 0;
}

UpperBoundResult ts_upper_bound(const RootDatum& datum, const Coweight& mu, const Coweight& mu_prime,
                                std::int64_t p) {
  if (!datum.is_dominant(mu) || !datum.is_dominant(mu_prime))
    throw PreconditionError("ts_upper_bound: mu and mu' must be dominant");
  if (!datum.bruhat_leq(mu_prime, mu)) throw PreconditionError("ts_upper_bound: mu' is not <= mu");
  UpperBoundResult res;
  if (!center_is_etale(datum, p)) {
    res.hypothesis_ok = false;
    res.warning = "p divides #Z(G^der) = " + std::to_string(datum.derived_center_order());
  }
  const std::int64_t h = h_mu(datum, {{mu}});
  std::vector<BasisElement> out;
  for (std::size_t a = 0; a < datum.num_roots(); ++a) {
    const std::int64_t top = floor_div(h - datum.pairing(mu_prime, a), 2);
    for (std::int64_t j = 1; j <= top; ++j) out.push_back({{ComponentKey::Kind::Root, a}, -j});
  }
  for (std::size_t t = 0; t < datum.rank(); ++t)
    for (std::int64_t j = 1; j <= h; ++j) out.push_back({{ComponentKey::Kind::Torus, t}, -j});
  res.space = sorted(std::move(out));
  return res;
}

TangentSpaceBasis monodromy_cut(const RootDatum& datum, const TangentSpaceBasis& space, const Coweight& mu_prime,
                                std::int64_t p) {
  if (!is_prime(p)) throw PreconditionError("monodromy_cut: p must be prime");
  // The operator acts diagonally on the basis vectors, so its kernel on their
  // span is spanned by the basis vectors it kills.
  std::vector<BasisElement> keep;
  for (const auto& b : space.basis) {
    GradedTangentVector y(datum, static_cast<std::uint32_t>(p));
    y.add_term(b.key, b.degree, 1);
    if (liemono_operator(y, mu_prime).is_zero()) keep.push_back(b);
  }
  return {keep};
}

std::vector<Coweight> dominant_below(const RootDatum& datum, const Coweight& mu) {
  if (!datum.is_dominant(mu)) throw PreconditionError("dominant_below: mu must be dominant");
  const std::size_t r = datum.semisimple_rank();
  // mu - sum c_i alpha_i^vee dominant forces sum c_i <= <mu, 2 rho> / 2.
  const std::int64_t budget = datum.pairing(mu, datum.two_rho()) / 2;
  std::vector<Coweight> out;
  IntVec c(r, 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
    if (i == r) {
      IntVec v = mu.coords;
      for (std::size_t k = 0; k < r; ++k) v = sub(v, scale(c[k], datum.coroots()[datum.simple_indices()[k]]));
      if (datum.is_dominant({v})) out.push_back({v});
      return;
    }
    for (std::int64_t x = 0; x <= left; ++x) {
      c[i] = x;
      rec(i + 1, left - x);
    }
    c[i] = 0;
  };
  rec(0, budget);
  std::sort(out.begin(), out.end());
  return out;
}

NablaReport verify_nabla_smoothness(const RootDatum& datum, const Coweight& mu, std::int64_t p) {
  if (!datum.is_dominant(mu)) throw PreconditionError("verify_nabla_smoothness: mu must be dominant");
  if (!is_prime(p)) throw PreconditionError("verify_nabla_smoothness: p must be prime");
  NablaReport rep;
  rep.mu = mu;
  rep.p = p;
  const std::int64_t h = h_mu(datum, {{mu}});
  if (h >= p) rep.violations.push_back("h_mu = " + std::to_string(h) + " is not < p");
  if (!center_is_etale(datum, p))
    rep.violations.push_back("p divides #Z(G^der) = " + std::to_string(datum.derived_center_order()));
  rep.hypotheses_hold = rep.violations.empty();
  for (const auto& mp : dominant_below(datum, mu)) {
    StratumRow row;
    row.mu_prime = mp;
    row.dim_cut = monodromy_cut(datum, ts_upper_bound(datum, mu, mp, p).space, mp, p).dim();
    row.dim_expected = datum.dim_parabolic_quotient(mp);
    row.pass = row.dim_cut == row.dim_expected;
    rep.all_pass = rep.all_pass && row.pass;
    rep.strata.push_back(row);
  }
  rep.smooth_certified = rep.hypotheses_hold && rep.all_pass;
  return rep;
}

}  // namespace crys
