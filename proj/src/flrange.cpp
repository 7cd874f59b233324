#include "crys/flrange.hpp"

#include <algorithm>
#include <limits>

#include "crys/errors.hpp"

namespace crys {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

FLReport check_fl(const RootDatum& datum, const MultiCoweight& mu, std::int64_t p) {
  if (!is_prime(p)) throw PreconditionError("check_fl: p must be prime");
  FLReport rep;
  rep.mu = mu;
  rep.p = p;
  rep.h_mu = h_mu(datum, mu);
  for (std::size_t s = 0; s < mu.size(); ++s)
    for (std::size_t a = 0; a < datum.num_roots(); ++a) {
      const std::int64_t v = datum.pairing(mu.per_embedding[s], a);
      if (v >= p - 1) rep.fl_witnesses.push_back({s, a, v});
      // strict v < (p-1)/2 over the rationals
      if (2 * v >= p - 1) rep.strong_witnesses.push_back({s, a, v});
    }
  rep.is_fl = rep.fl_witnesses.empty();
  rep.is_strongly_fl = rep.strong_witnesses.empty();
  if (datum.semisimple_rank() > 0) rep.min_pairing_m = min_dominant_pairing(datum);
  rep.uniqueness_certificate = uniqueness_certificate(datum, mu, p);
  return rep;
}

std::vector<IntVec> dominant_hilbert_basis(const RootDatum& datum) {
  const std::size_t r = datum.semisimple_rank();
  const IntLattice& M = datum.pairing_lattice();
  if (r == 0) return {};
  // k_i e_i is the first multiple of e_i in M; it exists since [Z^r : M] is finite.
  IntVec k(r);
  for (std::size_t i = 0; i < r; ++i) {
    std::int64_t j = 1;
    IntVec e(r, 0);
    for (;; ++j) {
      e[i] = j;
      if (M.contains(e)) break;
    }
    k[i] = j;
  }
  // Every irreducible element is some k_i e_i or lies in the box prod [0, k_i - 1].
  std::vector<IntVec> cand;
  for (std::size_t i = 0; i < r; ++i) {
    IntVec e(r, 0);
    e[i] = k[i];
    cand.push_back(e);
  }
  IntVec v(r, 0);
  for (;;) {
    std::size_t i = 0;
    while (i < r && v[i] == k[i] - 1) v[i++] = 0;
    if (i == r) break;
    ++v[i];
    if (M.contains(v)) cand.push_back(v);
  }
  auto below = [](const IntVec& a, const IntVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] > b[i]) return false;
    return a != b;
  };
  std::vector<IntVec> basis;
  for (const auto& c : cand) {
    bool minimal = true;
    for (const auto& d : cand)
      if (below(d, c)) {
        minimal = false;
        break;
      }
    if (minimal) basis.push_back(c);
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

std::vector<std::int64_t> min_dominant_pairing_per_component(const RootDatum& datum) {
  if (datum.semisimple_rank() == 0) throw PreconditionError("min_dominant_pairing: torus-only datum");
  const auto hb = dominant_hilbert_basis(datum);
  std::vector<std::int64_t> out;
  for (std::size_t c = 0; c < datum.components().size(); ++c) {
    const auto& comp = datum.components()[c];
    const IntVec n = datum.highest_root_coefficients(c);
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (const auto& v : hb) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < comp.size(); ++k) s += n[k] * v[comp[k]];
      if (s > 0) best = std::min(best, s);
    }
    out.push_back(best);
  }
  return out;
}

std::int64_t min_dominant_pairing(const RootDatum& datum) {
  auto per = min_dominant_pairing_per_component(datum);
  return *std::min_element(per.begin(), per.end());
}

std::vector<Coweight> minuscule_coweights(const RootDatum& datum) {
  const std::size_t r = datum.semisimple_rank();
  std::vector<Coweight> out;
  if (r == 0) return out;
  std::vector<std::size_t> comp_of(r);
  IntVec weight(r);
  for (std::size_t c = 0; c < datum.components().size(); ++c) {
    IntVec n = datum.highest_root_coefficients(c);
    for (std::size_t k = 0; k < n.size(); ++k) {
      comp_of[datum.components()[c][k]] = c;
      weight[datum.components()[c][k]] = n[k];
    }
  }
  // Pairing vectors with entries in {0,1}; a 1 is only allowed where n_i = 1.
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << r); ++mask) {
    IntVec v(r, 0);
    std::vector<std::int64_t> per(datum.components().size(), 0);
    for (std::size_t i = 0; i < r; ++i)
      if (mask >> i & 1) {
        v[i] = 1;
        per[comp_of[i]] += weight[i];
      }
    if (*std::max_element(per.begin(), per.end()) > 1) continue;
    if (datum.pairing_lattice().contains(v)) out.push_back(datum.lift_pairing_vector(v));
  }
  return out;
}

bool uniqueness_certificate(const RootDatum& datum, const MultiCoweight& mu, std::int64_t p) {
  // No noncentral dominant coweights: the certificate holds vacuously.
  if (datum.semisimple_rank() == 0) return true;
  return (p - 1) * min_dominant_pairing(datum) > 2 * h_mu(datum, mu);
}

DimensionComparison dimension_comparison(const RootDatum& datum, const MultiCoweight& mu,
                                         const MultiCoweight& mu_prime) {
  if (mu.size() != mu_prime.size()) throw UsageError("dimension_comparison: embedding counts differ");
  DimensionComparison out;
  for (std::size_t s = 0; s < mu.size(); ++s) {
    const auto& a = mu.per_embedding[s];
    const auto& b = mu_prime.per_embedding[s];
    if (!datum.is_dominant(a) || !datum.is_dominant(b))
      throw PreconditionError("dimension_comparison: coweights must be dominant");
    if (!datum.bruhat_leq(b, a)) throw PreconditionError("dimension_comparison: mu' is not <= mu");
    out.dim_mu += datum.dim_parabolic_quotient(a);
    out.dim_mu_prime += datum.dim_parabolic_quotient(b);
  }
  out.ordering = (out.dim_mu > out.dim_mu_prime) - (out.dim_mu < out.dim_mu_prime);
  out.lift_obstruction = out.dim_mu > out.dim_mu_prime;
  out.deformation_dim = datum.dim_group() + out.dim_mu;
  return out;
}

}  // namespace crys
