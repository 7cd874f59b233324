#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "crys/rootdatum.hpp"

namespace crys {

bool is_prime(std::int64_t p);

struct FLWitness {
  std::size_t embedding;
  std::size_t root;
  std::int64_t pairing;
};

struct FLReport {
  MultiCoweight mu;
  std::int64_t p = 0;
  std::int64_t h_mu = 0;
  bool is_fl = false;
  bool is_strongly_fl = false;
  std::optional<std::int64_t> min_pairing_m;  // empty for a torus
  bool uniqueness_certificate = false;
  std::vector<FLWitness> fl_witnesses;        // pairings >= p-1
  std::vector<FLWitness> strong_witnesses;    // pairings >= (p-1)/2
};

FLReport check_fl(const RootDatum& datum, const MultiCoweight& mu, std::int64_t p);

// Minimal generators of the monoid of pairing vectors (<lambda, alpha_i>)_i of
// dominant lambda, i.e. the Hilbert basis of M cap Z_{>=0}^r.
std::vector<IntVec> dominant_hilbert_basis(const RootDatum& datum);

// Per irreducible component c: min <lambda, alpha_h^c> over dominant lambda
// whose pairing vector is nonzero on c.
std::vector<std::int64_t> min_dominant_pairing_per_component(const RootDatum& datum);
std::int64_t min_dominant_pairing(const RootDatum& datum);

// Dominant lambda (one lift per class modulo central directions) with
// <lambda, alpha_h^c> <= 1 on every component and lambda noncentral.
std::vector<Coweight> minuscule_coweights(const RootDatum& datum);

bool uniqueness_certificate(const RootDatum& datum, const MultiCoweight& mu, std::int64_t p);

struct DimensionComparison {
  std::size_t dim_mu = 0;        // sum over embeddings of dim P_mu \ G
  std::size_t dim_mu_prime = 0;
  int ordering = 0;              // sign of dim_mu - dim_mu_prime
  bool lift_obstruction = false; // dim_mu > dim_mu_prime
  std::size_t deformation_dim = 0;  // dim G + dim_mu
};

DimensionComparison dimension_comparison(const RootDatum& datum, const MultiCoweight& mu,
                                         const MultiCoweight& mu_prime);

}  // namespace crys
