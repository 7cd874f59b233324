#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "crys/laurent.hpp"
#include "crys/rootdatum.hpp"

namespace crys {

enum class LoopGroup { GL, PGL };

// Dominant (a_1 >= ... >= a_n) with A in K u^a K, K = GL_n(F_p[[u]]).
IntVec elementary_divisors(const LoopMatrix& A);

// GL coordinates of the elementary divisors, converted to the coweight
// coordinates of the group (for PGL_n: consecutive differences).
Coweight loop_shape(const LoopMatrix& A, LoopGroup group);
MultiCoweight shape(const std::vector<LoopMatrix>& C, LoopGroup group);

// Root datum used to compare shapes: GL(n) or PGL(n).
RootDatum loop_group_datum(LoopGroup group, std::size_t n);

// Reduced column basis of the F_p[[u]]-lattice spanned by the columns of D:
// upper triangular, diagonal u^(a_i), entry (r, i) supported in degrees < a_r.
LoopMatrix hermite_form(const LoopMatrix& D);

struct LatticeClass {
  std::vector<LoopMatrix> basis;  // canonical form per embedding
  MultiCoweight shape;            // of the transported Frobenius
  bool operator==(const LatticeClass& o) const { return basis == o.basis; }
};

// Hermite form, and for PGL the representative with minimal diagonal exponent 0.
LoopMatrix canonical_lattice(const LoopMatrix& D, LoopGroup group);

struct KisinQuery {
  std::vector<LoopMatrix> cbar;  // Frobenius per embedding
  MultiCoweight mu;              // in group coordinates
  LoopGroup group = LoopGroup::GL;
  std::int64_t k = 1;            // u^k std <= D <= u^-k std
  std::size_t budget = 2'000'000;
};

struct KisinResult {
  std::vector<LatticeClass> classes;
  std::size_t candidates = 0;
  // Classes found inside the window; the full variety may contain more.
  bool lower_bound = true;
};

// Lattices D with D^-1 Cbar_s phi(D_{s-1}) of shape <= mu_s for every embedding s.
KisinResult kisin_variety_points(const KisinQuery& q);

// Frobenius instance files (JSON).
struct FrobeniusInstance {
  std::string group;
  std::uint32_t q = 0;
  std::vector<LoopMatrix> matrices;
  std::optional<std::string> mu;
  std::optional<std::int64_t> k;
};

FrobeniusInstance load_frobenius_instance(const std::string& path);
FrobeniusInstance parse_frobenius_instance(const std::string& json_text);
std::string frobenius_instance_to_json(const FrobeniusInstance& inst);
LoopGroup parse_loop_group(const std::string& spec, std::size_t* n = nullptr);

// Product of random elementary matrices over F_p[u] and a constant diagonal unit.
LoopMatrix random_k_element(std::mt19937_64& rng, std::size_t n, std::uint32_t p, int max_degree = 2);

struct CartanStats {
  std::size_t samples = 0;
  std::size_t failures = 0;
  std::set<IntVec> shapes;
};

// shape(K u^lambda K u^omega K) <= lambda + omega.
CartanStats cartan_product_check(const IntVec& lambda, const IntVec& omega, std::uint32_t p, std::size_t samples,
                                 std::mt19937_64& rng);
// shape(K u^lambda K u^omega K u^nu K) <= lambda + omega + nu.
CartanStats three_coset_check(const IntVec& lambda, const IntVec& omega, const IntVec& nu, std::uint32_t p,
                              std::size_t samples, std::mt19937_64& rng);
// shape(g^-1) = (-mu)^dom and shape(phi(g)) = p mu for g in K u^mu K.
CartanStats inverse_and_phi_check(const IntVec& mu, std::uint32_t p, std::size_t samples, std::mt19937_64& rng);
// shape(K1 g K2) = shape(g) for g in K u^mu K.
CartanStats snf_invariance_check(const IntVec& mu, std::uint32_t p, std::size_t samples, std::mt19937_64& rng);

}  // namespace crys
