#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "crys/laurent.hpp"
#include "crys/rootdatum.hpp"

namespace crys {

// A line of Lie(G) = Lie(T) + sum g_alpha: either a torus coordinate line or a root space.
struct ComponentKey {
  enum class Kind { Torus, Root };
  Kind kind;
  std::size_t index;
  auto operator<=>(const ComponentKey&) const = default;
};

struct BasisElement {
  ComponentKey key;
  std::int64_t degree;  // the element u^degree in that line
  auto operator<=>(const BasisElement&) const = default;
};

struct TangentSpaceBasis {
  std::vector<BasisElement> basis;  // sorted, distinct
  std::size_t dim() const { return basis.size(); }
  bool contains(const BasisElement& b) const;
  bool subset_of(const TangentSpaceBasis& other) const;
};

// Element of g((u)) / g[[u]] over F_p: only negative-degree terms survive.
class GradedTangentVector {
 public:
  GradedTangentVector(const RootDatum& datum, std::uint32_t p);

  void add_term(ComponentKey key, std::int64_t degree, std::int64_t coeff);
  const std::map<ComponentKey, LaurentPoly>& components() const { return comp_; }
  bool is_zero() const { return comp_.empty(); }
  std::uint32_t p() const { return p_; }
  const RootDatum& datum() const { return *datum_; }

  // Replaces the component, keeping only its polar part.
  void set(ComponentKey key, const LaurentPoly& f);

 private:
  const RootDatum* datum_;
  std::uint32_t p_;
  std::map<ComponentKey, LaurentPoly> comp_;
};

// Y -> u dY/du + [Y, mu'] modulo g[[u]].  The bracket with the torus element mu'
// scales g_alpha by -<mu', alpha> and kills Lie(T).
GradedTangentVector liemono_operator(const GradedTangentVector& y, const Coweight& mu_prime);

TangentSpaceBasis open_cell_tangent(const RootDatum& datum, const Coweight& mu_prime);

struct UpperBoundResult {
  TangentSpaceBasis space;
  bool hypothesis_ok = true;
  std::string warning;
};

// p does not divide #Z(G^der), with GL_n exempt.
bool center_is_etale(const RootDatum& datum, std::int64_t p);

UpperBoundResult ts_upper_bound(const RootDatum& datum, const Coweight& mu, const Coweight& mu_prime,
                                std::int64_t p);

TangentSpaceBasis monodromy_cut(const RootDatum& datum, const TangentSpaceBasis& space,
                                const Coweight& mu_prime, std::int64_t p);

// All dominant mu' <= mu.
std::vector<Coweight> dominant_below(const RootDatum& datum, const Coweight& mu);

struct StratumRow {
  Coweight mu_prime;
  std::size_t dim_cut = 0;
  std::size_t dim_expected = 0;
  bool pass = false;
};

struct NablaReport {
  Coweight mu;
  std::int64_t p = 0;
  bool hypotheses_hold = true;
  std::vector<std::string> violations;
  std::vector<StratumRow> strata;
  bool all_pass = true;
  // Only ever true when the hypotheses hold and every stratum passes.
  bool smooth_certified = false;
};

NablaReport verify_nabla_smoothness(const RootDatum& datum, const Coweight& mu, std::int64_t p);

}  // namespace crys
