#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crys/intlattice.hpp"

namespace crys {

enum class IsogenyTag { SimplyConnected, Adjoint, GLLike, SOLike, Custom };
std::string to_string(IsogenyTag tag);

struct Coweight {
  IntVec coords;
  auto operator<=>(const Coweight&) const = default;
};

// A type mu = (mu_sigma) indexed by embeddings.
struct MultiCoweight {
  std::vector<Coweight> per_embedding;
  auto operator<=>(const MultiCoweight&) const = default;
  std::size_t size() const { return per_embedding.size(); }
};

enum class DominanceCoefficients { Integral, Rational };

// Weyl group element as a word in simple reflections together with the
// permutation it induces on root indices. The word is read right to left
// when acting: w = s_{word[0]} s_{word[1]} ...
struct WeylElement {
  std::vector<std::size_t> word;
  std::vector<std::size_t> root_perm;
};

class RootDatum {
 public:
  RootDatum(std::string name, std::size_t rank, IntMat roots, IntMat coroots,
            std::vector<std::size_t> simple_indices, IsogenyTag tag);

  const std::string& name() const { return name_; }
  std::size_t rank() const { return rank_; }
  IsogenyTag tag() const { return tag_; }
  const IntMat& roots() const { return roots_; }
  const IntMat& coroots() const { return coroots_; }
  std::size_t num_roots() const { return roots_.size(); }
  const std::vector<std::size_t>& simple_indices() const { return simple_; }
  std::size_t semisimple_rank() const { return simple_.size(); }
  const std::vector<std::size_t>& positive_indices() const { return positive_; }
  bool is_positive(std::size_t root) const { return is_pos_[root]; }
  std::size_t negative_of(std::size_t root) const { return neg_[root]; }
  std::optional<std::size_t> root_index(const IntVec& root) const;

  // Coefficients of a root in the basis of simple roots.
  const IntVec& simple_root_coords(std::size_t root) const { return in_simple_[root]; }
  // A[i][j] = <alpha_i^vee, alpha_j>.
  const IntMat& cartan_matrix() const { return cartan_; }
  // Irreducible components as lists of positions in simple_indices().
  const std::vector<std::vector<std::size_t>>& components() const { return components_; }
  std::size_t component_of_root(std::size_t root) const;
  std::size_t highest_root(std::size_t component) const;
  std::size_t highest_root() const;  // irreducible data only
  // Coefficients n_i of the highest root of a component (over its simple roots).
  IntVec highest_root_coefficients(std::size_t component) const;

  std::int64_t pairing(const Coweight& lambda, std::size_t root) const;
  std::int64_t pairing(const Coweight& lambda, const IntVec& character) const;

  bool is_dominant(const Coweight& lambda) const;
  Coweight reflect(const Coweight& lambda, std::size_t simple_pos) const;
  Coweight dominant_conjugate(const Coweight& lambda) const;
  bool bruhat_leq(const Coweight& lambda, const Coweight& mu,
                  DominanceCoefficients coeffs = DominanceCoefficients::Integral) const;
  std::size_t dim_parabolic_quotient(const Coweight& mu) const;
  IntVec two_rho() const;

  std::vector<WeylElement> weyl_group() const;
  Coweight apply(const WeylElement& w, const Coweight& lambda) const;

  std::size_t dim_group() const { return rank_ + roots_.size(); }
  std::int64_t derived_fundamental_group_order() const;
  std::int64_t derived_center_order() const;
  // True when X_*(T) modulo root-orthogonal directions is the coroot lattice.
  bool is_simply_connected() const;

  // Image of X_*(T) under lambda -> (<lambda, alpha_i>)_i over the simple roots.
  const IntLattice& pairing_lattice() const { return pairing_lattice_; }
  Coweight lift_pairing_vector(const IntVec& v) const;
  // Dominant coweights modulo central directions with h <= max_h, one lift each.
  std::vector<Coweight> dominant_coweights_mod_center(std::int64_t max_h) const;

  // Accepts either rank coordinates or, for SL(n)/PGL(n), n ambient GL coordinates.
  Coweight coweight_from_input(const IntVec& v) const;
  void set_ambient_gl(std::size_t n) { ambient_gl_ = n; }

 private:
  void validate_and_index();

  std::string name_;
  std::size_t rank_;
  IntMat roots_, coroots_;
  std::vector<std::size_t> simple_;
  IsogenyTag tag_;

  std::vector<std::size_t> positive_;
  std::vector<bool> is_pos_;
  std::vector<std::size_t> neg_;
  IntMat in_simple_;
  IntMat cartan_;
  std::vector<std::vector<std::size_t>> components_;
  std::vector<std::vector<std::size_t>> reflection_perm_;
  IntLattice pairing_lattice_{0, {}};
  std::size_t ambient_gl_ = 0;
};

std::int64_t h_mu(const RootDatum& datum, const MultiCoweight& mu);

// Group-spec grammar: GL(n) | SL(n) | PGL(n) | Sp(2n) | SO(n) | G2 | An..Dn | custom:<path>
RootDatum build_root_datum(std::string_view spec);
RootDatum load_custom_datum(const std::string& path);
std::vector<std::string> catalog_specs();

}  // namespace crys
