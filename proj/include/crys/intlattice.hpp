#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace crys {

using IntVec = std::vector<std::int64_t>;
using IntMat = std::vector<IntVec>;  // row-major

std::int64_t dot(const IntVec& a, const IntVec& b);
IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec scale(std::int64_t c, const IntVec& a);
bool is_zero(const IntVec& a);

IntMat transpose(const IntMat& m);
mpz_class determinant(const IntMat& m);

// Invariant factors d_1 | d_2 | ... of an integer matrix (nonzero ones only).
std::vector<std::int64_t> invariant_factors(const IntMat& m);

// Express v as a rational combination of linearly independent rows.
std::optional<std::vector<mpq_class>> solve_rational(const IntMat& rows, const IntVec& v);

// Sublattice of Z^m spanned by a list of generators, kept in row Hermite form.
// Each echelon row remembers its expression in the original generators so that
// membership tests can also produce a preimage.
class IntLattice {
 public:
  IntLattice(std::size_t ambient_dim, const IntMat& generators);

  std::size_t ambient_dim() const { return dim_; }
  std::size_t rank() const { return basis_.size(); }
  const IntMat& basis() const { return basis_; }

  bool contains(const IntVec& v) const;
  // Integer coefficients c with sum_k c_k * generator_k == v, if v lies in the lattice.
  std::optional<IntVec> preimage(const IntVec& v) const;

  // [Z^m : L]; only meaningful when rank == ambient_dim.
  std::int64_t index() const;

 private:
  std::optional<IntVec> echelon_coords(const IntVec& v) const;

  std::size_t dim_;
  std::size_t num_generators_;
  IntMat basis_;
  IntMat transform_;  // basis_[i] = sum_k transform_[i][k] * generator_k
  std::vector<std::size_t> pivots_;
};

}  // namespace crys
