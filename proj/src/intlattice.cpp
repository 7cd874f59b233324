#include "crys/intlattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "crys/errors.hpp"

namespace crys {

std::int64_t dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw UsageError("pairing: dimension mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVec add(const IntVec& a, const IntVec& b) {
  IntVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

IntVec sub(const IntVec& a, const IntVec& b) {
  IntVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

IntVec scale(std::int64_t c, const IntVec& a) {
  IntVec r(a);
  for (auto& x : r) x *= c;
  return r;
}

bool is_zero(const IntVec& a) {
  return std::all_of(a.begin(), a.end(), [](std::int64_t x) { return x == 0; });
}

IntMat transpose(const IntMat& m) {
  if (m.empty()) return {};
  IntMat t(m[0].size(), IntVec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

mpz_class determinant(const IntMat& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  // Fraction-free Bareiss elimination.
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw UsageError("determinant: matrix is not square");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(m[i][j]);
  }
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::vector<std::int64_t> invariant_factors(const IntMat& m) {
  if (m.empty()) return {};
  std::vector<std::vector<mpz_class>> a(m.size(), std::vector<mpz_class>(m[0].size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[0].size(); ++j) a[i][j] = static_cast<long>(m[i][j]);
  const std::size_t rows = a.size(), cols = a[0].size();
  std::vector<mpz_class> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Move the smallest nonzero entry of the remaining block to (t,t), then
    // clear its row and column; repeat until the pivot divides everything.
    for (;;) {
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) pr = i, pc = j;
      if (pr == rows) goto done;
      std::swap(a[t], a[pr]);
      for (auto& row : a) std::swap(row[t], row[pc]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        mpz_class q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        mpz_class q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(abs(a[t][t]));
  }
done:
  std::vector<std::int64_t> out;
  for (auto& d : diag) out.push_back(d.get_si());
  return out;
}

std::optional<std::vector<mpq_class>> solve_rational(const IntMat& rows, const IntVec& v) {
  const std::size_t k = rows.size();
  const std::size_t m = v.size();
  // Augmented system: columns are the given rows, right-hand side v.
  std::vector<std::vector<mpq_class>> a(m, std::vector<mpq_class>(k + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (rows[j].size() != m) throw UsageError("solve_rational: dimension mismatch");
      a[i][j] = static_cast<long>(rows[j][i]);
    }
    a[i][k] = static_cast<long>(v[i]);
  }
  std::vector<std::size_t> pivcol;
  std::size_t r = 0;
  for (std::size_t c = 0; c < k && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(a[r], a[p]);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || a[i][c] == 0) continue;
      mpq_class f = a[i][c] / a[r][c];
      for (std::size_t j = c; j <= k; ++j) a[i][j] -= f * a[r][j];
    }
    pivcol.push_back(c);
    ++r;
  }
  if (pivcol.size() != k) throw UsageError("solve_rational: rows are linearly dependent");
  for (std::size_t i = r; i < m; ++i)
    if (a[i][k] != 0) return std::nullopt;
  std::vector<mpq_class> x(k);
  for (std::size_t i = 0; i < r; ++i) x[pivcol[i]] = a[i][k] / a[i][pivcol[i]];
  return x;
}

namespace {

// Floor division for int64.
std::int64_t fdiv(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

IntLattice::IntLattice(std::size_t ambient_dim, const IntMat& generators)
    : dim_(ambient_dim), num_generators_(generators.size()) {
  IntMat rows = generators;
  IntMat tr(rows.size(), IntVec(rows.size(), 0));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != dim_) throw UsageError("IntLattice: generator dimension mismatch");
    tr[i][i] = 1;
  }
  std::size_t top = 0;
  for (std::size_t c = 0; c < dim_ && top < rows.size(); ++c) {
    // Euclid on column c among rows top..end.
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = top; i < rows.size(); ++i)
        if (rows[i][c] != 0 && (best == rows.size() || std::llabs(rows[i][c]) < std::llabs(rows[best][c])))
          best = i;
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      std::swap(tr[top], tr[best]);
      bool done = true;
      for (std::size_t i = top + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        std::int64_t q = rows[i][c] / rows[top][c];
        rows[i] = sub(rows[i], scale(q, rows[top]));
        tr[i] = sub(tr[i], scale(q, tr[top]));
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[top][c] == 0) continue;
    if (rows[top][c] < 0) {
      rows[top] = scale(-1, rows[top]);
      tr[top] = scale(-1, tr[top]);
    }
    for (std::size_t i = 0; i < top; ++i) {
      std::int64_t q = fdiv(rows[i][c], rows[top][c]);
      rows[i] = sub(rows[i], scale(q, rows[top]));
      tr[i] = sub(tr[i], scale(q, tr[top]));
    }
    pivots_.push_back(c);
    ++top;
  }
  rows.resize(top);
  tr.resize(top);
  basis_ = std::move(rows);
  transform_ = std::move(tr);
}

std::optional<IntVec> IntLattice::echelon_coords(const IntVec& v) const {
  if (v.size() != dim_) throw UsageError("IntLattice: vector dimension mismatch");
  IntVec rest = v;
  IntVec coords(basis_.size(), 0);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const std::size_t c = pivots_[i];
    if (rest[c] % basis_[i][c] != 0) return std::nullopt;
    coords[i] = rest[c] / basis_[i][c];
    rest = sub(rest, scale(coords[i], basis_[i]));
  }
  if (!is_zero(rest)) return std::nullopt;
  return coords;
}

bool IntLattice::contains(const IntVec& v) const { return echelon_coords(v).has_value(); }

std::optional<IntVec> IntLattice::preimage(const IntVec& v) const {
  auto coords = echelon_coords(v);
  if (!coords) return std::nullopt;
  IntVec out(num_generators_, 0);
  for (std::size_t i = 0; i < coords->size(); ++i)
    out = add(out, scale((*coords)[i], transform_[i]));
  return out;
}

std::int64_t IntLattice::index() const {
  if (basis_.size() != dim_) throw PreconditionError("IntLattice::index: lattice is not of full rank");
  std::int64_t idx = 1;
  for (std::size_t i = 0; i < basis_.size(); ++i) idx *= basis_[i][pivots_[i]];
  return idx;
}

}  // namespace crys
