#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "crys/laurent.hpp"
#include "crys/qpoly.hpp"
#include "crys/series.hpp"

namespace crys {

// phi^i(lambda) = prod_{k >= i} (1 - u^(p^k) / p) to degree D.
TruncSeries phi_lambda_series(std::uint32_t p, unsigned i, std::int64_t D);
inline TruncSeries lambda_series(std::uint32_t p, std::int64_t D) { return phi_lambda_series(p, 0, D); }

// -u lambda f'.
TruncSeries n_nabla(const TruncSeries& f, std::int64_t D);

// z_0 = -u phi(lambda) / p and z_i = -u^(p^i) phi^(i+1)(lambda) / (p prod_{j=1..i} phi^j(E)^(h-1)).
TruncSeries z_series(unsigned i, std::uint32_t p, unsigned h, std::int64_t D);

// Exact matrices over Q[u, 1/E].
EMatrix l1_exact(const EMatrix& C, unsigned h);                    // E^h C' C^-1
EMatrix a_c_exact(const EMatrix& C, unsigned h, const EMatrix& X);  // E^h C phi(X) C^-1, X integral
EMatrix l2_exact(const EMatrix& C, unsigned h);
// E^h C X C^-1 and E^h C^-1 X C are integral for every elementary matrix X.
bool adjoint_height_ok(const EMatrix& C, unsigned h);

// Like l1_exact but throws PreconditionError on a height violation or an E-pole.
EMatrix L1(const EMatrix& C, unsigned h);

// Truncated series versions.
SeriesMatrix l1_series(const EMatrix& C, unsigned h, std::int64_t D);
SeriesMatrix a_c_series(const EMatrix& C, unsigned h, const SeriesMatrix& X, std::int64_t D);

// N_0 = 0, N_1 = u lambda C' C^-1, N_{i+1} - N_i = E C phi(N_i - N_{i-1}) C^-1.
std::vector<SeriesMatrix> n_sequence(const EMatrix& C, unsigned steps, std::int64_t D);

struct TelescopeRow {
  unsigned i = 0;
  std::int64_t compared_degree = 0;
  std::size_t mismatches = 0;  // coefficients that differ
};

struct TelescopeReport {
  std::vector<TelescopeRow> rows;
  bool pass = true;
};

// Compares E^(h-1)(N_{i+1} - N_i) with z_i A_C^i(L_1) coefficientwise for i <= i_max.
TelescopeReport telescope_check(const EMatrix& C, unsigned h, unsigned i_max, std::int64_t D);

struct PoleDefect {
  std::size_t row = 0, col = 0;
  std::int64_t pole_order = 0;
};

struct ModpReport {
  bool pass = true;
  std::vector<PoleDefect> defects;
};

// Over F_p: passes iff u C' C^-1 has no pole at u = 0.
ModpReport modp_monodromy_check(const LoopMatrix& C);
// Order of vanishing at u = 0 of u^h C' C^-1 (kInfiniteValuation if it is 0).
std::int64_t modp_l1_vanishing_order(const LoopMatrix& C, unsigned h);

// C = K1 E^mu K2 over Z[u] with det K1 = det K2 = 1.
struct CartanInstance {
  std::uint32_t p = 5;
  std::vector<std::vector<QPoly>> k1, k2;
  std::vector<std::int64_t> mu;
  unsigned h = 1;  // max(mu) - min(mu), at least 1
  EMatrix matrix() const;
  // K1 u^mu K2 over F_p (E reduces to u); K entries must have p-integral coefficients.
  LoopMatrix reduction() const;
};

CartanInstance random_cartan_instance(std::mt19937_64& rng, std::size_t n, std::uint32_t p, unsigned h_max);

}  // namespace crys
