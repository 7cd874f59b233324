#include "crys/loopgr.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "json.hpp"

#include "crys/errors.hpp"
#include "crys/flrange.hpp"

namespace crys {

namespace {

using Column = std::vector<LaurentPoly>;

// Terms of degree >= d.
LaurentPoly high_part(const LaurentPoly& f, std::int64_t d) { return f - f.truncate_above(d - 1); }

void check_square_invertible(const LoopMatrix& A, const char* who) {
  if (A.det().is_zero()) throw PreconditionError(std::string(who) + ": matrix is singular");
}

IntVec add_vec(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw UsageError("coweight length mismatch");
  IntVec r(a);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

void require_dominant(const IntVec& v, const char* who) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] < v[i + 1]) throw PreconditionError(std::string(who) + ": coweight is not dominant");
}

bool gl_dominance_leq(const IntVec& lambda, const IntVec& mu) {
  return loop_group_datum(LoopGroup::GL, mu.size()).bruhat_leq({lambda}, {mu});
}

}  // namespace

IntVec elementary_divisors(const LoopMatrix& A) {
  const std::size_t n = A.n();
  const LaurentPoly det = A.det();
  if (det.is_zero()) throw PreconditionError("elementary_divisors: matrix is singular");
  const std::int64_t m = A.valuation();
  // B = u^-m A has entries in F_p[u]; its divisors lie in [0, d], d = v(det B),
  // so working modulo u^(d+1) loses nothing.
  const std::int64_t d = det.valuation() - static_cast<std::int64_t>(n) * m;
  std::vector<std::vector<LaurentPoly>> M(n, std::vector<LaurentPoly>(n, LaurentPoly(A.p())));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) M[i][j] = A.at(i, j).shift(-m).truncate_above(d);

  IntVec vals;
  for (std::size_t s = 0; s < n; ++s) {
    std::size_t pi = n, pj = n;
    std::int64_t best = LaurentPoly::kInfiniteValuation;
    for (std::size_t i = s; i < n; ++i)
      for (std::size_t j = s; j < n; ++j)
        if (!M[i][j].is_zero() && M[i][j].valuation() < best) {
          best = M[i][j].valuation();
          pi = i;
          pj = j;
        }
    if (pi == n) throw std::logic_error("elementary_divisors: truncation lost a divisor");
    std::swap(M[s], M[pi]);
    for (auto& row : M) std::swap(row[s], row[pj]);
    const std::int64_t v = best;
    const LaurentPoly winv = inverse_series(M[s][s].shift(-v), d + 1 - v);
    for (std::size_t j = s; j < n; ++j) M[s][j] = (M[s][j] * winv).truncate_above(d);
    for (std::size_t i = s + 1; i < n; ++i) {
      const LaurentPoly f = M[i][s].shift(-v);
      if (f.is_zero()) continue;
      for (std::size_t j = s; j < n; ++j) M[i][j] = (M[i][j] - f * M[s][j]).truncate_above(d);
    }
    for (std::size_t j = s + 1; j < n; ++j) M[s][j] = LaurentPoly(A.p());
    vals.push_back(v);
  }
  std::int64_t total = 0;
  for (auto v : vals) total += v;
  if (total != d) throw std::logic_error("elementary_divisors: divisor sum does not match the determinant");
  for (auto& v : vals) v += m;
  std::sort(vals.rbegin(), vals.rend());
  return vals;
}

RootDatum loop_group_datum(LoopGroup group, std::size_t n) {
  return build_root_datum((group == LoopGroup::GL ? "GL(" : "PGL(") + std::to_string(n) + ")");
}

Coweight loop_shape(const LoopMatrix& A, LoopGroup group) {
  IntVec a = elementary_divisors(A);
  if (group == LoopGroup::GL) return {a};
  IntVec c(a.size() - 1);
  for (std::size_t i = 0; i + 1 < a.size(); ++i) c[i] = a[i] - a[i + 1];
  return {c};
}

MultiCoweight shape(const std::vector<LoopMatrix>& C, LoopGroup group) {
  MultiCoweight out;
  for (const auto& m : C) out.per_embedding.push_back(loop_shape(m, group));
  return out;
}

LoopMatrix hermite_form(const LoopMatrix& D) {
  const std::size_t n = D.n();
  const std::uint32_t p = D.p();
  const IntVec ed = elementary_divisors(D);
  // u^K std is inside the lattice, so terms of degree >= K may be dropped.
  const std::int64_t K = ed.front(), lo = ed.back();
  const std::int64_t prec = K - lo + 1;
  auto trunc = [&](Column& c) {
    for (auto& x : c) x = x.truncate_above(K - 1);
  };
  std::vector<Column> rest;
  for (std::size_t j = 0; j < n; ++j) {
    Column c(n, LaurentPoly(p));
    for (std::size_t i = 0; i < n; ++i) c[i] = D.at(i, j);
    trunc(c);
    rest.push_back(std::move(c));
  }
  std::vector<Column> piv(n);
  IntVec diag(n);
  for (std::size_t i = n; i-- > 0;) {
    std::size_t best = rest.size();
    std::int64_t bv = LaurentPoly::kInfiniteValuation;
    for (std::size_t j = 0; j < rest.size(); ++j)
      if (!rest[j][i].is_zero() && rest[j][i].valuation() < bv) {
        bv = rest[j][i].valuation();
        best = j;
      }
    Column pc(n, LaurentPoly(p));
    if (best == rest.size()) {
      pc[i] = LaurentPoly::monomial(p, 1, K);
      diag[i] = K;
    } else {
      pc = rest[best];
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
      const LaurentPoly winv = inverse_series(pc[i].shift(-bv), prec);
      for (auto& x : pc) x = x * winv;
      trunc(pc);
      pc[i] = LaurentPoly::monomial(p, 1, bv);
      diag[i] = bv;
      // Eliminating the implicit generator u^K e_i leaves u^(K - bv) pc above row i.
      Column left(n, LaurentPoly(p));
      for (std::size_t r = 0; r < i; ++r) left[r] = pc[r].shift(K - bv);
      trunc(left);
      rest.push_back(std::move(left));
      for (auto& c : rest) {
        const LaurentPoly f = c[i].shift(-bv);
        if (f.is_zero()) continue;
        for (std::size_t r = 0; r < n; ++r) c[r] = c[r] - f * pc[r];
        trunc(c);
      }
    }
    piv[i] = std::move(pc);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = i; r-- > 0;) {
      const LaurentPoly q = high_part(piv[i][r], diag[r]).shift(-diag[r]);
      if (q.is_zero()) continue;
      for (std::size_t t = 0; t <= r; ++t) piv[i][t] = piv[i][t] - q * piv[r][t];
      trunc(piv[i]);
      piv[i][i] = LaurentPoly::monomial(p, 1, diag[i]);
    }
  LoopMatrix H(n, p);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) H.at(i, j) = piv[j][i];
  return H;
}

LoopMatrix canonical_lattice(const LoopMatrix& D, LoopGroup group) {
  LoopMatrix H = hermite_form(D);
  if (group == LoopGroup::GL) return H;
  std::int64_t m = LaurentPoly::kInfiniteValuation;
  for (std::size_t i = 0; i < H.n(); ++i) m = std::min(m, H.at(i, i).valuation());
  return H.shift(-m);
}

namespace {

// Hermite-form candidates [[u^a, c], [0, u^b]] with u^k std <= D <= u^-k std.
std::vector<LoopMatrix> window_candidates(std::uint32_t p, std::int64_t k, std::size_t budget) {
  std::vector<LoopMatrix> out;
  for (std::int64_t a = -k; a <= k; ++a)
    for (std::int64_t b = -k; b <= k; ++b) {
      const std::int64_t lo = std::max(-k, a + b - k);
      const std::int64_t len = std::max<std::int64_t>(0, a - lo);
      std::vector<std::int64_t> digits(static_cast<std::size_t>(len), 0);
      for (;;) {
        LoopMatrix D(2, p);
        D.at(0, 0) = LaurentPoly::monomial(p, 1, a);
        D.at(1, 1) = LaurentPoly::monomial(p, 1, b);
        D.at(0, 1) = LaurentPoly::from_coeffs(p, lo, digits);
        out.push_back(std::move(D));
        if (out.size() > budget) throw BudgetExceeded("kisin_variety_points: candidate budget exceeded");
        std::size_t i = 0;
        while (i < digits.size() && digits[i] == static_cast<std::int64_t>(p) - 1) digits[i++] = 0;
        if (i == digits.size()) break;
        ++digits[i];
      }
    }
  return out;
}

}  // namespace

KisinResult kisin_variety_points(const KisinQuery& q) {
  const std::size_t f = q.cbar.size();
  if (f == 0) throw UsageError("kisin_variety_points: no Frobenius matrices");
  if (q.mu.size() != f) throw UsageError("kisin_variety_points: mu must have one entry per embedding");
  if (q.k < 0 || q.k > 2) throw UsageError("kisin_variety_points: window k must be in [0, 2]");
  const std::uint32_t p = q.cbar[0].p();
  for (const auto& c : q.cbar) {
    if (c.n() != 2) throw UsageError("kisin_variety_points: only 2x2 Frobenius matrices are enumerated");
    if (c.p() != p) throw UsageError("kisin_variety_points: mixed primes");
    check_square_invertible(c, "kisin_variety_points");
  }
  const RootDatum datum = loop_group_datum(q.group, 2);
  for (const auto& m : q.mu.per_embedding)
    if (!datum.is_dominant(m)) throw PreconditionError("kisin_variety_points: mu is not dominant");

  const std::vector<LoopMatrix> cand = window_candidates(p, q.k, q.budget);
  std::vector<LoopMatrix> inv, phi;
  for (const auto& D : cand) {
    inv.push_back(D.inverse());
    phi.push_back(D.frobenius());
  }
  KisinResult res;
  double total = 1;
  for (std::size_t s = 0; s < f; ++s) total *= static_cast<double>(cand.size());
  if (total > static_cast<double>(q.budget))
    throw BudgetExceeded("kisin_variety_points: " + std::to_string(static_cast<long long>(total)) +
                         " candidate tuples exceed the budget");

  std::vector<std::size_t> pick(f, 0);
  std::vector<LatticeClass> found;
  std::function<void(std::size_t)> rec = [&](std::size_t s) {
    if (s == f) {
      ++res.candidates;
      LatticeClass lc;
      for (std::size_t t = 0; t < f; ++t) {
        const std::size_t prev = pick[(t + f - 1) % f];
        LoopMatrix Cp = inv[pick[t]] * q.cbar[t] * phi[prev];
        Coweight sh = loop_shape(Cp, q.group);
        if (!datum.bruhat_leq(sh, q.mu.per_embedding[t])) return;
        lc.shape.per_embedding.push_back(sh);
        lc.basis.push_back(canonical_lattice(cand[pick[t]], q.group));
      }
      if (std::find(found.begin(), found.end(), lc) == found.end()) found.push_back(std::move(lc));
      return;
    }
    for (std::size_t i = 0; i < cand.size(); ++i) {
      pick[s] = i;
      rec(s + 1);
    }
  };
  rec(0);
  res.classes = std::move(found);
  return res;
}

LoopGroup parse_loop_group(const std::string& spec, std::size_t* n) {
  LoopGroup g;
  std::string rest;
  if (spec.rfind("PGL(", 0) == 0) {
    g = LoopGroup::PGL;
    rest = spec.substr(4);
  } else if (spec.rfind("GL(", 0) == 0) {
    g = LoopGroup::GL;
    rest = spec.substr(3);
  } else {
    throw UsageError("loop group must be GL(n) or PGL(n), got '" + spec + "'");
  }
  if (rest.empty() || rest.back() != ')') throw UsageError("malformed group spec '" + spec + "'");
  std::size_t dim = 0;
  try {
    dim = static_cast<std::size_t>(std::stoul(rest.substr(0, rest.size() - 1)));
  } catch (const std::exception&) {
    throw UsageError("malformed group spec '" + spec + "'");
  }
  if (dim < 1) throw UsageError("group rank must be positive");
  if (n) *n = dim;
  return g;
}

FrobeniusInstance parse_frobenius_instance(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("Frobenius instance: ") + e.what());
  }
  FrobeniusInstance inst;
  try {
    inst.group = j.at("group").get<std::string>();
    inst.q = j.at("q").get<std::uint32_t>();
    const std::size_t emb = j.value("embeddings", std::size_t{1});
    if (!is_prime(inst.q)) throw UsageError("Frobenius instance: q must be prime");
    std::size_t n = 0;
    parse_loop_group(inst.group, &n);
    const auto& mats = j.at("matrices");
    if (mats.size() != emb) throw UsageError("Frobenius instance: matrix count differs from embeddings");
    for (const auto& m : mats) {
      LoopMatrix M(n, inst.q);
      for (const auto& t : m) {
        if (t.size() != 4) throw UsageError("Frobenius instance: entries are [row, col, degree, coeff]");
        const auto r = t[0].get<std::size_t>(), c = t[1].get<std::size_t>();
        if (r >= n || c >= n) throw UsageError("Frobenius instance: entry index out of range");
        M.at(r, c) = M.at(r, c) + LaurentPoly::monomial(inst.q, t[3].get<std::int64_t>(), t[2].get<std::int64_t>());
      }
      inst.matrices.push_back(std::move(M));
    }
    if (j.contains("mu")) inst.mu = j.at("mu").get<std::string>();
    if (j.contains("k")) inst.k = j.at("k").get<std::int64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("Frobenius instance: ") + e.what());
  }
  return inst;
}

FrobeniusInstance load_frobenius_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open Frobenius instance '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_frobenius_instance(ss.str());
}

std::string frobenius_instance_to_json(const FrobeniusInstance& inst) {
  nlohmann::json j;
  j["group"] = inst.group;
  j["q"] = inst.q;
  j["embeddings"] = inst.matrices.size();
  j["matrices"] = nlohmann::json::array();
  for (const auto& M : inst.matrices) {
    nlohmann::json entries = nlohmann::json::array();
    for (std::size_t r = 0; r < M.n(); ++r)
      for (std::size_t c = 0; c < M.n(); ++c) {
        const LaurentPoly& f = M.at(r, c);
        for (std::size_t k = 0; k < f.coeffs().size(); ++k)
          if (f.coeffs()[k] != 0)
            entries.push_back({r, c, f.low() + static_cast<std::int64_t>(k), f.coeffs()[k]});
      }
    j["matrices"].push_back(entries);
  }
  if (inst.mu) j["mu"] = *inst.mu;
  if (inst.k) j["k"] = *inst.k;
  return j.dump();
}

LoopMatrix random_k_element(std::mt19937_64& rng, std::size_t n, std::uint32_t p, int max_degree) {
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<std::uint32_t> coef(0, p - 1), unit(1, p - 1);
  LoopMatrix K = LoopMatrix::identity(n, p);
  for (std::size_t i = 0; i < n; ++i) K.at(i, i) = LaurentPoly::constant(p, unit(rng));
  if (n < 2) return K;
  for (std::size_t t = 0; t < 2 * n; ++t) {
    const std::size_t i = idx(rng);
    std::size_t j = idx(rng);
    while (j == i) j = idx(rng);
    std::vector<std::int64_t> c(static_cast<std::size_t>(max_degree + 1));
    for (auto& x : c) x = coef(rng);
    LoopMatrix E = LoopMatrix::identity(n, p);
    E.at(i, j) = LaurentPoly::from_coeffs(p, 0, c);
    K = K * E;
  }
  return K;
}

CartanStats cartan_product_check(const IntVec& lambda, const IntVec& omega, std::uint32_t p, std::size_t samples,
                                 std::mt19937_64& rng) {
  require_dominant(lambda, "cartan_product_check");
  require_dominant(omega, "cartan_product_check");
  const std::size_t n = lambda.size();
  const IntVec bound = add_vec(lambda, omega);
  CartanStats st;
  for (std::size_t s = 0; s < samples; ++s) {
    LoopMatrix A = random_k_element(rng, n, p) * LoopMatrix::diagonal_monomial(p, lambda) *
                   random_k_element(rng, n, p) * LoopMatrix::diagonal_monomial(p, omega) *
                   random_k_element(rng, n, p);
    IntVec sh = elementary_divisors(A);
    ++st.samples;
    st.shapes.insert(sh);
    if (!gl_dominance_leq(sh, bound)) ++st.failures;
  }
  return st;
}

CartanStats three_coset_check(const IntVec& lambda, const IntVec& omega, const IntVec& nu, std::uint32_t p,
                              std::size_t samples, std::mt19937_64& rng) {
  require_dominant(lambda, "three_coset_check");
  require_dominant(omega, "three_coset_check");
  require_dominant(nu, "three_coset_check");
  const std::size_t n = lambda.size();
  const IntVec bound = add_vec(add_vec(lambda, omega), nu);
  CartanStats st;
  for (std::size_t s = 0; s < samples; ++s) {
    LoopMatrix A = random_k_element(rng, n, p) * LoopMatrix::diagonal_monomial(p, lambda) *
                   random_k_element(rng, n, p) * LoopMatrix::diagonal_monomial(p, omega) *
                   random_k_element(rng, n, p) * LoopMatrix::diagonal_monomial(p, nu) * random_k_element(rng, n, p);
    IntVec sh = elementary_divisors(A);
    ++st.samples;
    st.shapes.insert(sh);
    if (!gl_dominance_leq(sh, bound)) ++st.failures;
  }
  return st;
}

CartanStats inverse_and_phi_check(const IntVec& mu, std::uint32_t p, std::size_t samples, std::mt19937_64& rng) {
  require_dominant(mu, "inverse_and_phi_check");
  const std::size_t n = mu.size();
  IntVec neg_dom(mu.rbegin(), mu.rend());
  for (auto& x : neg_dom) x = -x;
  IntVec pmu(mu);
  for (auto& x : pmu) x *= p;
  CartanStats st;
  for (std::size_t s = 0; s < samples; ++s) {
    LoopMatrix g = random_k_element(rng, n, p) * LoopMatrix::diagonal_monomial(p, mu) * random_k_element(rng, n, p);
    ++st.samples;
    const IntVec a = elementary_divisors(g.inverse());
    const IntVec b = elementary_divisors(g.frobenius());
    st.shapes.insert(a);
    if (a != neg_dom || b != pmu) ++st.failures;
  }
  return st;
}

CartanStats snf_invariance_check(const IntVec& mu, std::uint32_t p, std::size_t samples, std::mt19937_64& rng) {
  require_dominant(mu, "snf_invariance_check");
  const std::size_t n = mu.size();
  CartanStats st;
  for (std::size_t s = 0; s < samples; ++s) {
    LoopMatrix g = random_k_element(rng, n, p) * LoopMatrix::diagonal_monomial(p, mu) * random_k_element(rng, n, p);
    LoopMatrix h = random_k_element(rng, n, p) * g * random_k_element(rng, n, p);
    ++st.samples;
    const IntVec a = elementary_divisors(g), b = elementary_divisors(h);
    st.shapes.insert(a);
    if (a != mu || b != mu) ++st.failures;
  }
  return st;
}

}  // namespace crys
