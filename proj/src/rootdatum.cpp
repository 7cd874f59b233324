#include "crys/rootdatum.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <numeric>
#include <regex>
#include <set>

#include <json.hpp>

#include "crys/errors.hpp"

namespace crys {

std::string to_string(IsogenyTag tag) {
  switch (tag) {
    case IsogenyTag::SimplyConnected: return "sc";
    case IsogenyTag::Adjoint: return "ad";
    case IsogenyTag::GLLike: return "gl-like";
    case IsogenyTag::SOLike: return "so-like";
    case IsogenyTag::Custom: return "custom";
  }
  return "custom";
}

RootDatum::RootDatum(std::string name, std::size_t rank, IntMat roots, IntMat coroots,
                     std::vector<std::size_t> simple_indices, IsogenyTag tag)
    : name_(std::move(name)),
      rank_(rank),
      roots_(std::move(roots)),
      coroots_(std::move(coroots)),
      simple_(std::move(simple_indices)),
      tag_(tag) {
  validate_and_index();
}

void RootDatum::validate_and_index() {
  if (rank_ == 0) throw InvalidDatum("rank must be positive");
  if (roots_.size() != coroots_.size()) throw InvalidDatum("roots and coroots differ in number");
  const std::size_t n = roots_.size();
  std::map<IntVec, std::size_t> where;
  for (std::size_t i = 0; i < n; ++i) {
    if (roots_[i].size() != rank_ || coroots_[i].size() != rank_)
      throw InvalidDatum("root or coroot has wrong length");
    if (is_zero(roots_[i])) throw InvalidDatum("zero root");
    if (dot(coroots_[i], roots_[i]) != 2) throw InvalidDatum("coroot/root mismatch: <a^vee, a> != 2");
    if (!where.emplace(roots_[i], i).second) throw InvalidDatum("duplicate root");
  }
  neg_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    auto it = where.find(scale(-1, roots_[i]));
    if (it == where.end()) throw InvalidDatum("roots are not closed under negation");
    if (coroots_[it->second] != scale(-1, coroots_[i]))
      throw InvalidDatum("coroot/root mismatch under negation");
    neg_[i] = it->second;
  }

  std::set<std::size_t> seen;
  IntMat simple_rows;
  for (auto s : simple_) {
    if (s >= n || !seen.insert(s).second) throw InvalidDatum("bad simple root index");
    simple_rows.push_back(roots_[s]);
  }
  if (simple_.size() > rank_) throw InvalidDatum("more simple roots than the rank");

  in_simple_.assign(n, IntVec(simple_.size(), 0));
  is_pos_.assign(n, false);
  positive_.clear();
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<std::vector<mpq_class>> c;
    try {
      c = solve_rational(simple_rows, roots_[i]);
    } catch (const UsageError&) {
      throw InvalidDatum("simple roots are linearly dependent");
    }
    if (!c) throw InvalidDatum("root outside the span of the simple roots");
    bool nonneg = true, nonpos = true;
    for (std::size_t k = 0; k < c->size(); ++k) {
      if ((*c)[k].get_den() != 1) throw InvalidDatum("root is not an integral combination of simple roots");
      in_simple_[i][k] = (*c)[k].get_num().get_si();
      if (in_simple_[i][k] < 0) nonneg = false;
      if (in_simple_[i][k] > 0) nonpos = false;
    }
    if (!nonneg && !nonpos) throw InvalidDatum("simple roots do not define a positive system");
    is_pos_[i] = nonneg;
    if (nonneg) positive_.push_back(i);
  }

  const std::size_t r = simple_.size();
  cartan_.assign(r, IntVec(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) cartan_[i][j] = dot(coroots_[simple_[i]], roots_[simple_[j]]);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (i != j && cartan_[i][j] > 0) throw InvalidDatum("invalid Cartan data: positive off-diagonal entry");
      if ((cartan_[i][j] == 0) != (cartan_[j][i] == 0))
        throw InvalidDatum("invalid Cartan data: asymmetric zero pattern");
    }

  reflection_perm_.assign(r, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < r; ++i) {
    const IntVec& a = roots_[simple_[i]];
    const IntVec& av = coroots_[simple_[i]];
    for (std::size_t b = 0; b < n; ++b) {
      IntVec img = sub(roots_[b], scale(dot(av, roots_[b]), a));
      auto it = where.find(img);
      if (it == where.end()) throw InvalidDatum("simple reflection does not permute the roots");
      IntVec cimg = sub(coroots_[b], scale(dot(coroots_[b], a), av));
      if (coroots_[it->second] != cimg) throw InvalidDatum("simple reflection does not permute the coroots");
      reflection_perm_[i][b] = it->second;
    }
  }

  std::vector<std::size_t> parent(r);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (i != j && cartan_[i][j] != 0) parent[find(i)] = find(j);
  std::map<std::size_t, std::vector<std::size_t>> comps;
  for (std::size_t i = 0; i < r; ++i) comps[find(i)].push_back(i);
  components_.clear();
  for (auto& [k, v] : comps) components_.push_back(v);
  std::sort(components_.begin(), components_.end());

  IntMat gens;
  for (std::size_t k = 0; k < rank_; ++k) {
    IntVec g(r);
    for (std::size_t i = 0; i < r; ++i) g[i] = roots_[simple_[i]][k];
    gens.push_back(g);
  }
  pairing_lattice_ = IntLattice(r, gens);
}

std::optional<std::size_t> RootDatum::root_index(const IntVec& root) const {
  for (std::size_t i = 0; i < roots_.size(); ++i)
    if (roots_[i] == root) return i;
  return std::nullopt;
}

std::size_t RootDatum::component_of_root(std::size_t root) const {
  for (std::size_t c = 0; c < components_.size(); ++c)
    for (auto pos : components_[c])
      if (in_simple_[root][pos] != 0) return c;
  throw InvalidDatum("root with empty support");
}

std::size_t RootDatum::highest_root(std::size_t component) const {
  if (component >= components_.size()) throw PreconditionError("no such component");
  std::size_t best = roots_.size();
  std::int64_t best_height = -1;
  for (auto i : positive_) {
    if (component_of_root(i) != component) continue;
    std::int64_t ht = std::accumulate(in_simple_[i].begin(), in_simple_[i].end(), std::int64_t{0});
    if (ht > best_height) best_height = ht, best = i;
  }
  return best;
}

std::size_t RootDatum::highest_root() const {
  if (components_.size() != 1) throw PreconditionError("highest_root: datum is not irreducible; select a component");
  return highest_root(0);
}

IntVec RootDatum::highest_root_coefficients(std::size_t component) const {
  const IntVec& all = in_simple_[highest_root(component)];
  IntVec out;
  for (auto pos : components_[component]) out.push_back(all[pos]);
  return out;
}

std::int64_t RootDatum::pairing(const Coweight& lambda, std::size_t root) const {
  return dot(lambda.coords, roots_.at(root));
}

std::int64_t RootDatum::pairing(const Coweight& lambda, const IntVec& character) const {
  if (lambda.coords.size() != rank_) throw UsageError("pairing: coweight has wrong length");
  return dot(lambda.coords, character);
}

bool RootDatum::is_dominant(const Coweight& lambda) const {
  for (auto s : simple_)
    if (pairing(lambda, s) < 0) return false;
  return true;
}

Coweight RootDatum::reflect(const Coweight& lambda, std::size_t simple_pos) const {
  const std::size_t s = simple_.at(simple_pos);
  return {sub(lambda.coords, scale(pairing(lambda, s), coroots_[s]))};
}

Coweight RootDatum::dominant_conjugate(const Coweight& lambda) const {
  if (lambda.coords.size() != rank_) throw UsageError("coweight has wrong length");
  Coweight cur = lambda;
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t i = 0; i < simple_.size(); ++i)
      if (pairing(cur, simple_[i]) < 0) {
        cur = reflect(cur, i);
        moved = true;
      }
  }
  return cur;
}

bool RootDatum::bruhat_leq(const Coweight& lambda, const Coweight& mu, DominanceCoefficients coeffs) const {
  if (!is_dominant(lambda) || !is_dominant(mu)) throw PreconditionError("bruhat_leq: non-dominant input");
  IntVec diff = sub(mu.coords, lambda.coords);
  if (is_zero(diff)) return true;
  if (simple_.empty()) return false;
  IntMat rows;
  for (auto s : simple_) rows.push_back(coroots_[s]);
  auto c = solve_rational(rows, diff);
  if (!c) return false;
  for (auto& x : *c) {
    if (x < 0) return false;
    if (coeffs == DominanceCoefficients::Integral && x.get_den() != 1) return false;
  }
  return true;
}

std::size_t RootDatum::dim_parabolic_quotient(const Coweight& mu) const {
  if (!is_dominant(mu)) throw PreconditionError("dim_parabolic_quotient: non-dominant coweight");
  std::size_t d = 0;
  for (auto a : positive_)
    if (pairing(mu, a) > 0) ++d;
  return d;
}

IntVec RootDatum::two_rho() const {
  IntVec s(rank_, 0);
  for (auto a : positive_) s = add(s, roots_[a]);
  return s;
}

std::vector<WeylElement> RootDatum::weyl_group() const {
  if (simple_.size() > 4) throw PreconditionError("weyl_group: explicit enumeration limited to semisimple rank <= 4");
  const std::size_t n = roots_.size();
  WeylElement id;
  id.root_perm.resize(n);
  std::iota(id.root_perm.begin(), id.root_perm.end(), 0);
  std::vector<WeylElement> out{id};
  std::set<std::vector<std::size_t>> seen{id.root_perm};
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < simple_.size(); ++j) {
      WeylElement next;
      next.word.push_back(j);
      next.word.insert(next.word.end(), out[cur].word.begin(), out[cur].word.end());
      next.root_perm.resize(n);
      for (std::size_t b = 0; b < n; ++b) next.root_perm[b] = reflection_perm_[j][out[cur].root_perm[b]];
      if (seen.insert(next.root_perm).second) {
        out.push_back(std::move(next));
        queue.push_back(out.size() - 1);
      }
    }
  }
  return out;
}

Coweight RootDatum::apply(const WeylElement& w, const Coweight& lambda) const {
  Coweight cur = lambda;
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) cur = reflect(cur, *it);
  return cur;
}

std::int64_t RootDatum::derived_fundamental_group_order() const {
  if (simple_.empty()) return 1;
  IntMat rows;
  for (auto s : simple_) rows.push_back(coroots_[s]);
  std::int64_t prod = 1;
  for (auto d : invariant_factors(rows)) prod *= d;
  return prod;
}

std::int64_t RootDatum::derived_center_order() const {
  if (simple_.empty()) return 1;
  mpz_class det = abs(determinant(cartan_));
  return det.get_si() / derived_fundamental_group_order();
}

bool RootDatum::is_simply_connected() const {
  if (simple_.empty()) return true;
  return pairing_lattice_.index() == mpz_class(abs(determinant(cartan_))).get_si();
}

Coweight RootDatum::lift_pairing_vector(const IntVec& v) const {
  auto pre = pairing_lattice_.preimage(v);
  if (!pre) throw PreconditionError("pairing vector is not realized by a coweight");
  return {*pre};
}

std::vector<Coweight> RootDatum::dominant_coweights_mod_center(std::int64_t max_h) const {
  const std::size_t r = simple_.size();
  std::vector<Coweight> out;
  if (r == 0) {
    out.push_back({IntVec(rank_, 0)});
    return out;
  }
  // Box bound per coordinate from the highest-root coefficients.
  IntVec bound(r, 0), weight(r, 0);
  std::vector<std::size_t> comp_of(r);
  for (std::size_t c = 0; c < components_.size(); ++c) {
    IntVec nc = highest_root_coefficients(c);
    for (std::size_t k = 0; k < components_[c].size(); ++k) {
      weight[components_[c][k]] = nc[k];
      bound[components_[c][k]] = max_h / nc[k];
      comp_of[components_[c][k]] = c;
    }
  }
  IntVec v(r, 0);
  for (;;) {
    std::vector<std::int64_t> hc(components_.size(), 0);
    for (std::size_t i = 0; i < r; ++i) hc[comp_of[i]] += weight[i] * v[i];
    if (*std::max_element(hc.begin(), hc.end()) <= max_h && pairing_lattice_.contains(v))
      out.push_back(lift_pairing_vector(v));
    std::size_t i = 0;
    while (i < r && v[i] == bound[i]) v[i++] = 0;
    if (i == r) break;
    ++v[i];
  }
  return out;
}

Coweight RootDatum::coweight_from_input(const IntVec& v) const {
  if (v.size() == rank_) return {v};
  if (ambient_gl_ != 0 && v.size() == ambient_gl_) {
    const std::size_t n = ambient_gl_;
    IntVec c(n - 1);
    if (tag_ == IsogenyTag::Adjoint) {
      for (std::size_t i = 0; i + 1 < n; ++i) c[i] = v[i] - v[i + 1];
      return {c};
    }
    std::int64_t total = std::accumulate(v.begin(), v.end(), std::int64_t{0});
    if (total != 0) throw UsageError("SL coweight in GL coordinates must have coordinate sum 0");
    std::int64_t run = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) c[i] = run += v[i];
    return {c};
  }
  throw UsageError("coweight has " + std::to_string(v.size()) + " entries; " + name_ + " expects " +
                   std::to_string(rank_));
}

std::int64_t h_mu(const RootDatum& datum, const MultiCoweight& mu) {
  std::int64_t h = 0;
  for (const auto& m : mu.per_embedding)
    for (std::size_t a = 0; a < datum.num_roots(); ++a) h = std::max(h, datum.pairing(m, a));
  return h;
}

namespace {

IntVec unit(std::size_t n, std::size_t i, std::int64_t c = 1) {
  IntVec v(n, 0);
  v[i] = c;
  return v;
}

struct Realization {
  std::size_t rank;
  IntMat roots, coroots;
  std::vector<std::size_t> simple;
};

void push_pair(Realization& R, const IntVec& a, const IntVec& av) {
  R.roots.push_back(a);
  R.coroots.push_back(av);
  R.roots.push_back(scale(-1, a));
  R.coroots.push_back(scale(-1, av));
}

std::size_t index_of(const Realization& R, const IntVec& a) {
  for (std::size_t i = 0; i < R.roots.size(); ++i)
    if (R.roots[i] == a) return i;
  throw InvalidDatum("internal: simple root missing from realization");
}

// Classical types in standard coordinates on Z^m.
Realization classical(char type, std::size_t n) {
  Realization R;
  const std::size_t m = (type == 'A') ? n + 1 : n;
  R.rank = m;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      IntVec d = sub(unit(m, i), unit(m, j));
      push_pair(R, d, d);
      if (type != 'A') {
        IntVec s = add(unit(m, i), unit(m, j));
        push_pair(R, s, s);
      }
    }
  for (std::size_t i = 0; i < m && type != 'A' && type != 'D'; ++i) {
    if (type == 'B') push_pair(R, unit(m, i), unit(m, i, 2));
    if (type == 'C') push_pair(R, unit(m, i, 2), unit(m, i));
  }
  for (std::size_t i = 0; i + 1 < m; ++i) R.simple.push_back(index_of(R, sub(unit(m, i), unit(m, i + 1))));
  if (type == 'B') R.simple.push_back(index_of(R, unit(m, m - 1)));
  if (type == 'C') R.simple.push_back(index_of(R, unit(m, m - 1, 2)));
  if (type == 'D') R.simple.push_back(index_of(R, add(unit(m, m - 2), unit(m, m - 1))));
  return R;
}

IntMat cartan_of(const Realization& R) {
  IntMat A(R.simple.size(), IntVec(R.simple.size()));
  for (std::size_t i = 0; i < R.simple.size(); ++i)
    for (std::size_t j = 0; j < R.simple.size(); ++j)
      A[i][j] = dot(R.coroots[R.simple[i]], R.roots[R.simple[j]]);
  return A;
}

// Roots in simple-root coordinates paired with coroots in simple-coroot
// coordinates, generated as the Weyl orbit of the simple roots.
std::vector<std::pair<IntVec, IntVec>> root_system_from_cartan(const IntMat& A) {
  const std::size_t r = A.size();
  std::map<IntVec, IntVec> found;
  std::deque<IntVec> queue;
  for (std::size_t i = 0; i < r; ++i) {
    found[unit(r, i)] = unit(r, i);
    queue.push_back(unit(r, i));
  }
  while (!queue.empty()) {
    IntVec b = queue.front();
    queue.pop_front();
    IntVec bv = found[b];
    for (std::size_t i = 0; i < r; ++i) {
      std::int64_t c = 0, cv = 0;
      for (std::size_t j = 0; j < r; ++j) {
        c += A[i][j] * b[j];
        cv += bv[j] * A[j][i];
      }
      IntVec nb = b, nbv = bv;
      nb[i] -= c;
      nbv[i] -= cv;
      if (found.emplace(nb, nbv).second) queue.push_back(nb);
      if (found.size() > 1000) throw InvalidDatum("Cartan matrix is not of finite type");
    }
  }
  return {found.begin(), found.end()};
}

RootDatum from_cartan(const std::string& name, const IntMat& A, bool simply_connected) {
  const std::size_t r = A.size();
  IntMat roots, coroots;
  std::vector<std::size_t> simple(r);
  for (auto& [b, bv] : root_system_from_cartan(A)) {
    IntVec rc(r, 0), cc(r, 0);
    if (simply_connected) {
      // X_* basis: simple coroots; X^* basis: fundamental weights.
      cc = bv;
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) rc[i] += A[i][j] * b[j];
    } else {
      // X^* basis: simple roots; X_* basis: fundamental coweights.
      rc = b;
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) cc[i] += bv[j] * A[j][i];
    }
    for (std::size_t i = 0; i < r; ++i)
      if (b == unit(r, i)) simple[i] = roots.size();
    roots.push_back(rc);
    coroots.push_back(cc);
  }
  return RootDatum(name, r, roots, coroots, simple,
                   simply_connected ? IsogenyTag::SimplyConnected : IsogenyTag::Adjoint);
}

RootDatum from_realization(const std::string& name, const Realization& R, IsogenyTag tag) {
  return RootDatum(name, R.rank, R.roots, R.coroots, R.simple, tag);
}

std::size_t parse_size(const std::string& s) {
  std::size_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw UsageError("bad integer in group spec");
    v = v * 10 + static_cast<std::size_t>(c - '0');
    if (v > 64) throw UsageError("group size too large");
  }
  return v;
}

}  // namespace

RootDatum build_root_datum(std::string_view spec_view) {
  std::string spec(spec_view);
  spec.erase(std::remove_if(spec.begin(), spec.end(), ::isspace), spec.end());
  if (spec.rfind("custom:", 0) == 0) return load_custom_datum(spec.substr(7));
  if (spec == "G2") return from_cartan("G2", {{2, -1}, {-3, 2}}, true);

  static const std::regex fam(R"(^(GL|SL|PGL|Sp|SO)\((\d+)\)$)");
  static const std::regex typ(R"(^([ABCD])(\d+)$)");
  std::smatch m;
  if (std::regex_match(spec, m, fam)) {
    const std::string f = m[1];
    const std::size_t n = parse_size(m[2]);
    if (f == "GL") {
      if (n < 1) throw UsageError("GL(n) needs n >= 1");
      if (n == 1) return RootDatum(spec, 1, {}, {}, {}, IsogenyTag::GLLike);
      return from_realization(spec, classical('A', n - 1), IsogenyTag::GLLike);
    }
    if (f == "SL" || f == "PGL") {
      if (n < 2) throw UsageError(f + "(n) needs n >= 2");
      RootDatum d = from_cartan(spec, cartan_of(classical('A', n - 1)), f == "SL");
      d.set_ambient_gl(n);
      return d;
    }
    if (f == "Sp") {
      if (n < 2 || n % 2 != 0) throw UsageError("Sp(2n) needs an even argument >= 2");
      return from_realization(spec, classical('C', n / 2), IsogenyTag::SimplyConnected);
    }
    if (n < 3) throw UsageError("SO(n) needs n >= 3");
    if (n % 2 == 1) return from_realization(spec, classical('B', n / 2), IsogenyTag::SOLike);
    return from_realization(spec, classical('D', n / 2), IsogenyTag::SOLike);
  }
  if (std::regex_match(spec, m, typ)) {
    const char t = std::string(m[1])[0];
    const std::size_t n = parse_size(m[2]);
    const std::size_t min_rank = (t == 'A') ? 1 : (t == 'D') ? 3 : 2;
    if (n < min_rank || n > 5) throw UsageError("type " + spec + " outside the supported rank range");
    return from_cartan(spec, cartan_of(classical(t, n)), true);
  }
  throw UsageError("unknown group spec: " + spec);
}

RootDatum load_custom_datum(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open datum file " + path);
  nlohmann::json j;
  try {
    in >> j;
    return RootDatum(j.value("name", "custom:" + path), j.at("rank").get<std::size_t>(),
                     j.at("roots").get<IntMat>(), j.at("coroots").get<IntMat>(),
                     j.at("simple").get<std::vector<std::size_t>>(), IsogenyTag::Custom);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("malformed datum file " + path + ": " + e.what());
  }
}

std::vector<std::string> catalog_specs() {
  return {"GL(1)", "GL(2)", "GL(3)", "GL(4)", "SL(2)", "SL(3)", "SL(4)", "PGL(2)", "PGL(3)", "PGL(4)",
          "Sp(2)", "Sp(4)", "Sp(6)", "SO(3)", "SO(4)", "SO(5)", "SO(6)", "SO(7)", "SO(8)", "G2",
          "A4",    "B3",    "C3",    "D4",    "D5"};
}

}  // namespace crys
