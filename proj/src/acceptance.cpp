#include "crys/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>

#include "crys/flrange.hpp"
#include "crys/loopgr.hpp"
#include "crys/monodromy.hpp"
#include "crys/rootdatum.hpp"
#include "crys/schubert.hpp"
#include "crys/series.hpp"

namespace crys {

namespace {

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

CriterionResult finish(int id, std::string name, bool ok, std::string detail, const Timer& t, double limit) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  r.seconds = t.seconds();
  r.time_limit = limit;
  r.pass = ok && (limit <= 0 || r.seconds < limit);
  r.detail = std::move(detail);
  if (ok && !r.pass) r.detail += "; over the time limit";
  return r;
}

std::vector<Coweight> box(std::size_t rank, std::int64_t bound) {
  std::vector<Coweight> out;
  IntVec v(rank, -bound);
  for (;;) {
    out.push_back({v});
    std::size_t i = 0;
    while (i < rank && v[i] == bound) v[i++] = -bound;
    if (i == rank) break;
    ++v[i];
  }
  return out;
}

IntVec random_dominant(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntVec v(n);
  for (auto& x : v) x = d(rng);
  std::sort(v.rbegin(), v.rend());
  return v;
}

}  // namespace

CriterionResult accept_monodromy_locus() {
  Timer t;
  std::size_t strata = 0, mismatches = 0, skipped = 0;
  std::string first;
  for (const char* spec : {"GL(2)", "SL(2)", "PGL(2)", "GL(3)", "SL(3)", "Sp(4)", "SO(5)", "G2"}) {
    const RootDatum d = build_root_datum(spec);
    for (std::int64_t p : {3, 5, 7}) {
      if (!center_is_etale(d, p)) {
        ++skipped;
        continue;
      }
      for (const auto& mu : d.dominant_coweights_mod_center(p - 1))
        for (const auto& mp : dominant_below(d, mu)) {
          const auto cut = monodromy_cut(d, ts_upper_bound(d, mu, mp, p).space, mp, p);
          std::size_t expected = 0;
          for (auto a : d.positive_indices())
            if (d.pairing(mp, a) > 0) ++expected;
          ++strata;
          if (cut.dim() != expected) {
            ++mismatches;
            if (first.empty()) first = std::string(spec) + " p=" + std::to_string(p);
          }
        }
    }
  }
  std::ostringstream os;
  os << strata << " strata, " << mismatches << " mismatches, " << skipped << " (group, p) pairs excluded";
  if (!first.empty()) os << "; first at " << first;
  return finish(1, "monodromy-locus smoothness", mismatches == 0 && strata > 0, os.str(), t, 60);
}

CriterionResult accept_valuations() {
  Timer t;
  std::size_t checks = 0, failures = 0;
  auto exact_at_two = [&](const SeriesFactory& make, unsigned n, std::int64_t want) {
    ++checks;
    const auto c = valuation_certify(make, n);
    const auto c2 = valuation_at(make(2 * c.D_used), n);
    if (!c.certified || c.value != want || !c2.certified || c2.value != want) ++failures;
  };
  for (std::uint32_t p : {3u, 5u, 7u}) {
    auto z0 = [p](std::int64_t D) { return z_series(0, p, 1, D); };
    exact_at_two(z0, 0, 0);
    exact_at_two(z0, 1, -1);
    for (unsigned n = 2; n < p; ++n) exact_at_two(z0, n, static_cast<std::int64_t>(p) - n);
    for (unsigned i : {1u, 2u}) exact_at_two([=](std::int64_t D) { return phi_lambda_series(p, i, D); }, 0, 0);
    for (unsigned i : {1u, 2u})
      for (unsigned h : {1u, 2u, 3u}) {
        const std::int64_t pi = i == 1 ? p : static_cast<std::int64_t>(p) * p;
        const std::int64_t claim = pi - static_cast<std::int64_t>(i * (h - 1)) - 1;
        auto make = [=](std::int64_t D) { return z_series(i, p, h, D); };
        ++checks;
        const auto c = certify_lower_bound(make, 0, claim, 16, 2048);
        const auto c2 = certify_lower_bound(make, 0, claim, 2 * c.D_used, 4 * c.D_used);
        if (!c.certified || !c2.certified) ++failures;
      }
  }
  std::ostringstream os;
  os << checks << " valuations certified at two truncations, " << failures << " failures";
  return finish(2, "valuations", failures == 0, os.str(), t, 30);
}

CriterionResult accept_telescoping(std::uint64_t seed) {
  Timer t;
  std::mt19937_64 rng(seed);
  std::size_t mismatches = 0, failed = 0;
  std::int64_t min_degree = 60;
  for (int s = 0; s < 20; ++s) {
    const CartanInstance inst = random_cartan_instance(rng, 2, 5, 3);
    const auto rep = telescope_check(inst.matrix(), inst.h, 3, 60);
    for (const auto& row : rep.rows) {
      mismatches += row.mismatches;
      min_degree = std::min(min_degree, row.compared_degree);
    }
    if (!rep.pass) ++failed;
  }
  std::ostringstream os;
  os << "20 instances, i <= 3, " << mismatches << " mismatched coefficients, " << failed
     << " failing instances, compared through degree >= " << min_degree;
  return finish(3, "telescoping identity", mismatches == 0 && failed == 0 && min_degree >= 0, os.str(), t, 120);
}

CriterionResult accept_integrality(std::uint64_t seed) {
  Timer t;
  std::mt19937_64 rng(seed + 1);
  std::size_t failures = 0;
  const std::uint32_t primes[] = {3, 5, 7};
  for (int s = 0; s < 100; ++s) {
    const CartanInstance inst = random_cartan_instance(rng, s % 2 ? 3 : 2, primes[s % 3], 3);
    try {
      if (!L1(inst.matrix(), inst.h).is_integral()) ++failures;
    } catch (const std::exception&) {
      ++failures;
    }
  }
  std::ostringstream os;
  os << "100 instances (GL2 and GL3), " << failures << " with an E-pole";
  return finish(4, "L1 integrality", failures == 0, os.str(), t, 0);
}

CriterionResult accept_pgl2_lattices() {
  Timer t;
  KisinQuery pgl;
  pgl.cbar = {LoopMatrix::diagonal_monomial(5, {2, 0})};
  pgl.mu.per_embedding = {{{2}}};
  pgl.group = LoopGroup::PGL;
  const std::size_t pgl_count = kisin_variety_points(pgl).classes.size();
  std::size_t gl_max = 0;
  for (std::int64_t a : {1, 2}) {
    KisinQuery gl;
    gl.cbar = {LoopMatrix::diagonal_monomial(7, {a, 0})};
    gl.mu.per_embedding = {{{1, 0}}};
    gl.group = LoopGroup::GL;
    gl_max = std::max(gl_max, kisin_variety_points(gl).classes.size());
  }
  std::ostringstream os;
  os << "PGL2 p=5 mu=(2,0): " << pgl_count << " classes; GL2 p=7 mu=(1,0): at most " << gl_max
     << " class(es); k=1 window";
  return finish(5, "PGL2 two-lattice example", pgl_count >= 2 && gl_max <= 1, os.str(), t, 60);
}

CriterionResult accept_certificate_logic() {
  Timer t;
  std::size_t checked = 0, violations = 0;
  std::string first;
  for (const auto& spec : catalog_specs()) {
    const RootDatum d = build_root_datum(spec);
    for (std::int64_t p : {5, 7})
      for (const auto& mu : d.dominant_coweights_mod_center(2 * (p - 1))) {
        const FLReport r = check_fl(d, {{mu}}, p);
        ++checked;
        const bool bad = (r.is_strongly_fl && !r.uniqueness_certificate) ||
                         (r.is_fl && d.is_simply_connected() && !r.uniqueness_certificate);
        if (bad) {
          ++violations;
          if (first.empty()) first = spec + " p=" + std::to_string(p);
        }
      }
  }
  const RootDatum pgl2 = build_root_datum("PGL(2)");
  for (std::int64_t p : {5, 7}) {
    ++checked;
    if (uniqueness_certificate(pgl2, {{Coweight{{(p - 1) / 2}}}}, p)) ++violations;
  }
  std::ostringstream os;
  os << checked << " (group, p, mu) cases, " << violations << " violations";
  if (!first.empty()) os << "; first at " << first;
  return finish(6, "uniqueness-certificate logic", violations == 0, os.str(), t, 0);
}

CriterionResult accept_cartan(std::uint64_t seed) {
  Timer t;
  std::mt19937_64 rng(seed + 2);
  std::size_t trials = 0, failures = 0;
  for (auto [n, p] : std::vector<std::pair<std::size_t, std::uint32_t>>{{2, 3}, {2, 5}, {3, 3}})
    for (int s = 0; s < 500; ++s) {
      const IntVec l = random_dominant(rng, n, -2, 2), w = random_dominant(rng, n, -2, 2),
                   v = random_dominant(rng, n, -1, 1);
      failures += cartan_product_check(l, w, p, 1, rng).failures;
      failures += three_coset_check(l, w, v, p, 1, rng).failures;
      failures += inverse_and_phi_check(l, p, 1, rng).failures;
      failures += snf_invariance_check(w, p, 1, rng).failures;
      trials += 4;
    }
  std::ostringstream os;
  os << trials << " trials over (n,q) in {(2,3),(2,5),(3,3)}, " << failures << " failures";
  return finish(7, "Cartan property tests", failures == 0, os.str(), t, 120);
}

CriterionResult accept_order_axioms() {
  Timer t;
  std::size_t groups = 0, violations = 0;
  for (const auto& spec : catalog_specs()) {
    const RootDatum d = build_root_datum(spec);
    if (d.rank() > 2) continue;
    ++groups;
    const auto all = box(d.rank(), 3);
    std::vector<Coweight> dom;
    for (const auto& l : all)
      if (d.is_dominant(l)) dom.push_back(l);
    const std::size_t m = dom.size();
    std::vector<char> leq(m * m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) leq[i * m + j] = d.bruhat_leq(dom[i], dom[j]);
    for (std::size_t i = 0; i < m; ++i) {
      if (!leq[i * m + i]) ++violations;
      for (std::size_t j = 0; j < m; ++j) {
        if (i != j && leq[i * m + j] && leq[j * m + i]) ++violations;
        if (!leq[i * m + j]) continue;
        for (std::size_t k = 0; k < m; ++k)
          if (leq[j * m + k] && !leq[i * m + k]) ++violations;
      }
    }
    const auto W = d.weyl_group();
    for (const auto& l : all) {
      const Coweight dc = d.dominant_conjugate(l);
      if (!d.is_dominant(dc)) ++violations;
      for (const auto& w : W)
        if (d.dominant_conjugate(d.apply(w, l)) != dc) ++violations;
    }
  }
  std::ostringstream os;
  os << groups << " groups of rank <= 2, box |.|<=3, " << violations << " violations";
  return finish(8, "order and Weyl axioms", violations == 0 && groups > 0, os.str(), t, 0);
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  const std::vector<std::function<CriterionResult()>> all = {
      [] { return accept_monodromy_locus(); },     [] { return accept_valuations(); },
      [=] { return accept_telescoping(seed); },    [=] { return accept_integrality(seed); },
      [] { return accept_pgl2_lattices(); },       [] { return accept_certificate_logic(); },
      [=] { return accept_cartan(seed); },         [] { return accept_order_axioms(); }};
  std::vector<CriterionResult> out;
  for (const auto& run : all) {
    CriterionResult r;
    try {
      r = run();
    } catch (const std::exception& e) {
      r.id = static_cast<int>(out.size()) + 1;
      r.name = "criterion " + std::to_string(r.id);
      r.pass = false;
      r.detail = std::string("error: ") + e.what();
    }
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_result_line(const CriterionResult& r) {
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.1fs", r.seconds);
  std::string line = std::string(r.pass ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.name + ": " +
                     r.detail + " (" + secs;
  if (r.time_limit > 0) {
    char lim[32];
    std::snprintf(lim, sizeof lim, " of %.0fs", r.time_limit);
    line += lim;
  }
  return line + ")";
}

}  // namespace crys
