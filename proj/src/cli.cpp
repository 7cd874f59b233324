#include "crys/cli.hpp"

#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "crys/acceptance.hpp"
#include "crys/errors.hpp"
#include "crys/flrange.hpp"
#include "crys/loopgr.hpp"
#include "crys/monodromy.hpp"
#include "crys/schubert.hpp"
#include "crys/series.hpp"

namespace crys {

namespace {

using nlohmann::json;

IntVec parse_ints(const std::string& block) {
  IntVec v;
  std::stringstream ss(block);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    std::int64_t x = 0;
    try {
      x = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw UsageError("malformed coweight entry '" + tok + "'");
    }
    if (tok.find_first_not_of(" \t", used) != std::string::npos)
      throw UsageError("malformed coweight entry '" + tok + "'");
    v.push_back(x);
  }
  if (v.empty()) throw UsageError("empty coweight block");
  return v;
}

std::vector<IntVec> parse_blocks(const std::string& text) {
  if (text.empty()) throw UsageError("missing coweight (use a1,a2,...;b1,b2,...)");
  std::vector<IntVec> out;
  std::stringstream ss(text);
  std::string block;
  while (std::getline(ss, block, ';')) out.push_back(parse_ints(block));
  return out;
}

json coweights_json(const MultiCoweight& mu) {
  json a = json::array();
  for (const auto& c : mu.per_embedding) a.push_back(c.coords);
  return a;
}

json matrix_json(const LoopMatrix& M) {
  json rows = json::array();
  for (std::size_t i = 0; i < M.n(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < M.n(); ++j) row.push_back(M.at(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

std::uint32_t prime_arg(std::int64_t p) {
  if (!is_prime(p) || p > 1'000'003) throw UsageError("p must be a prime, got " + std::to_string(p));
  return static_cast<std::uint32_t>(p);
}

RootDatum need_group(const RunConfig& c) {
  if (c.group.empty()) throw UsageError("--group is required");
  return build_root_datum(c.group);
}

Coweight single(const RootDatum& d, const std::string& text, const char* what) {
  MultiCoweight m = parse_mu(d, text);
  if (m.size() != 1) throw UsageError(std::string(what) + " must have a single embedding here");
  return m.per_embedding[0];
}

// Frobenius matrices from --instance, or diagonal u^cbar in GL coordinates.
FrobeniusInstance frobenius_input(const RunConfig& c) {
  if (!c.instance.empty()) return load_frobenius_instance(c.instance);
  if (c.cbar.empty()) throw UsageError("give --instance or --cbar");
  FrobeniusInstance inst;
  inst.group = c.group.empty() ? "" : c.group;
  inst.q = prime_arg(c.p);
  for (const auto& e : parse_blocks(c.cbar)) inst.matrices.push_back(LoopMatrix::diagonal_monomial(inst.q, e));
  if (inst.group.empty()) inst.group = "GL(" + std::to_string(inst.matrices[0].n()) + ")";
  return inst;
}

int cmd_group_info(const RunConfig& c, RecordWriter& w) {
  const RootDatum d = need_group(c);
  w.emit("group", {{"name", d.name()},
                   {"rank", d.rank()},
                   {"semisimple_rank", d.semisimple_rank()},
                   {"isogeny", to_string(d.tag())},
                   {"positive_roots", d.positive_indices().size()},
                   {"dim", d.dim_group()},
                   {"derived_pi1_order", d.semisimple_rank() ? d.derived_fundamental_group_order() : 1},
                   {"derived_center_order", d.semisimple_rank() ? d.derived_center_order() : 1},
                   {"simply_connected", d.is_simply_connected()},
                   {"cartan_matrix", d.cartan_matrix()}});
  for (auto s : d.simple_indices())
    w.emit("simple_root", {{"root", d.roots()[s]}, {"coroot", d.coroots()[s]}});
  return 0;
}

int cmd_flcheck(const RunConfig& c, RecordWriter& w) {
  const RootDatum d = need_group(c);
  const MultiCoweight mu = parse_mu(d, c.mu);
  const FLReport r = check_fl(d, mu, c.p);
  json f = {{"group", d.name()}, {"mu", coweights_json(mu)},   {"p", c.p},
            {"h_mu", r.h_mu},    {"fl", r.is_fl},              {"strongly_fl", r.is_strongly_fl},
            {"certificate", r.uniqueness_certificate}};
  if (r.min_pairing_m) f["min_pairing"] = *r.min_pairing_m;
  w.emit("flcheck", f);
  for (const auto& x : r.fl_witnesses)
    w.emit("fl_witness", {{"embedding", x.embedding}, {"root", d.roots()[x.root]}, {"pairing", x.pairing}});
  for (const auto& x : r.strong_witnesses)
    w.emit("strong_witness", {{"embedding", x.embedding}, {"root", d.roots()[x.root]}, {"pairing", x.pairing}});
  return 0;
}

int cmd_minuscule(const RunConfig& c, RecordWriter& w) {
  const RootDatum d = need_group(c);
  if (d.semisimple_rank() == 0) {
    w.emit("minuscule_summary", {{"group", d.name()}, {"count", 0}});
    return 0;
  }
  const auto per = min_dominant_pairing_per_component(d);
  w.emit("pairing_bound", {{"group", d.name()}, {"per_component", per}, {"min", min_dominant_pairing(d)}});
  for (const auto& v : dominant_hilbert_basis(d)) w.emit("hilbert_basis", {{"pairings", v}});
  const auto m = minuscule_coweights(d);
  for (const auto& l : m) w.emit("minuscule", {{"coweight", l.coords}});
  w.emit("minuscule_summary", {{"group", d.name()}, {"count", m.size()}});
  return 0;
}

int cmd_certificate(const RunConfig& c, RecordWriter& w) {
  const RootDatum d = need_group(c);
  const MultiCoweight mu = parse_mu(d, c.mu);
  const FLReport r = check_fl(d, mu, c.p);
  json f = {{"group", d.name()},
            {"mu", coweights_json(mu)},
            {"p", c.p},
            {"h_mu", r.h_mu},
            {"simply_connected", d.is_simply_connected()},
            {"certificate", r.uniqueness_certificate}};
  if (r.min_pairing_m) f["min_pairing"] = *r.min_pairing_m;
  w.emit("certificate", f);
  return 0;
}

int cmd_dimcheck(const RunConfig& c, RecordWriter& w) {
  const RootDatum d = need_group(c);
  const MultiCoweight mu = parse_mu(d, c.mu), mp = parse_mu(d, c.mu_prime);
  const auto r = dimension_comparison(d, mu, mp);
  w.emit("dimcheck", {{"group", d.name()},
                      {"mu", coweights_json(mu)},
                      {"mu_prime", coweights_json(mp)},
                      {"dim_mu", r.dim_mu},
                      {"dim_mu_prime", r.dim_mu_prime},
                      {"ordering", r.ordering},
                      {"lift_obstruction", r.lift_obstruction},
                      {"deformation_dim", r.deformation_dim}});
  return 0;
}

json basis_json(const RootDatum& d, const BasisElement& b) {
  if (b.key.kind == ComponentKey::Kind::Torus) return {{"torus", b.key.index}, {"degree", b.degree}};
  return {{"root", d.roots()[b.key.index]}, {"degree", b.degree}};
}

int cmd_schubert_tangent(const RunConfig& c, RecordWriter& w) {
  const RootDatum d = need_group(c);
  const Coweight mu = single(d, c.mu, "--mu");
  const Coweight mp = c.mu_prime.empty() ? mu : single(d, c.mu_prime, "--mu-prime");
  const auto up = ts_upper_bound(d, mu, mp, c.p);
  const auto cut = monodromy_cut(d, up.space, mp, c.p);
  std::size_t expected = 0;
  for (auto a : d.positive_indices())
    if (d.pairing(mp, a) > 0) ++expected;
  for (const auto& b : up.space.basis) {
    json f = basis_json(d, b);
    f["in_cut"] = cut.contains(b);
    w.emit("tangent_basis", f);
  }
  json s = {{"group", d.name()},      {"mu", mu.coords},          {"mu_prime", mp.coords},
            {"p", c.p},               {"dim_upper", up.space.dim()}, {"dim_cut", cut.dim()},
            {"dim_expected", expected}, {"hypothesis_ok", up.hypothesis_ok}};
  if (!up.warning.empty()) s["warning"] = up.warning;
  w.emit("schubert_tangent", s);
  return cut.dim() == expected ? 0 : 1;
}

int cmd_nabla_smooth(const RunConfig& c, RecordWriter& w) {
  const RootDatum d = need_group(c);
  const Coweight mu = single(d, c.mu, "--mu");
  const NablaReport r = verify_nabla_smoothness(d, mu, c.p);
  for (const auto& row : r.strata)
    w.emit("stratum", {{"mu_prime", row.mu_prime.coords},
                       {"dim_cut", row.dim_cut},
                       {"dim_expected", row.dim_expected},
                       {"pass", row.pass}});
  w.emit("nabla_smooth", {{"group", d.name()},
                          {"mu", mu.coords},
                          {"p", c.p},
                          {"hypotheses_hold", r.hypotheses_hold},
                          {"violations", r.violations},
                          {"all_pass", r.all_pass},
                          {"smooth_certified", r.smooth_certified}});
  return r.all_pass ? 0 : 1;
}

json certificate_json(const ValuationCertificate& v) {
  json f = {{"certified", v.certified}, {"D_used", v.D_used}};
  if (v.zero)
    f["valuation"] = "inf";
  else
    f["valuation"] = v.value;
  return f;
}

int cmd_lambda(const RunConfig& c, RecordWriter& w) {
  const std::uint32_t p = prime_arg(c.p);
  if (c.D < 1) throw UsageError("--D must be >= 1");
  const TruncSeries f = phi_lambda_series(p, c.i, c.D);
  for (std::int64_t n = 0; n <= c.D; ++n) {
    const mpq_class a = f.coeff(n);
    if (a != 0) w.emit("coeff", {{"n", n}, {"value", a.get_str()}});
  }
  json s = {{"p", p}, {"i", c.i}, {"D", c.D}};
  try {
    s["at_p"] = certificate_json(valuation_certify([&](std::int64_t D) { return phi_lambda_series(p, c.i, D); }, 0));
  } catch (const PrecisionError& e) {
    s["at_p"] = {{"certified", false}, {"reason", e.what()}};
  }
  w.emit("lambda", s);
  return 0;
}

int cmd_zvals(const RunConfig& c, RecordWriter& w) {
  const std::uint32_t p = prime_arg(c.p);
  if (c.h < 1) throw UsageError("--height must be >= 1");
  auto make = [&](std::int64_t D) { return z_series(c.i, p, c.h, D); };
  bool ok = true;
  for (unsigned n = 0; n <= c.n_max; ++n) {
    json row = {{"i", c.i}, {"h", c.h}, {"n", n}};
    ValuationCertificate v;
    try {
      v = valuation_certify(make, n);
      row.update(certificate_json(v));
    } catch (const PrecisionError&) {
      row["certified"] = false;
    }
    if (c.i == 0 && n < p) {
      const std::int64_t want = n == 0 ? 0 : (n == 1 ? -1 : static_cast<std::int64_t>(p) - n);
      row["expected"] = want;
      row["pass"] = v.certified && !v.zero && v.value == want;
      ok = ok && row["pass"].get<bool>();
    } else if (c.i > 0 && n == 0) {
      std::int64_t pi = 1;
      for (unsigned t = 0; t < c.i; ++t) pi *= p;
      const std::int64_t claim = pi - static_cast<std::int64_t>(c.i * (c.h - 1)) - 1;
      const auto lb = certify_lower_bound(make, 0, claim);
      row["lower_bound"] = claim;
      row["pass"] = lb.certified;
      ok = ok && lb.certified;
    }
    w.emit("zval", row);
  }
  return ok ? 0 : 1;
}

int cmd_telescope(const RunConfig& c, RecordWriter& w) {
  const std::uint32_t p = prime_arg(c.p);
  if (c.n < 1) throw UsageError("--n must be >= 1");
  std::mt19937_64 rng(c.seed);
  bool ok = true;
  for (std::size_t s = 0; s < c.count; ++s) {
    const CartanInstance inst = random_cartan_instance(rng, c.n, p, c.h_max);
    const auto rep = telescope_check(inst.matrix(), inst.h, c.i_max, c.D);
    for (const auto& row : rep.rows)
      w.emit("telescope_row", {{"instance", s},
                               {"mu", inst.mu},
                               {"h", inst.h},
                               {"i", row.i},
                               {"compared_degree", row.compared_degree},
                               {"mismatches", row.mismatches}});
    ok = ok && rep.pass;
  }
  w.emit("telescope", {{"p", p}, {"D", c.D}, {"count", c.count}, {"pass", ok}});
  return ok ? 0 : 1;
}

int cmd_modp_mono(const RunConfig& c, RecordWriter& w) {
  const FrobeniusInstance inst = frobenius_input(c);
  bool ok = true;
  for (std::size_t s = 0; s < inst.matrices.size(); ++s) {
    const auto rep = modp_monodromy_check(inst.matrices[s]);
    for (const auto& d : rep.defects)
      w.emit("pole", {{"embedding", s}, {"row", d.row}, {"col", d.col}, {"pole_order", d.pole_order}});
    const auto v = modp_l1_vanishing_order(inst.matrices[s], c.h);
    json f = {{"embedding", s}, {"pass", rep.pass}, {"h", c.h}};
    if (v == LaurentPoly::kInfiniteValuation)
      f["l1_vanishing_order"] = "inf";
    else
      f["l1_vanishing_order"] = v;
    w.emit("modp_mono", f);
    ok = ok && rep.pass;
  }
  return ok ? 0 : 1;
}

int cmd_shape(const RunConfig& c, RecordWriter& w) {
  const FrobeniusInstance inst = frobenius_input(c);
  std::size_t n = 0;
  const LoopGroup g = parse_loop_group(inst.group, &n);
  for (const auto& M : inst.matrices)
    if (M.n() != n) throw UsageError("matrix size does not match " + inst.group);
  const MultiCoweight sh = shape(inst.matrices, g);
  for (std::size_t s = 0; s < sh.size(); ++s)
    w.emit("shape", {{"embedding", s},
                     {"elementary_divisors", elementary_divisors(inst.matrices[s])},
                     {"shape", sh.per_embedding[s].coords}});
  return 0;
}

IntVec random_dominant(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntVec v(n);
  for (auto& x : v) x = d(rng);
  std::sort(v.rbegin(), v.rend());
  return v;
}

int cmd_cartan_test(const RunConfig& c, RecordWriter& w) {
  const std::uint32_t p = prime_arg(c.p);
  if (c.n < 1 || c.n > 4) throw UsageError("--n must be in [1, 4]");
  std::mt19937_64 rng(c.seed);
  const RootDatum gl = loop_group_datum(LoopGroup::GL, c.n);
  const bool fixed = !c.mu.empty();
  IntVec l0, w0;
  if (fixed) {
    l0 = single(gl, c.mu, "--mu").coords;
    w0 = c.mu_prime.empty() ? l0 : single(gl, c.mu_prime, "--mu-prime").coords;
  }
  CartanStats prod, three, inv, snf;
  auto add = [](CartanStats& a, const CartanStats& b) {
    a.samples += b.samples;
    a.failures += b.failures;
    a.shapes.insert(b.shapes.begin(), b.shapes.end());
  };
  for (std::size_t s = 0; s < c.samples; ++s) {
    const IntVec l = fixed ? l0 : random_dominant(rng, c.n, -2, 2);
    const IntVec o = fixed ? w0 : random_dominant(rng, c.n, -2, 2);
    const IntVec v = random_dominant(rng, c.n, -1, 1);
    add(prod, cartan_product_check(l, o, p, 1, rng));
    add(three, three_coset_check(l, o, v, p, 1, rng));
    add(inv, inverse_and_phi_check(l, p, 1, rng));
    add(snf, snf_invariance_check(o, p, 1, rng));
  }
  bool ok = true;
  for (const auto& [name, st] : std::vector<std::pair<std::string, const CartanStats*>>{
           {"product", &prod}, {"three_cosets", &three}, {"inverse_phi", &inv}, {"snf_invariance", &snf}}) {
    json f = {{"check", name}, {"samples", st->samples}, {"failures", st->failures}};
    if (fixed && name == "product") f["shapes"] = st->shapes;
    w.emit("cartan", f);
    ok = ok && st->failures == 0;
  }
  return ok ? 0 : 1;
}

int cmd_kisin_variety(const RunConfig& c, RecordWriter& w) {
  FrobeniusInstance inst = frobenius_input(c);
  std::size_t n = 0;
  KisinQuery q;
  q.group = parse_loop_group(inst.group, &n);
  q.cbar = inst.matrices;
  q.k = c.k;
  if (inst.k && c.k == RunConfig{}.k) q.k = *inst.k;
  q.budget = c.budget;
  const RootDatum d = loop_group_datum(q.group, n);
  const std::string mu_text = !c.mu.empty() ? c.mu : inst.mu.value_or("");
  q.mu = parse_mu(d, mu_text);
  const KisinResult res = kisin_variety_points(q);
  for (const auto& cls : res.classes) {
    json bases = json::array();
    for (const auto& b : cls.basis) bases.push_back(matrix_json(b));
    w.emit("lattice", {{"basis", bases}, {"shape", coweights_json(cls.shape)}});
  }
  const bool cert = uniqueness_certificate(d, q.mu, inst.q);
  const bool consistent = !cert || res.classes.size() <= 1;
  w.emit("kisin_variety", {{"group", inst.group},
                           {"q", inst.q},
                           {"mu", coweights_json(q.mu)},
                           {"k", q.k},
                           {"classes", res.classes.size()},
                           {"candidates", res.candidates},
                           {"lower_bound", res.lower_bound},
                           {"certificate", cert},
                           {"consistent", consistent}});
  return consistent ? 0 : 1;
}

int cmd_accept(const RunConfig& c, RecordWriter& w, std::ostream& out) {
  bool ok = true;
  run_acceptance(c.seed, [&](const CriterionResult& r) {
    if (w.format() == OutputFormat::Table)
      out << format_result_line(r) << std::endl;
    else
      w.emit("criterion", {{"id", r.id},
                           {"name", r.name},
                           {"pass", r.pass},
                           {"detail", r.detail},
                           {"seconds", r.seconds},
                           {"time_limit", r.time_limit}});
    ok = ok && r.pass;
  });
  return ok ? 0 : 1;
}

}  // namespace

MultiCoweight parse_mu(const RootDatum& datum, const std::string& text) {
  MultiCoweight mu;
  for (const auto& block : parse_blocks(text)) mu.per_embedding.push_back(datum.coweight_from_input(block));
  return mu;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  RecordWriter w(out, cfg.format);
  try {
    if (cfg.format == OutputFormat::Records) w.emit("config", run_config_to_json(cfg));
    const std::string& s = cfg.subcommand;
    if (s == "group-info") return cmd_group_info(cfg, w);
    if (s == "flcheck") return cmd_flcheck(cfg, w);
    if (s == "minuscule") return cmd_minuscule(cfg, w);
    if (s == "certificate") return cmd_certificate(cfg, w);
    if (s == "dimcheck") return cmd_dimcheck(cfg, w);
    if (s == "schubert-tangent") return cmd_schubert_tangent(cfg, w);
    if (s == "nabla-smooth") return cmd_nabla_smooth(cfg, w);
    if (s == "lambda") return cmd_lambda(cfg, w);
    if (s == "zvals") return cmd_zvals(cfg, w);
    if (s == "telescope") return cmd_telescope(cfg, w);
    if (s == "modp-mono") return cmd_modp_mono(cfg, w);
    if (s == "shape") return cmd_shape(cfg, w);
    if (s == "cartan-test") return cmd_cartan_test(cfg, w);
    if (s == "kisin-variety") return cmd_kisin_variety(cfg, w);
    if (s == "accept") return cmd_accept(cfg, w, out);
    throw UsageError("unknown subcommand '" + s + "'");
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
  } catch (const InvalidDatum& e) {
    err << "invalid root datum: " << e.what() << '\n';
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << '\n';
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
  } catch (const PrecisionError& e) {
    err << "precision: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"crys: root data, Fontaine-Laffaille ranges, monodromy series and loop-group lattices"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  std::string format = "table";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "records"}));
  app.add_option("--seed", cfg.seed, "Seed for randomized trials");

  auto group = [&](CLI::App* s) { s->add_option("--group", cfg.group, "Group spec, e.g. GL(3), PGL(2), G2"); };
  auto mu = [&](CLI::App* s) { s->add_option("--mu", cfg.mu, "Coweight per embedding: a1,a2;b1,b2"); };
  auto mup = [&](CLI::App* s) { s->add_option("--mu-prime", cfg.mu_prime, "Second coweight, same syntax"); };
  auto prime = [&](CLI::App* s) { s->add_option("--p", cfg.p, "Prime")->capture_default_str(); };
  auto frob = [&](CLI::App* s) {
    s->add_option("--instance", cfg.instance, "Frobenius instance file (JSON)");
    s->add_option("--cbar", cfg.cbar, "Diagonal Frobenius exponents instead of --instance");
  };

  auto* gi = app.add_subcommand("group-info", "Root datum summary");
  group(gi);
  auto* fl = app.add_subcommand("flcheck", "Fontaine-Laffaille range check");
  group(fl), mu(fl), prime(fl);
  auto* mi = app.add_subcommand("minuscule", "Minuscule coweights and pairing bounds");
  group(mi);
  auto* ce = app.add_subcommand("certificate", "Kisin-lattice uniqueness certificate");
  group(ce), mu(ce), prime(ce);
  auto* dc = app.add_subcommand("dimcheck", "Compare dim of flag varieties for mu and mu'");
  group(dc), mu(dc), mup(dc);
  auto* st = app.add_subcommand("schubert-tangent", "Tangent space upper bound and its monodromy cut");
  group(st), mu(st), mup(st), prime(st);
  auto* ns = app.add_subcommand("nabla-smooth", "Check every stratum mu' <= mu");
  group(ns), mu(ns), prime(ns);
  auto* la = app.add_subcommand("lambda", "Coefficients of phi^i(lambda)");
  prime(la);
  la->add_option("--D", cfg.D, "Truncation degree")->capture_default_str();
  la->add_option("--i", cfg.i, "Frobenius power")->capture_default_str();
  auto* zv = app.add_subcommand("zvals", "p-adic valuations of z_i and its derivatives at u = p");
  prime(zv);
  zv->add_option("--n-max", cfg.n_max, "Highest derivative")->capture_default_str();
  zv->add_option("--i", cfg.i, "Index i of z_i")->capture_default_str();
  zv->add_option("--height", cfg.h, "Height h")->capture_default_str();
  auto* te = app.add_subcommand("telescope", "Telescoping identity on random instances");
  prime(te);
  te->add_option("--D", cfg.D, "Truncation degree")->capture_default_str();
  te->add_option("--i-max", cfg.i_max, "Largest i")->capture_default_str();
  te->add_option("--count", cfg.count, "Number of instances")->capture_default_str();
  te->add_option("--n", cfg.n, "Matrix size")->capture_default_str();
  te->add_option("--h-max", cfg.h_max, "Height bound of the random coweights")->capture_default_str();
  auto* mm = app.add_subcommand("modp-mono", "Mod-p monodromy condition");
  group(mm), prime(mm), frob(mm);
  mm->add_option("--height", cfg.h, "Height used for the L1 vanishing order")->capture_default_str();
  auto* sh = app.add_subcommand("shape", "Elementary divisors and shape of Frobenius matrices");
  group(sh), prime(sh), frob(sh);
  auto* ct = app.add_subcommand("cartan-test", "Randomized Cartan decomposition properties");
  prime(ct), mu(ct), mup(ct);
  ct->add_option("--n", cfg.n, "Matrix size")->capture_default_str();
  ct->add_option("--samples", cfg.samples, "Trials")->capture_default_str();
  auto* kv = app.add_subcommand("kisin-variety", "Enumerate lattices of type <= mu (n = 2)");
  group(kv), mu(kv), prime(kv), frob(kv);
  kv->add_option("--k", cfg.k, "Window: u^k std <= D <= u^-k std")->capture_default_str();
  kv->add_option("--budget", cfg.budget, "Candidate budget")->capture_default_str();
  app.add_subcommand("accept", "Run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  cfg.format = format == "records" ? OutputFormat::Records : OutputFormat::Table;
  return run(cfg, out, err);
}

}  // namespace crys
