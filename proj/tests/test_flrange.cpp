#include <gtest/gtest.h>

#include <limits>

#include "crys/errors.hpp"
#include "crys/flrange.hpp"

using namespace crys;

namespace {

MultiCoweight single(const IntVec& v) { return {{Coweight{v}}}; }

// Brute-force oracle: scan lambda in [-4,4]^rank, keep dominant noncentral ones,
// and minimize the pairing with each component's highest root.
std::vector<std::int64_t> min_pairing_by_box(const RootDatum& d) {
  std::vector<std::int64_t> best(d.components().size(), std::numeric_limits<std::int64_t>::max());
  const std::size_t n = d.rank();
  IntVec v(n, -4);
  for (;;) {
    Coweight l{v};
    if (d.is_dominant(l))
      for (std::size_t c = 0; c < d.components().size(); ++c) {
        bool touches = false;
        for (auto pos : d.components()[c]) touches |= d.pairing(l, d.simple_indices()[pos]) != 0;
        if (touches) best[c] = std::min(best[c], d.pairing(l, d.highest_root(c)));
      }
    std::size_t i = 0;
    while (i < n && v[i] == 4) v[i++] = -4;
    if (i == n) break;
    ++v[i];
  }
  return best;
}

}  // namespace

TEST(FLRange, PGL2BoundaryExample) {
  auto gl2 = build_root_datum("GL(2)");
  auto r = check_fl(gl2, single({2, 0}), 5);
  EXPECT_TRUE(r.is_fl);
  EXPECT_FALSE(r.is_strongly_fl);
  EXPECT_FALSE(r.strong_witnesses.empty());
  auto pgl2 = build_root_datum("PGL(2)");
  auto q = check_fl(pgl2, single({2}), 5);
  EXPECT_TRUE(q.is_fl);
  EXPECT_FALSE(q.is_strongly_fl);
  EXPECT_EQ(q.min_pairing_m, 1);
  EXPECT_FALSE(q.uniqueness_certificate);
}

TEST(FLRange, ZeroIsAlwaysInRange) {
  for (std::int64_t p : {2, 3, 5, 7}) {
    auto r = check_fl(build_root_datum("Sp(4)"), single({0, 0}), p);
    EXPECT_TRUE(r.is_fl);
    EXPECT_TRUE(r.is_strongly_fl);
    EXPECT_TRUE(r.uniqueness_certificate);
  }
}

TEST(FLRange, Sp4NotFL) {
  auto r = check_fl(build_root_datum("Sp(4)"), single({2, 1}), 5);
  EXPECT_EQ(r.h_mu, 4);
  EXPECT_FALSE(r.is_fl);
  ASSERT_FALSE(r.fl_witnesses.empty());
  EXPECT_EQ(r.fl_witnesses[0].pairing, 4);
}

TEST(FLRange, StronglyImpliesFLAndCertificateInvariant) {
  for (const auto& spec : catalog_specs()) {
    auto d = build_root_datum(spec);
    for (std::int64_t p : {2, 3, 5, 7, 11})
      for (const auto& mu : d.dominant_coweights_mod_center(p)) {
        auto r = check_fl(d, {{mu}}, p);
        if (r.is_strongly_fl) EXPECT_TRUE(r.is_fl);
        if (r.min_pairing_m)
          EXPECT_EQ(r.uniqueness_certificate, (p - 1) * *r.min_pairing_m > 2 * r.h_mu);
      }
  }
  EXPECT_THROW(check_fl(build_root_datum("GL(2)"), single({1, 0}), 9), PreconditionError);
}

TEST(FLRange, MinPairingExamples) {
  EXPECT_EQ(min_dominant_pairing(build_root_datum("SL(2)")), 2);
  EXPECT_EQ(min_dominant_pairing(build_root_datum("PGL(2)")), 1);
  for (int n = 2; n <= 4; ++n) EXPECT_EQ(min_dominant_pairing(build_root_datum("GL(" + std::to_string(n) + ")")), 1);
  EXPECT_THROW(min_dominant_pairing(build_root_datum("GL(1)")), PreconditionError);
}

TEST(FLRange, HilbertBasisMatchesBoxOracle) {
  for (const auto& spec : catalog_specs()) {
    auto d = build_root_datum(spec);
    if (d.semisimple_rank() == 0) continue;
    SCOPED_TRACE(spec);
    EXPECT_EQ(min_dominant_pairing_per_component(d), min_pairing_by_box(d));
  }
}

TEST(FLRange, HilbertBasisOfSL3) {
  // sc A2: pairing vectors form the Cartan lattice, index 3 in Z^2.
  auto hb = dominant_hilbert_basis(build_root_datum("SL(3)"));
  EXPECT_EQ(hb, (std::vector<IntVec>{{0, 3}, {1, 1}, {3, 0}}));
}

TEST(FLRange, MinusculeCoweights) {
  EXPECT_TRUE(minuscule_coweights(build_root_datum("SL(2)")).empty());
  auto pgl2 = build_root_datum("PGL(2)");
  auto m = minuscule_coweights(pgl2);
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(pgl2.pairing(m[0], pgl2.highest_root()), 1);
  for (const auto& spec : catalog_specs()) {
    auto d = build_root_datum(spec);
    SCOPED_TRACE(spec);
    if (d.is_simply_connected()) EXPECT_TRUE(minuscule_coweights(d).empty());
  }
  for (const auto& spec : {"PGL(2)", "PGL(3)", "PGL(4)", "SO(4)", "SO(6)", "SO(8)"})
    EXPECT_FALSE(minuscule_coweights(build_root_datum(spec)).empty()) << spec;
  for (int n = 1; n <= 3; ++n)
    EXPECT_TRUE(minuscule_coweights(build_root_datum("Sp(" + std::to_string(2 * n) + ")")).empty());
}

TEST(FLRange, CertificateExamples) {
  EXPECT_TRUE(uniqueness_certificate(build_root_datum("Sp(4)"), single({1, 0}), 7));
  for (std::int64_t p : {5, 7, 11}) {
    auto pgl2 = build_root_datum("PGL(2)");
    EXPECT_FALSE(uniqueness_certificate(pgl2, single({(p - 1) / 2}), p));
  }
  EXPECT_TRUE(uniqueness_certificate(build_root_datum("GL(3)"), single({0, 0, 0}), 5));
}

TEST(FLRange, CoweightPairingCases) {
  for (const auto& spec : catalog_specs()) {
    auto d = build_root_datum(spec);
    for (std::int64_t p : {5, 7, 11})
      for (const auto& mu : d.dominant_coweights_mod_center(p - 1)) {
        auto r = check_fl(d, {{mu}}, p);
        if (2 * r.h_mu < p - 1) EXPECT_TRUE(r.uniqueness_certificate) << spec;
        if (d.is_simply_connected() && r.h_mu < p - 1) EXPECT_TRUE(r.uniqueness_certificate) << spec;
      }
  }
}

TEST(FLRange, DimensionComparison) {
  auto gl3 = build_root_datum("GL(3)");
  auto eq = dimension_comparison(gl3, single({2, 1, 0}), single({2, 1, 0}));
  EXPECT_EQ(eq.ordering, 0);
  auto c = dimension_comparison(gl3, single({2, 1, 0}), single({1, 1, 1}));
  EXPECT_EQ(c.dim_mu, 3u);
  EXPECT_EQ(c.dim_mu_prime, 0u);
  EXPECT_TRUE(c.lift_obstruction);
  auto gl2 = build_root_datum("GL(2)");
  for (std::size_t J = 1; J <= 3; ++J) {
    MultiCoweight mu{std::vector<Coweight>(J, Coweight{{1, 0}})};
    EXPECT_EQ(dimension_comparison(gl2, mu, mu).deformation_dim, 4 + J);
  }
  EXPECT_THROW(dimension_comparison(gl3, single({1, 1, 1}), single({2, 1, 0})), PreconditionError);
}
