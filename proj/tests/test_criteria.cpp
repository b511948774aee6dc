#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "homolab/module_checks.hpp"
#include "homolab/session.hpp"
#include "oracle.hpp"

using namespace homolab;

namespace {

using Float = boost::multiprecision::cpp_bin_float_50;

RingInvariants asserted(std::uint64_t e, std::uint64_t c, std::uint64_t ell, std::uint64_t tau,
                        std::uint64_t mu2 = 0) {
  return asserted_invariants({{"e", e}, {"c", c}, {"ell", ell}, {"tau", tau}, {"mu2", mu2}});
}

struct Certs {
  Certificate tv, ar;
};

Certs certify(const RingInvariants& inv, TriState def = TriState::Unknown, std::vector<std::string> flags = {},
              std::optional<TorAlgebraClass> cls = std::nullopt) {
  auto gg = gg_evidence(inv, flags);
  auto tv = certify_trivial_vanishing(inv, gg, def, cls);
  return {tv, certify_auslander_reiten(inv, gg, tv)};
}

Certs certify_ring(const AlgebraPtr& a) {
  auto inv = ring_invariants(*a);
  std::optional<TorAlgebraClass> cls;
  if (inv.c == 3) cls = classify_codim3(a);
  return certify(inv, detect_embedded_deformation(inv, cls), {}, cls);
}

}  // namespace

TEST(FirstInequality, Values) {
  auto b = rhs_first_inequality(2, 3);
  EXPECT_EQ(b.exact(), "(13 - sqrt(25))/2");
  EXPECT_TRUE(b.equals(4));
  EXPECT_FALSE(b.exceeds(4));
  EXPECT_TRUE(b.exceeds(3));
  auto b54 = rhs_first_inequality(5, 4);
  EXPECT_GT(b54.value(), 9.8);
  EXPECT_LT(b54.value(), 9.9);
  EXPECT_TRUE(b54.exceeds(9));
  EXPECT_FALSE(b54.exceeds(10));
  auto b43 = rhs_first_inequality(4, 3);
  EXPECT_GT(b43.value(), 7.25);
  EXPECT_LT(b43.value(), 7.35);
  EXPECT_TRUE(b43.exceeds(7));
  EXPECT_FALSE(b43.exceeds(8));
  EXPECT_EQ(b43.decimal(2), "7.30");
  EXPECT_THROW(rhs_first_inequality(-1, 3), Error);
}

// Oracle: 50-digit binary floating point agrees with the integer decision
// everywhere on a grid, including the exact-equality cases.
TEST(FirstInequalityProperty, IntegerDecisionMatchesHighPrecision) {
  int equalities = 0;
  for (std::int64_t c = 0; c <= 40; ++c)
    for (std::int64_t ell = 1; ell <= 12; ++ell) {
      auto b = rhs_first_inequality(c, ell);
      Float bound = (Float(4 * c + 2 * ell - 1) - boost::multiprecision::sqrt(Float(8 * c + 4 * ell - 3))) / 2;
      for (std::int64_t e = 0; e <= 200; ++e) {
        const bool eq = b.equals(e);
        equalities += eq;
        if (eq) {
          EXPECT_LT(boost::multiprecision::abs(bound - e), Float("1e-40"));
          EXPECT_FALSE(b.exceeds(e));
        } else {
          EXPECT_EQ(b.exceeds(e), Float(e) < bound) << c << " " << ell << " " << e;
        }
      }
    }
  EXPECT_GT(equalities, 0);
}

TEST(TrivialVanishing, CodimTwoCompleteIntersection) {
  auto cert = certify_ring(make_algebra(101, {"x", "y"}, {"x^2", "y^2"})).tv;
  EXPECT_EQ(cert.verdict, Verdict::NotTrivialVanishing);
  EXPECT_EQ(cert.rule, "tv.embedded_deformation");
  EXPECT_EQ(cert.witnesses.at("embedded_deformation"), "Yes");
}

TEST(TrivialVanishing, SwRing) {
  auto cert = certify_ring(make_algebra(101, {"x", "y", "z"}, {"x^2", "x*y", "y^2", "z^2"})).tv;
  EXPECT_EQ(cert.verdict, Verdict::NotTrivialVanishing);
  EXPECT_EQ(cert.rule, "tv.embedded_deformation");
  EXPECT_EQ(cert.witnesses.at("tor_algebra_class"), "H(3,2)");
  ASSERT_EQ(cert.annotations.size(), 1u);
  EXPECT_NE(cert.annotations[0].find("6 <= 6"), std::string::npos);
  EXPECT_NE(cert.annotations[0].find("6 > 5"), std::string::npos);
}

TEST(TrivialVanishing, PositiveRules) {
  auto cubic = certify_ring(make_algebra(101, {"x"}, {"x^3"})).tv;
  EXPECT_EQ(cubic.verdict, Verdict::TrivialVanishing);
  EXPECT_EQ(cubic.rule, "tv.codim_le_1");
  auto pf = certify_ring(make_algebra(101, {"x", "y", "z"}, {"x*y", "x*z", "y*z", "x^2 - y^2", "y^2 - z^2"})).tv;
  EXPECT_EQ(pf.verdict, Verdict::TrivialVanishing);
  EXPECT_EQ(pf.rule, "tv.codim_3");
  auto golod2 = certify_ring(make_algebra(101, {"x", "y"}, {"x^2", "x*y", "y^2"})).tv;
  EXPECT_EQ(golod2.verdict, Verdict::TrivialVanishing);
  EXPECT_EQ(golod2.rule, "tv.codim_2");
}

TEST(TrivialVanishing, AssertedGorensteinCodimSix) {
  auto c = certify(asserted(12, 6, 4, 1, 4));
  EXPECT_EQ(c.tv.verdict, Verdict::TrivialVanishing);
  EXPECT_EQ(c.tv.rule, "tv.generalized_golod");
  EXPECT_EQ(c.tv.witnesses.at("comparison"), "12 <= 12");
  EXPECT_EQ(c.tv.witnesses.at("generalized_golod"), "gorenstein_m4_mu2_le_4");
}

TEST(TrivialVanishing, NecessityOutranksSufficiency) {
  // e = 3 < bound would certify TV, but a detected deformation wins.
  auto inv = asserted(3, 2, 2, 1);
  auto c = certify(inv, TriState::Yes);
  EXPECT_EQ(c.tv.verdict, Verdict::NotTrivialVanishing);
  bool flagged = false;
  for (const auto& cv : c.tv.caveats) flagged = flagged || cv.find("contradictory input") != std::string::npos;
  EXPECT_TRUE(flagged);
}

TEST(TrivialVanishing, UnknownFlagRejected) { EXPECT_THROW(gg_evidence(asserted(10, 5, 3, 2), {"bogus"}), Error); }

TEST(TrivialVanishing, AssertedFlagUsedAndEchoed) {
  auto c = certify(asserted(12, 6, 4, 3), TriState::Unknown, {"huneke_ulrich"});
  EXPECT_EQ(c.tv.verdict, Verdict::TrivialVanishing);
  EXPECT_EQ(c.tv.rule, "tv.generalized_golod");
  ASSERT_FALSE(c.tv.assumptions.empty());
  EXPECT_NE(c.tv.assumptions[0].find("huneke_ulrich"), std::string::npos);
}

TEST(AuslanderReiten, Examples) {
  auto a = certify(asserted(8, 4, 3, 2));
  EXPECT_EQ(a.ar.verdict, Verdict::ARholds);
  auto g = certify(asserted(11, 5, 4, 1));
  EXPECT_EQ(g.ar.verdict, Verdict::UAC);
  EXPECT_EQ(g.ar.witnesses.at("ar_holds"), "true");
  auto n = certify(asserted(12, 5, 4, 2));
  EXPECT_EQ(n.tv.verdict, Verdict::Inconclusive);
  EXPECT_EQ(n.ar.verdict, Verdict::Inconclusive);
  EXPECT_EQ(n.ar.witnesses.at("ar_holds"), "unknown");
  auto e8 = certify(asserted(8, 3, 4, 2));
  EXPECT_EQ(e8.ar.verdict, Verdict::UAC);
}

// Property over a grid of asserted invariants: same input same certificate;
// TV implies UAC; a UAC or ARholds verdict always carries ar_holds = true;
// rule ids come from the fixed vocabulary.
TEST(CertificateProperty, LadderGrid) {
  const std::set<std::string> tv_rules = {"tv.codim_le_1",     "tv.embedded_deformation", "tv.codim_2",
                                          "tv.codim_3",        "tv.first_inequality",     "tv.generalized_golod",
                                          "tv.stretched",      "tv.low_multiplicity",     "tv.none"};
  for (std::uint64_t c = 1; c <= 7; ++c)
    for (std::uint64_t ell = 2; ell <= 5; ++ell)
      for (std::uint64_t e = c + ell - 1; e <= 20; ++e)
        for (std::uint64_t tau : {1u, 2u})
          for (auto def : {TriState::Yes, TriState::No, TriState::Unknown}) {
            auto inv = asserted(e, c, ell, tau, 3);
            auto x = certify(inv, def), y = certify(inv, def);
            EXPECT_EQ(x.tv, y.tv);
            EXPECT_EQ(x.ar, y.ar);
            EXPECT_TRUE(tv_rules.count(x.tv.rule)) << x.tv.rule;
            if (x.tv.verdict == Verdict::TrivialVanishing) EXPECT_EQ(x.ar.verdict, Verdict::UAC);
            if (c >= 2 && def == TriState::Yes) EXPECT_EQ(x.tv.verdict, Verdict::NotTrivialVanishing);
            if (x.ar.verdict != Verdict::Inconclusive) EXPECT_EQ(x.ar.witnesses.at("ar_holds"), "true");
            if (c == 1) EXPECT_EQ(x.tv.verdict, Verdict::TrivialVanishing);
            for (const auto& ann : x.tv.annotations) EXPECT_LE(e, 2 * c + ell - 3) << ann;
          }
}

TEST(GorensteinTests, WorkedExamples) {
  auto ci2 = testutil::load("ci2.alg");
  auto mx = gorenstein_tests(ci2.algebra, ci2.module("Mx"));
  EXPECT_EQ(mx.verdict, Verdict::GorensteinPredicted);
  EXPECT_EQ(mx.rule, "gor.generically_gorenstein");
  EXPECT_EQ(mx.witnesses.at("ulrich_index"), "2");
  EXPECT_EQ(mx.witnesses.at("tau_check"), "tau = 1");

  auto sw = testutil::load("sw.alg");
  auto mxy = gorenstein_tests(sw.algebra, sw.module("Mxy"));
  EXPECT_EQ(mxy.verdict, Verdict::NotApplicable);
  EXPECT_NE(mxy.citation.find("tau = 1"), std::string::npos);
  ASSERT_EQ(mxy.annotations.size(), 1u);
  EXPECT_NE(mxy.annotations[0].find("beta_1(omega) = 3"), std::string::npos);

  // A is self-injective, so Ext^1(k, A) = 0 (dense oracle below) and both
  // routes apply: the prediction is Gorenstein, which is correct.
  oracle::Ring R(ci2.algebra);
  auto ores = oracle::resolve(R, oracle::from_graded(R, ci2.module("k")), 2);
  EXPECT_EQ(oracle::ext(R, ores, oracle::from_graded(R, ci2.module("A")), 2)[1], 0u);
  auto k = gorenstein_tests(ci2.algebra, ci2.module("k"));
  EXPECT_EQ(k.witnesses.at("ext1_M_A"), "0");
  EXPECT_EQ(k.verdict, Verdict::GorensteinPredicted);
  EXPECT_EQ(k.rule, "gor.ulrich_lt_2");
}

TEST(GorensteinTests, NoTheoremViolationOnFixtures) {
  for (const auto& name : testutil::ring_fixtures()) {
    auto f = testutil::load(name);
    std::vector<std::string> mods = {"k", "A", "omega"};
    for (const auto& m : f.session.modules) mods.push_back(m.name);
    for (const auto& m : mods) {
      auto cert = gorenstein_tests(f.algebra, f.module(m));
      if (cert.witnesses.count("tau_check")) EXPECT_EQ(cert.witnesses.at("tau_check"), "tau = 1") << name << " " << m;
    }
  }
}

TEST(GrowthBounds, SwResidueField) {
  auto b = betti_table_from_totals({1, 3, 7, 15, 31, 63});
  auto inv = ring_invariants(*make_algebra(101, {"x", "y", "z"}, {"x^2", "x*y", "y^2", "z^2"}));
  auto checks = verify_growth_bounds(b, inv);
  ASSERT_EQ(checks.size(), 2u);
  EXPECT_TRUE(checks[0].ok());
  EXPECT_TRUE(checks[1].ok());
  EXPECT_EQ(checks[0].first_index, 2);
  EXPECT_EQ(checks[0].checked(), 4u);
  // a table that breaks the first bound is reported
  auto bad = verify_growth_bounds(betti_table_from_totals({1, 3, 7, 1}), inv);
  EXPECT_FALSE(bad[0].ok());
  EXPECT_THROW(verify_growth_bounds(betti_table_from_totals({3, 4, 5}), inv), Error);
}

TEST(GrowthBounds, AllFixtureModules) {
  for (const auto& name : testutil::ring_fixtures()) {
    auto f = testutil::load(name);
    auto inv = ring_invariants(*f.algebra);
    std::vector<std::string> mods = {"k", "A", "omega"};
    for (const auto& m : f.session.modules) mods.push_back(m.name);
    for (const auto& m : mods) {
      auto b = betti_table(resolve(f.module(m), {.steps = 8}));
      if (b.steps < std::max<int>(2, b.total(0) + 1)) continue;
      for (const auto& c : verify_growth_bounds(b, inv)) EXPECT_TRUE(c.ok()) << name << " " << m << " " << c.name;
    }
  }
}

TEST(Fkcom, TorIndependentPair) {
  auto ci2 = testutil::load("ci2.alg");
  auto mx = ci2.module("Mx"), my = ci2.module("My");
  auto bm = betti_table(resolve(mx, {.steps = 10})), bn = betti_table(resolve(my, {.steps = 10}));
  auto torp = tor(mx, my, 0, 9);
  auto inv = ring_invariants(*ci2.algebra);
  auto r = verify_fkcom(bm, bn, torp, inv);
  EXPECT_EQ(r.lr_m, 1);
  EXPECT_EQ(r.lr_n, 1);
  EXPECT_TRUE(r.product_bound);
  EXPECT_TRUE(r.second_bound);
  auto k = ci2.module("k");
  EXPECT_THROW(verify_fkcom(bm, bm, tor(k, k, 0, 5), inv), Error);
  EXPECT_TRUE(tor_vanishing_betti_violations(torp, bn, ulrich_index(mx)).empty());
}

TEST(FirstBetti, FullLengthModules) {
  auto sw = testutil::load("sw.alg");
  auto w = sw.module("omega");
  auto b = betti_table(resolve(w, {.steps = 2}));
  EXPECT_EQ(b.total(0), 2u);
  auto check = first_betti_check(w, b);
  ASSERT_TRUE(check);
  EXPECT_TRUE(*check);
  EXPECT_FALSE(first_betti_check(sw.module("A"), betti_table(resolve(sw.module("A"), {.steps = 2}))));
  EXPECT_FALSE(first_betti_check(sw.module("k"), betti_table(resolve(sw.module("k"), {.steps = 2}))));
}
