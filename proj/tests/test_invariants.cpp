#include <gtest/gtest.h>

#include <random>

#include "homolab/homology.hpp"
#include "homolab/invariants.hpp"
#include "oracle.hpp"

using namespace homolab;

TEST(Invariants, CodimTwoCompleteIntersection) {
  auto inv = ring_invariants(*make_algebra(101, {"x", "y"}, {"x^2", "y^2"}));
  EXPECT_EQ(inv.e, 4u);
  EXPECT_EQ(inv.c, 2u);
  EXPECT_EQ(inv.ell, 3u);
  EXPECT_EQ(inv.tau, 1u);
  EXPECT_EQ(inv.h_vector, (std::vector<std::uint64_t>{1, 2, 1}));
  EXPECT_EQ(inv.mu_I, 2u);
  EXPECT_TRUE(inv.complete_intersection);
  EXPECT_TRUE(inv.gorenstein);
  EXPECT_FALSE(inv.hypersurface);
}

TEST(Invariants, Sw) {
  auto a = make_algebra(101, {"x", "y", "z"}, {"x^2", "x*y", "y^2", "z^2"});
  auto inv = ring_invariants(*a);
  EXPECT_EQ(inv.e, 6u);
  EXPECT_EQ(inv.c, 3u);
  EXPECT_EQ(inv.ell, 3u);
  EXPECT_EQ(inv.tau, 2u);
  EXPECT_EQ(inv.h_vector, (std::vector<std::uint64_t>{1, 3, 2}));
  EXPECT_EQ(inv.mu_I, 4u);
  EXPECT_EQ(inv.mu_m2, 2u);
  EXPECT_FALSE(inv.complete_intersection);
  EXPECT_FALSE(inv.gorenstein);
  std::vector<std::string> socle;
  for (const auto& s : socle_basis(*a)) socle.push_back(a->format(s));
  std::sort(socle.begin(), socle.end());
  EXPECT_EQ(socle, (std::vector<std::string>{"x*z", "y*z"}));
}

TEST(Invariants, StretchedCubic) {
  auto inv = ring_invariants(*make_algebra(101, {"x"}, {"x^3"}));
  EXPECT_EQ(inv.e, 3u);
  EXPECT_EQ(inv.c, 1u);
  EXPECT_EQ(inv.ell, 3u);
  EXPECT_EQ(inv.tau, 1u);
  EXPECT_TRUE(inv.stretched);
  EXPECT_TRUE(inv.hypersurface);
}

TEST(Invariants, GeneratorsHiddenByGroebnerBasis) {
  // Five minimal quadrics; the Groebner basis has extra cubics.
  auto a = make_algebra(101, {"x", "y", "z"}, {"x*y", "x*z", "y*z", "x^2 - y^2", "y^2 - z^2"});
  auto inv = ring_invariants(*a);
  EXPECT_EQ(inv.mu_I, 5u);
  EXPECT_EQ(inv.tau, 1u);
  EXPECT_EQ(inv.e, 5u);
  EXPECT_EQ(ideal_generator_degrees(*a), (std::map<int, std::uint64_t>{{2, 5}}));
  // redundant generators do not count
  auto b = make_algebra(101, {"x", "y"}, {"x^2", "y^2", "x^2*y", "x^2 + y^2"});
  EXPECT_EQ(ring_invariants(*b).mu_I, 2u);
}

// Property over random monomial algebras: h-vector, type and mu_I agree with
// independent computations (dense socle, Bass number, canonical module
// generators, and beta_2(k) - C(c,2)).
TEST(InvariantsProperty, RandomMonomialAlgebras) {
  std::mt19937_64 rng(31337);
  int done = 0;
  while (done < 30) {
    const std::size_t n = 1 + rng() % 3;
    std::vector<std::string> vars, gens;
    const char* names[] = {"x", "y", "z"};
    for (std::size_t v = 0; v < n; ++v) {
      vars.push_back(names[v]);
      gens.push_back(std::string(names[v]) + "^" + std::to_string(2 + rng() % 3));
    }
    for (int extra = static_cast<int>(rng() % 3); extra > 0; --extra) {
      std::string m;
      for (std::size_t v = 0; v < n; ++v)
        if (auto k = rng() % 3) m += (m.empty() ? "" : "*") + std::string(names[v]) + "^" + std::to_string(k);
      if (!m.empty() && m.find('*') != std::string::npos) gens.push_back(m);
    }
    auto a = make_algebra(rng() % 2 ? 2 : 3, vars, gens);
    auto inv = ring_invariants(*a);
    oracle::Ring R(a);
    auto Am = oracle::from_graded(R, GradedModule::free(a, {0}));
    EXPECT_EQ(inv.tau, oracle::socle_dim(Am));
    EXPECT_EQ(inv.tau, canonical_module(a).num_generators());
    EXPECT_EQ(inv.tau, bass_numbers(GradedModule::free(a, {0}), 0).at(0));
    std::uint64_t sum = 0;
    for (auto h : inv.h_vector) sum += h;
    EXPECT_EQ(sum, inv.e);
    EXPECT_EQ(inv.e, a->dim());
    EXPECT_EQ(inv.h_vector.at(0), 1u);
    EXPECT_EQ(inv.ell, inv.h_vector.size());
    auto bk = oracle::resolve(R, oracle::from_graded(R, GradedModule::residue_field(a)), 2).betti;
    EXPECT_EQ(bk[1], inv.c);
    EXPECT_EQ(bk[2], inv.mu_I + inv.c * (inv.c - 1) / 2);
    ++done;
  }
}
