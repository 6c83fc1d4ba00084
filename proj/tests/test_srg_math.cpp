#include <gtest/gtest.h>

#include "support.hpp"

using namespace srgb;

TEST(Spectrum, Srg2401) {
  const auto sp = spectrum({2401, 240, 59, 20});
  EXPECT_EQ(sp.discriminant, 2401);
  EXPECT_EQ(sp.sqrt_discriminant, 49);
  EXPECT_EQ(sp.r, 44);
  EXPECT_EQ(sp.s, -5);
  EXPECT_EQ(sp.f, 240);
}

TEST(Spectrum, LargerFamilies) {
  EXPECT_EQ(spectrum({416, 100, 36, 20}).f, 65);
  EXPECT_EQ(spectrum({31671, 3510, 693, 351}).f, 782);
  EXPECT_EQ(spectrum({10, 3, 0, 1}).f, 5);
}

TEST(Spectrum, ConferenceAndInvalidInputs) {
  EXPECT_THROW(spectrum({5, 2, 0, 1}), ConferenceCase);
  EXPECT_THROW(spectrum({13, 6, 2, 3}), ConferenceCase);
  EXPECT_THROW(spectrum({10, 3, 0, 2}), InvalidArgument);
  EXPECT_THROW(spectrum({5, 4, 3, 0}), InvalidArgument);
  EXPECT_THROW(spectrum({0, 0, 0, 0}), InvalidArgument);
}

TEST(Spectrum, TraceAndGramIdentities) {
  for (const auto &s : oracle::small_srg_corpus()) {
    SCOPED_TRACE(s.name);
    const auto &p = s.params;
    const auto sp = spectrum(p);
    const auto g = p.v - 1 - sp.f;
    EXPECT_EQ(sp.f, s.f);
    EXPECT_EQ(p.k + sp.f * sp.r + g * sp.s, 0);
    EXPECT_LT(sp.s, 0);
    const auto gram = gram_entries(p, sp);
    EXPECT_EQ(gram.diag, sp.s * sp.s + p.k);
    EXPECT_EQ(gram.adj, p.lambda - 2 * sp.s);
    EXPECT_EQ(gram.non, p.mu);
    const auto d2 = distance_squares(p, sp);
    EXPECT_EQ(d2.adj, 2 * (gram.diag - gram.adj));
    EXPECT_EQ(d2.non, 2 * (gram.diag - gram.non));
    EXPECT_LT(d2.adj, d2.non);
  }
}

TEST(Spectrum, MatchesNumericEigenvalues) {
  for (const auto &s : oracle::small_srg_corpus()) {
    SCOPED_TRACE(s.name);
    const auto sp = spectrum(s.params);
    const auto ev = oracle::numeric_eigenvalues(s.graph);
    const auto f = static_cast<std::size_t>(sp.f);
    const auto g = static_cast<std::size_t>(s.params.v - 1 - sp.f);
    EXPECT_EQ(oracle::count_near(ev, static_cast<double>(sp.r)), f + (sp.r == s.params.k ? 1 : 0));
    EXPECT_EQ(oracle::count_near(ev, static_cast<double>(sp.s)), g);
    EXPECT_NEAR(ev.front(), static_cast<double>(sp.s), 1e-6);
  }
}

TEST(Spectrum, ComplementSwapsMultiplicities) {
  for (const auto &s : oracle::small_srg_corpus()) {
    if (s.params.k >= s.params.v - 1)
      continue;
    SCOPED_TRACE(s.name);
    const auto cp = verify_srg(complement(s.graph)).params;
    const auto sp = spectrum(s.params), csp = spectrum(cp);
    EXPECT_EQ(csp.r, -1 - sp.s);
    EXPECT_EQ(csp.s, -1 - sp.r);
    EXPECT_EQ(csp.f, s.params.v - 1 - sp.f);
  }
}
