#include <gtest/gtest.h>

#include "support.hpp"

using namespace srgb;

TEST(EuclideanRep, PetersenDistances) {
  const EuclideanRep rep(families::petersen());
  EXPECT_EQ(rep.spectrum().s, -2);
  EXPECT_EQ(rep.dist2().adj, 6);
  EXPECT_EQ(rep.dist2().non, 12);
  const auto report = verify_two_distance(rep);
  EXPECT_EQ(report.pairs_checked, 45u);
  EXPECT_EQ(report.adjacent_pairs, 15u);
}

TEST(EuclideanRep, RejectsNonSrgAndComplete) {
  EXPECT_THROW(EuclideanRep(families::cycle(6)), NotStronglyRegular);
  EXPECT_THROW(EuclideanRep(families::complete(4)), InvalidArgument);
  EXPECT_THROW(EuclideanRep(families::paley(13, false)), ConferenceCase);
}

TEST(EuclideanRep, GramClosedFormsMatchEntrywise) {
  for (const auto &s : oracle::small_srg_corpus()) {
    SCOPED_TRACE(s.name);
    const EuclideanRep rep(s.graph);
    const auto y = rep.shifted();
    const auto n = static_cast<Vertex>(rep.vertex_count());
    for (Vertex i = 0; i < n; ++i) {
      const auto yi = rep.rep_vector(i);
      for (Vertex j = i; j < std::min<Vertex>(n, i + 7); ++j) {
        const auto yj = rep.rep_vector(j);
        EXPECT_EQ(dot(yi, yj), rep.gram_value(i, j));
        EXPECT_EQ(y.gram_value(i, j), rep.gram_value(i, j));
      }
    }
    EXPECT_EQ(verify_two_distance(rep).pairs_checked, static_cast<std::uint64_t>(n) * (n - 1) / 2);
  }
}

TEST(EuclideanRep, SampledPairsAreDeterministic) {
  const EuclideanRep rep(families::paley(7, true));
  const auto a = verify_two_distance(rep, {500, 42});
  const auto b = verify_two_distance(rep, {500, 42});
  EXPECT_EQ(a.pairs_checked, 500u);
  EXPECT_EQ(a.adjacent_pairs, b.adjacent_pairs);
}

TEST(EuclideanRep, WrongParamsGiveMismatchWitness) {
  // Trusting wrong parameters: Clebsch labelled with the 4×4 rook parameters.
  const EuclideanRep rep(families::clebsch(), SrgParams{16, 6, 2, 2});
  EXPECT_THROW(verify_two_distance(rep), MismatchWitness);
}

TEST(AffineDim, WholeVertexSetEqualsMultiplicity) {
  for (const auto &s : oracle::small_srg_corpus()) {
    SCOPED_TRACE(s.name);
    const EuclideanRep rep(s.graph);
    const auto all = s.graph.all_vertices();
    EXPECT_EQ(static_cast<std::int64_t>(affine_dim_exact(rep, all)), s.f);
    EXPECT_EQ(static_cast<std::int64_t>(affine_dim_lower_mod_p(rep, all)), s.f);
  }
}

TEST(AffineDim, SmallSetsAndBudget) {
  const EuclideanRep rep(families::petersen());
  EXPECT_EQ(affine_dim_exact(rep, VertexSet::from_unsorted({3})), 0u);
  EXPECT_EQ(affine_dim_exact(rep, VertexSet::from_unsorted({0, 5})), 1u);
  EXPECT_THROW(affine_dim_exact(rep, VertexSet{}), InvalidArgument);
  EXPECT_THROW(affine_dim_exact(rep, rep.graph().all_vertices(), 5), BudgetExceeded);
}

TEST(DropCertificate, NonNeighbourhoodDropsStrictly) {
  for (const auto &s : oracle::small_srg_corpus()) {
    SCOPED_TRACE(s.name);
    const EuclideanRep rep(s.graph);
    const auto all = s.graph.all_vertices();
    for (Vertex a : {Vertex{0}, static_cast<Vertex>(s.graph.vertex_count() - 1)}) {
      const auto cert = non_neighbourhood_certificate(rep, a, all);
      const auto check = check_drop_certificate(rep, cert);
      ASSERT_TRUE(check.accepted) << check.reason;
      if (!cert.inner.empty()) {
        EXPECT_LT(affine_dim_exact(rep, cert.inner), affine_dim_exact(rep, cert.outer));
      }
    }
  }
}

TEST(DropCertificate, RejectionsNameTheFailure) {
  const EuclideanRep rep(families::petersen());
  auto cert = non_neighbourhood_certificate(rep, 0, rep.graph().all_vertices());
  auto bad = cert;
  bad.c += 1;
  auto r = check_drop_certificate(rep, bad);
  EXPECT_FALSE(r.accepted);
  ASSERT_TRUE(r.failing.has_value());
  EXPECT_TRUE(cert.inner.contains(*r.failing));

  bad = cert;
  bad.witness = cert.inner[0];
  r = check_drop_certificate(rep, bad);
  EXPECT_FALSE(r.accepted);
  EXPECT_EQ(r.failing, std::optional<Vertex>(cert.inner[0]));

  bad = cert;
  bad.x.pop_back();
  EXPECT_FALSE(check_drop_certificate(rep, bad).accepted);

  bad = cert;
  bad.outer = cert.inner;
  EXPECT_FALSE(check_drop_certificate(rep, bad).accepted);
}

TEST(Srg2401, SampledTwoDistance) {
  auto b = build_srg2401();
  const EuclideanRep rep(std::move(b.graph), srg2401_params);
  EXPECT_EQ(rep.dist2().adj, 392);
  EXPECT_EQ(rep.dist2().non, 490);
  const auto report = verify_two_distance(rep, {20000, 5});
  EXPECT_EQ(report.pairs_checked, 20000u);
  EXPECT_GT(report.adjacent_pairs, 0u);
}

TEST(Srg2401, NonNeighbourhoodCertificate) {
  auto b = build_srg2401();
  const EuclideanRep rep(std::move(b.graph), srg2401_params);
  const auto cert = non_neighbourhood_certificate(rep, 0, rep.graph().all_vertices());
  EXPECT_EQ(cert.inner.size(), 2160u);
  EXPECT_TRUE(check_drop_certificate(rep, cert).accepted);
}
