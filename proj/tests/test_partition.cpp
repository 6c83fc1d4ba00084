#include <gtest/gtest.h>

#include "support.hpp"

using namespace srgb;

namespace {

const std::vector<std::array<std::size_t, 4>> &profiles() {
  static const std::vector<std::array<std::size_t, 4>> p{
      {1, 1, 1, 0}, {1, 1, 1, 5}, {3, 3, 3, 6}, {2, 5, 3, 8}, {6, 2, 4, 10}, {4, 4, 1, 12}, {7, 7, 7, 3}};
  return p;
}

PlantedOptions options_for(std::size_t profile, std::uint64_t seed) {
  PlantedOptions o;
  o.sizes = profiles()[profile % profiles().size()];
  const auto smallest = std::min({o.sizes[0], o.sizes[1], o.sizes[2]});
  o.d_max = seed % (smallest + 1);
  o.d_min = o.d_max / 2;
  o.intra_permille = static_cast<std::uint32_t>(100 * (seed % 8));
  return o;
}

} // namespace

TEST(Partition, ExamplesAndWitnesses) {
  // Path 0-1-2 with C = {1}: vertex 1 sees B1 = {0}, B3 = {2} but nothing of B2 = {3}.
  const auto g = Graph::from_edges(4, {{0, 1}, {1, 2}});
  RegularPartition p{VertexSet::from_unsorted({0}), VertexSet::from_unsorted({3}), VertexSet::from_unsorted({2}),
                     VertexSet::from_unsorted({1})};
  try {
    verify_partition(g, p);
    FAIL();
  } catch (const Condition2Violated &e) {
    EXPECT_EQ(e.vertex, 1u);
    EXPECT_EQ(e.counts, (std::array<std::size_t, 3>{1, 0, 1}));
  }
  RegularPartition q{VertexSet::from_unsorted({0}), VertexSet::from_unsorted({1}), VertexSet::from_unsorted({2}),
                     VertexSet::from_unsorted({3})};
  try {
    verify_partition(g, q);
    FAIL();
  } catch (const Condition1Violated &e) {
    EXPECT_EQ(e.a, 0u);
    EXPECT_EQ(e.b, 1u);
  }
  RegularPartition missing{VertexSet::from_unsorted({0}), VertexSet::from_unsorted({1}),
                           VertexSet::from_unsorted({2}), VertexSet{}};
  EXPECT_THROW(verify_partition(g, missing), NotAPartition);
  RegularPartition twice{VertexSet::from_unsorted({0}), VertexSet::from_unsorted({0}), VertexSet::from_unsorted({2}),
                         VertexSet::from_unsorted({1, 3})};
  EXPECT_THROW(verify_partition(g, twice), NotAPartition);
}

TEST(Partition, FourVertexInstance) {
  // B1 = {1}, B2 = {2}, B3 = {3}, C = {4}; vertex 4 sees each block once.
  const auto g = Graph::from_edges(4, {{3, 0}, {3, 1}, {3, 2}});
  const RegularPartition p{VertexSet::from_unsorted({0}), VertexSet::from_unsorted({1}), VertexSet::from_unsorted({2}),
                           VertexSet::from_unsorted({3})};
  verify_partition(g, p);
  EXPECT_EQ(p_vector(p, 4), (std::vector<std::int64_t>{1, -1, 0, 0}));
  EXPECT_EQ(q_vector(p, 4), (std::vector<std::int64_t>{1, 1, -2, 0}));
  const ShiftedAdjacency y(g, -1);
  const auto pv = p_vector(p, 4), qv = q_vector(p, 4);
  EXPECT_EQ(y.inner(pv, 0), 1);
  EXPECT_EQ(y.inner(pv, 1), -1);
  EXPECT_EQ(y.inner(pv, 2), 0);
  EXPECT_EQ(y.inner(pv, 3), 0);
  EXPECT_EQ(y.inner(qv, 3), 0);
  case_check(g, p, -1);

  const auto d = derive_subsets(g.all_vertices(), p, 4);
  EXPECT_EQ(d.z_odd, VertexSet::from_unsorted({2, 3}));
  EXPECT_EQ(d.z_even, VertexSet::from_unsorted({3}));
  EXPECT_EQ(derive_subsets(p.c, p, 4).failed(), std::optional<PreconditionSide>(PreconditionSide::b3));

  const auto r = rounds_driver(g, {p}, -1);
  ASSERT_EQ(r.rounds.size(), 1u);
  EXPECT_EQ(r.rounds[0].z_prev_size, 4u);
  EXPECT_EQ(r.rounds[0].z_odd.size(), 2u);
  EXPECT_EQ(r.rounds[0].z_even.size(), 1u);
  EXPECT_TRUE(r.rounds[0].odd_certified && r.rounds[0].even_certified);

  const auto g12 = Graph::from_edges(4, {{3, 0}, {3, 1}, {3, 2}, {0, 1}});
  EXPECT_THROW(verify_partition(g12, p), Condition1Violated);
  const auto g43 = Graph::from_edges(4, {{3, 0}, {3, 1}});
  EXPECT_THROW(verify_partition(g43, p), Condition2Violated);
}

TEST(Partition, TwoStackedPartitionsOnTwelveVertices) {
  const auto inst = generate_stacked(12, 2, 1, 6);
  ASSERT_EQ(inst.graph.vertex_count(), 12u);
  const auto r = rounds_driver(inst.graph, inst.partitions, -1);
  ASSERT_FALSE(r.halted.has_value()) << *r.halted;
  std::size_t certificates = 0, prev = 12;
  for (const auto &st : r.rounds) {
    certificates += (st.odd_certified ? 1 : 0) + (st.even_certified ? 1 : 0);
    EXPECT_LT(st.z_odd.size(), prev);
    EXPECT_LT(st.z_even.size(), st.z_odd.size());
    prev = st.z_even.size();
  }
  EXPECT_EQ(certificates, 4u);
}

TEST(Partition, PlantedSpecificSeed) {
  PlantedOptions o;
  o.sizes = {3, 3, 3, 6};
  const auto one = generate_planted(1, o);
  verify_partition(one.graph, one.partition);
  o.sizes = {1, 1, 1, 1};
  o.d_min = o.d_max = 1;
  const auto four = generate_planted(3, o);
  EXPECT_EQ(four.graph.edge_count(), 3u);
  EXPECT_EQ(four.partition.c.size(), 1u);
}

TEST(Partition, PlantedInstancesPassEveryCheck) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    SCOPED_TRACE(seed);
    const auto inst = generate_planted(seed, options_for(seed, seed));
    const auto &g = inst.graph;
    verify_partition(g, inst.partition);
    for (std::int64_t s = -1; s >= -5; --s) {
      EXPECT_EQ(case_check(g, inst.partition, s).vertices_checked, g.vertex_count());
      const auto d = derive_subsets(g.all_vertices(), inst.partition, g.vertex_count());
      ASSERT_FALSE(d.failed());
      const ShiftedAdjacency y(g, s);
      EXPECT_TRUE(check_drop_certificate(y, *d.p_certificate).accepted);
      EXPECT_TRUE(check_drop_certificate(y, *d.q_certificate).accepted);
      EXPECT_EQ(d.z_even, inst.partition.c);
      EXPECT_TRUE(d.odd_strict);
      EXPECT_TRUE(d.even_strict);
    }
  }
}

TEST(Partition, PlantedIsDeterministicPerSeed) {
  const auto a = generate_planted(99, options_for(3, 99));
  const auto b = generate_planted(99, options_for(3, 99));
  EXPECT_EQ(a.graph, b.graph);
  EXPECT_EQ(a.partition.c, b.partition.c);
  const auto c = generate_planted(100, options_for(3, 99));
  EXPECT_FALSE(a.graph == c.graph && a.partition.b1 == c.partition.b1);
}

TEST(Partition, PlantedRejectsInfeasiblePolicy) {
  PlantedOptions o;
  o.sizes = {2, 3, 3, 4};
  o.d_max = 3;
  EXPECT_THROW(generate_planted(1, o), InvalidArgument);
  o.sizes = {0, 3, 3, 4};
  o.d_max = 0;
  EXPECT_THROW(generate_planted(1, o), InvalidArgument);
}

TEST(Partition, CaseCheckNeedsNegativeShift) {
  const auto inst = generate_planted(5, {});
  EXPECT_THROW(case_check(inst.graph, inst.partition, 0), InvalidArgument);
}

TEST(Partition, CertifiedDropsLowerExactAffineDimension) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    SCOPED_TRACE(seed);
    const auto inst = generate_planted(seed, options_for(seed + 2, seed));
    const ShiftedAdjacency y(inst.graph, -static_cast<std::int64_t>(1 + seed % 5));
    const auto all = inst.graph.all_vertices();
    const auto d = derive_subsets(all, inst.partition, inst.graph.vertex_count());
    const auto d0 = affine_dim_exact(y, all);
    const auto d1 = affine_dim_exact(y, d.z_odd);
    EXPECT_LT(d1, d0);
    if (!d.z_even.empty()) {
      EXPECT_LT(affine_dim_exact(y, d.z_even), d1);
    }
  }
}

TEST(Partition, PreconditionFailuresAreReported) {
  const auto inst = generate_planted(8, options_for(2, 8));
  const auto &p = inst.partition;
  // Z already inside B3 ∪ C: the first drop has no witness.
  auto d = derive_subsets(set_union(p.b3, p.c), p, inst.graph.vertex_count());
  EXPECT_EQ(d.failed(), std::optional<PreconditionSide>(PreconditionSide::b1_b2));
  EXPECT_TRUE(d.q_certificate.has_value());
  EXPECT_FALSE(d.odd_strict);
  d = derive_subsets(set_union(p.b1, p.c), p, inst.graph.vertex_count());
  EXPECT_EQ(d.failed(), std::optional<PreconditionSide>(PreconditionSide::b3));
}

TEST(Partition, RenumberPutsLargestIntersectionLast) {
  const std::array<VertexSet, 3> comps{VertexSet::from_unsorted({0, 1, 2}), VertexSet::from_unsorted({3}),
                                       VertexSet::from_unsorted({4, 5})};
  const auto z = VertexSet::range(0, 6);
  EXPECT_EQ(renumber_for_max(z, comps), (std::array<int, 3>{1, 2, 0}));
  // Ties go to the smallest index.
  const std::array<VertexSet, 3> tied{VertexSet::from_unsorted({0}), VertexSet::from_unsorted({1, 2}),
                                      VertexSet::from_unsorted({3, 4})};
  EXPECT_EQ(renumber_for_max(z, tied), (std::array<int, 3>{0, 2, 1}));
  // Swapping the two non-chosen components does not change the choice.
  const std::array<VertexSet, 3> swapped{comps[0], comps[2], comps[1]};
  EXPECT_EQ(renumber_for_max(z, swapped)[2], 0);
}

TEST(Partition, RenumberingMaximizesOddSubset) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 50; ++t) {
    const auto inst = generate_planted(static_cast<std::uint64_t>(t) + 300, options_for(static_cast<std::size_t>(t), 7));
    const auto &p = inst.partition;
    std::vector<Vertex> pick;
    for (Vertex v = 0; v < inst.graph.vertex_count(); ++v)
      if (uniform_below(rng, 2))
        pick.push_back(v);
    const auto z = VertexSet::from_unsorted(pick);
    const std::array<VertexSet, 3> comps{p.b1, p.b2, p.b3};
    const auto order = renumber_for_max(z, comps);
    const auto chosen = set_intersection(z, set_union(comps[static_cast<std::size_t>(order[2])], p.c)).size();
    for (const auto &b : comps)
      EXPECT_GE(chosen, set_intersection(z, set_union(b, p.c)).size());
  }
}

TEST(Partition, RoundsDriverOnStackedPartitions) {
  const auto inst = generate_stacked(17, 3, 2, 6);
  for (const auto &p : inst.partitions)
    verify_partition(inst.graph, p);
  const auto r = rounds_driver(inst.graph, inst.partitions, -2, 40);
  ASSERT_FALSE(r.halted) << *r.halted;
  ASSERT_EQ(r.rounds.size(), 3u);
  std::size_t prev = inst.graph.vertex_count();
  for (const auto &st : r.rounds) {
    EXPECT_TRUE(st.odd_certified);
    EXPECT_TRUE(st.even_certified);
    EXPECT_LT(st.z_odd.size(), prev);
    EXPECT_LT(st.z_even.size(), st.z_odd.size());
    prev = st.z_even.size();
  }
  EXPECT_EQ(*r.rounds.back().even_dim_bound, 34);
  // Exact dimensions follow the bounds' decrements.
  const ShiftedAdjacency y(inst.graph, -2);
  auto dim = affine_dim_exact(y, inst.graph.all_vertices());
  for (const auto &st : r.rounds) {
    const auto d1 = affine_dim_exact(y, st.z_odd);
    const auto d2 = affine_dim_exact(y, st.z_even);
    EXPECT_LT(d1, dim);
    EXPECT_LT(d2, d1);
    dim = d2;
  }
}

TEST(Partition, RoundsDriverHaltsWhenAPreconditionFails) {
  const auto inst = generate_stacked(3, 2, 2, 4);
  // Reusing the same partition twice: after one round Z lies inside its C.
  const auto r = rounds_driver(inst.graph, {inst.partitions[0], inst.partitions[0]}, -1);
  ASSERT_TRUE(r.halted.has_value());
  EXPECT_EQ(r.rounds.size(), 2u);
  EXPECT_FALSE(r.rounds[1].odd_certified);
}

TEST(Partition, BruteForcePartitionsOfSmallSrgs) {
  using oracle::NamedSrg;
  for (const auto &s : oracle::small_srg_corpus()) {
    if (s.graph.vertex_count() > 10)
      continue;
    SCOPED_TRACE(s.name);
    const EuclideanRep rep(s.graph);
    const auto sp = rep.spectrum();
    const auto found = oracle::all_regular_partitions(s.graph);
    for (const auto &p : found) {
      verify_partition(s.graph, p);
      case_check(s.graph, p, sp.s);
      const auto d = derive_subsets(s.graph.all_vertices(), p, s.graph.vertex_count());
      ASSERT_FALSE(d.failed());
      EXPECT_TRUE(check_drop_certificate(rep, *d.p_certificate).accepted);
      EXPECT_TRUE(check_drop_certificate(rep, *d.q_certificate).accepted);
      const auto d0 = affine_dim_exact(rep, s.graph.all_vertices());
      const auto d1 = affine_dim_exact(rep, d.z_odd);
      EXPECT_LT(d1, d0);
      if (!d.z_even.empty()) {
        EXPECT_LT(affine_dim_exact(rep, d.z_even), d1);
      }
    }
  }
}

TEST(Partition, VerifyAgreesWithBruteForceOnRandomLabellings) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 300; ++t) {
    const auto g = oracle::random_graph(rng, 8, static_cast<std::uint32_t>(uniform_below(rng, 600)));
    const auto all = oracle::all_regular_partitions(g);
    std::array<std::vector<Vertex>, 4> parts;
    for (Vertex v = 0; v < 8; ++v)
      parts[uniform_below(rng, 4)].push_back(v);
    if (parts[0].empty() || parts[1].empty() || parts[2].empty())
      continue;
    std::sort(parts.begin(), parts.begin() + 3, [](const auto &a, const auto &b) { return a.front() < b.front(); });
    const RegularPartition p{VertexSet::from_unsorted(parts[0]), VertexSet::from_unsorted(parts[1]),
                             VertexSet::from_unsorted(parts[2]), VertexSet::from_unsorted(parts[3])};
    bool accepted = true;
    try {
      verify_partition(g, p);
    } catch (const Error &) {
      accepted = false;
    }
    const bool listed = std::any_of(all.begin(), all.end(), [&](const RegularPartition &q) {
      return q.b1 == p.b1 && q.b2 == p.b2 && q.b3 == p.b3 && q.c == p.c;
    });
    EXPECT_EQ(accepted, listed);
  }
}

TEST(Partition, Valencies) {
  const auto inst = generate_stacked(2, 1, 3, 0, 1000);
  // With no free vertices C is empty, each block is a triangle.
  verify_valencies(inst.graph, inst.partitions[0], {2, std::nullopt});
  EXPECT_THROW(verify_valencies(inst.graph, inst.partitions[0], {1, std::nullopt}), Error);
  EXPECT_TRUE(valencies_consistent(30, 5, 10, 10, 10));
  EXPECT_FALSE(valencies_consistent(30, 5, 10, 10, 9));
}

TEST(Partition, SizeReplay) {
  const std::vector<std::int64_t> sizes{29511, 28431, 26487, 25515, 23571, 22599};
  const auto r = replay_sizes(31671, 782, sizes);
  ASSERT_EQ(r.size(), 6u);
  EXPECT_EQ(r.front().dim_bound, 781);
  EXPECT_EQ(r.back().dim_bound, 776);
  EXPECT_THROW(replay_sizes(100, 10, {90, 90}), Error);
  EXPECT_EQ(round_sizes({5, 2, 7}, 10), (std::pair<std::int64_t, std::int64_t>{17, 10}));
}
