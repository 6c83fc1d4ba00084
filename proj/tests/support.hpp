#ifndef SRGB_TESTS_SUPPORT_HPP
#define SRGB_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include <srgb/srgb.hpp>

namespace srgb::oracle {

inline Graph random_graph(std::mt19937_64 &rng, std::size_t n, std::uint32_t permille) {
  std::vector<Edge> e;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (uniform_below(rng, 1000) < permille)
        e.emplace_back(a, b);
  return Graph::from_edges(n, e);
}

inline std::vector<std::uint32_t> adjacency_masks(const Graph &g) {
  std::vector<std::uint32_t> m(g.vertex_count(), 0);
  for (auto [a, b] : g.edges()) {
    m[a] |= 1U << b;
    m[b] |= 1U << a;
  }
  return m;
}

/// Largest clique by enumerating every vertex subset (n <= 20).
inline std::size_t clique_number_all_subsets(const Graph &g) {
  const auto n = g.vertex_count();
  const auto adj = adjacency_masks(g);
  std::vector<char> is_clique(std::size_t{1} << n, 0);
  is_clique[0] = 1;
  std::size_t best = 0;
  for (std::uint32_t m = 1; m < (1U << n); ++m) {
    const int low = std::countr_zero(m);
    const std::uint32_t rest = m & (m - 1);
    is_clique[m] = is_clique[rest] && (adj[static_cast<std::size_t>(low)] & rest) == rest;
    if (is_clique[m])
      best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(m)));
  }
  return best;
}

struct NamedSrg {
  std::string name;
  Graph graph;
  SrgParams params;
  std::int64_t f;
};

/// Small non-conference SRGs with independently known parameters and multiplicity f.
inline std::vector<NamedSrg> small_srg_corpus() {
  using namespace families;
  std::vector<NamedSrg> c;
  c.push_back({"petersen", petersen(), {10, 3, 0, 1}, 5});
  c.push_back({"triangular5", triangular(5), {10, 6, 3, 4}, 4});
  c.push_back({"paley9", paley(3, true), {9, 4, 1, 2}, 4});
  c.push_back({"rook3", rook(3), {9, 4, 1, 2}, 4});
  c.push_back({"rook4", rook(4), {16, 6, 2, 2}, 6});
  c.push_back({"rook4_complement", complement(rook(4)), {16, 9, 4, 6}, 9});
  c.push_back({"clebsch", clebsch(), {16, 5, 0, 2}, 10});
  c.push_back({"clebsch_complement", complement(clebsch()), {16, 10, 6, 6}, 5});
  c.push_back({"triangular6", triangular(6), {15, 8, 4, 4}, 5});
  c.push_back({"kneser6_2", kneser2(6), {15, 6, 1, 3}, 9});
  c.push_back({"k33", complete_multipartite(2, 3), {6, 3, 0, 3}, 4});
  c.push_back({"k333", complete_multipartite(3, 3), {9, 6, 3, 6}, 6});
  c.push_back({"paley25", paley(5, true), {25, 12, 5, 6}, 12});
  c.push_back({"paley49", paley(7, true), {49, 24, 11, 12}, 24});
  c.push_back({"rook5", rook(5), {25, 8, 3, 2}, 8});
  c.push_back({"triangular8", triangular(8), {28, 12, 6, 4}, 7});
  c.push_back({"rook10", rook(10), {100, 18, 8, 2}, 18});
  return c;
}

/// Adjacency eigenvalues from a dense symmetric solver.
inline std::vector<double> numeric_eigenvalues(const Graph &g) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (auto [u, v] : g.edges()) {
    a(u, v) = 1;
    a(v, u) = 1;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  const auto &ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

inline std::size_t count_near(const std::vector<double> &values, double target, double tol = 1e-6) {
  return static_cast<std::size_t>(
      std::count_if(values.begin(), values.end(), [&](double x) { return std::abs(x - target) < tol; }));
}

/// Every regular partition with min B1 < min B2 < min B3, by exhaustive labelling (n <= 11).
inline std::vector<RegularPartition> all_regular_partitions(const Graph &g) {
  const auto n = g.vertex_count();
  const auto adj = adjacency_masks(g);
  std::vector<RegularPartition> out;
  std::vector<int> label(n, 0);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i)
    total *= 4;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    std::array<std::uint32_t, 4> mask{};
    for (std::size_t i = 0; i < n; ++i) {
      label[i] = static_cast<int>(c % 4);
      c /= 4;
      mask[static_cast<std::size_t>(label[i])] |= 1U << i;
    }
    if (!mask[0] || !mask[1] || !mask[2])
      continue;
    if (!(std::countr_zero(mask[0]) < std::countr_zero(mask[1]) &&
          std::countr_zero(mask[1]) < std::countr_zero(mask[2])))
      continue;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      const auto h = static_cast<std::size_t>(label[i]);
      if (h < 3) {
        for (std::size_t o = 0; o < 3; ++o)
          if (o != h && (adj[i] & mask[o]))
            ok = false;
      } else {
        const int c0 = std::popcount(adj[i] & mask[0]);
        ok = c0 == std::popcount(adj[i] & mask[1]) && c0 == std::popcount(adj[i] & mask[2]);
      }
    }
    if (!ok)
      continue;
    std::array<std::vector<Vertex>, 4> parts;
    for (std::size_t i = 0; i < n; ++i)
      parts[static_cast<std::size_t>(label[i])].push_back(static_cast<Vertex>(i));
    out.push_back({VertexSet::from_unsorted(parts[0]), VertexSet::from_unsorted(parts[1]),
                   VertexSet::from_unsorted(parts[2]), VertexSet::from_unsorted(parts[3])});
  }
  return out;
}

} // namespace srgb::oracle

#endif // SRGB_TESTS_SUPPORT_HPP
