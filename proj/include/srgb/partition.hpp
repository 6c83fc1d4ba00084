#ifndef SRGB_PARTITION_HPP
#define SRGB_PARTITION_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "error.hpp"
#include "euclid_rep.hpp"
#include "graph.hpp"

// Regular partitions {B1, B2, B3, C} and the two-step subset construction.
//
// With y = A - sI, p = x1 - x2 and q = x1 + x2 - 2·x3 (x_h the indicator of B_h):
//   <p, y_i> vanishes exactly on B3 ∪ C, and
//   <q, y_i> vanishes on C but not on B3,
// which gives dim P(Z ∩ (B3 ∪ C)) <= dim P(Z) - 1 and dim P(Z ∩ C) <= dim P(Z ∩ (B3 ∪ C)) - 1.
namespace srgb {

struct RegularPartition {
  VertexSet b1, b2, b3, c;

  const VertexSet &block(int h) const { return h == 0 ? b1 : h == 1 ? b2 : b3; }
};

class NotAPartition : public Error {
public:
  using Error::Error;
};

/// Condition (1): an edge between two distinct B blocks.
class Condition1Violated : public Error {
public:
  Condition1Violated(Vertex a, Vertex b)
      : Error("edge (" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ") joins two distinct B blocks"),
        a(a), b(b) {}
  Vertex a, b;
};

/// Condition (2): a C vertex with unequal neighbour counts in B1, B2, B3.
class Condition2Violated : public Error {
public:
  Condition2Violated(Vertex v, std::array<std::size_t, 3> counts)
      : Error("vertex " + std::to_string(v + 1) + " of C has " + std::to_string(counts[0]) + "," +
              std::to_string(counts[1]) + "," + std::to_string(counts[2]) + " neighbours in B1,B2,B3"),
        vertex(v), counts(counts) {}
  Vertex vertex;
  std::array<std::size_t, 3> counts;
};

inline RegularPartition verify_partition(const Graph &g, const RegularPartition &cand) {
  const std::size_t n = g.vertex_count();
  std::vector<int> owner(n, -1);
  const std::array<const VertexSet *, 4> parts{&cand.b1, &cand.b2, &cand.b3, &cand.c};
  for (int h = 0; h < 4; ++h) {
    parts[static_cast<std::size_t>(h)]->check_range(n);
    for (auto v : *parts[static_cast<std::size_t>(h)]) {
      if (owner[v] != -1)
        throw NotAPartition("vertex " + std::to_string(v + 1) + " lies in two blocks");
      owner[v] = h;
    }
  }
  for (std::size_t v = 0; v < n; ++v)
    if (owner[v] == -1)
      throw NotAPartition("vertex " + std::to_string(v + 1) + " lies in no block");

  for (int h = 0; h < 3; ++h)
    for (auto a : cand.block(h)) {
      std::optional<Vertex> bad;
      g.row(a).for_each([&](std::size_t b) {
        if (!bad && owner[b] >= 0 && owner[b] < 3 && owner[b] != h)
          bad = static_cast<Vertex>(b);
      });
      if (bad)
        throw Condition1Violated(std::min(a, *bad), std::max(a, *bad));
    }

  const std::array<Bitset, 3> bits{cand.b1.to_bits(n), cand.b2.to_bits(n), cand.b3.to_bits(n)};
  for (auto v : cand.c) {
    std::array<std::size_t, 3> counts{};
    for (std::size_t h = 0; h < 3; ++h)
      counts[h] = Bitset::intersection_count(g.row(v), bits[h]);
    if (counts[0] != counts[1] || counts[1] != counts[2])
      throw Condition2Violated(v, counts);
  }
  return cand;
}

/// Valencies used to describe known partitions: every B vertex has `within_block`
/// neighbours in its own block, every C vertex has `to_block` neighbours in each block.
struct PartitionValencies {
  std::optional<std::size_t> within_block; ///< "b"
  std::optional<std::size_t> to_block;     ///< "c"
};

/// Checks the asserted valencies; unasserted ones are skipped.
inline void verify_valencies(const Graph &g, const RegularPartition &p, const PartitionValencies &val) {
  const std::size_t n = g.vertex_count();
  for (int h = 0; h < 3 && val.within_block; ++h) {
    const auto bits = p.block(h).to_bits(n);
    for (auto v : p.block(h))
      if (auto got = Bitset::intersection_count(g.row(v), bits); got != *val.within_block)
        throw Error("vertex " + std::to_string(v + 1) + " has " + std::to_string(got) +
                    " neighbours in its own block, asserted " + std::to_string(*val.within_block));
  }
  if (val.to_block) {
    const auto bits = p.b1.to_bits(n);
    for (auto v : p.c)
      if (auto got = Bitset::intersection_count(g.row(v), bits); got != *val.to_block)
        throw Error("vertex " + std::to_string(v + 1) + " of C has " + std::to_string(got) +
                    " neighbours in each block, asserted " + std::to_string(*val.to_block));
  }
}

/// Double counting of B-C edges for a k-regular graph with equal blocks:
/// |B|·(k - b) = |C|·c.
inline bool valencies_consistent(std::int64_t k, std::int64_t block_size, std::int64_t c_size,
                                 std::int64_t within_block, std::int64_t to_block) {
  return block_size * (k - within_block) == c_size * to_block;
}

inline std::vector<std::int64_t> p_vector(const RegularPartition &p, std::size_t v) {
  std::vector<std::int64_t> x(v, 0);
  for (auto i : p.b1)
    x[i] = 1;
  for (auto i : p.b2)
    x[i] = -1;
  return x;
}

inline std::vector<std::int64_t> q_vector(const RegularPartition &p, std::size_t v) {
  std::vector<std::int64_t> x(v, 0);
  for (auto i : p.b1)
    x[i] = 1;
  for (auto i : p.b2)
    x[i] = 1;
  for (auto i : p.b3)
    x[i] = -2;
  return x;
}

class CaseMismatch : public Error {
public:
  CaseMismatch(Vertex v, char functional, std::int64_t expected, std::int64_t actual)
      : Error(std::string("<") + functional + ", y_" + std::to_string(v + 1) + "> = " + std::to_string(actual) +
              ", case analysis gives " + std::to_string(expected)),
        vertex(v), functional(functional), expected(expected), actual(actual) {}
  Vertex vertex;
  char functional;
  std::int64_t expected, actual;
};

struct CaseReport {
  std::size_t vertices_checked = 0;
};

/// Expands <p, y_i> and <q, y_i> for every vertex from the columns of A - sI and
/// compares them with the four-case values (and their signs on B1, B2).
inline CaseReport case_check(const Graph &g, const RegularPartition &p, std::int64_t s) {
  if (s >= 0)
    throw InvalidArgument("case_check needs a negative shift s");
  const std::size_t n = g.vertex_count();
  const ShiftedAdjacency y(g, s);
  const auto pv = p_vector(p, n), qv = q_vector(p, n);
  const std::array<Bitset, 3> bits{p.b1.to_bits(n), p.b2.to_bits(n), p.b3.to_bits(n)};
  std::vector<int> owner(n, 3);
  for (int h = 0; h < 3; ++h)
    for (auto v : p.block(h))
      owner[v] = h;

  CaseReport report;
  for (Vertex i = 0; i < n; ++i) {
    std::array<std::int64_t, 3> cnt{};
    for (std::size_t h = 0; h < 3; ++h)
      cnt[h] = static_cast<std::int64_t>(Bitset::intersection_count(g.row(i), bits[h]));
    std::int64_t ep = 0, eq = 0;
    switch (owner[i]) {
    case 0:
      ep = cnt[0] - s;
      eq = cnt[0] - s;
      break;
    case 1:
      ep = s - cnt[1];
      eq = cnt[1] - s;
      break;
    case 2:
      ep = 0;
      eq = 2 * (s - cnt[2]);
      break;
    default:
      ep = 0;
      eq = 0;
    }
    const auto ap = y.inner(pv, i), aq = y.inner(qv, i);
    if (ap != ep)
      throw CaseMismatch(i, 'p', ep, ap);
    if (aq != eq)
      throw CaseMismatch(i, 'q', eq, aq);
    // Sign conditions; they follow from s < 0 and fail only on a broken expansion.
    if ((owner[i] == 0 && ap <= 0) || (owner[i] == 1 && ap >= 0))
      throw CaseMismatch(i, 'p', ep, ap);
    if (owner[i] == 2 && aq >= 0)
      throw CaseMismatch(i, 'q', eq, aq);
    ++report.vertices_checked;
  }
  return report;
}

enum class PreconditionSide { b1_b2, b3 };

class PreconditionEmpty : public Error {
public:
  explicit PreconditionEmpty(PreconditionSide side)
      : Error(side == PreconditionSide::b1_b2 ? "Z does not meet B1 ∪ B2; the first drop is unproven"
                                              : "Z does not meet B3; the second drop is unproven"),
        side(side) {}
  PreconditionSide side;
};

struct DerivedSubsets {
  VertexSet z_odd;  ///< Z_prev ∩ (B3 ∪ C)
  VertexSet z_even; ///< Z_prev ∩ C
  std::optional<DropCertificate> p_certificate;
  std::optional<DropCertificate> q_certificate;
  bool odd_strict = false;
  bool even_strict = false;

  /// The B3 side is reported first when both sides fail.
  std::optional<PreconditionSide> failed() const {
    if (!q_certificate)
      return PreconditionSide::b3;
    if (!p_certificate)
      return PreconditionSide::b1_b2;
    return std::nullopt;
  }
};

/// The subsets are always returned; a certificate is attached only when its side
/// condition holds.
inline DerivedSubsets derive_subsets(const VertexSet &z_prev, const RegularPartition &p, std::size_t v) {
  DerivedSubsets out;
  const auto b12 = set_union(p.b1, p.b2);
  const auto b3c = set_union(p.b3, p.c);
  out.z_odd = set_intersection(z_prev, b3c);
  out.z_even = set_intersection(z_prev, p.c);
  out.odd_strict = out.z_odd.size() < z_prev.size();
  out.even_strict = out.z_even.size() < out.z_odd.size();

  const auto hit12 = set_intersection(z_prev, b12);
  const auto hit3 = set_intersection(z_prev, p.b3);
  if (!hit12.empty())
    out.p_certificate = DropCertificate{p_vector(p, v), 0, out.z_odd, z_prev, hit12.front()};
  if (!hit3.empty())
    out.q_certificate = DropCertificate{q_vector(p, v), 0, out.z_even, out.z_odd, hit3.front()};
  return out;
}

/// Which component plays B3: the one meeting Z_prev most, which makes
/// Z_prev ∩ (B3 ∪ C) as large as possible. Ties go to the smallest index.
/// Returns {B1, B2, B3} as component indices; B1 and B2 keep their relative order.
inline std::array<int, 3> renumber_for_max(const VertexSet &z_prev, const std::array<VertexSet, 3> &components) {
  int chosen = 0;
  std::size_t best = set_intersection(z_prev, components[0]).size();
  for (int h = 1; h < 3; ++h) {
    const auto sz = set_intersection(z_prev, components[static_cast<std::size_t>(h)]).size();
    if (sz > best) {
      best = sz;
      chosen = h;
    }
  }
  std::array<int, 3> order{};
  int pos = 0;
  for (int h = 0; h < 3; ++h)
    if (h != chosen)
      order[static_cast<std::size_t>(pos++)] = h;
  order[2] = chosen;
  return order;
}

struct RoundState {
  std::size_t round = 0;     ///< 1-based
  int b3_component = 0;      ///< 0-based index of the component used as B3
  std::size_t z_prev_size = 0;
  VertexSet z_odd, z_even;
  std::optional<DropCertificate> p_certificate, q_certificate;
  bool odd_strict = false, even_strict = false;
  bool odd_certified = false, even_certified = false;
  std::optional<std::int64_t> odd_dim_bound, even_dim_bound;
};

struct RoundsResult {
  std::vector<RoundState> rounds;
  std::optional<std::string> halted; ///< set when a side condition failed
};

/// Z_0 = V; per round renumbers the blocks, derives Z_{2k-1}, Z_{2k} and checks both
/// certificates against y = A - sI. Dimension bounds count certified drops from `base_dim`.
inline RoundsResult rounds_driver(const Graph &g, const std::vector<RegularPartition> &partitions, std::int64_t s,
                                  std::optional<std::int64_t> base_dim = std::nullopt) {
  const ShiftedAdjacency y(g, s);
  RoundsResult out;
  VertexSet z = g.all_vertices();
  std::int64_t drops = 0;
  for (std::size_t k = 0; k < partitions.size(); ++k) {
    const auto &given = verify_partition(g, partitions[k]);
    const std::array<VertexSet, 3> comps{given.b1, given.b2, given.b3};
    const auto order = renumber_for_max(z, comps);
    const RegularPartition p{comps[static_cast<std::size_t>(order[0])], comps[static_cast<std::size_t>(order[1])],
                             comps[static_cast<std::size_t>(order[2])], given.c};
    auto d = derive_subsets(z, p, g.vertex_count());

    RoundState st;
    st.round = k + 1;
    st.b3_component = order[2];
    st.z_prev_size = z.size();
    st.odd_strict = d.odd_strict;
    st.even_strict = d.even_strict;
    st.odd_certified = d.p_certificate && check_drop_certificate(y, *d.p_certificate).accepted;
    st.even_certified = d.q_certificate && check_drop_certificate(y, *d.q_certificate).accepted;
    if (base_dim) {
      drops += st.odd_certified ? 1 : 0;
      st.odd_dim_bound = *base_dim - drops;
      drops += st.even_certified ? 1 : 0;
      st.even_dim_bound = *base_dim - drops;
    }
    st.z_odd = d.z_odd;
    st.z_even = d.z_even;
    st.p_certificate = std::move(d.p_certificate);
    st.q_certificate = std::move(d.q_certificate);
    const bool halt = !st.p_certificate || !st.q_certificate;
    z = st.z_even;
    out.rounds.push_back(std::move(st));
    if (halt) {
      out.halted = "round " + std::to_string(k + 1) + ": " +
                   PreconditionEmpty(*d.failed()).what();
      break;
    }
  }
  return out;
}

/// One entry of a size-level replay: |Z_i| and the bound dim P(Z_i) <= base_dim - i.
struct ReplayedSubset {
  std::size_t index = 0;
  std::int64_t size = 0;
  std::int64_t dim_bound = 0;
};

/// Replays recorded subset sizes Z_1, Z_2, ... from |Z_0| = base_size. Every step
/// must strictly shrink the subset, which is what makes each decrement count.
inline std::vector<ReplayedSubset> replay_sizes(std::int64_t base_size, std::int64_t base_dim,
                                                const std::vector<std::int64_t> &sizes) {
  std::vector<ReplayedSubset> out;
  std::int64_t prev = base_size;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] >= prev)
      throw Error("recorded size of Z_" + std::to_string(i + 1) + " (" + std::to_string(sizes[i]) +
                  ") does not shrink from " + std::to_string(prev));
    out.push_back({i + 1, sizes[i], base_dim - static_cast<std::int64_t>(i + 1)});
    prev = sizes[i];
  }
  return out;
}

/// Sizes of Z_{2k-1}, Z_{2k} from the sizes of Z_{2k-2} ∩ B_h and Z_{2k-2} ∩ C,
/// with the block meeting Z most chosen as B3.
inline std::pair<std::int64_t, std::int64_t> round_sizes(const std::array<std::int64_t, 3> &block_hits,
                                                         std::int64_t c_hits) {
  const auto b3 = std::max({block_hits[0], block_hits[1], block_hits[2]});
  return {b3 + c_hits, c_hits};
}

// --- planted instances --------------------------------------------------------

struct PlantedOptions {
  std::array<std::size_t, 4> sizes{3, 3, 3, 6}; ///< |B1|, |B2|, |B3|, |C|
  std::size_t d_min = 0;                        ///< per-C-vertex count range
  std::size_t d_max = 1;
  std::uint32_t intra_permille = 300; ///< edge probability inside each B block
  std::uint32_t cc_permille = 300;    ///< edge probability inside C
};

struct PlantedInstance {
  Graph graph;
  RegularPartition partition;
};

namespace detail {

inline std::vector<Vertex> random_permutation(std::mt19937_64 &rng, std::size_t n) {
  std::vector<Vertex> perm(n);
  for (std::size_t i = 0; i < n; ++i)
    perm[i] = static_cast<Vertex>(i);
  for (std::size_t i = n; i > 1; --i)
    std::swap(perm[i - 1], perm[uniform_below(rng, i)]);
  return perm;
}

inline bool coin(std::mt19937_64 &rng, std::uint32_t permille) { return uniform_below(rng, 1000) < permille; }

/// `d` distinct members of `pool`, chosen uniformly.
inline std::vector<Vertex> sample(std::mt19937_64 &rng, std::vector<Vertex> pool, std::size_t d) {
  for (std::size_t i = 0; i < d; ++i)
    std::swap(pool[i], pool[i + uniform_below(rng, pool.size() - i)]);
  pool.resize(d);
  return pool;
}

} // namespace detail

/// Random graph satisfying conditions (1) and (2) for a hidden partition: no
/// edges between distinct B blocks, each C vertex draws d and gets exactly d
/// random neighbours in each block. Labels are shuffled. Deterministic per seed.
inline PlantedInstance generate_planted(std::uint64_t seed, const PlantedOptions &opt) {
  const auto &sz = opt.sizes;
  if (sz[0] == 0 || sz[1] == 0 || sz[2] == 0)
    throw InvalidArgument("planted B blocks must be nonempty");
  if (opt.d_min > opt.d_max || opt.d_max > std::min({sz[0], sz[1], sz[2]}))
    throw InvalidArgument("infeasible degree policy: d_max exceeds the smallest B block");
  std::mt19937_64 rng(seed);
  const std::size_t n = sz[0] + sz[1] + sz[2] + sz[3];
  const auto perm = detail::random_permutation(rng, n);

  std::array<std::vector<Vertex>, 4> blocks;
  std::size_t next = 0;
  for (std::size_t h = 0; h < 4; ++h)
    for (std::size_t i = 0; i < sz[h]; ++i)
      blocks[h].push_back(perm[next++]);

  std::vector<Edge> edges;
  for (std::size_t h = 0; h < 3; ++h)
    for (std::size_t i = 0; i < blocks[h].size(); ++i)
      for (std::size_t j = i + 1; j < blocks[h].size(); ++j)
        if (detail::coin(rng, opt.intra_permille))
          edges.emplace_back(blocks[h][i], blocks[h][j]);
  for (std::size_t i = 0; i < blocks[3].size(); ++i)
    for (std::size_t j = i + 1; j < blocks[3].size(); ++j)
      if (detail::coin(rng, opt.cc_permille))
        edges.emplace_back(blocks[3][i], blocks[3][j]);
  for (auto c : blocks[3]) {
    const std::size_t d = opt.d_min + uniform_below(rng, opt.d_max - opt.d_min + 1);
    for (std::size_t h = 0; h < 3; ++h)
      for (auto b : detail::sample(rng, blocks[h], d))
        edges.emplace_back(c, b);
  }
  PlantedInstance out{Graph::from_edges(n, edges), {}};
  out.partition = {VertexSet::from_unsorted(blocks[0]), VertexSet::from_unsorted(blocks[1]),
                   VertexSet::from_unsorted(blocks[2]), VertexSet::from_unsorted(blocks[3])};
  return out;
}

struct StackedInstance {
  Graph graph;
  std::vector<RegularPartition> partitions;
};

/// Graph that is simultaneously regular for `triples` partitions. Partition t uses
/// three blocks of `block_size` vertices; the remaining `free_vertices` and all other
/// triples form its C. Between two triples the edges are all-or-nothing; each free
/// vertex takes an independent count per triple.
inline StackedInstance generate_stacked(std::uint64_t seed, std::size_t triples, std::size_t block_size,
                                        std::size_t free_vertices, std::uint32_t permille = 400) {
  if (triples == 0 || block_size == 0)
    throw InvalidArgument("stacked instance needs at least one nonempty triple");
  std::mt19937_64 rng(seed);
  const std::size_t n = triples * 3 * block_size + free_vertices;
  const auto perm = detail::random_permutation(rng, n);
  std::vector<std::array<std::vector<Vertex>, 3>> blocks(triples);
  std::vector<Vertex> free;
  std::size_t next = 0;
  for (auto &t : blocks)
    for (auto &b : t)
      for (std::size_t i = 0; i < block_size; ++i)
        b.push_back(perm[next++]);
  while (next < n)
    free.push_back(perm[next++]);

  std::vector<Edge> edges;
  for (const auto &t : blocks)
    for (const auto &b : t)
      for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j)
          if (detail::coin(rng, permille))
            edges.emplace_back(b[i], b[j]);
  for (std::size_t t = 0; t < triples; ++t)
    for (std::size_t u = t + 1; u < triples; ++u)
      if (detail::coin(rng, 500))
        for (const auto &bt : blocks[t])
          for (auto a : bt)
            for (const auto &bu : blocks[u])
              for (auto b : bu)
                edges.emplace_back(a, b);
  for (std::size_t i = 0; i < free.size(); ++i)
    for (std::size_t j = i + 1; j < free.size(); ++j)
      if (detail::coin(rng, permille))
        edges.emplace_back(free[i], free[j]);
  for (auto f : free)
    for (const auto &t : blocks) {
      const std::size_t d = uniform_below(rng, block_size + 1);
      for (const auto &b : t)
        for (auto x : detail::sample(rng, b, d))
          edges.emplace_back(f, x);
    }

  StackedInstance out{Graph::from_edges(n, edges), {}};
  for (std::size_t t = 0; t < triples; ++t) {
    RegularPartition p;
    p.b1 = VertexSet::from_unsorted(blocks[t][0]);
    p.b2 = VertexSet::from_unsorted(blocks[t][1]);
    p.b3 = VertexSet::from_unsorted(blocks[t][2]);
    p.c = set_difference(set_difference(set_difference(VertexSet::range(0, static_cast<Vertex>(n)), p.b1), p.b2),
                         p.b3);
    out.partitions.push_back(std::move(p));
  }
  return out;
}

} // namespace srgb

#endif // SRGB_PARTITION_HPP
