#ifndef SRGB_GRAPH_HPP
#define SRGB_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "bitset.hpp"
#include "checked.hpp"
#include "error.hpp"

// Vertices are 0-based inside the library. Text formats, the CLI and JSON
// reports use 1-based labels (label = vertex + 1).
namespace srgb {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr std::size_t max_vertex_count = std::size_t{1} << 20;

/// Sorted, duplicate-free set of vertices.
class VertexSet {
public:
  VertexSet() = default;

  /// Sorts and deduplicates.
  static VertexSet from_unsorted(std::vector<Vertex> vs) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    VertexSet s;
    s.items_ = std::move(vs);
    return s;
  }
  static VertexSet from_unsorted(std::initializer_list<Vertex> vs) {
    return from_unsorted(std::vector<Vertex>(vs));
  }

  /// [first, last)
  static VertexSet range(Vertex first, Vertex last) {
    VertexSet s;
    for (Vertex v = first; v < last; ++v)
      s.items_.push_back(v);
    return s;
  }

  static VertexSet from_bits(const Bitset &bits) {
    VertexSet s;
    s.items_.reserve(bits.count());
    bits.for_each([&](std::size_t i) { s.items_.push_back(static_cast<Vertex>(i)); });
    return s;
  }

  Bitset to_bits(std::size_t n) const {
    Bitset b(n);
    for (auto v : items_)
      b.set(v);
    return b;
  }

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  Vertex operator[](std::size_t i) const { return items_[i]; }
  Vertex front() const { return items_.front(); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  std::span<const Vertex> items() const { return items_; }

  bool contains(Vertex v) const { return std::binary_search(items_.begin(), items_.end(), v); }

  /// Throws InvalidArgument if any member is >= n.
  void check_range(std::size_t n) const {
    if (!items_.empty() && items_.back() >= n)
      throw InvalidArgument("vertex " + std::to_string(items_.back() + 1) + " out of range 1.." +
                            std::to_string(n));
  }

  bool is_subset_of(const VertexSet &o) const {
    return std::includes(o.items_.begin(), o.items_.end(), items_.begin(), items_.end());
  }

  friend VertexSet set_intersection(const VertexSet &a, const VertexSet &b) {
    VertexSet r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.items_));
    return r;
  }
  friend VertexSet set_union(const VertexSet &a, const VertexSet &b) {
    VertexSet r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.items_));
    return r;
  }
  friend VertexSet set_difference(const VertexSet &a, const VertexSet &b) {
    VertexSet r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.items_));
    return r;
  }

  friend bool operator==(const VertexSet &, const VertexSet &) = default;

private:
  std::vector<Vertex> items_;
};

/// Finite simple undirected graph with dense bit-row adjacency. Immutable once built.
class Graph {
public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n) : n_(n) {
    if (n == 0)
      throw InvalidArgument("graph must have at least one vertex");
    if (n > max_vertex_count)
      throw InvalidArgument("vertex count " + std::to_string(n) + " exceeds maximum " +
                            std::to_string(max_vertex_count));
    rows_.assign(n, Bitset(n));
  }

  /// Builds from 0-based edges; symmetrizes, ignores duplicates.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (auto [a, b] : edges) {
      if (a >= n || b >= n)
        throw InvalidArgument("edge endpoint out of range: (" + std::to_string(a + 1) + "," +
                              std::to_string(b + 1) + ") with " + std::to_string(n) + " vertices");
      if (a == b)
        throw InvalidArgument("loop edge at vertex " + std::to_string(a + 1));
      g.rows_[a].set(b);
      g.rows_[b].set(a);
    }
    return g;
  }
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  /// Takes ownership of prepared rows. Rows must be symmetric, irreflexive and of length n.
  static Graph from_rows(std::vector<Bitset> rows) {
    Graph g;
    g.n_ = rows.size();
    if (g.n_ == 0 || g.n_ > max_vertex_count)
      throw InvalidArgument("invalid vertex count");
    for (std::size_t i = 0; i < g.n_; ++i) {
      if (rows[i].size() != g.n_)
        throw InvalidArgument("adjacency row has wrong length");
      if (rows[i].test(i))
        throw InvalidArgument("loop at vertex " + std::to_string(i + 1));
    }
    for (std::size_t i = 0; i < g.n_; ++i)
      rows[i].for_each([&](std::size_t j) {
        if (!rows[j].test(i))
          throw InvalidArgument("adjacency is not symmetric");
      });
    g.rows_ = std::move(rows);
    return g;
  }

  std::size_t vertex_count() const { return n_; }
  bool adjacent(Vertex a, Vertex b) const { return rows_[a].test(b); }
  const Bitset &row(Vertex a) const { return rows_[a]; }
  std::size_t degree(Vertex a) const { return rows_[a].count(); }

  std::size_t edge_count() const {
    std::size_t c = 0;
    for (const auto &r : rows_)
      c += r.count();
    return c / 2;
  }

  /// Edges (a, b) with a < b in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (std::size_t a = 0; a < n_; ++a)
      rows_[a].for_each([&](std::size_t b) {
        if (b > a)
          out.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
      });
    return out;
  }

  VertexSet all_vertices() const { return VertexSet::range(0, static_cast<Vertex>(n_)); }

  void check_vertex(Vertex a) const {
    if (a >= n_)
      throw InvalidArgument("vertex " + std::to_string(a + 1) + " out of range 1.." +
                            std::to_string(n_));
  }

  friend bool operator==(const Graph &, const Graph &) = default;

private:
  std::size_t n_ = 0;
  std::vector<Bitset> rows_;
};

/// N(G, a, W): the members of W adjacent to a.
inline VertexSet neighbours_in(const Graph &g, Vertex a, const VertexSet &w) {
  g.check_vertex(a);
  w.check_range(g.vertex_count());
  std::vector<Vertex> out;
  for (auto b : w)
    if (g.adjacent(a, b))
      out.push_back(b);
  return VertexSet::from_unsorted(std::move(out));
}

inline VertexSet neighbourhood(const Graph &g, Vertex a) {
  g.check_vertex(a);
  return VertexSet::from_bits(g.row(a));
}

/// Vertices that are neither a nor adjacent to a.
inline VertexSet non_neighbourhood(const Graph &g, Vertex a) {
  g.check_vertex(a);
  Bitset b(g.vertex_count());
  b.set_all();
  b.subtract(g.row(a));
  b.reset(a);
  return VertexSet::from_bits(b);
}

struct InducedSubgraph {
  Graph graph;
  /// original[new_vertex] = old vertex.
  std::vector<Vertex> original;

  std::optional<Vertex> new_index(Vertex old) const {
    auto it = std::lower_bound(original.begin(), original.end(), old);
    if (it == original.end() || *it != old)
      return std::nullopt;
    return static_cast<Vertex>(it - original.begin());
  }
};

/// Γ[W], relabelled 0..|W|-1 in increasing order of the old labels.
inline InducedSubgraph induced_subgraph(const Graph &g, const VertexSet &w) {
  if (w.empty())
    throw InvalidArgument("induced subgraph of an empty vertex set");
  w.check_range(g.vertex_count());
  const std::size_t m = w.size();
  std::vector<Bitset> rows(m, Bitset(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (g.adjacent(w[i], w[j])) {
        rows[i].set(j);
        rows[j].set(i);
      }
  InducedSubgraph out{Graph::from_rows(std::move(rows)), {w.begin(), w.end()}};
  return out;
}

inline Graph complement(const Graph &g) {
  const std::size_t n = g.vertex_count();
  std::vector<Bitset> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Bitset r(n);
    r.set_all();
    r.subtract(g.row(static_cast<Vertex>(i)));
    r.reset(i);
    rows.push_back(std::move(r));
  }
  return Graph::from_rows(std::move(rows));
}

/// Parameter set (v, k, λ, μ).
struct SrgParams {
  std::int64_t v = 0;
  std::int64_t k = 0;
  std::int64_t lambda = 0;
  std::int64_t mu = 0;

  friend bool operator==(const SrgParams &, const SrgParams &) = default;

  std::string to_string() const {
    return "(" + std::to_string(v) + "," + std::to_string(k) + "," + std::to_string(lambda) + "," +
           std::to_string(mu) + ")";
  }
};

struct SrgCheck {
  SrgParams params;
  /// Complete graph: μ has no meaning and params.mu is 0.
  bool complete = false;
};

class NotRegular : public Error {
public:
  NotRegular(Vertex witness, std::size_t degree, std::size_t expected)
      : Error("graph is not regular: vertex " + std::to_string(witness + 1) + " has degree " +
              std::to_string(degree) + ", expected " + std::to_string(expected)),
        witness(witness), degree(degree), expected(expected) {}
  Vertex witness;
  std::size_t degree;
  std::size_t expected;
};

class NotStronglyRegular : public Error {
public:
  NotStronglyRegular(Vertex a, Vertex b, bool adjacent, std::size_t common, std::size_t expected)
      : Error("graph is not strongly regular: " + std::string(adjacent ? "adjacent" : "non-adjacent") +
              " pair (" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ") has " +
              std::to_string(common) + " common neighbours, expected " + std::to_string(expected)),
        a(a), b(b), adjacent(adjacent), common(common), expected(expected) {}
  Vertex a, b;
  bool adjacent;
  std::size_t common;
  std::size_t expected;
};

namespace detail {

struct PairViolation {
  Vertex a, b;
  std::size_t common;
};

inline std::optional<PairViolation> scan_pairs(const Graph &g, std::size_t first, std::size_t last,
                                               std::size_t lambda, std::optional<std::size_t> mu) {
  const std::size_t n = g.vertex_count();
  for (std::size_t i = first; i < last; ++i) {
    const auto &ri = g.row(static_cast<Vertex>(i));
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t c = Bitset::intersection_count(ri, g.row(static_cast<Vertex>(j)));
      const bool adj = ri.test(j);
      if ((adj && c != lambda) || (!adj && mu && c != *mu))
        return PairViolation{static_cast<Vertex>(i), static_cast<Vertex>(j), c};
    }
  }
  return std::nullopt;
}

} // namespace detail

/// Checks strong regularity over all pairs and returns (v, k, λ, μ).
/// `threads` > 1 splits the pair scan by row ranges; the reported witness is the
/// lexicographically first violating pair regardless of the thread count.
inline SrgCheck verify_srg(const Graph &g, unsigned threads = 1) {
  const std::size_t n = g.vertex_count();
  if (n < 2)
    throw InvalidArgument("verify_srg needs at least 2 vertices");
  const std::size_t k = g.degree(0);
  for (Vertex a = 1; a < n; ++a)
    if (auto d = g.degree(a); d != k)
      throw NotRegular(a, d, k);

  // Reference values from the first adjacent / non-adjacent pair.
  std::optional<std::size_t> lambda, mu;
  for (std::size_t i = 0; i < n && (!lambda || !mu); ++i)
    for (std::size_t j = i + 1; j < n && (!lambda || !mu); ++j) {
      const auto c = Bitset::intersection_count(g.row(static_cast<Vertex>(i)),
                                                g.row(static_cast<Vertex>(j)));
      if (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j))) {
        if (!lambda)
          lambda = c;
      } else if (!mu) {
        mu = c;
      }
    }
  const std::size_t lam = lambda.value_or(0);

  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  std::vector<std::optional<detail::PairViolation>> found(threads);
  if (threads == 1) {
    found[0] = detail::scan_pairs(g, 0, n, lam, mu);
  } else {
    // Rows near the top carry more pairs; interleaving blocks balances the work.
    std::vector<std::thread> pool;
    const std::size_t block = 16;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t start = t * block; start < n; start += threads * block) {
          auto v = detail::scan_pairs(g, start, std::min(n, start + block), lam, mu);
          if (v) {
            found[t] = v;
            return;
          }
        }
      });
    for (auto &th : pool)
      th.join();
  }
  std::optional<detail::PairViolation> first;
  for (const auto &f : found)
    if (f && (!first || std::pair(f->a, f->b) < std::pair(first->a, first->b)))
      first = f;
  if (first) {
    const bool adj = g.adjacent(first->a, first->b);
    throw NotStronglyRegular(first->a, first->b, adj, first->common, adj ? lam : *mu);
  }

  SrgCheck out;
  out.params.v = static_cast<std::int64_t>(n);
  out.params.k = static_cast<std::int64_t>(k);
  out.params.lambda = static_cast<std::int64_t>(lam);
  if (!mu) {
    out.complete = (k == n - 1);
    out.params.mu = 0;
    if (out.complete)
      out.params.lambda = static_cast<std::int64_t>(n) - 2;
    return out;
  }
  out.params.mu = static_cast<std::int64_t>(*mu);
  const auto &p = out.params;
  using namespace checked;
  if (mul(p.k, sub(sub(p.k, p.lambda), 1)) != mul(sub(sub(p.v, p.k), 1), p.mu))
    throw Error("parameter identity k(k-lambda-1) = (v-k-1)mu fails for " + p.to_string());
  return out;
}

} // namespace srgb

#endif // SRGB_GRAPH_HPP
