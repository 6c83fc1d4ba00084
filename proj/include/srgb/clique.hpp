#ifndef SRGB_CLIQUE_HPP
#define SRGB_CLIQUE_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bitset.hpp"
#include "error.hpp"
#include "graph.hpp"

// Exact clique search: bitset branch-and-bound with greedy colouring bounds.
namespace srgb {

struct CliqueBudget {
  /// Maximum number of search nodes; 0 means unlimited.
  std::uint64_t max_nodes = 0;
};

struct CliqueResult {
  std::size_t size = 0;
  VertexSet witness;
  bool proven_max = false;
  std::uint64_t nodes_explored = 0;
  bool budget_hit = false;
};

enum class Decision { yes, no, unknown };

struct CliqueDecision {
  Decision answer = Decision::unknown;
  VertexSet witness; ///< a clique of exactly the requested size when answer == yes
  std::uint64_t nodes_explored = 0;
};

inline bool is_clique(const Graph &g, const VertexSet &s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.adjacent(s[i], s[j]))
        return false;
  return true;
}

namespace detail {

class CliqueSearch {
public:
  explicit CliqueSearch(const Graph &g, CliqueBudget budget) : g_(g), budget_(budget) {
    const std::size_t n = g.vertex_count();
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), Vertex{0});
    std::vector<std::size_t> deg(n);
    for (Vertex v = 0; v < n; ++v)
      deg[v] = g.degree(v);
    // Descending degree, then label. Position in this order is the internal index.
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) { return deg[a] > deg[b]; });
    std::vector<Vertex> pos(n);
    for (std::size_t i = 0; i < n; ++i)
      pos[order_[i]] = static_cast<Vertex>(i);
    rows_.assign(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i)
      g.row(order_[i]).for_each([&](std::size_t j) { rows_[i].set(pos[j]); });
    pos_ = std::move(pos);
  }

  /// Searches cliques that extend `base` inside `candidates` (original labels).
  /// Stops early once a clique of size `stop_at` is known.
  void run(const std::vector<Vertex> &base, const VertexSet &candidates, std::size_t lower_bound,
           std::size_t stop_at) {
    best_size_ = lower_bound;
    stop_at_ = stop_at;
    Bitset p(g_.vertex_count());
    for (auto v : candidates)
      p.set(pos_[v]);
    current_.clear();
    for (auto v : base)
      current_.push_back(pos_[v]);
    if (current_.size() > best_size_) {
      best_size_ = current_.size();
      best_ = current_;
    }
    aborted_ = false;
    if (p.any())
      expand(p);
  }

  std::size_t best_size() const { return best_size_; }
  bool found_witness() const { return !best_.empty(); }
  bool aborted() const { return aborted_; }
  std::uint64_t nodes() const { return nodes_; }

  VertexSet witness() const {
    std::vector<Vertex> out;
    for (auto i : best_)
      out.push_back(order_[i]);
    return VertexSet::from_unsorted(std::move(out));
  }

private:
  bool done() const { return aborted_ || best_size_ >= stop_at_; }

  void expand(Bitset p) {
    if (budget_.max_nodes && nodes_ >= budget_.max_nodes) {
      aborted_ = true;
      return;
    }
    ++nodes_;

    // Greedy sequential colouring; only vertices whose colour could still
    // improve on the incumbent are branched on.
    std::vector<Vertex> verts;
    std::vector<std::size_t> colours;
    const std::size_t kmin = best_size_ + 1 > current_.size() ? best_size_ + 1 - current_.size() : 1;
    Bitset uncoloured = p;
    std::size_t k = 0;
    while (uncoloured.any()) {
      ++k;
      Bitset q = uncoloured;
      for (std::size_t v = q.find_first(); v < q.size(); v = q.find_next(v + 1)) {
        q.subtract(rows_[v]);
        uncoloured.reset(v);
        if (k >= kmin) {
          verts.push_back(static_cast<Vertex>(v));
          colours.push_back(k);
        }
      }
    }

    for (std::size_t idx = verts.size(); idx-- > 0;) {
      if (current_.size() + colours[idx] <= best_size_ || done())
        return;
      const Vertex v = verts[idx];
      current_.push_back(v);
      Bitset next = p & rows_[v];
      if (next.none()) {
        if (current_.size() > best_size_) {
          best_size_ = current_.size();
          best_ = current_;
        }
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      p.reset(v);
    }
  }

  const Graph &g_;
  CliqueBudget budget_;
  std::vector<Vertex> order_;
  std::vector<Vertex> pos_;
  std::vector<Bitset> rows_;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_;
  std::size_t best_size_ = 0;
  std::size_t stop_at_ = std::numeric_limits<std::size_t>::max();
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

inline VertexSet checked_witness(const Graph &g, VertexSet w) {
  if (!is_clique(g, w))
    throw std::logic_error("clique search produced a non-clique witness");
  return w;
}

} // namespace detail

/// Clique number with a witness. Budget exhaustion returns the best clique found
/// with proven_max = false.
inline CliqueResult max_clique(const Graph &g, CliqueBudget budget = {}) {
  detail::CliqueSearch search(g, budget);
  search.run({}, g.all_vertices(), 0, std::numeric_limits<std::size_t>::max());
  CliqueResult r;
  r.witness = detail::checked_witness(g, search.witness());
  r.size = r.witness.size();
  r.budget_hit = search.aborted();
  r.proven_max = !r.budget_hit;
  r.nodes_explored = search.nodes();
  return r;
}

/// Largest clique containing `a`. For a vertex-transitive graph this is the
/// clique number; transitivity is the caller's claim, it is not checked.
inline CliqueResult max_clique_through_vertex(const Graph &g, Vertex a, CliqueBudget budget = {}) {
  g.check_vertex(a);
  detail::CliqueSearch search(g, budget);
  search.run({a}, neighbourhood(g, a), 0, std::numeric_limits<std::size_t>::max());
  CliqueResult r;
  r.witness = detail::checked_witness(g, search.witness());
  r.size = r.witness.size();
  r.budget_hit = search.aborted();
  r.proven_max = !r.budget_hit;
  r.nodes_explored = search.nodes();
  return r;
}

/// Is there a clique of size t? `no` only when the search space was exhausted.
inline CliqueDecision has_clique(const Graph &g, std::size_t t, CliqueBudget budget = {},
                                 std::optional<Vertex> through = std::nullopt) {
  if (t == 0)
    throw InvalidArgument("clique size must be at least 1");
  detail::CliqueSearch search(g, budget);
  if (through) {
    g.check_vertex(*through);
    search.run({*through}, neighbourhood(g, *through), t - 1, t);
  } else {
    search.run({}, g.all_vertices(), t - 1, t);
  }
  CliqueDecision d;
  d.nodes_explored = search.nodes();
  if (search.best_size() >= t && search.found_witness()) {
    d.answer = Decision::yes;
    // The search records maximal cliques; any t of their vertices (keeping `through`) suffice.
    auto w = search.witness();
    std::vector<Vertex> keep;
    if (through)
      keep.push_back(*through);
    for (auto v : w)
      if (keep.size() < t && (!through || v != *through))
        keep.push_back(v);
    d.witness = detail::checked_witness(g, VertexSet::from_unsorted(std::move(keep)));
  } else {
    d.answer = search.aborted() ? Decision::unknown : Decision::no;
  }
  return d;
}

class TooLarge : public Error {
public:
  using Error::Error;
};

inline constexpr std::size_t max_bruteforce_vertices = 14;

/// Minimum number of cliques partitioning V (chromatic number of the complement),
/// by exhaustive dynamic programming over vertex subsets.
inline std::size_t clique_cover_min_bruteforce(const Graph &g) {
  const std::size_t n = g.vertex_count();
  if (n > max_bruteforce_vertices)
    throw TooLarge("brute-force clique cover supports at most " + std::to_string(max_bruteforce_vertices) +
                   " vertices");
  const std::uint32_t full = (1U << n) - 1;
  std::vector<std::uint32_t> nbr(n, 0);
  for (Vertex v = 0; v < n; ++v)
    g.row(v).for_each([&](std::size_t u) { nbr[v] |= 1U << u; });
  std::vector<char> clique(full + 1, 0);
  clique[0] = 1;
  for (std::uint32_t m = 1; m <= full; ++m) {
    const auto low = static_cast<std::uint32_t>(std::countr_zero(m));
    const std::uint32_t rest = m & (m - 1);
    clique[m] = clique[rest] && (rest & ~nbr[low]) == 0;
  }
  std::vector<std::uint8_t> best(full + 1, 0xff);
  best[0] = 0;
  for (std::uint32_t m = 1; m <= full; ++m) {
    const std::uint32_t low = m & (~m + 1);
    const std::uint32_t others = m ^ low;
    // Every cover puts the lowest vertex in some clique `low | sub`.
    for (std::uint32_t sub = others;; sub = (sub - 1) & others) {
      if (clique[low | sub])
        best[m] = std::min<std::uint8_t>(best[m], static_cast<std::uint8_t>(best[m ^ (low | sub)] + 1));
      if (sub == 0)
        break;
    }
  }
  return best[full];
}

} // namespace srgb

#endif // SRGB_CLIQUE_HPP
