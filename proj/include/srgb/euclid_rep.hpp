#ifndef SRGB_EUCLID_REP_HPP
#define SRGB_EUCLID_REP_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "checked.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "rank.hpp"
#include "srg_math.hpp"

namespace srgb {

/// y = A - sI for an arbitrary graph and shift s. Inner products are computed
/// from the adjacency rows, so no strong regularity is assumed.
class ShiftedAdjacency {
public:
  ShiftedAdjacency(const Graph &g, std::int64_t s) : g_(&g), s_(s) {}

  const Graph &graph() const { return *g_; }
  std::int64_t shift() const { return s_; }
  std::size_t vertex_count() const { return g_->vertex_count(); }

  std::vector<std::int64_t> rep_vector(Vertex i) const {
    g_->check_vertex(i);
    std::vector<std::int64_t> y(vertex_count(), 0);
    g_->row(i).for_each([&](std::size_t j) { y[j] = 1; });
    y[i] = -s_;
    return y;
  }

  std::int64_t gram_value(Vertex i, Vertex j) const {
    if (i == j)
      return s_ * s_ + static_cast<std::int64_t>(g_->degree(i));
    const auto common = static_cast<std::int64_t>(Bitset::intersection_count(g_->row(i), g_->row(j)));
    return common - (g_->adjacent(i, j) ? 2 * s_ : 0);
  }

  /// <x, y_i> = -s·x_i + Σ_{j ~ i} x_j
  std::int64_t inner(const std::vector<std::int64_t> &x, Vertex i) const {
    std::int64_t acc = checked::mul(-s_, x[i]);
    g_->row(i).for_each([&](std::size_t j) { acc = checked::add(acc, x[j]); });
    return acc;
  }

private:
  const Graph *g_;
  std::int64_t s_;
};

/// The two-distance representation of a strongly regular graph: y_i are the
/// columns of A - sI with s the smallest eigenvalue.
class EuclideanRep {
public:
  /// Verifies strong regularity and computes the exact spectrum.
  explicit EuclideanRep(Graph g, unsigned threads = 1) : graph_(std::move(g)) {
    const auto check = verify_srg(graph_, threads);
    if (check.complete)
      throw InvalidArgument("the Euclidean representation of a complete graph is degenerate");
    params_ = check.params;
    init();
  }

  /// Trusts `params` as the result of an earlier verify_srg on the same graph.
  EuclideanRep(Graph g, const SrgParams &params) : graph_(std::move(g)), params_(params) {
    if (static_cast<std::int64_t>(graph_.vertex_count()) != params.v)
      throw InvalidArgument("parameter v does not match the graph");
    init();
  }

  const Graph &graph() const { return graph_; }
  const SrgParams &params() const { return params_; }
  const Spectrum &spectrum() const { return spectrum_; }
  const GramEntries &gram() const { return gram_; }
  const DistanceSquares &dist2() const { return dist2_; }
  std::size_t vertex_count() const { return graph_.vertex_count(); }
  ShiftedAdjacency shifted() const { return {graph_, spectrum_.s}; }

  std::vector<std::int64_t> rep_vector(Vertex i) const { return shifted().rep_vector(i); }

  std::int64_t gram_value(Vertex i, Vertex j) const {
    graph_.check_vertex(i);
    graph_.check_vertex(j);
    if (i == j)
      return gram_.diag;
    return graph_.adjacent(i, j) ? gram_.adj : gram_.non;
  }

  std::int64_t inner(const std::vector<std::int64_t> &x, Vertex i) const { return shifted().inner(x, i); }

private:
  void init() {
    spectrum_ = srgb::spectrum(params_);
    gram_ = gram_entries(params_, spectrum_);
    dist2_ = distance_squares(params_, spectrum_);
  }

  Graph graph_;
  SrgParams params_;
  Spectrum spectrum_;
  GramEntries gram_;
  DistanceSquares dist2_;
};

inline std::int64_t dot(const std::vector<std::int64_t> &a, const std::vector<std::int64_t> &b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s = checked::add(s, checked::mul(a[i], b[i]));
  return s;
}

/// ‖y_i - y_j‖² from the adjacency rows alone (entrywise, no closed forms).
inline std::int64_t explicit_distance_squared(const ShiftedAdjacency &y, Vertex i, Vertex j) {
  const auto &g = y.graph();
  if (i == j)
    return 0;
  const std::int64_t a = g.adjacent(i, j) ? 1 : 0;
  const Bitset &ri = g.row(i), &rj = g.row(j);
  std::int64_t sym = 0;
  for (std::size_t w = 0; w < ri.word_count(); ++w)
    sym += std::popcount(ri.data()[w] ^ rj.data()[w]);
  // Coordinates i and j are handled separately; the xor counted them once each when adjacent.
  sym -= 2 * a;
  const std::int64_t s = y.shift();
  return sym + (-s - a) * (-s - a) + (a + s) * (a + s);
}

struct TwoDistanceReport {
  std::uint64_t pairs_checked = 0;
  std::uint64_t adjacent_pairs = 0;
  std::uint64_t non_adjacent_pairs = 0;
};

class MismatchWitness : public Error {
public:
  MismatchWitness(Vertex i, Vertex j, std::int64_t got, std::int64_t expected)
      : Error("pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") has squared distance " +
              std::to_string(got) + ", expected " + std::to_string(expected)),
        i(i), j(j), got(got), expected(expected) {}
  Vertex i, j;
  std::int64_t got, expected;
};

/// Unbiased draw in [0, n) from a 64-bit engine; identical on every platform.
inline std::uint64_t uniform_below(std::mt19937_64 &rng, std::uint64_t n) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t x;
  do
    x = rng();
  while (x >= limit);
  return x % n;
}

struct PairSampling {
  /// 0 means every distinct pair.
  std::uint64_t samples = 0;
  std::uint64_t seed = 1;
};

inline TwoDistanceReport verify_two_distance(const EuclideanRep &rep, PairSampling policy = {}) {
  const auto y = rep.shifted();
  const auto n = static_cast<Vertex>(rep.vertex_count());
  TwoDistanceReport report;
  auto check = [&](Vertex i, Vertex j) {
    const bool adj = rep.graph().adjacent(i, j);
    const auto got = explicit_distance_squared(y, i, j);
    const auto expected = adj ? rep.dist2().adj : rep.dist2().non;
    if (got != expected)
      throw MismatchWitness(i, j, got, expected);
    ++report.pairs_checked;
    ++(adj ? report.adjacent_pairs : report.non_adjacent_pairs);
  };
  if (policy.samples == 0) {
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j)
        check(i, j);
    return report;
  }
  std::mt19937_64 rng(policy.seed);
  while (report.pairs_checked < policy.samples) {
    const auto i = static_cast<Vertex>(uniform_below(rng, n));
    const auto j = static_cast<Vertex>(uniform_below(rng, n));
    if (i != j)
      check(i, j);
  }
  return report;
}

/// Proof that dim P(inner) <= dim P(outer) - 1: <x, y_i> = c on `inner`, and
/// <x, y_witness> != c for a witness in `outer`.
struct DropCertificate {
  std::vector<std::int64_t> x;
  std::int64_t c = 0;
  VertexSet inner; ///< W2
  VertexSet outer; ///< W1
  Vertex witness = 0;
};

struct CertificateCheck {
  bool accepted = false;
  std::optional<Vertex> failing; ///< vertex of W2 with <x, y_i> != c, or the witness itself
  std::string reason;
};

inline CertificateCheck check_drop_certificate(const ShiftedAdjacency &y, const DropCertificate &cert) {
  const std::size_t n = y.vertex_count();
  if (cert.x.size() != n)
    return {false, std::nullopt, "x has length " + std::to_string(cert.x.size()) + ", expected " +
                                     std::to_string(n)};
  cert.inner.check_range(n);
  cert.outer.check_range(n);
  if (!cert.inner.is_subset_of(cert.outer))
    return {false, std::nullopt, "W2 is not a subset of W1"};
  if (!cert.outer.contains(cert.witness))
    return {false, cert.witness, "witness is not in W1"};
  for (auto i : cert.inner)
    if (y.inner(cert.x, i) != cert.c)
      return {false, i, "<x, y_i> != c on W2"};
  if (y.inner(cert.x, cert.witness) == cert.c)
    return {false, cert.witness, "<x, y_witness> equals c"};
  return {true, std::nullopt, {}};
}

inline CertificateCheck check_drop_certificate(const EuclideanRep &rep, const DropCertificate &cert) {
  return check_drop_certificate(rep.shifted(), cert);
}

/// The non-neighbourhood of a lies in the hyperplane <y_a, ·> = μ, and y_a does not.
inline DropCertificate non_neighbourhood_certificate(const EuclideanRep &rep, Vertex a, const VertexSet &outer) {
  DropCertificate cert;
  cert.x = rep.rep_vector(a);
  cert.c = rep.params().mu;
  cert.inner = set_intersection(non_neighbourhood(rep.graph(), a), outer);
  cert.outer = outer;
  cert.witness = a;
  return cert;
}

class BudgetExceeded : public Error {
public:
  using Error::Error;
};

inline constexpr std::size_t default_exact_budget = 1500;

/// M[a][b] = G(i_a, i_b) - G(i_a, i_0) - G(i_0, i_b) + G(i_0, i_0), base i_0 = min W.
template <typename GramSource>
IntMatrix centered_gram(const GramSource &y, const VertexSet &w) {
  w.check_range(y.vertex_count());
  const std::size_t m = w.size() - 1;
  IntMatrix out(m, m);
  const Vertex base = w[0];
  const std::int64_t g00 = y.gram_value(base, base);
  std::vector<std::int64_t> g0(w.size());
  for (std::size_t a = 0; a < w.size(); ++a)
    g0[a] = y.gram_value(w[a], base);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b) {
      const auto v = y.gram_value(w[a + 1], w[b + 1]) - g0[a + 1] - g0[b + 1] + g00;
      out(a, b) = v;
      out(b, a) = v;
    }
  return out;
}

/// Exact affine dimension of {y_i : i in W}.
template <typename GramSource>
std::size_t affine_dim_exact(const GramSource &y, const VertexSet &w,
                             std::size_t budget = default_exact_budget) {
  if (w.empty())
    throw InvalidArgument("affine dimension of an empty set");
  if (w.size() > budget)
    throw BudgetExceeded("|W| = " + std::to_string(w.size()) + " exceeds the exact-arithmetic budget " +
                         std::to_string(budget));
  if (w.size() == 1)
    return 0;
  return exact_rank(centered_gram(y, w));
}

inline const std::vector<std::uint32_t> &default_rank_primes() {
  static const std::vector<std::uint32_t> primes{1000000007U, 998244353U, 1000000009U};
  return primes;
}

/// Lower bound on the affine dimension: the largest rank of the centered Gram
/// matrix modulo the given primes.
template <typename GramSource>
std::size_t affine_dim_lower_mod_p(const GramSource &y, const VertexSet &w,
                                   const std::vector<std::uint32_t> &primes = default_rank_primes()) {
  if (w.empty())
    throw InvalidArgument("affine dimension of an empty set");
  if (w.size() == 1)
    return 0;
  const auto m = centered_gram(y, w);
  std::size_t best = 0;
  for (auto p : primes)
    best = std::max(best, modular_rank(m, p));
  return best;
}

} // namespace srgb

#endif // SRGB_EUCLID_REP_HPP
