#ifndef SRGB_FAMILIES_HPP
#define SRGB_FAMILIES_HPP

#include <cstdint>
#include <set>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "graph.hpp"

// Small named graphs used as fixtures and sanity references.
namespace srgb::families {

inline Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      e.emplace_back(a, b);
  return Graph::from_edges(n, e);
}

inline Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex a = 0; a + 1 < n; ++a)
    e.emplace_back(a, a + 1);
  return Graph::from_edges(n, e);
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex a = 0; a < n; ++a)
    e.emplace_back(a, static_cast<Vertex>((a + 1) % n));
  return Graph::from_edges(n, e);
}

inline Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex a = 1; a <= leaves; ++a)
    e.emplace_back(0, a);
  return Graph::from_edges(leaves + 1, e);
}

/// Kneser graph K(n, 2): 2-subsets of {0..n-1}, adjacent when disjoint.
/// Vertices in lexicographic order of the pairs.
inline Graph kneser2(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      pairs.emplace_back(a, b);
  std::vector<Edge> e;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      const auto [a, b] = pairs[i];
      const auto [c, d] = pairs[j];
      if (a != c && a != d && b != c && b != d)
        e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  return Graph::from_edges(pairs.size(), e);
}

inline Graph petersen() { return kneser2(5); }

/// Triangular graph T(n): 2-subsets, adjacent when they share one element.
inline Graph triangular(std::size_t n) { return complement(kneser2(n)); }

/// n×n rook's graph K_n □ K_n.
inline Graph rook(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n * n; ++i)
    for (std::size_t j = i + 1; j < n * n; ++j)
      if (i / n == j / n || i % n == j % n)
        e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Graph::from_edges(n * n, e);
}

/// Paley graph on GF(q), q = p (prime, q ≡ 1 mod 4) or q = p² (p odd).
inline Graph paley(std::uint32_t p, bool square_order) {
  if (!square_order) {
    const PrimeField f(p);
    if (p % 4 != 1)
      throw InvalidArgument("Paley graph needs q ≡ 1 (mod 4)");
    std::vector<Edge> e;
    for (Vertex a = 0; a < p; ++a)
      for (Vertex b = a + 1; b < p; ++b)
        if (f.is_square(f.sub(b, a)))
          e.emplace_back(a, b);
    return Graph::from_edges(p, e);
  }
  const QuadraticExtension F(p);
  std::set<QuadraticExtension::Element> squares;
  for (std::uint32_t i = 1; i < F.size(); ++i) {
    const auto x = F.element(i);
    squares.insert(F.mul(x, x));
  }
  std::vector<Edge> e;
  for (std::uint32_t a = 0; a < F.size(); ++a)
    for (std::uint32_t b = a + 1; b < F.size(); ++b)
      if (squares.count(F.sub(F.element(b), F.element(a))))
        e.emplace_back(a, b);
  return Graph::from_edges(F.size(), e);
}

/// Clebsch graph (folded 5-cube): 4-bit vectors, adjacent when they differ in
/// one bit or in all four.
inline Graph clebsch() {
  std::vector<Edge> e;
  for (Vertex a = 0; a < 16; ++a)
    for (Vertex b = a + 1; b < 16; ++b) {
      const int d = std::popcount(a ^ b);
      if (d == 1 || d == 4)
        e.emplace_back(a, b);
    }
  return Graph::from_edges(16, e);
}

/// Complete multipartite graph with `parts` parts of size `size`.
inline Graph complete_multipartite(std::size_t parts, std::size_t size) {
  std::vector<Edge> e;
  const std::size_t n = parts * size;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (a / size != b / size)
        e.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  return Graph::from_edges(n, e);
}

} // namespace srgb::families

#endif // SRGB_FAMILIES_HPP
