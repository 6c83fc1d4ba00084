#ifndef SRGB_PROJECTIVE_HPP
#define SRGB_PROJECTIVE_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "graph.hpp"

// PG(3,q) over a prime field, projective two-weight sets, and the Cayley
// graphs on GF(q)^4 they define.
namespace srgb::pg {

using Vec4 = std::array<std::uint32_t, 4>;

inline constexpr std::uint32_t max_order = 31;

inline void check_order(std::uint32_t q) {
  if (!is_prime(q))
    throw InvalidArgument("field order " + std::to_string(q) + " is not prime");
  if (q > max_order)
    throw InvalidArgument("field order " + std::to_string(q) + " exceeds " + std::to_string(max_order));
}

inline std::uint32_t point_count(std::uint32_t q) { return (q * q * q * q - 1) / (q - 1); }

/// Lexicographic index of a vector, most significant coordinate first.
inline std::uint32_t vector_index(const Vec4 &x, std::uint32_t q) {
  return ((x[0] * q + x[1]) * q + x[2]) * q + x[3];
}

inline Vec4 vector_at(std::uint32_t index, std::uint32_t q) {
  Vec4 x{};
  for (int i = 3; i >= 0; --i) {
    x[static_cast<std::size_t>(i)] = index % q;
    index /= q;
  }
  return x;
}

inline bool is_zero(const Vec4 &x) { return x == Vec4{0, 0, 0, 0}; }

/// Scales x so that its first nonzero coordinate is 1.
inline Vec4 normalize(const Vec4 &x, const PrimeField &f) {
  for (auto c : x)
    if (c != 0) {
      const auto inv = f.inv(c);
      Vec4 r;
      for (std::size_t i = 0; i < 4; ++i)
        r[i] = f.mul(x[i], inv);
      return r;
    }
  throw InvalidArgument("the zero vector is not a projective point");
}

inline std::uint32_t dot(const Vec4 &x, const Vec4 &y, const PrimeField &f) {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < 4; ++i)
    s += std::uint64_t{x[i]} * y[i];
  return static_cast<std::uint32_t>(s % f.characteristic());
}

/// The points of PG(3,q) as normalized vectors in lexicographic order.
class ProjectiveSpace {
public:
  explicit ProjectiveSpace(std::uint32_t q) : field_((check_order(q), q)) {
    const std::uint32_t total = q * q * q * q;
    index_of_vector_.assign(total, npos);
    for (std::uint32_t i = 1; i < total; ++i) {
      const Vec4 x = vector_at(i, q);
      if (normalize(x, field_) == x) {
        index_of_vector_[i] = static_cast<std::uint32_t>(points_.size());
        points_.push_back(x);
      }
    }
  }

  static constexpr std::uint32_t npos = ~std::uint32_t{0};

  std::uint32_t order() const { return field_.characteristic(); }
  const PrimeField &field() const { return field_; }
  const std::vector<Vec4> &points() const { return points_; }
  std::size_t size() const { return points_.size(); }

  /// Index of the projective point spanned by a nonzero vector.
  std::uint32_t index_of(const Vec4 &x) const {
    return index_of_vector_[vector_index(normalize(x, field_), order())];
  }

  /// Sorted point indices of the line through two distinct points.
  std::vector<std::uint32_t> line_through(std::uint32_t a, std::uint32_t b) const {
    if (a == b)
      throw InvalidArgument("a line needs two distinct points");
    const auto &f = field_;
    const std::uint32_t q = order();
    std::vector<std::uint32_t> out{a};
    for (std::uint32_t c = 0; c < q; ++c) {
      Vec4 x;
      for (std::size_t i = 0; i < 4; ++i)
        x[i] = f.add(f.mul(c, points_[a][i]), points_[b][i]);
      out.push_back(index_of(x));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Every line of PG(3,q), each as q+1 sorted point indices; lines sorted lexicographically.
  std::vector<std::vector<std::uint32_t>> lines() const {
    // Each line is the row space of exactly one 2x4 matrix in reduced row echelon form.
    const std::uint32_t q = order();
    std::vector<std::vector<std::uint32_t>> out;
    for (std::size_t p0 = 0; p0 < 4; ++p0)
      for (std::size_t p1 = p0 + 1; p1 < 4; ++p1) {
        std::vector<std::size_t> free0, free1;
        for (std::size_t j = p0 + 1; j < 4; ++j)
          if (j != p1)
            free0.push_back(j);
        for (std::size_t j = p1 + 1; j < 4; ++j)
          free1.push_back(j);
        const std::size_t nfree = free0.size() + free1.size();
        std::uint64_t combos = 1;
        for (std::size_t i = 0; i < nfree; ++i)
          combos *= q;
        for (std::uint64_t m = 0; m < combos; ++m) {
          Vec4 r0{}, r1{};
          r0[p0] = 1;
          r1[p1] = 1;
          std::uint64_t rest = m;
          for (auto j : free0) {
            r0[j] = static_cast<std::uint32_t>(rest % q);
            rest /= q;
          }
          for (auto j : free1) {
            r1[j] = static_cast<std::uint32_t>(rest % q);
            rest /= q;
          }
          out.push_back(line_through(index_of(r0), index_of(r1)));
        }
      }
    std::sort(out.begin(), out.end());
    return out;
  }

private:
  PrimeField field_;
  std::vector<Vec4> points_;
  std::vector<std::uint32_t> index_of_vector_;
};

inline std::vector<Vec4> pg_points(std::uint32_t q) { return ProjectiveSpace(q).points(); }

using Line = std::vector<std::uint32_t>;

class GreedyFailed : public Error {
public:
  using Error::Error;
};

/// `count` pairwise disjoint lines. Greedy scan over the canonical line list,
/// falling back to a backtracking search over the same order.
inline std::vector<Line> find_partial_spread(const ProjectiveSpace &space, std::size_t count) {
  const std::uint32_t q = space.order();
  if (count * (q + 1) > space.size())
    throw InvalidArgument("a partial spread of " + std::to_string(count) +
                          " lines does not fit in PG(3," + std::to_string(q) + ")");
  const auto all = space.lines();
  std::vector<char> used(space.size(), 0);
  auto disjoint = [&](const Line &l) {
    return std::none_of(l.begin(), l.end(), [&](auto p) { return used[p] != 0; });
  };
  auto mark = [&](const Line &l, char v) {
    for (auto p : l)
      used[p] = v;
  };

  std::vector<Line> chosen;
  for (const auto &l : all) {
    if (chosen.size() == count)
      break;
    if (disjoint(l)) {
      chosen.push_back(l);
      mark(l, 1);
    }
  }
  if (chosen.size() == count)
    return chosen;

  std::fill(used.begin(), used.end(), 0);
  std::vector<std::size_t> stack;
  std::size_t next = 0;
  while (true) {
    if (stack.size() == count) {
      std::vector<Line> out;
      for (auto i : stack)
        out.push_back(all[i]);
      return out;
    }
    bool advanced = false;
    for (std::size_t i = next; i + (count - stack.size()) <= all.size(); ++i)
      if (disjoint(all[i])) {
        stack.push_back(i);
        mark(all[i], 1);
        next = i + 1;
        advanced = true;
        break;
      }
    if (advanced)
      continue;
    if (stack.empty())
      throw GreedyFailed("no partial spread of " + std::to_string(count) + " lines in PG(3," +
                         std::to_string(q) + ")");
    mark(all[stack.back()], 0);
    next = stack.back() + 1;
    stack.pop_back();
  }
}

inline std::vector<std::uint32_t> union_of_lines(const std::vector<Line> &lines) {
  std::vector<std::uint32_t> out;
  for (const auto &l : lines)
    out.insert(out.end(), l.begin(), l.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Intersection size -> number of hyperplanes with that intersection size.
using Histogram = std::map<std::uint32_t, std::uint32_t>;

/// |H ∩ S| for every hyperplane H, hyperplanes indexed like points (normalized dual vectors).
inline std::vector<std::uint32_t> hyperplane_intersections(const ProjectiveSpace &space,
                                                           const std::vector<std::uint32_t> &set) {
  if (set.empty())
    throw InvalidArgument("point set is empty");
  std::vector<std::uint32_t> counts(space.size(), 0);
  for (std::size_t h = 0; h < space.size(); ++h)
    for (auto p : set)
      if (dot(space.points()[h], space.points()[p], space.field()) == 0)
        ++counts[h];
  return counts;
}

inline Histogram intersection_histogram(const ProjectiveSpace &space,
                                        const std::vector<std::uint32_t> &set) {
  Histogram h;
  for (auto c : hyperplane_intersections(space, set))
    ++h[c];
  return h;
}

class NotTwoWeight : public Error {
public:
  NotTwoWeight(Vec4 hyperplane, std::uint32_t count)
      : Error("hyperplane (" + std::to_string(hyperplane[0]) + "," + std::to_string(hyperplane[1]) +
              "," + std::to_string(hyperplane[2]) + "," + std::to_string(hyperplane[3]) + ") meets the set in " +
              std::to_string(count) + " points"),
        hyperplane(hyperplane), count(count) {}
  Vec4 hyperplane;
  std::uint32_t count;
};

/// Succeeds iff every hyperplane meets the set in h1 or h2 points.
inline Histogram verify_two_weight(const ProjectiveSpace &space, const std::vector<std::uint32_t> &set,
                                   std::uint32_t h1, std::uint32_t h2) {
  const auto counts = hyperplane_intersections(space, set);
  Histogram hist;
  for (std::size_t h = 0; h < counts.size(); ++h) {
    if (counts[h] != h1 && counts[h] != h2)
      throw NotTwoWeight(space.points()[h], counts[h]);
    ++hist[counts[h]];
  }
  return hist;
}

/// Number of lines of PG(3,q) entirely contained in the set.
inline std::size_t contained_lines(const ProjectiveSpace &space, const std::vector<std::uint32_t> &set) {
  std::vector<char> member(space.size(), 0);
  for (auto p : set)
    member[p] = 1;
  std::set<Line> seen;
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      auto l = space.line_through(set[i], set[j]);
      if (std::all_of(l.begin(), l.end(), [&](auto p) { return member[p] != 0; }))
        seen.insert(std::move(l));
    }
  return seen.size();
}

/// Nonzero vectors of GF(q)^4 closed under nonzero scalars, sorted by vector index.
struct ConnectionSet {
  std::uint32_t q = 0;
  std::vector<Vec4> vectors;
};

inline ConnectionSet connection_set(const ProjectiveSpace &space, const std::vector<std::uint32_t> &set) {
  const auto &f = space.field();
  const std::uint32_t q = space.order();
  ConnectionSet d{q, {}};
  for (auto p : set)
    for (std::uint32_t c = 1; c < q; ++c) {
      Vec4 x;
      for (std::size_t i = 0; i < 4; ++i)
        x[i] = f.mul(c, space.points()[p][i]);
      d.vectors.push_back(x);
    }
  std::sort(d.vectors.begin(), d.vectors.end(),
            [q](const Vec4 &a, const Vec4 &b) { return vector_index(a, q) < vector_index(b, q); });
  d.vectors.erase(std::unique(d.vectors.begin(), d.vectors.end()), d.vectors.end());
  return d;
}

/// Cayley graph on GF(q)^4: vertex i is the i-th vector in lexicographic order,
/// x ~ y iff x - y lies in the connection set.
inline Graph cayley_graph(const ConnectionSet &d) {
  const std::uint32_t q = d.q;
  check_order(q);
  const PrimeField f(q);
  const std::uint32_t n = q * q * q * q;
  std::vector<char> member(n, 0);
  for (const auto &x : d.vectors) {
    if (is_zero(x))
      throw InvalidArgument("connection set contains the zero vector");
    member[vector_index(x, q)] = 1;
  }
  for (const auto &x : d.vectors) {
    Vec4 m{f.neg(x[0]), f.neg(x[1]), f.neg(x[2]), f.neg(x[3])};
    if (!member[vector_index(m, q)])
      throw InvalidArgument("connection set is not closed under negation");
  }
  std::vector<Bitset> rows(n, Bitset(n));
  for (std::uint32_t i = 0; i < n; ++i) {
    const Vec4 x = vector_at(i, q);
    for (const auto &dv : d.vectors) {
      Vec4 y;
      for (std::size_t c = 0; c < 4; ++c)
        y[c] = f.add(x[c], dv[c]);
      rows[i].set(vector_index(y, q));
    }
  }
  return Graph::from_rows(std::move(rows));
}

// --- line-free two-weight sets from the binary icosahedral group -------------

using Matrix2 = std::array<QuadraticExtension::Element, 4>; ///< row-major 2x2

inline Matrix2 multiply(const QuadraticExtension &F, const Matrix2 &a, const Matrix2 &b) {
  return {F.add(F.mul(a[0], b[0]), F.mul(a[1], b[2])), F.add(F.mul(a[0], b[1]), F.mul(a[1], b[3])),
          F.add(F.mul(a[2], b[0]), F.mul(a[3], b[2])), F.add(F.mul(a[2], b[1]), F.mul(a[3], b[3]))};
}

/// SL(2,5) ≅ 2.A5 as a subgroup of SL(2,p²), p ≥ 7.
///
/// Generated by A of order 4 and B of order 6 with tr(AB) a root of t² - t - 1,
/// so AB has order 10; the search over B is deterministic.
inline std::vector<Matrix2> binary_icosahedral_group(const QuadraticExtension &F) {
  const std::uint32_t p = F.base().characteristic();
  if (p < 7)
    throw InvalidArgument("binary icosahedral group needs characteristic at least 7");
  const auto zero = F.zero(), one = F.one();
  const Matrix2 a{zero, F.neg(one), one, zero};
  const Matrix2 identity{one, zero, zero, one};

  for (std::uint32_t ti = 0; ti < F.size(); ++ti) {
    const auto tau = F.element(ti);
    if (F.sub(F.sub(F.mul(tau, tau), tau), one) != zero)
      continue;
    for (std::uint32_t xi = 0; xi < F.size(); ++xi)
      for (std::uint32_t zi = 0; zi < F.size(); ++zi) {
        const auto x = F.element(xi), z = F.element(zi);
        const auto w = F.sub(one, x);
        const auto y = F.add(z, tau); // tr(AB) = y - z
        if (F.sub(F.mul(x, w), F.mul(y, z)) != one)
          continue;
        const Matrix2 b{x, y, z, w};
        std::set<Matrix2> group{identity};
        std::vector<Matrix2> frontier{identity};
        while (!frontier.empty() && group.size() <= 120) {
          std::vector<Matrix2> next;
          for (const auto &g : frontier)
            for (const auto *gen : {&a, &b}) {
              auto h = multiply(F, g, *gen);
              if (group.insert(h).second)
                next.push_back(h);
            }
          frontier = std::move(next);
        }
        if (group.size() == 120)
          return {group.begin(), group.end()};
      }
  }
  throw Error("no SL(2,5) subgroup found in SL(2," + std::to_string(p) + "^2)");
}

/// GF(p²)² viewed as GF(p)⁴: (a0 + a1 t, b0 + b1 t) -> (a0, a1, b0, b1).
inline Vec4 apply(const QuadraticExtension &F, const Matrix2 &g, const Vec4 &x) {
  const QuadraticExtension::Element u{x[0], x[1]}, v{x[2], x[3]};
  const auto nu = F.add(F.mul(g[0], u), F.mul(g[1], v));
  const auto nv = F.add(F.mul(g[2], u), F.mul(g[3], v));
  return {nu.a, nu.b, nv.a, nv.b};
}

/// Orbits of a matrix group on the points of PG(3,p), in order of their smallest point.
inline std::vector<std::vector<std::uint32_t>> point_orbits(const ProjectiveSpace &space,
                                                            const QuadraticExtension &F,
                                                            const std::vector<Matrix2> &group) {
  std::vector<char> seen(space.size(), 0);
  std::vector<std::vector<std::uint32_t>> orbits;
  for (std::uint32_t p = 0; p < space.size(); ++p) {
    if (seen[p])
      continue;
    std::set<std::uint32_t> orbit;
    for (const auto &g : group)
      orbit.insert(space.index_of(apply(F, g, space.points()[p])));
    for (auto o : orbit)
      seen[o] = 1;
    orbits.emplace_back(orbit.begin(), orbit.end());
  }
  return orbits;
}

struct TwoWeightSet {
  std::vector<std::uint32_t> points; ///< sorted point indices
  std::uint32_t h1 = 0;
  std::uint32_t h2 = 0;
};

/// A projective two-weight set of `size` points with intersection numbers {h1, h2}
/// that contains no full line, built as a union of one or two orbits of 2.A5 on
/// PG(3,p). The first qualifying union (orbits in order of smallest point, pairs
/// lexicographic) is returned.
inline TwoWeightSet icosahedral_two_weight_set(const ProjectiveSpace &space, std::size_t size,
                                               std::uint32_t h1, std::uint32_t h2) {
  const QuadraticExtension F(space.order());
  const auto orbits = point_orbits(space, F, binary_icosahedral_group(F));
  auto accept = [&](std::vector<std::uint32_t> s) -> std::optional<TwoWeightSet> {
    std::sort(s.begin(), s.end());
    const auto hist = intersection_histogram(space, s);
    for (const auto &[count, n] : hist)
      if (count != h1 && count != h2)
        return std::nullopt;
    if (contained_lines(space, s) != 0)
      return std::nullopt;
    return TwoWeightSet{std::move(s), h1, h2};
  };
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    if (orbits[i].size() == size)
      if (auto r = accept(orbits[i]))
        return *r;
    for (std::size_t j = i + 1; j < orbits.size(); ++j) {
      if (orbits[i].size() + orbits[j].size() != size)
        continue;
      auto s = orbits[i];
      s.insert(s.end(), orbits[j].begin(), orbits[j].end());
      if (auto r = accept(std::move(s)))
        return *r;
    }
  }
  throw Error("no line-free two-weight union of icosahedral orbits found");
}

} // namespace srgb::pg

#endif // SRGB_PROJECTIVE_HPP
