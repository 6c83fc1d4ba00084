#ifndef SRGB_SRG2401_HPP
#define SRGB_SRG2401_HPP

#include <string>

#include "graph.hpp"
#include "projective.hpp"

// The srg(2401, 240, 59, 20) on GF(7)^4 from a projective (40, 4, 12, 5) set.
namespace srgb {

inline constexpr std::uint32_t srg2401_field = 7;
inline constexpr std::size_t srg2401_set_size = 40;
inline constexpr std::uint32_t srg2401_h1 = 12;
inline constexpr std::uint32_t srg2401_h2 = 5;
inline const SrgParams srg2401_params{2401, 240, 59, 20};

enum class TwoWeightConstruction {
  /// Line-free union of two 2.A5-orbits. Its Cayley graph has clique number 9.
  icosahedral,
  /// Five pairwise disjoint lines. Same parameters, but each line spans a
  /// 2-dimensional subspace, i.e. a 49-clique.
  partial_spread,
};

inline TwoWeightConstruction parse_construction(const std::string &s) {
  if (s == "icosahedral")
    return TwoWeightConstruction::icosahedral;
  if (s == "spread" || s == "partial-spread")
    return TwoWeightConstruction::partial_spread;
  throw InvalidArgument("unknown construction '" + s + "'");
}

struct Srg2401Build {
  pg::ProjectiveSpace space{srg2401_field};
  pg::TwoWeightSet set;
  pg::Histogram histogram;
  pg::ConnectionSet connection;
  Graph graph;
};

/// Builds the point set, certifies it as two-weight {12, 5}, and forms the Cayley graph.
inline Srg2401Build build_srg2401(TwoWeightConstruction how = TwoWeightConstruction::icosahedral) {
  Srg2401Build b;
  if (how == TwoWeightConstruction::icosahedral) {
    b.set = pg::icosahedral_two_weight_set(b.space, srg2401_set_size, srg2401_h1, srg2401_h2);
  } else {
    b.set.points = pg::union_of_lines(pg::find_partial_spread(b.space, srg2401_set_size / (srg2401_field + 1)));
    b.set.h1 = srg2401_h1;
    b.set.h2 = srg2401_h2;
  }
  b.histogram = pg::verify_two_weight(b.space, b.set.points, b.set.h1, b.set.h2);
  b.connection = pg::connection_set(b.space, b.set.points);
  b.graph = pg::cayley_graph(b.connection);
  return b;
}

} // namespace srgb

#endif // SRGB_SRG2401_HPP
