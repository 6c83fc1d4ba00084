#ifndef SRGB_BORSUK_HPP
#define SRGB_BORSUK_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "checked.hpp"
#include "error.hpp"

// Part-count lower bounds. A subset W whose representation has smaller diameter
// than P(V) is exactly a clique, so P(W) needs at least ceil(|W| / ω) parts of
// smaller diameter; it refutes Borsuk's conjecture in its dimension d when that
// exceeds d + 1.
namespace srgb {

/// ceil(size / omega_upper): no partition of W into fewer cliques exists.
inline std::int64_t min_parts(std::int64_t size, std::int64_t omega_upper) {
  if (size < 1 || omega_upper < 1)
    throw InvalidArgument("min_parts needs size >= 1 and omega >= 1");
  return checked::ceil_div(size, omega_upper);
}

/// Largest p with size / omega > p, the value printed in results tables.
inline std::int64_t strict_part_bound(std::int64_t size, std::int64_t omega_upper) {
  return min_parts(size, omega_upper) - 1;
}

/// Where the numbers in a verdict came from.
struct Provenance {
  std::string dim_source;
  std::string size_source;
  std::string omega_source;
};

struct BorsukVerdict {
  std::int64_t dim = 0;
  std::int64_t size = 0;
  std::int64_t omega_upper = 0;
  std::int64_t min_parts = 0;
  bool is_counterexample = false;
  Provenance provenance;
};

/// `omega_upper` must be a proven bound; an unproven value makes the verdict meaningless.
inline BorsukVerdict verdict(std::int64_t dim, std::int64_t size, std::int64_t omega_upper,
                             Provenance provenance = {}) {
  if (dim < 1)
    throw InvalidArgument("dimension must be at least 1");
  BorsukVerdict v;
  v.dim = dim;
  v.size = size;
  v.omega_upper = omega_upper;
  v.min_parts = min_parts(size, omega_upper);
  v.is_counterexample = v.min_parts > dim + 1;
  v.provenance = std::move(provenance);
  return v;
}

struct TableInput {
  std::string label;
  std::int64_t dim = 0;
  std::string list;
  std::int64_t size = 0;
  std::int64_t omega = 0;
};

struct TableCell {
  std::string list;
  std::int64_t size = 0;
  std::int64_t omega = 0;
  std::int64_t bound = 0; ///< strict_part_bound(size, omega)
};

struct TableRow {
  std::string label;
  std::int64_t dim = 0;
  std::vector<TableCell> cells;
  std::int64_t summary = 0;
};

/// Groups records by (label, dim) in input order, computes each cell's bound and
/// the summary column: max of the row's own bounds and the summaries of all rows below.
inline std::vector<TableRow> table_summarize(const std::vector<TableInput> &records) {
  std::vector<TableRow> rows;
  for (const auto &r : records) {
    if (rows.empty() || rows.back().label != r.label || rows.back().dim != r.dim) {
      if (!rows.empty() && r.dim >= rows.back().dim)
        throw InvalidArgument("table rows must be ordered by decreasing dimension (row " + r.label + ")");
      rows.push_back({r.label, r.dim, {}, 0});
    }
    rows.back().cells.push_back({r.list, r.size, r.omega, strict_part_bound(r.size, r.omega)});
  }
  std::int64_t below = 0;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    std::int64_t own = 0;
    for (const auto &c : it->cells)
      own = std::max(own, c.bound);
    it->summary = std::max(own, below);
    below = it->summary;
  }
  return rows;
}

} // namespace srgb

#endif // SRGB_BORSUK_HPP
