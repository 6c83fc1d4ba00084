#ifndef SRGB_IO_HPP
#define SRGB_IO_HPP

#include <charconv>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "borsuk.hpp"
#include "error.hpp"
#include "euclid_rep.hpp"
#include "graph.hpp"
#include "partition.hpp"

// Text formats. All vertex labels in files are 1-based; lines end in LF.
namespace srgb::io {

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r'))
      ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r')
      ++j;
    if (j > i)
      out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::int64_t parse_int(std::string_view tok, std::size_t line) {
  std::int64_t v = 0;
  const auto *end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc() || ptr != end)
    throw FormatError("expected an integer, got '" + std::string(tok) + "'", line);
  return v;
}

inline Vertex parse_label(std::string_view tok, std::size_t n, std::size_t line) {
  const auto v = parse_int(tok, line);
  if (v < 1 || static_cast<std::size_t>(v) > n)
    throw FormatError("vertex " + std::string(tok) + " out of range 1.." + std::to_string(n), line);
  return static_cast<Vertex>(v - 1);
}

} // namespace detail

/// Reader diagnostics that do not abort parsing.
struct ReadDiagnostics {
  std::size_t duplicate_edges = 0;
  std::size_t header_edge_count = 0;
  std::size_t edge_lines = 0;
};

// --- DIMACS ---------------------------------------------------------------------

/// `p edge <v> <e>` then `e <i> <j>` with i < j, edges in lexicographic order.
inline void write_dimacs(std::ostream &out, const Graph &g) {
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (std::size_t a = 0; a < g.vertex_count(); ++a)
    g.row(static_cast<Vertex>(a)).for_each([&](std::size_t b) {
      if (b > a)
        out << "e " << a + 1 << ' ' << b + 1 << '\n';
    });
}

inline Graph read_dimacs(std::istream &in, ReadDiagnostics *diag = nullptr) {
  ReadDiagnostics d;
  std::string line;
  std::size_t lineno = 0;
  std::size_t n = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    const auto tok = detail::split_ws(line);
    if (tok.empty() || tok[0] == "c")
      continue;
    if (tok[0] == "p") {
      if (have_header || tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col"))
        throw FormatError("malformed DIMACS header", lineno);
      const auto v = detail::parse_int(tok[2], lineno);
      const auto e = detail::parse_int(tok[3], lineno);
      if (v < 1 || e < 0)
        throw FormatError("malformed DIMACS header", lineno);
      n = static_cast<std::size_t>(v);
      d.header_edge_count = static_cast<std::size_t>(e);
      have_header = true;
    } else if (tok[0] == "e") {
      if (!have_header)
        throw FormatError("edge line before the 'p edge' header", lineno);
      if (tok.size() != 3)
        throw FormatError("malformed edge line", lineno);
      const auto a = detail::parse_label(tok[1], n, lineno);
      const auto b = detail::parse_label(tok[2], n, lineno);
      if (a == b)
        throw FormatError("loop edge", lineno);
      edges.emplace_back(std::min(a, b), std::max(a, b));
      ++d.edge_lines;
    } else {
      throw FormatError("unknown DIMACS line type '" + std::string(tok[0]) + "'", lineno);
    }
  }
  if (!have_header)
    throw FormatError("missing 'p edge' header");
  std::sort(edges.begin(), edges.end());
  const auto before = edges.size();
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  d.duplicate_edges = before - edges.size();
  if (diag)
    *diag = d;
  return Graph::from_edges(n, edges);
}

// --- dreadnaut ------------------------------------------------------------------

/// `n=<v> $=1 g`, then `i: j k ...;` for each vertex with a neighbour j > i, then `.`.
inline void write_dre(std::ostream &out, const Graph &g) {
  out << "n=" << g.vertex_count() << " $=1 g\n";
  for (std::size_t a = 0; a < g.vertex_count(); ++a) {
    bool first = true;
    g.row(static_cast<Vertex>(a)).for_each([&](std::size_t b) {
      if (b <= a)
        return;
      if (first) {
        out << a + 1 << ':';
        first = false;
      }
      out << ' ' << b + 1;
    });
    if (!first)
      out << ";\n";
  }
  out << ".\n";
}

// --- edge list ------------------------------------------------------------------

/// First line `<v>`, then `<i> <j>` per edge.
inline void write_edges(std::ostream &out, const Graph &g) {
  out << g.vertex_count() << '\n';
  for (std::size_t a = 0; a < g.vertex_count(); ++a)
    g.row(static_cast<Vertex>(a)).for_each([&](std::size_t b) {
      if (b > a)
        out << a + 1 << ' ' << b + 1 << '\n';
    });
}

inline Graph read_edges(std::istream &in, ReadDiagnostics *diag = nullptr) {
  ReadDiagnostics d;
  std::string line;
  std::size_t lineno = 0;
  std::size_t n = 0;
  bool have_count = false;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    const auto tok = detail::split_ws(line);
    if (tok.empty() || tok[0].front() == '#')
      continue;
    if (!have_count) {
      if (tok.size() != 1)
        throw FormatError("first line must hold the vertex count", lineno);
      const auto v = detail::parse_int(tok[0], lineno);
      if (v < 1)
        throw FormatError("vertex count must be positive", lineno);
      n = static_cast<std::size_t>(v);
      have_count = true;
      continue;
    }
    if (tok.size() != 2)
      throw FormatError("edge line must hold two vertices", lineno);
    const auto a = detail::parse_label(tok[0], n, lineno);
    const auto b = detail::parse_label(tok[1], n, lineno);
    if (a == b)
      throw FormatError("loop edge", lineno);
    edges.emplace_back(std::min(a, b), std::max(a, b));
    ++d.edge_lines;
  }
  if (!have_count)
    throw FormatError("empty edge-list file");
  std::sort(edges.begin(), edges.end());
  const auto before = edges.size();
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  d.duplicate_edges = before - edges.size();
  d.header_edge_count = edges.size();
  if (diag)
    *diag = d;
  return Graph::from_edges(n, edges);
}

enum class GraphFormat { dimacs, dre, edges };

inline GraphFormat parse_format(std::string_view name) {
  if (name == "dimacs")
    return GraphFormat::dimacs;
  if (name == "dre")
    return GraphFormat::dre;
  if (name == "edges")
    return GraphFormat::edges;
  throw InvalidArgument("unknown graph format '" + std::string(name) + "'");
}

inline void write_graph(std::ostream &out, const Graph &g, GraphFormat f) {
  switch (f) {
  case GraphFormat::dimacs:
    write_dimacs(out, g);
    break;
  case GraphFormat::dre:
    write_dre(out, g);
    break;
  case GraphFormat::edges:
    write_edges(out, g);
    break;
  }
}

/// Reads DIMACS when the first significant line starts with `c` or `p`, else an edge list.
inline Graph read_graph(std::istream &in, ReadDiagnostics *diag = nullptr) {
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  std::istringstream probe(text);
  std::string line;
  bool dimacs = false;
  while (std::getline(probe, line)) {
    const auto tok = detail::split_ws(line);
    if (tok.empty())
      continue;
    dimacs = tok[0] == "c" || tok[0] == "p";
    break;
  }
  std::istringstream src(text);
  return dimacs ? read_dimacs(src, diag) : read_edges(src, diag);
}

// --- vertex lists -----------------------------------------------------------------

/// Space-separated 1-based labels; runs of three or more consecutive labels become `a-b`.
inline std::string format_vertex_list(const VertexSet &s) {
  std::string out;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t j = i;
    while (j + 1 < s.size() && s[j + 1] == s[j] + 1)
      ++j;
    if (!out.empty())
      out += ' ';
    if (j - i >= 2) {
      out += std::to_string(s[i] + 1) + '-' + std::to_string(s[j] + 1);
    } else {
      out += std::to_string(s[i] + 1);
      if (j > i)
        out += ' ' + std::to_string(s[j] + 1);
    }
    i = j + 1;
  }
  return out;
}

inline VertexSet parse_vertex_list(const std::vector<std::string_view> &tokens, std::size_t n,
                                   std::size_t line) {
  std::vector<Vertex> out;
  for (auto t : tokens) {
    const auto dash = t.find('-');
    if (dash == std::string_view::npos || dash == 0) {
      out.push_back(detail::parse_label(t, n, line));
      continue;
    }
    const auto a = detail::parse_label(t.substr(0, dash), n, line);
    const auto b = detail::parse_label(t.substr(dash + 1), n, line);
    if (b < a)
      throw FormatError("descending range " + std::string(t), line);
    for (Vertex v = a; v <= b; ++v)
      out.push_back(v);
  }
  return VertexSet::from_unsorted(std::move(out));
}

// --- partitions -------------------------------------------------------------------

inline void write_partition(std::ostream &out, const RegularPartition &p) {
  out << "B1: " << format_vertex_list(p.b1) << '\n';
  out << "B2: " << format_vertex_list(p.b2) << '\n';
  out << "B3: " << format_vertex_list(p.b3) << '\n';
  out << "C: " << format_vertex_list(p.c) << '\n';
}

/// Four lines `B1: ...`, `B2: ...`, `B3: ...`, `C: ...` (any order, each once).
inline RegularPartition read_partition(std::istream &in, std::size_t n) {
  RegularPartition p;
  std::array<bool, 4> seen{};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto colon = line.find(':');
    auto head = detail::split_ws(std::string_view(line).substr(0, colon));
    if (head.empty())
      continue;
    if (colon == std::string::npos || head.size() != 1)
      throw FormatError("expected 'B1:', 'B2:', 'B3:' or 'C:'", lineno);
    int idx = head[0] == "B1" ? 0 : head[0] == "B2" ? 1 : head[0] == "B3" ? 2 : head[0] == "C" ? 3 : -1;
    if (idx < 0)
      throw FormatError("unknown block name '" + std::string(head[0]) + "'", lineno);
    if (seen[static_cast<std::size_t>(idx)])
      throw FormatError("block " + std::string(head[0]) + " given twice", lineno);
    seen[static_cast<std::size_t>(idx)] = true;
    auto set = parse_vertex_list(detail::split_ws(std::string_view(line).substr(colon + 1)), n, lineno);
    (idx == 0 ? p.b1 : idx == 1 ? p.b2 : idx == 2 ? p.b3 : p.c) = std::move(set);
  }
  for (std::size_t i = 0; i < 4; ++i)
    if (!seen[i])
      throw FormatError(std::string("missing block ") + (i < 3 ? "B" + std::to_string(i + 1) : "C"));
  return p;
}

// --- certificates -------------------------------------------------------------------

/// `drop v=<v> c=<c> witness=<w>`, `x <vertex> <value>` per nonzero entry, `W2 ...`,
/// and `W1 ...` only when W1 is not the whole vertex set.
inline void write_certificate(std::ostream &out, const DropCertificate &cert) {
  const std::size_t n = cert.x.size();
  out << "drop v=" << n << " c=" << cert.c << " witness=" << cert.witness + 1 << '\n';
  for (std::size_t i = 0; i < n; ++i)
    if (cert.x[i] != 0)
      out << "x " << i + 1 << ' ' << cert.x[i] << '\n';
  out << "W2";
  if (!cert.inner.empty())
    out << ' ' << format_vertex_list(cert.inner);
  out << '\n';
  if (cert.outer.size() != n)
    out << "W1 " << format_vertex_list(cert.outer) << '\n';
}

inline DropCertificate read_certificate(std::istream &in) {
  DropCertificate cert;
  std::string line;
  std::size_t lineno = 0;
  std::size_t n = 0;
  bool have_header = false, have_w2 = false, have_w1 = false;
  auto field = [&](std::string_view tok, std::string_view key) -> std::int64_t {
    if (tok.substr(0, key.size()) != key)
      throw FormatError("expected '" + std::string(key) + "...'", lineno);
    return detail::parse_int(tok.substr(key.size()), lineno);
  };
  while (std::getline(in, line)) {
    ++lineno;
    const auto tok = detail::split_ws(line);
    if (tok.empty())
      continue;
    if (!have_header) {
      if (tok.size() != 4 || tok[0] != "drop")
        throw FormatError("expected 'drop v=<v> c=<c> witness=<w>'", lineno);
      const auto v = field(tok[1], "v=");
      if (v < 1)
        throw FormatError("vertex count must be positive", lineno);
      n = static_cast<std::size_t>(v);
      cert.c = field(tok[2], "c=");
      if (tok[3].substr(0, 8) != "witness=")
        throw FormatError("expected 'witness=<w>'", lineno);
      cert.witness = detail::parse_label(tok[3].substr(8), n, lineno);
      cert.x.assign(n, 0);
      have_header = true;
    } else if (tok[0] == "x") {
      if (tok.size() != 3)
        throw FormatError("expected 'x <vertex> <value>'", lineno);
      cert.x[detail::parse_label(tok[1], n, lineno)] = detail::parse_int(tok[2], lineno);
    } else if (tok[0] == "W2" || tok[0] == "W1") {
      const bool w2 = tok[0] == "W2";
      if (w2 ? have_w2 : have_w1)
        throw FormatError(std::string(tok[0]) + " given twice", lineno);
      auto set = parse_vertex_list({tok.begin() + 1, tok.end()}, n, lineno);
      (w2 ? cert.inner : cert.outer) = std::move(set);
      (w2 ? have_w2 : have_w1) = true;
    } else {
      throw FormatError("unknown certificate line '" + std::string(tok[0]) + "'", lineno);
    }
  }
  if (!have_header || !have_w2)
    throw FormatError("incomplete certificate");
  if (!have_w1)
    cert.outer = VertexSet::range(0, static_cast<Vertex>(n));
  return cert;
}

// --- results tables ---------------------------------------------------------------

/// CSV with header `label,dim,list,size,omega`.
inline std::vector<TableInput> read_table_csv(std::istream &in) {
  std::vector<TableInput> out;
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    if (line.empty() || line.front() == '#')
      continue;
    std::vector<std::string> cols;
    std::stringstream ss(line);
    std::string c;
    while (std::getline(ss, c, ','))
      cols.push_back(c);
    if (!header) {
      if (cols != std::vector<std::string>{"label", "dim", "list", "size", "omega"})
        throw FormatError("expected header 'label,dim,list,size,omega'", lineno);
      header = true;
      continue;
    }
    if (cols.size() != 5)
      throw FormatError("expected 5 columns", lineno);
    out.push_back({cols[0], detail::parse_int(cols[1], lineno), cols[2], detail::parse_int(cols[3], lineno),
                   detail::parse_int(cols[4], lineno)});
  }
  if (!header)
    throw FormatError("empty table file");
  return out;
}

inline void write_table_csv(std::ostream &out, const std::vector<TableRow> &rows) {
  out << "label,dim,list,size,omega,bound,summary\n";
  for (const auto &r : rows)
    for (const auto &c : r.cells)
      out << r.label << ',' << r.dim << ',' << c.list << ',' << c.size << ',' << c.omega << ',' << c.bound << ','
          << r.summary << '\n';
}

/// One line per row: label, dim, `size/omega > bound` per list, summary.
inline void write_table_text(std::ostream &out, const std::vector<TableRow> &rows) {
  std::vector<std::string> lists;
  for (const auto &r : rows)
    for (const auto &c : r.cells)
      if (std::find(lists.begin(), lists.end(), c.list) == lists.end())
        lists.push_back(c.list);
  auto pad = [](std::string s, std::size_t w) {
    if (s.size() < w)
      s.append(w - s.size(), ' ');
    return s;
  };
  std::string head = pad("Z", 6) + pad("Dim", 6);
  for (const auto &l : lists)
    head += pad(l, 20);
  out << head << ">\n";
  for (const auto &r : rows) {
    std::string line = pad(r.label, 6) + pad(std::to_string(r.dim), 6);
    for (const auto &l : lists) {
      std::string cell;
      for (const auto &c : r.cells)
        if (c.list == l)
          cell = std::to_string(c.size) + "/" + std::to_string(c.omega) + " > " + std::to_string(c.bound);
      line += pad(cell, 20);
    }
    out << line << r.summary << '\n';
  }
}

} // namespace srgb::io

#endif // SRGB_IO_HPP
