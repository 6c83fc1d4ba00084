// srgb: build strongly regular graphs, certify two-distance Borsuk counterexamples.
//
// Exit codes: 0 all requested checks passed, 1 a check failed or a claim is
// unproven, 2 usage error. Vertex labels on the command line and in every
// output are 1-based.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <srgb/srgb.hpp>

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Machine and human renderings are produced from the same JSON document.
struct RunReport {
  json doc = json::object();
  Clock::time_point start = Clock::now();

  explicit RunReport(const std::string &subcommand) {
    doc["subcommand"] = subcommand;
    doc["inputs"] = json::object();
    doc["results"] = json::object();
    doc["provenance"] = json::array();
    doc["timings"] = json::object();
  }

  json &inputs() { return doc["inputs"]; }
  json &results() { return doc["results"]; }
  void provenance(const std::string &claim, const std::string &source) {
    doc["provenance"].push_back({{"claim", claim}, {"source", source}});
  }
  void timing(const std::string &what, Clock::time_point since) {
    doc["timings"][what] = std::chrono::duration<double>(Clock::now() - since).count();
  }
};

void render_text(std::ostream &out, const json &j, const std::string &prefix = "") {
  if (j.is_object()) {
    for (const auto &[k, v] : j.items())
      render_text(out, v, prefix.empty() ? k : prefix + "." + k);
  } else if (j.is_array() && !j.empty() && j.front().is_object()) {
    for (std::size_t i = 0; i < j.size(); ++i)
      render_text(out, j[i], prefix + "[" + std::to_string(i) + "]");
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

int finish(RunReport &report, int code, bool as_json) {
  report.timing("total_seconds", report.start);
  report.doc["exit_code"] = code;
  if (as_json)
    std::cout << report.doc.dump(2) << '\n';
  else
    render_text(std::cout, report.doc);
  return code;
}

std::ifstream open_in(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw UsageError("cannot open '" + path + "'");
  return in;
}

std::ofstream open_out(const std::string &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw UsageError("cannot write '" + path + "'");
  return out;
}

srgb::Graph load_graph(const std::string &path) {
  auto in = open_in(path);
  srgb::io::ReadDiagnostics diag;
  auto g = srgb::io::read_graph(in, &diag);
  if (diag.duplicate_edges)
    std::cerr << "warning: " << path << ": " << diag.duplicate_edges << " duplicate edge(s) ignored\n";
  return g;
}

json labels(const srgb::VertexSet &s) {
  json a = json::array();
  for (auto v : s)
    a.push_back(v + 1);
  return a;
}

json spectrum_json(const srgb::Spectrum &sp) {
  return {{"discriminant", sp.discriminant}, {"sqrt_discriminant", sp.sqrt_discriminant},
          {"r", sp.r},
          {"s", sp.s},
          {"f", sp.f}};
}

json params_json(const srgb::SrgParams &p) {
  return {{"v", p.v}, {"k", p.k}, {"lambda", p.lambda}, {"mu", p.mu}};
}

json verdict_json(const srgb::BorsukVerdict &v) {
  return {{"dim", v.dim},
          {"size", v.size},
          {"omega_upper", v.omega_upper},
          {"min_parts", v.min_parts},
          {"is_counterexample", v.is_counterexample},
          {"provenance",
           {{"dim", v.provenance.dim_source},
            {"size", v.provenance.size_source},
            {"omega", v.provenance.omega_source}}}};
}

json clique_json(const srgb::CliqueResult &r) {
  return {{"size", r.size},
          {"witness", labels(r.witness)},
          {"proven_max", r.proven_max},
          {"nodes_explored", r.nodes_explored},
          {"budget_hit", r.budget_hit}};
}

void write_two_weight_points(std::ostream &out, const srgb::pg::ProjectiveSpace &space,
                             const std::vector<std::uint32_t> &pts) {
  for (auto p : pts) {
    const auto &x = space.points()[p];
    out << x[0] << x[1] << x[2] << x[3] << '\n';
  }
}

/// Rows of four coordinates, written either as four digits or space-separated.
std::vector<std::uint32_t> read_two_weight_points(std::istream &in, const srgb::pg::ProjectiveSpace &space) {
  std::vector<std::uint32_t> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<std::uint32_t> coords;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) {
      if (tok.size() == 4 && space.order() <= 10 && coords.empty() && line.find_first_of(" \t") == std::string::npos) {
        for (char c : tok)
          coords.push_back(static_cast<std::uint32_t>(c - '0'));
      } else {
        coords.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
      }
    }
    if (coords.empty())
      continue;
    if (coords.size() != 4)
      throw srgb::FormatError("expected 4 coordinates", lineno);
    srgb::pg::Vec4 x{};
    for (std::size_t i = 0; i < 4; ++i) {
      if (coords[i] >= space.order())
        throw srgb::FormatError("coordinate out of range", lineno);
      x[i] = coords[i];
    }
    if (srgb::pg::is_zero(x))
      throw srgb::FormatError("zero vector is not a point", lineno);
    out.push_back(space.index_of(x));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// --- subcommands -----------------------------------------------------------------

struct CommonOptions {
  bool json = false;
  unsigned threads = std::max(1U, std::thread::hardware_concurrency());
};

struct BuildOptions {
  std::string out;
  std::string format = "dimacs";
  std::string dump_twoweight;
  std::string construction = "icosahedral";
  bool skip_srg_check = false;
};

int run_build(const BuildOptions &o, const CommonOptions &c) {
  RunReport report("build-srg2401");
  report.inputs()["construction"] = o.construction;
  auto t = Clock::now();
  const auto built = srgb::build_srg2401(srgb::parse_construction(o.construction));
  report.timing("construct_seconds", t);
  auto &res = report.results();
  res["two_weight_points"] = built.set.points.size();
  json hist = json::object();
  for (const auto &[count, n] : built.histogram)
    hist[std::to_string(count)] = n;
  res["hyperplane_histogram"] = hist;
  res["lines_in_point_set"] = srgb::pg::contained_lines(built.space, built.set.points);
  res["connection_set_size"] = built.connection.vectors.size();
  res["vertices"] = built.graph.vertex_count();
  res["edges"] = built.graph.edge_count();
  report.provenance("two-weight {12,5}", "verify_two_weight over all 400 hyperplanes of PG(3,7)");

  int code = exit_ok;
  srgb::SrgParams params = srgb::srg2401_params;
  if (!o.skip_srg_check) {
    t = Clock::now();
    try {
      const auto chk = srgb::verify_srg(built.graph, c.threads);
      params = chk.params;
      report.provenance("srg parameters", "verify_srg over all vertex pairs");
    } catch (const srgb::Error &e) {
      res["srg_error"] = e.what();
      return finish(report, exit_failed, c.json);
    }
    report.timing("verify_srg_seconds", t);
    if (!(params == srgb::srg2401_params))
      code = exit_failed;
  } else {
    report.provenance("srg parameters", "assumed from the two-weight certificate (--skip-srg-check)");
  }
  res["srg"] = params_json(params);
  res["spectrum"] = spectrum_json(srgb::spectrum(params));
  report.provenance("spectrum", "closed-form eigenvalues and multiplicity in exact integers");

  if (!o.out.empty()) {
    auto out = open_out(o.out);
    srgb::io::write_graph(out, built.graph, srgb::io::parse_format(o.format));
    report.inputs()["out"] = o.out;
    report.inputs()["format"] = o.format;
  }
  if (!o.dump_twoweight.empty()) {
    auto out = open_out(o.dump_twoweight);
    write_two_weight_points(out, built.space, built.set.points);
    report.inputs()["dump_twoweight"] = o.dump_twoweight;
  }
  return finish(report, code, c.json);
}

struct CertifyOptions {
  std::string subset;
  std::uint64_t omega_budget = 0;
  std::string construction = "icosahedral";
  bool skip_srg_check = false;
};

int run_certify(const CertifyOptions &o, const CommonOptions &c) {
  RunReport report("certify-borsuk");
  report.inputs()["construction"] = o.construction;
  report.inputs()["omega_budget"] = o.omega_budget;
  auto &res = report.results();
  auto t = Clock::now();
  auto built = srgb::build_srg2401(srgb::parse_construction(o.construction));
  srgb::SrgParams params = srgb::srg2401_params;
  if (!o.skip_srg_check)
    params = srgb::verify_srg(built.graph, c.threads).params;
  report.timing("build_seconds", t);
  const srgb::EuclideanRep rep(std::move(built.graph), params);
  const auto &g = rep.graph();
  res["srg"] = params_json(params);
  res["spectrum"] = spectrum_json(rep.spectrum());
  report.provenance("dim P(V) = f", "exact spectrum of the verified parameters");

  // The Cayley graph is vertex-transitive by construction (translations).
  t = Clock::now();
  const auto omega = srgb::max_clique_through_vertex(g, 0, {o.omega_budget});
  report.timing("clique_seconds", t);
  res["clique"] = clique_json(omega);
  report.provenance("clique number", "branch-and-bound through vertex 1; translations make the graph vertex-transitive");
  if (!omega.proven_max) {
    res["verdict"] = "unproven: clique search budget exhausted";
    return finish(report, exit_failed, c.json);
  }

  const auto whole = srgb::verdict(rep.spectrum().f, static_cast<std::int64_t>(g.vertex_count()),
                                   static_cast<std::int64_t>(omega.size),
                                   {"multiplicity f", "|V|", "max_clique_through_vertex(1)"});
  res["verdict"] = verdict_json(whole);
  int code = whole.is_counterexample ? exit_ok : exit_failed;

  if (!o.subset.empty()) {
    const std::string prefix = "nonneighbourhood:";
    if (o.subset.rfind(prefix, 0) != 0)
      throw UsageError("--subset must look like nonneighbourhood:<vertex>");
    const auto a = std::stoul(o.subset.substr(prefix.size()));
    if (a < 1 || a > g.vertex_count())
      throw UsageError("vertex out of range in --subset");
    const auto vertex = static_cast<srgb::Vertex>(a - 1);
    const auto cert = srgb::non_neighbourhood_certificate(rep, vertex, g.all_vertices());
    const auto check = srgb::check_drop_certificate(rep, cert);
    json sub;
    sub["vertex"] = a;
    sub["size"] = cert.inner.size();
    sub["drop_certificate_accepted"] = check.accepted;
    if (!check.accepted) {
      sub["certificate_error"] = check.reason;
      res["subset"] = sub;
      return finish(report, exit_failed, c.json);
    }
    const auto v = srgb::verdict(rep.spectrum().f - 1, static_cast<std::int64_t>(cert.inner.size()),
                                 static_cast<std::int64_t>(omega.size),
                                 {"f - 1 (non-neighbourhood drop certificate)", "|non-neighbourhood|",
                                  "clique number of the whole graph bounds every induced subgraph"});
    sub["verdict"] = verdict_json(v);
    res["subset"] = sub;
    report.provenance("subset dimension", "drop certificate x = y_a, c = mu, witness a");
    // The subset answers its own question; a non-counterexample is a valid result here.
    code = exit_ok;
  }
  return finish(report, code, c.json);
}

int run_verify_srg(const std::string &file, const CommonOptions &c) {
  RunReport report("verify-srg");
  report.inputs()["file"] = file;
  const auto g = load_graph(file);
  auto &res = report.results();
  try {
    const auto chk = srgb::verify_srg(g, c.threads);
    res["srg"] = params_json(chk.params);
    res["complete"] = chk.complete;
    report.provenance("srg parameters", "verify_srg over all vertex pairs");
    if (!chk.complete) {
      try {
        res["spectrum"] = spectrum_json(srgb::spectrum(chk.params));
        const auto sp = srgb::spectrum(chk.params);
        const auto gram = srgb::gram_entries(chk.params, sp);
        const auto d2 = srgb::distance_squares(chk.params, sp);
        res["gram"] = {{"diag", gram.diag}, {"adj", gram.adj}, {"non", gram.non}};
        res["distance_squares"] = {{"adj", d2.adj}, {"non", d2.non}, {"excess", d2.excess}};
      } catch (const srgb::Error &e) {
        res["spectrum_error"] = e.what();
      }
    }
  } catch (const srgb::Error &e) {
    res["error"] = e.what();
    return finish(report, exit_failed, c.json);
  }
  return finish(report, exit_ok, c.json);
}

struct CliqueOptions {
  std::string file;
  std::optional<std::size_t> decision;
  std::optional<std::size_t> through;
  std::uint64_t budget = 0;
};

int run_clique(const CliqueOptions &o, const CommonOptions &c) {
  RunReport report("clique");
  report.inputs()["file"] = o.file;
  report.inputs()["budget"] = o.budget;
  const auto g = load_graph(o.file);
  auto &res = report.results();
  std::optional<srgb::Vertex> through;
  if (o.through) {
    if (*o.through < 1 || *o.through > g.vertex_count())
      throw UsageError("--through-vertex out of range");
    through = static_cast<srgb::Vertex>(*o.through - 1);
    report.inputs()["through_vertex"] = *o.through;
  }
  auto t = Clock::now();
  int code = exit_ok;
  if (o.decision) {
    report.inputs()["decision"] = *o.decision;
    const auto d = srgb::has_clique(g, *o.decision, {o.budget}, through);
    res["answer"] = d.answer == srgb::Decision::yes ? "yes" : d.answer == srgb::Decision::no ? "no" : "unknown";
    if (d.answer == srgb::Decision::yes)
      res["witness"] = labels(d.witness);
    res["nodes_explored"] = d.nodes_explored;
    if (d.answer == srgb::Decision::unknown)
      code = exit_failed;
  } else {
    const auto r = through ? srgb::max_clique_through_vertex(g, *through, {o.budget}) : srgb::max_clique(g, {o.budget});
    res["clique"] = clique_json(r);
    if (!r.proven_max)
      code = exit_failed;
  }
  report.provenance("clique", "bitset branch-and-bound with greedy colouring bounds");
  report.timing("search_seconds", t);
  return finish(report, code, c.json);
}

struct PartitionRunOptions {
  std::string graph;
  std::vector<std::string> partitions;
  std::optional<std::int64_t> s;
  std::optional<std::int64_t> base_dim;
  std::string cert_dir;
};

int run_partition(const PartitionRunOptions &o, const CommonOptions &c) {
  RunReport report("partition-run");
  report.inputs()["graph"] = o.graph;
  report.inputs()["partitions"] = o.partitions;
  const auto g = load_graph(o.graph);
  std::int64_t s = 0;
  std::optional<std::int64_t> base_dim = o.base_dim;
  if (o.s) {
    s = *o.s;
    report.provenance("shift s", "given on the command line");
  } else {
    try {
      const auto chk = srgb::verify_srg(g, c.threads);
      const auto sp = srgb::spectrum(chk.params);
      s = sp.s;
      if (!base_dim)
        base_dim = sp.f;
      report.provenance("shift s and dim P(V)", "smallest eigenvalue and multiplicity of the verified SRG");
    } catch (const srgb::Error &e) {
      throw UsageError(std::string("graph is not a usable SRG (") + e.what() + "); pass --s");
    }
  }
  report.inputs()["s"] = s;
  if (base_dim)
    report.inputs()["base_dim"] = *base_dim;

  std::vector<srgb::RegularPartition> parts;
  for (const auto &f : o.partitions) {
    auto in = open_in(f);
    parts.push_back(srgb::io::read_partition(in, g.vertex_count()));
  }
  auto &res = report.results();
  int code = exit_ok;
  try {
    for (const auto &p : parts)
      srgb::case_check(g, srgb::verify_partition(g, p), s);
    report.provenance("partition conditions", "verify_partition and case_check on every vertex");
    const auto rr = srgb::rounds_driver(g, parts, s, base_dim);
    json rounds = json::array();
    for (const auto &r : rr.rounds) {
      json j{{"round", r.round},
             {"b3_component", r.b3_component + 1},
             {"z_prev_size", r.z_prev_size},
             {"z_odd_size", r.z_odd.size()},
             {"z_even_size", r.z_even.size()},
             {"odd_strict", r.odd_strict},
             {"even_strict", r.even_strict},
             {"odd_certified", r.odd_certified},
             {"even_certified", r.even_certified}};
      if (r.odd_dim_bound)
        j["odd_dim_bound"] = *r.odd_dim_bound;
      if (r.even_dim_bound)
        j["even_dim_bound"] = *r.even_dim_bound;
      rounds.push_back(j);
      if (!o.cert_dir.empty()) {
        const auto base = o.cert_dir + "/round" + std::to_string(r.round);
        if (r.p_certificate) {
          auto out = open_out(base + "_p.cert");
          srgb::io::write_certificate(out, *r.p_certificate);
        }
        if (r.q_certificate) {
          auto out = open_out(base + "_q.cert");
          srgb::io::write_certificate(out, *r.q_certificate);
        }
      }
      if (!r.odd_certified || !r.even_certified)
        code = exit_failed;
    }
    res["rounds"] = rounds;
    if (rr.halted) {
      res["halted"] = *rr.halted;
      code = exit_failed;
    }
    report.provenance("dimension bounds", "one per certified drop (p and q functionals)");
  } catch (const srgb::Error &e) {
    res["error"] = e.what();
    code = exit_failed;
  }
  return finish(report, code, c.json);
}

int run_table(const std::string &file, const std::string &csv_out, const CommonOptions &c) {
  RunReport report("table");
  report.inputs()["file"] = file;
  auto in = open_in(file);
  const auto rows = srgb::table_summarize(srgb::io::read_table_csv(in));
  if (!csv_out.empty()) {
    auto out = open_out(csv_out);
    srgb::io::write_table_csv(out, rows);
  }
  if (!c.json) {
    srgb::io::write_table_text(std::cout, rows);
    return exit_ok;
  }
  json arr = json::array();
  for (const auto &r : rows) {
    json cells = json::array();
    for (const auto &cell : r.cells)
      cells.push_back({{"list", cell.list}, {"size", cell.size}, {"omega", cell.omega}, {"bound", cell.bound}});
    arr.push_back({{"label", r.label}, {"dim", r.dim}, {"cells", cells}, {"summary", r.summary}});
  }
  report.results()["rows"] = arr;
  report.provenance("bounds", "largest p with size/omega > p; summary is the running maximum from below");
  return finish(report, exit_ok, c.json);
}

struct VerdictOptions {
  std::optional<std::int64_t> dim, size, omega;
  std::string input;
};

int run_verdict(VerdictOptions o, const CommonOptions &c) {
  RunReport report("verdict");
  if (!o.input.empty()) {
    auto in = open_in(o.input);
    json j;
    try {
      j = json::parse(in);
      o.dim = j.at("dim").get<std::int64_t>();
      o.size = j.at("size").get<std::int64_t>();
      o.omega = j.at("omega_upper").get<std::int64_t>();
    } catch (const json::exception &e) {
      throw UsageError(std::string("bad verdict input: ") + e.what());
    }
    report.inputs()["input"] = o.input;
  }
  if (!o.dim || !o.size || !o.omega)
    throw UsageError("verdict needs --dim, --size and --omega (or --input FILE)");
  report.inputs()["dim"] = *o.dim;
  report.inputs()["size"] = *o.size;
  report.inputs()["omega_upper"] = *o.omega;
  const auto v = srgb::verdict(*o.dim, *o.size, *o.omega, {"user input", "user input", "user input"});
  report.results()["verdict"] = verdict_json(v);
  return finish(report, v.is_counterexample ? exit_ok : exit_failed, c.json);
}

int run_export(const std::string &file, const std::string &format, const std::string &out_path) {
  const auto g = load_graph(file);
  const auto f = srgb::io::parse_format(format);
  if (out_path.empty() || out_path == "-") {
    srgb::io::write_graph(std::cout, g, f);
  } else {
    auto out = open_out(out_path);
    srgb::io::write_graph(out, g, f);
  }
  return exit_ok;
}

int run_verify_two_weight(const std::string &file, std::uint32_t q, std::uint32_t h1, std::uint32_t h2,
                          const CommonOptions &c) {
  RunReport report("verify-two-weight");
  report.inputs()["file"] = file;
  report.inputs()["q"] = q;
  report.inputs()["h1"] = h1;
  report.inputs()["h2"] = h2;
  const srgb::pg::ProjectiveSpace space(q);
  auto in = open_in(file);
  const auto pts = read_two_weight_points(in, space);
  report.results()["points"] = pts.size();
  try {
    const auto hist = srgb::pg::verify_two_weight(space, pts, h1, h2);
    json h = json::object();
    for (const auto &[count, n] : hist)
      h[std::to_string(count)] = n;
    report.results()["hyperplane_histogram"] = h;
  } catch (const srgb::pg::NotTwoWeight &e) {
    report.results()["error"] = e.what();
    return finish(report, exit_failed, c.json);
  }
  return finish(report, exit_ok, c.json);
}

struct PlantedCliOptions {
  std::uint64_t seed = 1;
  std::vector<std::size_t> sizes{3, 3, 3, 6};
  std::size_t d_min = 0, d_max = 1;
  std::string out_graph, out_partition;
};

int run_gen_planted(const PlantedCliOptions &o) {
  if (o.sizes.size() != 4)
    throw UsageError("--sizes needs four values |B1|,|B2|,|B3|,|C|");
  srgb::PlantedOptions opt;
  opt.sizes = {o.sizes[0], o.sizes[1], o.sizes[2], o.sizes[3]};
  opt.d_min = o.d_min;
  opt.d_max = o.d_max;
  const auto inst = srgb::generate_planted(o.seed, opt);
  auto g = open_out(o.out_graph);
  srgb::io::write_edges(g, inst.graph);
  auto p = open_out(o.out_partition);
  srgb::io::write_partition(p, inst.partition);
  return exit_ok;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Strongly regular graphs, two-distance representations and Borsuk counterexample certificates"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "Read options from a TOML/INI file (same keys as the flags)");
  CommonOptions common;
  app.add_flag("--json", common.json, "Print the machine-readable JSON report");
  app.add_option("--threads", common.threads, "Worker threads for pair verification")->check(CLI::PositiveNumber);

  BuildOptions build;
  auto *build_cmd = app.add_subcommand("build-srg2401", "Construct and verify srg(2401,240,59,20)");
  build_cmd->add_option("--out", build.out, "Write the graph to FILE");
  build_cmd->add_option("--format", build.format, "Graph format")->check(CLI::IsMember({"dimacs", "dre", "edges"}));
  build_cmd->add_option("--dump-twoweight", build.dump_twoweight, "Write the 40 projective points, one per line");
  build_cmd->add_option("--construction", build.construction, "Two-weight set: icosahedral or spread")
      ->check(CLI::IsMember({"icosahedral", "spread"}));
  build_cmd->add_flag("--skip-srg-check", build.skip_srg_check, "Skip the all-pairs strong regularity check");

  CertifyOptions certify;
  auto *certify_cmd = app.add_subcommand("certify-borsuk", "Full counterexample certificate for srg(2401,240,59,20)");
  certify_cmd->add_option("--subset", certify.subset, "Also analyse nonneighbourhood:<vertex>");
  certify_cmd->add_option("--omega-budget", certify.omega_budget, "Node budget for the clique search (0 = none)");
  certify_cmd->add_option("--construction", certify.construction, "Two-weight set: icosahedral or spread")
      ->check(CLI::IsMember({"icosahedral", "spread"}));
  certify_cmd->add_flag("--skip-srg-check", certify.skip_srg_check, "Skip the all-pairs strong regularity check");

  std::string verify_file;
  auto *verify_cmd = app.add_subcommand("verify-srg", "Check strong regularity of a graph file");
  verify_cmd->add_option("file", verify_file, "DIMACS or edge-list file")->required();

  CliqueOptions clique;
  auto *clique_cmd = app.add_subcommand("clique", "Maximum clique or clique decision");
  clique_cmd->add_option("file", clique.file, "DIMACS or edge-list file")->required();
  clique_cmd->add_option("--decision", clique.decision, "Decide whether a clique of size T exists");
  clique_cmd->add_option("--through-vertex", clique.through, "Restrict to cliques containing vertex A");
  clique_cmd->add_option("--budget", clique.budget, "Search node budget (0 = none)");

  PartitionRunOptions prun;
  auto *prun_cmd = app.add_subcommand("partition-run", "Apply regular partitions round by round");
  prun_cmd->add_option("graph", prun.graph, "DIMACS or edge-list file")->required();
  prun_cmd->add_option("partitions", prun.partitions, "Partition files, one per round")->required();
  prun_cmd->add_option("--s", prun.s, "Negative shift s (default: smallest eigenvalue of the SRG)");
  prun_cmd->add_option("--base-dim", prun.base_dim, "dim P(V) for the dimension bounds");
  prun_cmd->add_option("--cert-dir", prun.cert_dir, "Write drop certificates into DIR");

  std::string table_file, table_csv;
  auto *table_cmd = app.add_subcommand("table", "Render a subset-size / clique-bound table");
  table_cmd->add_option("file", table_file, "CSV with columns label,dim,list,size,omega")->required();
  table_cmd->add_option("--csv-out", table_csv, "Also write the rendered table as CSV");

  VerdictOptions verd;
  auto *verdict_cmd = app.add_subcommand("verdict", "Counterexample verdict from dim, size and a clique bound");
  verdict_cmd->add_option("--dim", verd.dim, "Dimension bound");
  verdict_cmd->add_option("--size", verd.size, "Number of points");
  verdict_cmd->add_option("--omega", verd.omega, "Proven clique-number upper bound");
  verdict_cmd->add_option("--input", verd.input, "JSON file {dim, size, omega_upper}");

  std::string export_file, export_format = "dimacs", export_out;
  auto *export_cmd = app.add_subcommand("export", "Convert a graph file");
  export_cmd->add_option("file", export_file, "DIMACS or edge-list file")->required();
  export_cmd->add_option("--format", export_format, "Output format")->check(CLI::IsMember({"dimacs", "dre", "edges"}));
  export_cmd->add_option("--out", export_out, "Output file (default stdout)");

  std::string tw_file;
  std::uint32_t tw_q = 7, tw_h1 = 12, tw_h2 = 5;
  auto *tw_cmd = app.add_subcommand("verify-two-weight", "Check a projective point set against two intersection numbers");
  tw_cmd->add_option("file", tw_file, "Points, one row of 4 coordinates per line")->required();
  tw_cmd->add_option("--q", tw_q, "Prime field order");
  tw_cmd->add_option("--h1", tw_h1, "First intersection number");
  tw_cmd->add_option("--h2", tw_h2, "Second intersection number");

  PlantedCliOptions planted;
  auto *planted_cmd = app.add_subcommand("gen-planted", "Generate a random graph with a planted regular partition");
  planted_cmd->add_option("--seed", planted.seed, "Random seed")->required();
  planted_cmd->add_option("--sizes", planted.sizes, "|B1|,|B2|,|B3|,|C|")->delimiter(',');
  planted_cmd->add_option("--d-min", planted.d_min, "Smallest per-C-vertex block count");
  planted_cmd->add_option("--d-max", planted.d_max, "Largest per-C-vertex block count");
  planted_cmd->add_option("--out-graph", planted.out_graph, "Edge-list output")->required();
  planted_cmd->add_option("--out-partition", planted.out_partition, "Partition output")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*build_cmd)
      return run_build(build, common);
    if (*certify_cmd)
      return run_certify(certify, common);
    if (*verify_cmd)
      return run_verify_srg(verify_file, common);
    if (*clique_cmd)
      return run_clique(clique, common);
    if (*prun_cmd)
      return run_partition(prun, common);
    if (*table_cmd)
      return run_table(table_file, table_csv, common);
    if (*verdict_cmd)
      return run_verdict(verd, common);
    if (*export_cmd)
      return run_export(export_file, export_format, export_out);
    if (*tw_cmd)
      return run_verify_two_weight(tw_file, tw_q, tw_h1, tw_h2, common);
    if (*planted_cmd)
      return run_gen_planted(planted);
  } catch (const UsageError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const srgb::InvalidArgument &e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const srgb::FormatError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const srgb::Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_failed;
  }
  return exit_usage;
}
