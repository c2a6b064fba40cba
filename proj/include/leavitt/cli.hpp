#pragma once

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "leavitt/algebra.hpp"
#include "leavitt/boundary.hpp"
#include "leavitt/errors.hpp"
#include "leavitt/graph.hpp"
#include "leavitt/graph_io.hpp"
#include "leavitt/graph_ops.hpp"
#include "leavitt/ideal_lattice.hpp"
#include "leavitt/naimark.hpp"
#include "leavitt/proptest.hpp"
#include "leavitt/repn.hpp"

namespace leavitt::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kError = 2;

namespace detail {

inline std::string braces(const std::vector<std::string>& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
  return out + "}";
}

inline std::string join(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? " " : "") + names[i];
  return out;
}

inline Json pair_json(const Graph& g, const AdmissiblePair& p) {
  return Json{{"H", names_of(g, p.hereditary)}, {"S", names_of(g, p.breaking)}};
}

inline std::string pair_text(const Graph& g, const AdmissiblePair& p) {
  return "(" + braces(names_of(g, p.hereditary)) + ", " + braces(names_of(g, p.breaking)) + ")";
}

inline std::vector<std::string> paths_text(const Graph& g, const std::vector<Path>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(render_path(g, p));
  return out;
}

struct Output {
  std::ostream& out;
  bool json;

  void emit(const Json& j, const std::string& text) const { out << (json ? j.dump(2) + "\n" : text); }
};

inline int analyze(const Graph& g, const Output& o) {
  Json j;
  std::ostringstream t;
  j["vertices"] = Json::array();
  t << "vertices:\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const std::string cls = to_string(classify_vertex(g, v));
    j["vertices"].push_back({{"name", g.vertex_name(v)}, {"class", cls}});
    t << "  " << g.vertex_name(v) << "  " << cls << "\n";
  }
  try {
    std::vector<std::string> cycles;
    for (const auto& c : simple_cycles(g)) cycles.push_back(render_cycle(g, c));
    j["cycles"] = cycles;
    t << "simple cycles: " << cycles.size() << (cycles.empty() ? "" : "  " + join(cycles)) << "\n";
  } catch (const UnsupportedError&) {
    j["cycles"] = "infinitely many";
    t << "simple cycles: infinitely many (omega-bundle on a cycle)\n";
  }
  const auto lines = names_of(g, line_points(g));
  j["line_points"] = lines;
  t << "line points: " << braces(lines) << "\n";
  const bool dd = downward_directed(g);
  j["downward_directed"] = dd;
  t << "downward directed: " << (dd ? "yes" : "no") << "\n";
  const auto comps = strongly_connected_components(g);
  j["components"] = Json::array();
  t << "strongly connected components:\n";
  for (std::size_t c = 0; c < comps.count(); ++c) {
    std::vector<std::string> members;
    for (VertexId v : comps.members[c]) members.push_back(g.vertex_name(v));
    const std::string kind = !comps.cyclic(c) ? "acyclic" : comps.single_cycle(c) ? "single cycle" : "multiple cycles";
    j["components"].push_back({{"members", members}, {"internal_edges", comps.internal_edges[c].to_string()},
                               {"kind", kind}});
    t << "  " << braces(members) << "  " << kind << "\n";
  }
  o.emit(j, t.str());
  return kOk;
}

inline int naimark(const Graph& g, const Output& o) {
  const NaimarkReport rep = naimark_decision(g);
  Json j;
  std::ostringstream t;
  j["holds"] = rep.holds;
  j["condition4"] = rep.condition4;
  j["classes"] = rep.census.cardinality.to_string();
  t << "Naimark conditions: " << (rep.holds ? "hold" : "fail") << "\n";
  t << "shift-tail classes: " << rep.census.cardinality.to_string() << "\n";
  t << "cycles: " << (has_cycle(g) ? "yes" : "no") << "\n";
  if (rep.witness) {
    j["witness"] = g.vertex_name(*rep.witness);
    t << "witness line point: " << g.vertex_name(*rep.witness) << "\n";
    j["saturation_chain"] = Json::array();
    t << "saturation chain:";
    for (const auto& h : rep.saturation_chain) {
      j["saturation_chain"].push_back(names_of(g, h));
      t << " " << braces(names_of(g, h));
    }
    t << "\n";
  }
  if (rep.units) {
    const auto lambda = paths_text(g, rep.units->index);
    j["lambda"] = lambda;
    j["lambda_size"] = lambda.size();
    j["dimension"] = *rep.dimension;
    t << "|Λ| = " << lambda.size() << ": " << join(lambda) << "\n";
    t << "dimension: " << *rep.dimension << " = " << lambda.size() << "^2\n";
  }
  o.emit(j, t.str());
  return rep.holds ? kOk : kNegative;
}

inline int classes(const Graph& g, const Output& o) {
  const ClassCensus census = enumerate_classes(g);
  Json j;
  std::ostringstream t;
  j["cardinality"] = census.cardinality.to_string();
  j["classes"] = Json::array();
  t << "shift-tail classes: " << census.cardinality.to_string() << "\n";
  if (!census.cardinality.is_finite()) t << "listed (not exhaustive):\n";
  for (const auto& c : census.classes) {
    const std::string rep = render_boundary_path(g, c.representative);
    j["classes"].push_back({{"representative", rep}, {"size", c.size.to_string()}});
    t << "  [" << rep << "]  size " << c.size.to_string() << "\n";
  }
  o.emit(j, t.str());
  return kOk;
}

inline int compseries(const Graph& g, const Output& o) {
  const CompositionSeries series = composition_series(g);
  Json j;
  std::ostringstream t;
  j["pairs"] = Json::array();
  j["factors"] = Json::array();
  t << "composition series of length " << series.factors.size() << ":\n";
  for (std::size_t i = 0; i < series.pairs.size(); ++i) {
    j["pairs"].push_back(pair_json(g, series.pairs[i]));
    t << "  " << pair_text(g, series.pairs[i]) << "\n";
    if (i < series.factors.size()) {
      const auto& f = series.factors[i];
      j["factors"].push_back({{"line_point", f.line_point}, {"size", f.size.to_string()}});
      t << "    factor M_" << f.size.to_string() << " at line point " << f.line_point << "\n";
    }
  }
  o.emit(j, t.str());
  return kOk;
}

inline int rep(const Graph& g, const Output& o, bool matrices) {
  const RepnMatrices r = build_rho(g);
  const auto blocks = decompose_blocks(r);
  Json j;
  std::ostringstream t;
  const auto basis = paths_text(g, r.basis);
  j["basis"] = basis;
  t << "basis (" << basis.size() << "): " << join(basis) << "\n";
  j["blocks"] = Json::array();
  t << "blocks:\n";
  for (const auto& b : blocks) {
    const bool irr = verify_irreducible_block(r, b.indices).irreducible;
    const bool inv = is_invariant(r, b.indices);
    j["blocks"].push_back({{"class", render_boundary_path(g, b.representative)},
                           {"dimension", b.indices.size()},
                           {"invariant", inv},
                           {"irreducible", irr}});
    t << "  [" << render_boundary_path(g, b.representative) << "]  dim " << b.indices.size()
      << (inv ? "  invariant" : "  NOT invariant") << (irr ? "  irreducible" : "  reducible") << "\n";
  }
  j["hom_dimensions"] = Json::array();
  t << "hom-space dimensions:\n";
  for (const auto& a : blocks) {
    std::vector<std::size_t> row;
    for (const auto& b : blocks) row.push_back(hom_space_dim(r, a.indices, b.indices));
    j["hom_dimensions"].push_back(row);
    t << " ";
    for (auto d : row) t << " " << d;
    t << "\n";
  }
  if (matrices) {
    j["matrices"] = Json::object();
    for (std::size_t k = 0; k < r.generators.size(); ++k) {
      const std::string name = render_generator(g, r.generators[k]);
      Json rows = Json::array();
      for (std::size_t i = 0; i < r.images[k].rows(); ++i) {
        Json row = Json::array();
        for (std::size_t c = 0; c < r.images[k].cols(); ++c) row.push_back(to_string(r.images[k](i, c)));
        rows.push_back(row);
      }
      j["matrices"][name] = rows;
      t << dump_matrix(r, name, r.images[k]);
    }
  }
  o.emit(j, t.str());
  return kOk;
}

inline int ideals(const Graph& g, const Output& o) {
  const auto pairs = enumerate_admissible_pairs(g);
  Json j;
  std::ostringstream t;
  j["pairs"] = Json::array();
  t << "admissible pairs: " << pairs.size() << "\n";
  for (const auto& p : pairs) {
    const Graph q = quotient_graph(g, p);
    Json entry = pair_json(g, p);
    entry["quotient_vertices"] = q.vertex_names();
    j["pairs"].push_back(entry);
    t << "  " << pair_text(g, p) << "  quotient " << braces(q.vertex_names()) << "\n";
  }
  o.emit(j, t.str());
  return kOk;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace detail

/// Runs one command line (without the program name). Returns the exit code.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Leavitt path algebra workbench: Naimark decisions, boundary paths, ideals"};
  app.require_subcommand(1);

  std::string file, fixture_name;
  bool json = false, matrices = false;
  std::uint64_t seed = 1;
  std::size_t trials = 200;

  auto graph_command = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "graph document (JSON)");
    sub->add_option("--fixture", fixture_name, "built-in graph: " + detail::join(fixture_names()));
    sub->add_flag("--json", json, "machine-readable output");
    return sub;
  };
  CLI::App* analyze = graph_command("analyze", "vertex classes, cycles, line points, components");
  CLI::App* naimark = graph_command("naimark", "decide the Naimark conditions (exit 1 when they fail)");
  CLI::App* classes = graph_command("classes", "shift-tail classes of boundary paths");
  CLI::App* compseries = graph_command("compseries", "elementary composition series");
  CLI::App* rep = graph_command("rep", "boundary-path representation, blocks, hom-spaces");
  rep->add_flag("--matrices", matrices, "dump every generator matrix");
  CLI::App* ideals = graph_command("ideals", "admissible pairs and their quotient graphs");
  CLI::App* dot = graph_command("export-dot", "Graphviz DOT export");
  CLI::App* proptest = app.add_subcommand("proptest", "seeded random property checks");
  proptest->add_option("--seed", seed, "random seed");
  proptest->add_option("--trials", trials, "number of random graphs");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  try {
    if (proptest->parsed()) {
      const PropertyReport r = run_property_checks(seed, trials);
      for (const auto& f : r.failures) err << "FAIL " << f << "\n";
      out << "seed " << seed << ": " << r.checks << " checks, " << r.failures.size() << " failures\n";
      return r.failures.empty() ? kOk : kError;
    }

    if (file.empty() == fixture_name.empty()) throw Error("give exactly one of a graph file or --fixture");
    const Graph g = fixture_name.empty() ? parse_graph(detail::read_file(file)) : leavitt::fixture(fixture_name);
    const detail::Output o{out, json};

    if (analyze->parsed()) return detail::analyze(g, o);
    if (naimark->parsed()) return detail::naimark(g, o);
    if (classes->parsed()) return detail::classes(g, o);
    if (compseries->parsed()) return detail::compseries(g, o);
    if (rep->parsed()) return detail::rep(g, o, matrices);
    if (ideals->parsed()) return detail::ideals(g, o);
    if (dot->parsed()) {
      out << (json ? render_graph(g) : to_dot(g));
      return kOk;
    }
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << "\n";
    return kError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace leavitt::cli
