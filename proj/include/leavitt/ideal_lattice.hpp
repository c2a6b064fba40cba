#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "leavitt/errors.hpp"
#include "leavitt/graph.hpp"
#include "leavitt/graph_ops.hpp"

namespace leavitt {

/// (H, S): a saturated hereditary vertex set and a set of its breaking
/// vertices. Indexes the graded two-sided ideals.
struct AdmissiblePair {
  VertexSet hereditary;
  VertexSet breaking;

  friend bool operator==(const AdmissiblePair&, const AdmissiblePair&) = default;
};

inline bool is_admissible(const Graph& g, const AdmissiblePair& p) {
  if (p.hereditary.universe() != g.vertex_count() || p.breaking.universe() != g.vertex_count()) return false;
  if (!is_saturated_hereditary(g, p.hereditary)) return false;
  return p.breaking.is_subset_of(breaking_vertices(g, p.hereditary));
}

inline void require_admissible(const Graph& g, const AdmissiblePair& p) {
  if (!is_admissible(g, p)) throw ContractError("not an admissible pair for this graph");
}

/// Lattice order of the ideals: (H1,S1) <= (H2,S2) iff H1 ⊆ H2 and S1 ⊆ H2 ∪ S2.
inline bool pair_leq(const AdmissiblePair& a, const AdmissiblePair& b) {
  return a.hereditary.is_subset_of(b.hereditary) && a.breaking.is_subset_of(b.hereditary | b.breaking);
}

namespace detail {

class NamePool {
 public:
  explicit NamePool(const Graph& g) {
    for (const auto& v : g.vertex_names()) taken_.insert(v);
    for (const auto& b : g.bundles()) taken_.insert(b.name);
  }
  NamePool() = default;

  std::string fresh(const std::string& base) {
    std::string name = base;
    for (int k = 2; taken_.count(name); ++k) name = base + "_" + std::to_string(k);
    taken_.insert(name);
    return name;
  }

  void reserve(const std::string& name) { taken_.insert(name); }

 private:
  std::set<std::string> taken_;
};

/// Identifier-safe label for a path: edge names concatenated, '#' mapped to '_'.
inline std::string path_label(const Graph& g, const Path& p) {
  if (p.is_vertex()) return g.vertex_name(p.source());
  std::string out;
  for (EdgeRef e : p.edges()) {
    std::string name = g.edge_name(e);
    std::replace(name.begin(), name.end(), '#', '_');
    out += name;
  }
  return out;
}

}  // namespace detail

/// E \ (H,S) together with the correspondence to the original vertices.
struct QuotientGraph {
  Graph graph;
  std::vector<std::optional<VertexId>> original;  // per quotient vertex; empty for gap sinks
  std::vector<std::optional<VertexId>> gap_of;    // per quotient vertex: v for the sink w_v
};

inline QuotientGraph quotient(const Graph& g, const AdmissiblePair& p) {
  require_admissible(g, p);
  const VertexSet gaps = breaking_vertices(g, p.hereditary) - p.breaking;

  QuotientGraph out;
  std::vector<std::string> names;
  std::vector<std::string> gap_name(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (p.hereditary.contains(v)) continue;
    names.push_back(g.vertex_name(v));
    out.original.emplace_back(v);
    out.gap_of.emplace_back(std::nullopt);
  }
  detail::NamePool pool(g);
  for (VertexId v : gaps.members()) {
    gap_name[v] = pool.fresh("w_" + g.vertex_name(v));
    names.push_back(gap_name[v]);
    out.original.emplace_back(std::nullopt);
    out.gap_of.emplace_back(v);
  }

  std::vector<BundleSpec> bundles;
  for (const auto& b : g.bundles())
    if (!p.hereditary.contains(b.range))
      bundles.push_back({b.name, g.vertex_name(b.source), g.vertex_name(b.range), b.multiplicity});
  for (const auto& b : g.bundles())
    if (gaps.contains(b.range))
      bundles.push_back({pool.fresh("f_" + b.name), g.vertex_name(b.source), gap_name[b.range], b.multiplicity});

  out.graph = Graph(std::move(names), bundles);
  return out;
}

inline Graph quotient_graph(const Graph& g, const AdmissiblePair& p) { return quotient(g, p).graph; }

/// F(H): the paths e_1...e_n with r(e_n) ∈ H and s(e_n) ∉ H, shortest first.
/// Raises NotFinitelyPresentable, naming a witness, when the set is infinite.
inline std::vector<Path> entry_paths(const Graph& g, const VertexSet& h) {
  if (!is_hereditary(g, h)) throw ContractError("entry paths require a hereditary set");
  const VertexSet on_cycle = cycle_vertices(g);

  std::vector<Path> out;
  std::function<void(VertexId, std::vector<EdgeRef>&)> backwards = [&](VertexId u, std::vector<EdgeRef>& suffix) {
    std::vector<EdgeRef> edges(suffix.rbegin(), suffix.rend());
    out.push_back(Path::of_edges(g, edges));
    for (BundleId b : g.in_bundles(u)) {
      for (std::uint64_t i = 0; i < g.bundle(b).multiplicity.value(); ++i) {
        suffix.push_back({b, i});
        backwards(g.bundle(b).source, suffix);
        suffix.pop_back();
      }
    }
  };

  for (BundleId b = 0; b < g.bundle_count(); ++b) {
    const auto& bundle = g.bundle(b);
    if (h.contains(bundle.source) || !h.contains(bundle.range)) continue;
    if (bundle.multiplicity.is_omega())
      throw NotFinitelyPresentable("not finitely presentable: omega-bundle '" + bundle.name + "' enters the set");
    VertexSet up = ancestors(g, bundle.source);
    for (VertexId u : up.members()) {
      if (on_cycle.contains(u))
        throw NotFinitelyPresentable("not finitely presentable: cycle " + render_cycle(g, cycle_through(g, u)) +
                                     " reaches the set");
      for (BundleId x : g.in_bundles(u))
        if (g.bundle(x).multiplicity.is_omega())
          throw NotFinitelyPresentable("not finitely presentable: omega-bundle '" + g.bundle(x).name +
                                       "' feeds an entry path");
    }
    for (std::uint64_t i = 0; i < bundle.multiplicity.value(); ++i) {
      std::vector<EdgeRef> suffix{{b, i}};
      backwards(bundle.source, suffix);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Ē_(H̄,∅) together with the entry path behind each added vertex.
struct IdealGraph {
  Graph graph;
  VertexSet saturated;
  std::vector<Path> entry_paths;
};

inline IdealGraph ideal(const Graph& g, const VertexSet& h) {
  if (!is_hereditary(g, h)) throw ContractError("ideal graph requires a hereditary set");
  IdealGraph out;
  out.saturated = saturate(g, h);
  out.entry_paths = entry_paths(g, out.saturated);

  detail::NamePool pool;
  for (VertexId v : out.saturated.members()) pool.reserve(g.vertex_name(v));
  std::vector<BundleSpec> bundles;
  for (const auto& b : g.bundles())
    if (out.saturated.contains(b.source)) {
      pool.reserve(b.name);
      bundles.push_back({b.name, g.vertex_name(b.source), g.vertex_name(b.range), b.multiplicity});
    }

  std::vector<std::string> names = names_of(g, out.saturated);
  for (const auto& alpha : out.entry_paths) {
    std::string label = pool.fresh(detail::path_label(g, alpha));
    names.push_back(label);
    bundles.push_back({pool.fresh("bar_" + label), label, g.vertex_name(alpha.range()), Multiplicity{1}});
  }
  out.graph = Graph(std::move(names), bundles);
  return out;
}

inline Graph ideal_graph(const Graph& g, const VertexSet& h) { return ideal(g, h).graph; }

inline constexpr std::size_t kMaxEnumerationVertices = 20;

/// Every admissible pair, ordered by the bitmask of H then of S (vertex
/// declaration order gives bit order).
inline std::vector<AdmissiblePair> enumerate_admissible_pairs(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kMaxEnumerationVertices)
    throw SizeError("admissible-pair enumeration is limited to " + std::to_string(kMaxEnumerationVertices) +
                    " vertices");
  std::vector<AdmissiblePair> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    VertexSet h = VertexSet::from_mask(n, mask);
    if (!is_saturated_hereditary(g, h)) continue;
    std::vector<VertexId> b = breaking_vertices(g, h).members();
    for (std::uint64_t smask = 0; smask < (std::uint64_t{1} << b.size()); ++smask) {
      VertexSet s(n);
      for (std::size_t i = 0; i < b.size(); ++i)
        if ((smask >> i) & 1U) s.insert(b[i]);
      out.push_back({h, s});
    }
  }
  return out;
}

inline std::vector<VertexSet> saturated_hereditary_sets(const Graph& g) {
  std::vector<VertexSet> out;
  for (const auto& p : enumerate_admissible_pairs(g))
    if (p.breaking.empty()) out.push_back(p.hereditary);
  return out;
}

}  // namespace leavitt
