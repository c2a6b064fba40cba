#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "leavitt/cardinal.hpp"
#include "leavitt/errors.hpp"
#include "leavitt/graph.hpp"
#include "leavitt/vertex_set.hpp"

namespace leavitt {

enum class VertexClass { Regular, Sink, InfiniteEmitter };

inline std::string to_string(VertexClass c) {
  switch (c) {
    case VertexClass::Regular: return "regular";
    case VertexClass::Sink: return "sink";
    case VertexClass::InfiniteEmitter: return "infinite-emitter";
  }
  return "?";
}

/// Total number of edges leaving `v`.
inline Cardinal out_degree(const Graph& g, VertexId v) {
  Cardinal total = Cardinal::finite(0);
  for (BundleId b : g.out_bundles(v)) {
    const auto& m = g.bundle(b).multiplicity;
    total = total + (m.is_omega() ? Cardinal::countably_infinite() : Cardinal::finite(m.value()));
  }
  return total;
}

inline VertexClass classify_vertex(const Graph& g, VertexId v) {
  if (v >= g.vertex_count()) throw NameError("unknown vertex id " + std::to_string(v));
  Cardinal d = out_degree(g, v);
  if (d == Cardinal::finite(0)) return VertexClass::Sink;
  if (!d.is_finite()) return VertexClass::InfiniteEmitter;
  return VertexClass::Regular;
}

inline VertexClass classify_vertex(const Graph& g, std::string_view name) { return classify_vertex(g, g.vertex(name)); }

inline bool is_singular(const Graph& g, VertexId v) { return classify_vertex(g, v) != VertexClass::Regular; }

inline VertexSet singular_vertices(const Graph& g) {
  VertexSet s = g.empty_set();
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (is_singular(g, v)) s.insert(v);
  return s;
}

inline VertexSet sinks(const Graph& g) {
  VertexSet s = g.empty_set();
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (classify_vertex(g, v) == VertexClass::Sink) s.insert(v);
  return s;
}

/// Strongly connected components (Tarjan). Component ids are assigned in
/// reverse topological order of the condensation.
struct Components {
  std::vector<std::size_t> of;                 // component id per vertex
  std::vector<std::vector<VertexId>> members;  // vertices of each component, declaration order
  std::vector<Cardinal> internal_edges;        // edges with both ends in the component
  std::vector<bool> has_omega_inside;

  std::size_t count() const { return members.size(); }

  /// A component carries a cycle iff it has an internal edge.
  bool cyclic(std::size_t c) const { return internal_edges[c] != Cardinal::finite(0); }

  /// Exactly one simple cycle runs through the component: its internal edges
  /// form a single directed cycle.
  bool single_cycle(std::size_t c) const {
    return internal_edges[c].is_finite() && internal_edges[c].value() == members[c].size();
  }
};

inline Components strongly_connected_components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  Components out;
  out.of.assign(n, SIZE_MAX);
  std::vector<std::size_t> index(n, SIZE_MAX), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<VertexId> stack;
  std::size_t counter = 0;

  std::function<void(VertexId)> visit = [&](VertexId v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (BundleId b : g.out_bundles(v)) {
      VertexId w = g.bundle(b).range;
      if (index[w] == SIZE_MAX) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<VertexId> comp;
      VertexId w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        out.of[w] = out.members.size();
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      out.members.push_back(std::move(comp));
    }
  };
  for (VertexId v = 0; v < n; ++v)
    if (index[v] == SIZE_MAX) visit(v);

  out.internal_edges.assign(out.count(), Cardinal::finite(0));
  out.has_omega_inside.assign(out.count(), false);
  for (const auto& b : g.bundles()) {
    std::size_t c = out.of[b.source];
    if (c != out.of[b.range]) continue;
    out.internal_edges[c] =
        out.internal_edges[c] +
        (b.multiplicity.is_omega() ? Cardinal::countably_infinite() : Cardinal::finite(b.multiplicity.value()));
    if (b.multiplicity.is_omega()) out.has_omega_inside[c] = true;
  }
  return out;
}

/// Vertices lying on at least one cycle.
inline VertexSet cycle_vertices(const Graph& g) {
  auto comps = strongly_connected_components(g);
  VertexSet s = g.empty_set();
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (comps.cyclic(comps.of[v])) s.insert(v);
  return s;
}

inline bool has_cycle(const Graph& g) { return !cycle_vertices(g).empty(); }

using Cycle = std::vector<EdgeRef>;

namespace detail {

inline bool edge_name_less(const Graph& g, EdgeRef a, EdgeRef b) {
  const auto& na = g.bundle(a.bundle).name;
  const auto& nb = g.bundle(b.bundle).name;
  if (na != nb) return na < nb;
  return a.index < b.index;
}

inline bool cycle_name_less(const Graph& g, const Cycle& a, const Cycle& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [&](EdgeRef x, EdgeRef y) { return edge_name_less(g, x, y); });
}

}  // namespace detail

/// Least rotation of a cycle under (bundle name, index) ordering.
inline Cycle canonical_rotation(const Graph& g, const Cycle& c) {
  Cycle best = c;
  Cycle rot = c;
  for (std::size_t i = 1; i < c.size(); ++i) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (detail::cycle_name_less(g, rot, best)) best = rot;
  }
  return best;
}

/// Every simple cycle (no repeated vertex) exactly once, in canonical
/// rotation, sorted by that representative. Parallel edges of one bundle are
/// distinct edges. Raises UnsupportedError when an omega-bundle lies on a
/// cycle, since there are then infinitely many.
inline std::vector<Cycle> simple_cycles(const Graph& g) {
  auto comps = strongly_connected_components(g);
  for (const auto& b : g.bundles())
    if (b.multiplicity.is_omega() && comps.of[b.source] == comps.of[b.range])
      throw UnsupportedError("omega-bundle '" + b.name + "' lies on a cycle: infinitely many simple cycles");

  std::vector<Cycle> found;
  const std::size_t n = g.vertex_count();
  std::vector<bool> on_path(n, false);
  Cycle path;

  // Each elementary cycle is found once, from its least vertex id.
  for (VertexId start = 0; start < n; ++start) {
    std::function<void(VertexId)> extend = [&](VertexId v) {
      on_path[v] = true;
      for (BundleId b : g.out_bundles(v)) {
        const auto& bundle = g.bundle(b);
        VertexId w = bundle.range;
        if (w < start || comps.of[w] != comps.of[start]) continue;
        for (std::uint64_t i = 0; i < bundle.multiplicity.value(); ++i) {
          path.push_back({b, i});
          if (w == start)
            found.push_back(path);
          else if (!on_path[w])
            extend(w);
          path.pop_back();
        }
      }
      on_path[v] = false;
    };
    extend(start);
  }
  for (auto& c : found) c = canonical_rotation(g, c);
  std::sort(found.begin(), found.end(), [&](const Cycle& a, const Cycle& b) { return detail::cycle_name_less(g, a, b); });
  return found;
}

/// T(v): every vertex reachable from `v`, including `v`.
inline VertexSet tree_of(const Graph& g, VertexId v) {
  if (v >= g.vertex_count()) throw NameError("unknown vertex id " + std::to_string(v));
  VertexSet seen = g.empty_set();
  std::vector<VertexId> todo{v};
  seen.insert(v);
  while (!todo.empty()) {
    VertexId u = todo.back();
    todo.pop_back();
    for (BundleId b : g.out_bundles(u)) {
      VertexId w = g.bundle(b).range;
      if (!seen.contains(w)) {
        seen.insert(w);
        todo.push_back(w);
      }
    }
  }
  return seen;
}

inline VertexSet tree_of(const Graph& g, std::string_view name) { return tree_of(g, g.vertex(name)); }

/// Vertices from which `v` is reachable, including `v`.
inline VertexSet ancestors(const Graph& g, VertexId v) {
  VertexSet seen = g.empty_set();
  std::vector<VertexId> todo{v};
  seen.insert(v);
  while (!todo.empty()) {
    VertexId u = todo.back();
    todo.pop_back();
    for (BundleId b : g.in_bundles(u)) {
      VertexId w = g.bundle(b).source;
      if (!seen.contains(w)) {
        seen.insert(w);
        todo.push_back(w);
      }
    }
  }
  return seen;
}

/// Vertices emitting two or more edges (omega counts as two or more).
inline VertexSet bifurcation_vertices(const Graph& g) {
  VertexSet s = g.empty_set();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    Cardinal d = out_degree(g, v);
    if (!d.is_finite() || d.value() >= 2) s.insert(v);
  }
  return s;
}

inline VertexSet line_points(const Graph& g) {
  VertexSet bad = bifurcation_vertices(g) | cycle_vertices(g);
  VertexSet out = g.empty_set();
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if ((tree_of(g, v) & bad).empty()) out.insert(v);
  return out;
}

inline bool is_hereditary(const Graph& g, const VertexSet& h) {
  for (const auto& b : g.bundles())
    if (h.contains(b.source) && !h.contains(b.range)) return false;
  return true;
}

namespace detail {

/// Regular vertices outside `h` all of whose edges land in `h`.
inline std::vector<VertexId> forced_into(const Graph& g, const VertexSet& h) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (h.contains(v) || classify_vertex(g, v) != VertexClass::Regular) continue;
    bool all_inside = true;
    for (BundleId b : g.out_bundles(v)) all_inside = all_inside && h.contains(g.bundle(b).range);
    if (all_inside) out.push_back(v);
  }
  return out;
}

}  // namespace detail

inline bool is_saturated(const Graph& g, const VertexSet& h) { return detail::forced_into(g, h).empty(); }

inline bool is_saturated_hereditary(const Graph& g, const VertexSet& h) {
  return is_hereditary(g, h) && is_saturated(g, h);
}

/// The chain H_0 = H ⊆ H_1 ⊆ ... up to the first repeated stage, where
/// H_{n+1} adds every regular vertex whose edges all land in H_n.
inline std::vector<VertexSet> saturation_chain(const Graph& g, const VertexSet& h) {
  if (h.universe() != g.vertex_count()) throw ContractError("vertex set does not belong to this graph");
  if (!is_hereditary(g, h)) throw ContractError("saturate requires a hereditary set");
  std::vector<VertexSet> chain{h};
  while (true) {
    auto add = detail::forced_into(g, chain.back());
    if (add.empty()) return chain;
    VertexSet next = chain.back();
    for (VertexId v : add) next.insert(v);
    chain.push_back(std::move(next));
  }
}

inline VertexSet saturate(const Graph& g, const VertexSet& h) { return saturation_chain(g, h).back(); }

/// Edges from `v` into the complement of `h`.
inline Cardinal edges_leaving(const Graph& g, VertexId v, const VertexSet& h) {
  Cardinal total = Cardinal::finite(0);
  for (BundleId b : g.out_bundles(v)) {
    const auto& bundle = g.bundle(b);
    if (h.contains(bundle.range)) continue;
    total = total + (bundle.multiplicity.is_omega() ? Cardinal::countably_infinite()
                                                    : Cardinal::finite(bundle.multiplicity.value()));
  }
  return total;
}

/// B_H: singular vertices with finitely many, but at least one, edges
/// leaving `h`.
inline VertexSet breaking_vertices(const Graph& g, const VertexSet& h) {
  if (!is_saturated_hereditary(g, h)) throw ContractError("breaking vertices require a saturated hereditary set");
  VertexSet out = g.empty_set();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (h.contains(v) || !is_singular(g, v)) continue;
    Cardinal c = edges_leaving(g, v, h);
    if (c.is_finite() && c.value() > 0) out.insert(v);
  }
  return out;
}

inline bool downward_directed(const Graph& g) {
  std::vector<VertexSet> trees;
  for (VertexId v = 0; v < g.vertex_count(); ++v) trees.push_back(tree_of(g, v));
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (VertexId w = v + 1; w < g.vertex_count(); ++w)
      if ((trees[v] & trees[w]).empty()) return false;
  return true;
}

/// Number of finite paths (the vertex path included) whose range is `v`.
inline Cardinal paths_ending_at(const Graph& g, VertexId v) {
  VertexSet up = ancestors(g, v);
  if (!(up & cycle_vertices(g)).empty()) return Cardinal::countably_infinite();
  for (VertexId u : up.members())
    for (BundleId b : g.in_bundles(u))
      if (g.bundle(b).multiplicity.is_omega()) return Cardinal::countably_infinite();

  // Acyclic above v: count by memoized recursion over in-bundles.
  std::vector<std::optional<Cardinal>> memo(g.vertex_count());
  std::function<Cardinal(VertexId)> count = [&](VertexId u) -> Cardinal {
    if (memo[u]) return *memo[u];
    Cardinal total = Cardinal::finite(1);
    for (BundleId b : g.in_bundles(u)) {
      const auto& bundle = g.bundle(b);
      total = total + Cardinal::finite(bundle.multiplicity.value()) * count(bundle.source);
    }
    memo[u] = total;
    return total;
  };
  return count(v);
}

/// A shortest cycle through `v` (following the first edge of each bundle),
/// or an empty cycle when `v` lies on none.
inline Cycle cycle_through(const Graph& g, VertexId v) {
  std::vector<std::optional<EdgeRef>> via(g.vertex_count());
  std::vector<VertexId> frontier{v};
  std::vector<bool> seen(g.vertex_count(), false);
  while (!frontier.empty()) {
    std::vector<VertexId> next;
    for (VertexId u : frontier) {
      for (BundleId b : g.out_bundles(u)) {
        VertexId w = g.bundle(b).range;
        if (w == v) {
          Cycle c{{b, 0}};
          for (VertexId x = u; x != v; x = g.source(*via[x])) c.push_back(*via[x]);
          std::reverse(c.begin(), c.end());
          return c;
        }
        if (!seen[w]) {
          seen[w] = true;
          via[w] = EdgeRef{b, 0};
          next.push_back(w);
        }
      }
    }
    frontier = std::move(next);
  }
  return {};
}

inline std::string render_cycle(const Graph& g, const Cycle& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += '/';
    out += g.edge_name(c[i]);
  }
  return out;
}

inline std::vector<std::string> names_of(const Graph& g, const VertexSet& s) {
  std::vector<std::string> out;
  for (VertexId v : s.members()) out.push_back(g.vertex_name(v));
  return out;
}

inline VertexSet set_of(const Graph& g, const std::vector<std::string>& names) {
  VertexSet s = g.empty_set();
  for (const auto& n : names) s.insert(g.vertex(n));
  return s;
}

}  // namespace leavitt
