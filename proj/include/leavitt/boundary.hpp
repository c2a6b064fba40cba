#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

#include "leavitt/cardinal.hpp"
#include "leavitt/errors.hpp"
#include "leavitt/graph.hpp"
#include "leavitt/graph_ops.hpp"

namespace leavitt {

/// A boundary path: a finite path ending at a singular vertex, or an
/// eventually periodic infinite path `prefix · cycle · cycle · ...`.
///
/// Periodic paths are kept canonical so that structural equality is path
/// equality: the cycle is primitive (not a proper power), it starts at
/// r(prefix), and the prefix never ends with the cycle's last edge (such an
/// edge is absorbed by rotating the cycle backwards).
class BoundaryPath {
 public:
  static BoundaryPath finite(const Graph& g, Path p) {
    if (!is_singular(g, p.range())) throw ContractError("finite boundary paths must end at a singular vertex");
    BoundaryPath b;
    b.prefix_ = std::move(p);
    return b;
  }

  static BoundaryPath periodic(const Graph& g, Path prefix, Cycle cycle) {
    if (cycle.empty()) throw ContractError("periodic boundary path needs a nonempty cycle");
    Path closed = Path::of_edges(g, cycle);  // validates composition
    if (closed.source() != closed.range()) throw ContractError("repeated block is not a cycle");
    if (closed.source() != prefix.range()) throw ContractError("cycle does not start at the end of the prefix");

    // Primitive root.
    const std::size_t n = cycle.size();
    for (std::size_t d = 1; d < n; ++d) {
      if (n % d != 0) continue;
      bool periodic = true;
      for (std::size_t i = d; i < n && periodic; ++i) periodic = cycle[i] == cycle[i - d];
      if (periodic) {
        cycle.resize(d);
        break;
      }
    }

    // Absorb trailing prefix edges that repeat the cycle.
    std::vector<EdgeRef> pre = prefix.edges();
    while (!pre.empty() && pre.back() == cycle.back()) {
      pre.pop_back();
      std::rotate(cycle.rbegin(), cycle.rbegin() + 1, cycle.rend());
    }
    BoundaryPath b;
    b.prefix_ = pre.empty() ? Path::vertex(g.source(cycle.front())) : Path::of_edges(g, pre);
    b.cycle_ = std::move(cycle);
    return b;
  }

  bool is_finite() const noexcept { return cycle_.empty(); }
  const Path& prefix() const noexcept { return prefix_; }
  const Cycle& cycle() const noexcept { return cycle_; }
  VertexId source() const noexcept { return prefix_.source(); }

  friend bool operator==(const BoundaryPath&, const BoundaryPath&) = default;

  friend std::strong_ordering operator<=>(const BoundaryPath& a, const BoundaryPath& b) {
    if (auto c = a.cycle_.size() <=> b.cycle_.size(); c != 0) return c;
    if (auto c = a.prefix_ <=> b.prefix_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.cycle_.begin(), a.cycle_.end(), b.cycle_.begin(),
                                                  b.cycle_.end());
  }

 private:
  BoundaryPath() = default;

  Path prefix_;
  Cycle cycle_;
};

/// `prefix` for finite paths, `prefix(cycle)^` for periodic ones.
inline std::string render_boundary_path(const Graph& g, const BoundaryPath& b) {
  std::string out = render_path(g, b.prefix());
  if (b.is_finite()) return out;
  return (b.prefix().is_vertex() ? std::string{} : out) + "(" + render_cycle(g, b.cycle()) + ")^";
}

/// The shift map: drop the first edge. Vertices are fixed points.
inline BoundaryPath shift(const Graph& g, const BoundaryPath& b) {
  if (b.is_finite()) return BoundaryPath::finite(g, b.prefix().tail(g));
  if (!b.prefix().is_vertex()) return BoundaryPath::periodic(g, b.prefix().tail(g), b.cycle());
  Cycle rotated = b.cycle();
  std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
  return BoundaryPath::periodic(g, Path::vertex(g.range(b.cycle().front())), rotated);
}

inline bool is_rotation_of(const Cycle& a, const Cycle& b) {
  if (a.size() != b.size()) return false;
  Cycle doubled = a;
  doubled.insert(doubled.end(), a.begin(), a.end());
  return std::search(doubled.begin(), doubled.end(), b.begin(), b.end()) != doubled.end();
}

/// Shift-tail equivalence, decided in closed form: finite paths by their
/// range, periodic paths by their primitive cycles up to rotation.
inline bool st_equivalent(const BoundaryPath& a, const BoundaryPath& b) {
  if (a.is_finite() != b.is_finite()) return false;
  if (a.is_finite()) return a.prefix().range() == b.prefix().range();
  return is_rotation_of(a.cycle(), b.cycle());
}

struct ShiftTailClass {
  BoundaryPath representative;
  Cardinal size;  // number of boundary paths in the class
};

/// The shift-tail classes of a finite graph. When `cardinality` is finite the
/// class list is exhaustive; when uncountable it holds the classes that have
/// a singular endpoint or an isolated cycle.
struct ClassCensus {
  Cardinal cardinality;
  std::vector<ShiftTailClass> classes;
};

namespace detail {

/// The unique cycle of a component whose internal edges form one cycle,
/// starting from its least vertex.
inline Cycle component_cycle(const Graph& g, const Components& comps, std::size_t c) {
  const VertexId start = comps.members[c].front();
  Cycle cycle;
  VertexId v = start;
  do {
    bool moved = false;
    for (BundleId b : g.out_bundles(v)) {
      if (comps.of[g.bundle(b).range] != c) continue;
      cycle.push_back({b, 0});
      v = g.bundle(b).range;
      moved = true;
      break;
    }
    if (!moved) throw InvariantViolation("component is not a cycle");
  } while (v != start);
  return cycle;
}

}  // namespace detail

inline ClassCensus enumerate_classes(const Graph& g) {
  const auto comps = strongly_connected_components(g);
  ClassCensus census;
  bool uncountable = false;
  for (std::size_t c = 0; c < comps.count(); ++c)
    if (comps.cyclic(c) && !comps.single_cycle(c)) uncountable = true;

  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (is_singular(g, v))
      census.classes.push_back({BoundaryPath::finite(g, Path::vertex(v)), paths_ending_at(g, v)});

  std::vector<std::size_t> cycle_components;
  for (std::size_t c = 0; c < comps.count(); ++c)
    if (comps.cyclic(c) && comps.single_cycle(c)) cycle_components.push_back(c);
  std::sort(cycle_components.begin(), cycle_components.end(),
            [&](std::size_t a, std::size_t b) { return comps.members[a].front() < comps.members[b].front(); });

  for (std::size_t c : cycle_components) {
    Cycle cycle = canonical_rotation(g, detail::component_cycle(g, comps, c));
    Cardinal size = Cardinal::finite(0);
    for (VertexId v : comps.members[c]) {
      size = size + Cardinal::finite(1);
      for (BundleId b : g.in_bundles(v)) {
        const auto& bundle = g.bundle(b);
        if (comps.of[bundle.source] == c) continue;
        Cardinal mult = bundle.multiplicity.is_omega() ? Cardinal::countably_infinite()
                                                       : Cardinal::finite(bundle.multiplicity.value());
        size = size + mult * paths_ending_at(g, bundle.source);
      }
    }
    census.classes.push_back(
        {BoundaryPath::periodic(g, Path::vertex(g.source(cycle.front())), cycle), size});
  }

  census.cardinality = uncountable ? Cardinal::uncountable() : Cardinal::finite(census.classes.size());
  return census;
}

}  // namespace leavitt
