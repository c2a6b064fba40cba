#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leavitt/algebra.hpp"
#include "leavitt/boundary.hpp"
#include "leavitt/errors.hpp"
#include "leavitt/graph.hpp"
#include "leavitt/graph_ops.hpp"
#include "leavitt/ideal_lattice.hpp"
#include "leavitt/repn.hpp"

namespace leavitt {

/// No cycles, and every two boundary paths are shift-tail equivalent.
inline bool check_condition4(const Graph& g) {
  return !has_cycle(g) && enumerate_classes(g).cardinality == Cardinal::finite(1);
}

/// The first line point (declaration order) whose tree saturates to E⁰.
inline std::optional<VertexId> check_condition5(const Graph& g) {
  const VertexSet lines = line_points(g);
  for (VertexId v : lines.members())
    if (saturate(g, tree_of(g, v)) == g.all_vertices()) return v;
  return std::nullopt;
}

struct NaimarkReport {
  bool holds = false;
  bool condition4 = false;
  ClassCensus census;
  std::optional<VertexId> witness;           // line point whose tree saturates to E⁰
  std::vector<VertexSet> saturation_chain;   // H_0 = T(witness) ⊆ H_1 ⊆ … = E⁰
  std::optional<MatrixUnitSystem> units;     // Λ at the witness
  std::optional<std::uint64_t> dimension;    // dim L(E) in the sink basis
};

inline NaimarkReport naimark_decision(const Graph& g) {
  NaimarkReport rep;
  rep.census = enumerate_classes(g);
  rep.condition4 = !has_cycle(g) && rep.census.cardinality == Cardinal::finite(1);
  rep.witness = check_condition5(g);
  if (rep.condition4 != rep.witness.has_value())
    throw InvariantViolation("the boundary-class test and the line-point test disagree on this graph");
  rep.holds = rep.condition4;
  if (!rep.holds) return rep;

  rep.saturation_chain = saturation_chain(g, tree_of(g, *rep.witness));
  if (!g.has_omega()) {
    rep.units = matrix_units(g, *rep.witness);
    rep.dimension = dimension(g);
    const std::uint64_t n = rep.units->index.size();
    if (*rep.dimension != n * n) throw InvariantViolation("dimension is not |Λ|²");
  }
  return rep;
}

/// The matrix-unit system that exhibits L(E) ≅ M_Λ(ℚ).
inline MatrixUnitSystem naimark_isomorphism(const Graph& g) {
  NaimarkReport rep = naimark_decision(g);
  if (!rep.holds) throw ContractError("the Naimark conditions fail for this graph");
  if (!rep.units) throw UnsupportedError("graph has an omega-bundle");
  if (!units_cover_sink_basis(g, *rep.units)) throw InvariantViolation("matrix units do not exhaust the sink basis");
  return *rep.units;
}

struct CompositionFactor {
  std::string line_point;  // vertex name in the quotient graph of the previous step
  Cardinal size;           // |Λ| of the factor
};

/// (∅,∅) = pairs[0] < pairs[1] < … < pairs[n] = (E⁰,∅); factors[i] sits
/// between pairs[i] and pairs[i+1].
struct CompositionSeries {
  std::vector<AdmissiblePair> pairs;
  std::vector<CompositionFactor> factors;
};

/// |T(w)| plus the number of paths entering T(w) from outside.
inline Cardinal line_ideal_size(const Graph& g, VertexId w) {
  const VertexSet t = tree_of(g, w);
  Cardinal size = Cardinal::finite(t.size());
  for (const auto& b : g.bundles()) {
    if (t.contains(b.source) || !t.contains(b.range)) continue;
    Cardinal m = b.multiplicity.is_omega() ? Cardinal::countably_infinite() : Cardinal::finite(b.multiplicity.value());
    size = size + m * paths_ending_at(g, b.source);
  }
  return size;
}

/// Pulls the saturated hereditary set K of E \ (H,S) back to the admissible
/// pair of E whose ideal is the preimage of I_K.
inline AdmissiblePair lift_pair(const Graph& g, const AdmissiblePair& p, const QuotientGraph& q, const VertexSet& k) {
  const VertexSet gaps = breaking_vertices(g, p.hereditary) - p.breaking;
  std::vector<std::optional<VertexId>> gap_sink(g.vertex_count());
  for (VertexId x = 0; x < q.graph.vertex_count(); ++x)
    if (q.gap_of[x]) gap_sink[*q.gap_of[x]] = x;

  VertexSet h2 = p.hereditary;
  for (VertexId x = 0; x < q.graph.vertex_count(); ++x) {
    if (!k.contains(x) || !q.original[x]) continue;
    const VertexId v = *q.original[x];
    if (!gaps.contains(v) || k.contains(*gap_sink[v])) h2.insert(v);
  }
  VertexSet s2 = g.empty_set();
  for (VertexId v : (breaking_vertices(g, h2) - h2).members())
    if (p.breaking.contains(v) || (gaps.contains(v) && k.contains(*gap_sink[v]))) s2.insert(v);
  return {h2, s2};
}

/// An elementary composition series of an acyclic graph, built by repeatedly
/// taking the ideal of a line point in the current quotient. Line points are
/// chosen first in declaration order, or last when `reverse` is set.
inline CompositionSeries composition_series(const Graph& g, bool reverse = false) {
  if (has_cycle(g)) throw UnsupportedError("graph has a cycle");
  const ClassCensus census = enumerate_classes(g);
  if (!census.cardinality.is_finite()) throw UnsupportedError("infinitely many shift-tail classes");
  const std::size_t total = census.cardinality.value();

  CompositionSeries series;
  AdmissiblePair current{g.empty_set(), g.empty_set()};
  series.pairs.push_back(current);
  while (current.hereditary != g.all_vertices()) {
    const QuotientGraph q = quotient(g, current);
    const auto candidates = line_points(q.graph).members();
    if (candidates.empty()) throw InvariantViolation("acyclic quotient without a line point");
    const VertexId w = reverse ? candidates.back() : candidates.front();
    const VertexSet k = saturate(q.graph, tree_of(q.graph, w));

    AdmissiblePair next = lift_pair(g, current, q, k);
    require_admissible(g, next);
    if (!pair_leq(current, next) || next == current) throw InvariantViolation("composition step did not grow");
    series.factors.push_back({q.graph.vertex_name(w), line_ideal_size(q.graph, w)});
    series.pairs.push_back(next);
    current = next;

    const std::size_t step = series.factors.size();
    const Cardinal left = enumerate_classes(quotient_graph(g, current)).cardinality;
    if (step > total || left != Cardinal::finite(total - step))
      throw InvariantViolation("class count did not drop by one at step " + std::to_string(step));
  }
  if (!current.breaking.empty()) throw InvariantViolation("final pair carries breaking vertices");
  return series;
}

enum class Case { CaseI, CaseIII };

inline std::string to_string(Case c) { return c == Case::CaseI ? "I" : "III"; }

struct SpectrumPoint {
  BoundaryPath representative;  // the class [α] behind π_[α]
  Cardinal dimension;
};

/// Case I (no cycles) lists one irreducible per shift-tail class. Case II
/// would need an acyclic graph with uncountably many classes, which a finite
/// graph cannot have.
struct TrichotomyReport {
  Case tag = Case::CaseI;
  ClassCensus census;
  std::vector<SpectrumPoint> spectrum;
};

inline TrichotomyReport trichotomy(const Graph& g) {
  TrichotomyReport rep;
  rep.census = enumerate_classes(g);
  if (has_cycle(g)) {
    rep.tag = Case::CaseIII;
    return rep;
  }
  if (!rep.census.cardinality.is_finite()) throw InvariantViolation("acyclic finite graph with uncountably many classes");
  for (const auto& c : rep.census.classes) rep.spectrum.push_back({c.representative, c.size});
  return rep;
}

}  // namespace leavitt
