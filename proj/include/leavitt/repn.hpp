#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "leavitt/algebra.hpp"
#include "leavitt/boundary.hpp"
#include "leavitt/errors.hpp"
#include "leavitt/graph.hpp"
#include "leavitt/graph_ops.hpp"
#include "leavitt/ideal_lattice.hpp"
#include "leavitt/matrix.hpp"

namespace leavitt {

/// One generator of L(E) as an algebra: s_e, s_e* or p_v.
struct Generator {
  enum class Kind { Edge, EdgeStar, Vertex } kind;
  EdgeRef edge{};
  VertexId vertex = 0;
};

inline std::string render_generator(const Graph& g, const Generator& x) {
  switch (x.kind) {
    case Generator::Kind::Edge: return "s_" + g.edge_name(x.edge);
    case Generator::Kind::EdgeStar: return "s_" + g.edge_name(x.edge) + "*";
    case Generator::Kind::Vertex: return "p_" + g.vertex_name(x.vertex);
  }
  return "?";
}

/// The boundary-path representation on V(∂E) for a finite acyclic graph
/// without omega-bundles. Basis: every path ending at a sink, grouped by sink
/// (declaration order), shortest first within a sink.
struct RepnMatrices {
  const Graph* graph = nullptr;
  std::vector<Path> basis;
  std::vector<Generator> generators;
  std::vector<Matrix> images;  // images[k] = ρ(generators[k])

  std::size_t dim() const noexcept { return basis.size(); }

  std::size_t index_of(const Path& p) const {
    auto it = std::lower_bound(order_.begin(), order_.end(), p,
                               [&](std::size_t i, const Path& q) { return basis[i] < q; });
    if (it == order_.end() || basis[*it] != p) throw ContractError("path is not a boundary path");
    return *it;
  }

  const Matrix& edge(EdgeRef e) const { return images.at(edge_slot_.at(e)); }
  const Matrix& edge_star(EdgeRef e) const { return images.at(edge_slot_.at(e) + 1); }
  const Matrix& vertex(VertexId v) const { return images.at(vertex_slot_.at(v)); }

  friend RepnMatrices build_rho(const Graph& g);

 private:
  std::vector<std::size_t> order_;  // basis indices sorted by path
  std::map<EdgeRef, std::size_t> edge_slot_;
  std::vector<std::size_t> vertex_slot_;
};

inline RepnMatrices build_rho(const Graph& g) {
  require_acyclic_finite(g);
  RepnMatrices r;
  r.graph = &g;
  SinkReducer reducer(g);
  for (VertexId t : sinks(g).members()) {
    std::vector<Path> into;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      for (const Path& q : reducer.paths_to_sinks(v))
        if (q.range() == t) into.push_back(q);
    std::sort(into.begin(), into.end());
    r.basis.insert(r.basis.end(), into.begin(), into.end());
  }
  r.order_.resize(r.basis.size());
  for (std::size_t i = 0; i < r.order_.size(); ++i) r.order_[i] = i;
  std::sort(r.order_.begin(), r.order_.end(), [&](std::size_t a, std::size_t b) { return r.basis[a] < r.basis[b]; });

  const std::size_t n = r.basis.size();
  for (EdgeRef e : g.edges()) {
    Matrix se(n, n), se_star(n, n);
    const Path edge = Path::edge(g, e);
    for (std::size_t j = 0; j < n; ++j) {
      const Path& alpha = r.basis[j];
      if (alpha.source() == g.range(e)) se(r.index_of(concat(edge, alpha)), j) = 1;
      if (!alpha.is_vertex() && alpha.edges().front() == e) se_star(r.index_of(alpha.tail(g)), j) = 1;
    }
    r.edge_slot_[e] = r.images.size();
    r.generators.push_back({Generator::Kind::Edge, e, 0});
    r.images.push_back(std::move(se));
    r.generators.push_back({Generator::Kind::EdgeStar, e, 0});
    r.images.push_back(std::move(se_star));
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    Matrix pv(n, n);
    for (std::size_t j = 0; j < n; ++j)
      if (r.basis[j].source() == v) pv(j, j) = 1;
    r.vertex_slot_.push_back(r.images.size());
    r.generators.push_back({Generator::Kind::Vertex, {}, v});
    r.images.push_back(std::move(pv));
  }
  return r;
}

/// ρ extended multiplicatively and linearly: s_α s_β* ↦ ρ(s_e1)…ρ(s_en) ρ(p_r) ρ(s_fm*)…ρ(s_f1*).
inline Matrix evaluate(const RepnMatrices& r, const AlgebraElement& x) {
  Matrix out(r.dim(), r.dim());
  for (const auto& [m, c] : x.terms()) {
    Matrix term = r.vertex(m.range());
    for (auto it = m.alpha().edges().rbegin(); it != m.alpha().edges().rend(); ++it) term = r.edge(*it) * term;
    for (auto it = m.beta().edges().rbegin(); it != m.beta().edges().rend(); ++it) term = term * r.edge_star(*it);
    out = out + c * term;
  }
  return out;
}

/// A shift-tail class of basis vectors.
struct Block {
  BoundaryPath representative;
  std::vector<std::size_t> indices;
};

inline std::vector<Block> decompose_blocks(const RepnMatrices& r) {
  const Graph& g = *r.graph;
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < r.dim(); ++i) {
    BoundaryPath b = BoundaryPath::finite(g, r.basis[i]);
    auto it = std::find_if(blocks.begin(), blocks.end(),
                           [&](const Block& blk) { return st_equivalent(blk.representative, b); });
    if (it == blocks.end()) {
      blocks.push_back({BoundaryPath::finite(g, Path::vertex(b.prefix().range())), {i}});
    } else {
      it->indices.push_back(i);
    }
  }
  return blocks;
}

/// True when every generator maps the span of `indices` into itself.
inline bool is_invariant(const RepnMatrices& r, const std::vector<std::size_t>& indices) {
  std::vector<bool> inside(r.dim(), false);
  for (std::size_t i : indices) inside[i] = true;
  for (const Matrix& m : r.images)
    for (std::size_t j : indices)
      for (std::size_t i = 0; i < r.dim(); ++i)
        if (!inside[i] && m(i, j) != 0) return false;
  return true;
}

/// For one start vector: the vectors that span its cyclic submodule, each
/// with the generator word (applied right to left) that produced it.
struct Orbit {
  std::size_t start;
  std::vector<std::vector<Rational>> vectors;
  std::vector<std::vector<std::size_t>> words;  // indices into RepnMatrices::generators
};

struct IrreducibilityCertificate {
  bool irreducible = true;
  std::vector<Orbit> orbits;  // one per basis vector of the block; the first failing one ends the list
};

/// Irreducible iff the cyclic submodule generated by every basis vector of
/// the block is the whole block.
inline IrreducibilityCertificate verify_irreducible_block(const RepnMatrices& r,
                                                          const std::vector<std::size_t>& indices) {
  IrreducibilityCertificate cert;
  const std::size_t n = r.dim();
  auto apply = [&](const Matrix& m, const std::vector<Rational>& v) {
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (m(i, j) != 0 && v[j] != 0) out[i] += m(i, j) * v[j];
    return out;
  };
  auto as_row = [](const std::vector<Rational>& v) {
    SparseRow row;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) row.emplace(i, v[i]);
    return row;
  };

  for (std::size_t start : indices) {
    Orbit orbit{start, {}, {}};
    Echelon span;
    std::vector<Rational> e(n);
    e[start] = 1;
    span.insert(as_row(e));
    orbit.vectors.push_back(e);
    orbit.words.push_back({});
    for (std::size_t k = 0; k < orbit.vectors.size() && span.rank() < indices.size(); ++k) {
      for (std::size_t gi = 0; gi < r.images.size(); ++gi) {
        auto image = apply(r.images[gi], orbit.vectors[k]);
        if (!span.insert(as_row(image))) continue;
        auto word = orbit.words[k];
        word.insert(word.begin(), gi);
        orbit.vectors.push_back(std::move(image));
        orbit.words.push_back(std::move(word));
      }
    }
    const bool spans = span.rank() == indices.size();
    cert.orbits.push_back(std::move(orbit));
    if (!spans) {
      cert.irreducible = false;
      break;
    }
  }
  return cert;
}

/// dim Hom(V_a, V_b): solutions T of T ρ_a(x) = ρ_b(x) T over all generators x.
inline std::size_t hom_space_dim(const RepnMatrices& r, const std::vector<std::size_t>& a,
                                 const std::vector<std::size_t>& b) {
  const std::size_t da = a.size(), db = b.size();
  auto var = [&](std::size_t i, std::size_t j) { return i * da + j; };  // T is db × da
  std::vector<SparseRow> rows;
  for (const Matrix& m : r.images) {
    Matrix ma = m.submatrix(a, a);
    Matrix mb = m.submatrix(b, b);
    for (std::size_t i = 0; i < db; ++i)
      for (std::size_t j = 0; j < da; ++j) {
        SparseRow row;
        for (std::size_t k = 0; k < da; ++k)
          if (ma(k, j) != 0) row[var(i, k)] += ma(k, j);
        for (std::size_t k = 0; k < db; ++k)
          if (mb(i, k) != 0) row[var(k, j)] -= mb(i, k);
        if (!row.empty()) rows.push_back(std::move(row));
      }
  }
  return nullity(rows, da * db);
}

/// Header naming the basis, then one row per basis vector.
inline std::string dump_matrix(const RepnMatrices& r, const std::string& name, const Matrix& m) {
  std::string out = "# " + name + " " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + "\n# basis:";
  for (const Path& b : r.basis) out += " " + render_path(*r.graph, b);
  out += "\n";
  return out + render_rows(m);
}

/// Matrix units {e_{α,β}} for a line point, indexed by Λ = T(v) ∪ F(T(v)).
struct MatrixUnitSystem {
  VertexId line_point = 0;
  std::vector<Path> index;                          // Λ
  std::vector<std::vector<Monomial>> units;         // units[i][j] = e_{Λi, Λj}
};

inline MatrixUnitSystem matrix_units(const Graph& g, VertexId v) {
  if (!line_points(g).contains(v)) throw ContractError("'" + g.vertex_name(v) + "' is not a line point");
  const VertexSet tree = tree_of(g, v);

  // The line v = w_0 → w_1 → … → w_n, with the connecting edges.
  std::vector<VertexId> line{v};
  std::vector<EdgeRef> steps;
  for (VertexId w = v;;) {
    const auto es = g.out_edges(w);
    if (es.empty()) break;
    steps.push_back(es.front());
    w = g.range(es.front());
    line.push_back(w);
  }
  std::vector<std::size_t> pos(g.vertex_count(), SIZE_MAX);
  for (std::size_t i = 0; i < line.size(); ++i) pos[line[i]] = i;
  auto mu = [&](std::size_t i, std::size_t j) {
    if (i == j) return Path::vertex(line[i]);
    return Path::of_edges(g, std::vector<EdgeRef>(steps.begin() + static_cast<std::ptrdiff_t>(i),
                                                  steps.begin() + static_cast<std::ptrdiff_t>(j)));
  };

  MatrixUnitSystem sys;
  sys.line_point = v;
  for (VertexId w : line) sys.index.push_back(Path::vertex(w));
  for (Path& alpha : entry_paths(g, tree)) sys.index.push_back(std::move(alpha));

  const std::size_t n = sys.index.size();
  sys.units.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Path& a = sys.index[i];
      const Path& b = sys.index[j];
      const std::size_t k = pos[a.range()], l = pos[b.range()];
      if (k <= l) {
        sys.units[i].push_back(Monomial(concat(a, mu(k, l)), b));
      } else {
        sys.units[i].push_back(Monomial(a, concat(b, mu(l, k))));
      }
    }
  return sys;
}

/// Checks e_{αβ} e_{λμ} = δ_{βλ} e_{αμ} and e_{αβ}* = e_{βα} after reduction
/// to the sink basis. Returns a description of the first failure.
inline std::optional<std::string> verify_matrix_units(const Graph& g, const MatrixUnitSystem& sys) {
  SinkReducer reducer(g);
  const std::size_t n = sys.index.size();
  std::vector<std::vector<AlgebraElement>> red(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) red[i].push_back(reducer.reduce(AlgebraElement(sys.units[i][j])));

  auto label = [&](std::size_t i, std::size_t j) {
    return "e(" + render_path(g, sys.index[i]) + "," + render_path(g, sys.index[j]) + ")";
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (red[i][j].is_zero()) return label(i, j) + " is zero";
      if (reducer.reduce(star(red[i][j])) != red[j][i]) return label(i, j) + "* differs from " + label(j, i);
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          AlgebraElement prod = reducer.reduce(multiply(red[i][j], red[k][l]));
          const bool ok = j == k ? prod == red[i][l] : prod.is_zero();
          if (!ok) return label(i, j) + " * " + label(k, l) + " is wrong";
        }
    }
  return std::nullopt;
}

/// True when the reduced units are pairwise distinct sink-basis monomials
/// that exhaust the sink basis.
inline bool units_cover_sink_basis(const Graph& g, const MatrixUnitSystem& sys) {
  SinkReducer reducer(g);
  std::vector<Monomial> seen;
  for (const auto& row : sys.units)
    for (const Monomial& m : row) {
      AlgebraElement r = reducer.reduce(AlgebraElement(m));
      if (r.size() != 1 || r.terms().begin()->second != 1) return false;
      seen.push_back(r.terms().begin()->first);
    }
  std::sort(seen.begin(), seen.end());
  return seen == sink_basis(g);
}

}  // namespace leavitt
