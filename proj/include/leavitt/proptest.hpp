#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "leavitt/algebra.hpp"
#include "leavitt/graph.hpp"
#include "leavitt/graph_ops.hpp"
#include "leavitt/naimark.hpp"
#include "leavitt/repn.hpp"

namespace leavitt {

/// Seeded random inputs for the property harness.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool coin() { return below(2) == 1; }

  /// Up to `max_vertices` vertices and `max_bundles` bundles; loops allowed,
  /// occasional multiplicity 2 or omega when `omega` is set.
  Graph graph(std::size_t max_vertices, std::size_t max_bundles, bool omega) {
    const std::size_t n = 1 + below(max_vertices);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    std::vector<BundleSpec> bundles;
    const std::size_t m = below(max_bundles + 1);
    for (std::size_t i = 0; i < m; ++i) {
      Multiplicity mult{1};
      const std::size_t roll = below(10);
      if (roll == 0) mult = Multiplicity{2};
      if (roll == 1 && omega) mult = Multiplicity::omega();
      bundles.push_back({"e" + std::to_string(i), names[below(n)], names[below(n)], mult});
    }
    return Graph(names, bundles);
  }

  EdgeRef edge_in(const Graph& g, BundleId b) {
    const auto& m = g.bundle(b).multiplicity;
    return {b, m.is_omega() ? below(3) : below(m.value())};
  }

  Path forward(const Graph& g, VertexId v, std::size_t max_len) {
    std::vector<EdgeRef> edges;
    const std::size_t len = below(max_len + 1);
    for (std::size_t i = 0; i < len && !g.out_bundles(v).empty(); ++i) {
      const auto& out = g.out_bundles(v);
      EdgeRef e = edge_in(g, out[below(out.size())]);
      edges.push_back(e);
      v = g.range(e);
    }
    return edges.empty() ? Path::vertex(v) : Path::of_edges(g, edges);
  }

  Path backward(const Graph& g, VertexId v, std::size_t max_len) {
    std::vector<EdgeRef> edges;
    const std::size_t len = below(max_len + 1);
    for (std::size_t i = 0; i < len && !g.in_bundles(v).empty(); ++i) {
      const auto& in = g.in_bundles(v);
      EdgeRef e = edge_in(g, in[below(in.size())]);
      edges.insert(edges.begin(), e);
      v = g.source(e);
    }
    return edges.empty() ? Path::vertex(v) : Path::of_edges(g, edges);
  }

  Monomial monomial(const Graph& g, std::size_t max_len = 3) {
    Path alpha = forward(g, below(g.vertex_count()), max_len);
    Path beta = backward(g, alpha.range(), max_len);
    return Monomial(std::move(alpha), std::move(beta));
  }

  AlgebraElement element(const Graph& g, std::size_t max_terms = 3) {
    AlgebraElement x;
    const std::size_t terms = 1 + below(max_terms);
    for (std::size_t i = 0; i < terms; ++i)
      x.add_term(monomial(g), Rational(static_cast<long>(below(7)) - 3, 1 + static_cast<long>(below(3))));
    return x;
  }

 private:
  std::mt19937_64 rng_;
};

struct PropertyReport {
  std::size_t checks = 0;
  std::vector<std::string> failures;
};

/// Random algebraic and structural checks on `trials` random graphs.
inline PropertyReport run_property_checks(std::uint64_t seed, std::size_t trials) {
  RandomSource rnd(seed);
  PropertyReport rep;
  auto check = [&](bool ok, const std::string& what) {
    ++rep.checks;
    if (!ok) rep.failures.push_back(what);
  };

  for (std::size_t t = 0; t < trials; ++t) {
    const Graph g = rnd.graph(4, 5, true);
    const std::string tag = "trial " + std::to_string(t) + ": ";

    AlgebraElement x = rnd.element(g), y = rnd.element(g), z = rnd.element(g);
    check(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)), tag + "associativity");
    check(star(multiply(x, y)) == multiply(star(y), star(x)), tag + "star is anti-multiplicative");
    check(star(star(x)) == x, tag + "star is an involution");
    auto cx = degree_components(x), cy = degree_components(y), cxy = degree_components(multiply(x, y));
    std::map<long, AlgebraElement> expected;
    for (const auto& [a, xa] : cx)
      for (const auto& [b, yb] : cy) expected[a + b] += multiply(xa, yb);
    for (auto it = expected.begin(); it != expected.end();) it = it->second.is_zero() ? expected.erase(it) : ++it;
    check(cxy == expected, tag + "grading is multiplicative");

    VertexSet h = g.empty_set();
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (rnd.coin()) h = h | tree_of(g, v);
    const VertexSet hb = saturate(g, h);
    check(h.is_subset_of(hb) && saturate(g, hb) == hb && is_saturated_hereditary(g, hb), tag + "saturate is a closure");

    check(check_condition4(g) == check_condition5(g).has_value(), tag + "check_condition4 agrees with check_condition5");

    if (!g.has_omega() && !has_cycle(g)) {
      const AlgebraElement nx = normal_form(g, x);
      check(normal_form(g, nx) == nx, tag + "normal form is idempotent");
      const RepnMatrices r = build_rho(g);
      check(evaluate(r, multiply(x, y)) == evaluate(r, x) * evaluate(r, y), tag + "evaluate is multiplicative");
      check(evaluate(r, nx) == evaluate(r, x), tag + "evaluate respects normal form");
    }
  }
  return rep;
}

}  // namespace leavitt
