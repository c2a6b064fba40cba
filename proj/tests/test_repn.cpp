#include <gtest/gtest.h>

#include "leavitt/graph_io.hpp"
#include "leavitt/naimark.hpp"
#include "leavitt/proptest.hpp"
#include "leavitt/repn.hpp"
#include "support/oracles.hpp"
#include "support/sweep.hpp"

using namespace leavitt;

namespace {

const std::vector<std::string> kAcyclicFixtures{"PT", "LINE3", "ENTRY4", "FORK"};

std::vector<std::string> rendered(const Graph& g, const std::vector<Path>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(render_path(g, p));
  return out;
}

// ρ(x) from the action of each monomial on basis paths, computed without matrices.
Matrix act_matrix(const Graph& g, const RepnMatrices& r, const AlgebraElement& x) {
  Matrix m(r.dim(), r.dim());
  for (const auto& [mono, c] : x.terms())
    for (std::size_t j = 0; j < r.dim(); ++j)
      if (auto image = oracle::act(mono, r.basis[j])) m(r.index_of(*image), j) += c;
  (void)g;
  return m;
}

}  // namespace

TEST(BuildRho, Examples) {
  const Graph line = fixture("LINE3");
  const RepnMatrices r = build_rho(line);
  EXPECT_EQ(rendered(line, r.basis), (std::vector<std::string>{"w", "f", "e/f"}));
  EXPECT_EQ(r.generators.size(), 2 * 2 + 3U);
  const Matrix& se = r.edge(line.parse_edge("e"));
  EXPECT_EQ(se(r.index_of(parse_path(line, "e/f")), r.index_of(parse_path(line, "f"))), 1);
  EXPECT_EQ(r.vertex(line.vertex("w"))(0, 0), 1);

  const Graph fork = fixture("FORK");
  const RepnMatrices rf = build_rho(fork);
  EXPECT_EQ(rendered(fork, rf.basis), (std::vector<std::string>{"v", "e", "w", "f"}));

  EXPECT_THROW(build_rho(fixture("LOOP1")), UnsupportedError);
  EXPECT_THROW(build_rho(fixture("OMEGA")), UnsupportedError);
}

TEST(Evaluate, MatchesTheActionOnPaths) {
  RandomSource rnd(99);
  for (const auto& name : kAcyclicFixtures) {
    const Graph g = fixture(name);
    const RepnMatrices r = build_rho(g);
    for (int i = 0; i < 200; ++i) {
      const AlgebraElement x = rnd.element(g);
      ASSERT_EQ(evaluate(r, x), act_matrix(g, r, x)) << name << ": " << render(g, x);
    }
  }
}

TEST(Blocks, ForkSplitsIntoTwoIrreducibles) {
  const Graph fork = fixture("FORK");
  const RepnMatrices r = build_rho(fork);
  const auto blocks = decompose_blocks(r);
  ASSERT_EQ(blocks.size(), 2U);
  EXPECT_EQ(render_boundary_path(fork, blocks[0].representative), "v");
  EXPECT_EQ(blocks[0].indices, (std::vector<std::size_t>{0, 1}));
  for (const auto& b : blocks) {
    EXPECT_TRUE(is_invariant(r, b.indices));
    EXPECT_TRUE(verify_irreducible_block(r, b.indices).irreducible);
  }
  EXPECT_EQ(hom_space_dim(r, blocks[0].indices, blocks[0].indices), 1U);
  EXPECT_EQ(hom_space_dim(r, blocks[0].indices, blocks[1].indices), 0U);
}

TEST(Blocks, ReducibleSpanIsDetected) {
  const Graph fork = fixture("FORK");
  const RepnMatrices r = build_rho(fork);
  std::vector<std::size_t> all(r.dim());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  EXPECT_TRUE(is_invariant(r, all));
  const auto cert = verify_irreducible_block(r, all);
  EXPECT_FALSE(cert.irreducible);
  EXPECT_EQ(cert.orbits.size(), 1U);
  EXPECT_EQ(hom_space_dim(r, all, all), 2U);
  EXPECT_FALSE(is_invariant(r, {0}));
}

TEST(Blocks, OrbitWordsReproduceOrbitVectors) {
  const Graph g = fixture("ENTRY4");
  const RepnMatrices r = build_rho(g);
  const auto blocks = decompose_blocks(r);
  ASSERT_EQ(blocks.size(), 1U);
  const auto cert = verify_irreducible_block(r, blocks[0].indices);
  ASSERT_TRUE(cert.irreducible);
  ASSERT_EQ(cert.orbits.size(), r.dim());
  for (const auto& orbit : cert.orbits)
    for (std::size_t k = 0; k < orbit.vectors.size(); ++k) {
      Matrix v(r.dim(), 1);
      v(orbit.start, 0) = 1;
      for (auto it = orbit.words[k].rbegin(); it != orbit.words[k].rend(); ++it) v = r.images[*it] * v;
      for (std::size_t i = 0; i < r.dim(); ++i) ASSERT_EQ(v(i, 0), orbit.vectors[k][i]);
    }
}

TEST(DumpMatrix, HeaderNamesTheBasis) {
  const Graph line = fixture("LINE3");
  const RepnMatrices r = build_rho(line);
  const std::string dump = dump_matrix(r, "s_f", r.edge(line.parse_edge("f")));
  EXPECT_EQ(dump.substr(0, dump.find('\n')), "# s_f 3x3");
  EXPECT_NE(dump.find("# basis: w f e/f\n"), std::string::npos);
}

TEST(MatrixUnits, Examples) {
  const Graph line = fixture("LINE3");
  const MatrixUnitSystem ls = matrix_units(line, line.vertex("u"));
  EXPECT_EQ(rendered(line, ls.index), (std::vector<std::string>{"u", "v", "w"}));
  EXPECT_EQ(ls.units[0][2], Monomial(parse_path(line, "e/f"), parse_path(line, "w")));
  EXPECT_EQ(verify_matrix_units(line, ls), std::nullopt);
  EXPECT_TRUE(units_cover_sink_basis(line, ls));

  const Graph entry = fixture("ENTRY4");
  const MatrixUnitSystem es = matrix_units(entry, entry.vertex("u"));
  EXPECT_EQ(rendered(entry, es.index), (std::vector<std::string>{"u", "v", "w", "g"}));
  EXPECT_EQ(verify_matrix_units(entry, es), std::nullopt);

  const Graph fork = fixture("FORK");
  const MatrixUnitSystem fs = matrix_units(fork, fork.vertex("v"));
  EXPECT_EQ(rendered(fork, fs.index), (std::vector<std::string>{"v", "e"}));
  EXPECT_EQ(verify_matrix_units(fork, fs), std::nullopt);
  EXPECT_FALSE(units_cover_sink_basis(fork, fs));

  EXPECT_THROW(matrix_units(fork, fork.vertex("u")), ContractError);
}

TEST(MatrixUnits, BrokenSystemIsReported) {
  const Graph line = fixture("LINE3");
  MatrixUnitSystem sys = matrix_units(line, line.vertex("u"));
  std::swap(sys.units[0][1], sys.units[0][2]);
  EXPECT_NE(verify_matrix_units(line, sys), std::nullopt);
}

TEST(NaimarkIsomorphism, Examples) {
  const Graph entry = fixture("ENTRY4");
  const MatrixUnitSystem sys = naimark_isomorphism(entry);
  EXPECT_EQ(sys.line_point, entry.vertex("x"));
  EXPECT_EQ(sys.index.size(), 4U);
  EXPECT_THROW(naimark_isomorphism(fixture("FORK")), ContractError);
}

// Properties over acyclic single-multiplicity graphs.

TEST(RepnProperties, CuntzKriegerRelationsHoldExactly) {
  sweep::for_each_graph(4, 5, false, [&](const Graph& g) {
    if (has_cycle(g)) return;
    const RepnMatrices r = build_rho(g);
    const std::size_t n = r.dim();
    Matrix sum_p(n, n);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      const Matrix& pv = r.vertex(v);
      ASSERT_EQ(pv * pv, pv);
      for (VertexId w = v + 1; w < g.vertex_count(); ++w) ASSERT_TRUE((pv * r.vertex(w)).is_zero());
      sum_p = sum_p + pv;
    }
    ASSERT_EQ(sum_p, Matrix::identity(n));
    for (EdgeRef e : g.edges()) {
      ASSERT_EQ(r.edge_star(e), r.edge(e).transpose());
      ASSERT_EQ(r.vertex(g.source(e)) * r.edge(e), r.edge(e));
      ASSERT_EQ(r.edge(e) * r.vertex(g.range(e)), r.edge(e));
      for (EdgeRef f : g.edges()) {
        const Matrix prod = r.edge_star(e) * r.edge(f);
        if (e == f) {
          ASSERT_EQ(prod, r.vertex(g.range(e)));
        } else {
          ASSERT_TRUE(prod.is_zero());
        }
      }
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      const auto es = g.out_edges(v);
      if (es.empty()) continue;
      Matrix sum(n, n);
      for (EdgeRef e : es) sum = sum + r.edge(e) * r.edge_star(e);
      ASSERT_EQ(sum, r.vertex(v));
    }
  });
}

TEST(RepnProperties, BlocksAreIrreducibleAndPairwiseDisjoint) {
  sweep::for_each_graph(4, 5, false, [&](const Graph& g) {
    if (has_cycle(g)) return;
    const RepnMatrices r = build_rho(g);
    const auto blocks = decompose_blocks(r);
    ASSERT_EQ(blocks.size(), sinks(g).size());
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      ASSERT_TRUE(is_invariant(r, blocks[i].indices));
      ASSERT_TRUE(verify_irreducible_block(r, blocks[i].indices).irreducible);
      for (std::size_t j = 0; j < blocks.size(); ++j)
        ASSERT_EQ(hom_space_dim(r, blocks[i].indices, blocks[j].indices), i == j ? 1U : 0U);
    }
  });
}

TEST(RepnProperties, EvaluateIsInjectiveOnTheSinkBasis) {
  sweep::for_each_graph(3, 4, false, [&](const Graph& g) {
    if (has_cycle(g)) return;
    const RepnMatrices r = build_rho(g);
    std::vector<SparseRow> rows;
    for (const Monomial& m : sink_basis(g)) {
      const Matrix x = evaluate(r, AlgebraElement(m));
      SparseRow row;
      for (std::size_t i = 0; i < r.dim(); ++i)
        for (std::size_t j = 0; j < r.dim(); ++j)
          if (x(i, j) != 0) row.emplace(i * r.dim() + j, x(i, j));
      rows.push_back(std::move(row));
    }
    Echelon e;
    for (auto& row : rows) ASSERT_TRUE(e.insert(row));
  });
}

TEST(RepnProperties, EvaluateIsMultiplicativeAndRespectsNormalForm) {
  RandomSource rnd(3);
  for (const auto& name : kAcyclicFixtures) {
    const Graph g = fixture(name);
    const RepnMatrices r = build_rho(g);
    for (int i = 0; i < 300; ++i) {
      const AlgebraElement x = rnd.element(g), y = rnd.element(g);
      ASSERT_EQ(evaluate(r, x * y), evaluate(r, x) * evaluate(r, y));
      ASSERT_EQ(evaluate(r, star(x)), evaluate(r, x).transpose());
      ASSERT_EQ(evaluate(r, normal_form(g, x)), evaluate(r, x));
    }
  }
}

TEST(RepnProperties, MatrixUnitsAtEveryLinePoint) {
  sweep::for_each_graph(3, 4, false, [&](const Graph& g) {
    if (has_cycle(g)) return;
    for (VertexId v : line_points(g).members()) {
      const MatrixUnitSystem sys = matrix_units(g, v);
      ASSERT_EQ(verify_matrix_units(g, sys), std::nullopt);
      ASSERT_EQ(Cardinal::finite(sys.index.size()), line_ideal_size(g, v));
    }
  });
}
