#include <gtest/gtest.h>

#include "leavitt/boundary.hpp"
#include "leavitt/graph_io.hpp"
#include "leavitt/ideal_lattice.hpp"
#include "support/oracles.hpp"
#include "support/sweep.hpp"

using namespace leavitt;

namespace {

AdmissiblePair pair_of(const Graph& g, std::vector<std::string> h, std::vector<std::string> s) {
  return {set_of(g, h), set_of(g, s)};
}

}  // namespace

TEST(QuotientGraph, Examples) {
  const Graph fork = fixture("FORK");
  const Graph q = quotient_graph(fork, pair_of(fork, {"v"}, {}));
  EXPECT_EQ(q, Graph({"u", "w"}, {{"f", "u", "w"}}));

  const Graph o2 = fixture("OMEGA2");
  const Graph q2 = quotient_graph(o2, pair_of(o2, {"w"}, {"v"}));
  EXPECT_EQ(q2, Graph({"v", "u"}, {{"g", "v", "u"}}));

  for (const auto& name : fixture_names()) {
    const Graph g = fixture(name);
    EXPECT_EQ(quotient_graph(g, {g.empty_set(), g.empty_set()}), g) << name;
    EXPECT_EQ(quotient_graph(g, {g.all_vertices(), g.empty_set()}).vertex_count(), 0U) << name;
  }
}

TEST(QuotientGraph, GapSinksReceiveCopiesOfIncomingEdges) {
  // a → v, v ⇒ω w, v → u; H = {w}, S = ∅.
  const Graph g({"a", "v", "w", "u"}, {{"h", "a", "v"}, {"e", "v", "w", Multiplicity::omega()}, {"g", "v", "u"}});
  const QuotientGraph q = quotient(g, pair_of(g, {"w"}, {}));
  EXPECT_EQ(q.graph.vertex_names(), (std::vector<std::string>{"a", "v", "u", "w_v"}));
  ASSERT_TRUE(q.graph.find_bundle("f_h"));
  const auto& f = q.graph.bundle(*q.graph.find_bundle("f_h"));
  EXPECT_EQ(q.graph.vertex_name(f.source), "a");
  EXPECT_EQ(q.graph.vertex_name(f.range), "w_v");
  EXPECT_EQ(classify_vertex(q.graph, "w_v"), VertexClass::Sink);
  EXPECT_EQ(q.gap_of[3], std::optional<VertexId>(g.vertex("v")));
  EXPECT_FALSE(q.original[3]);
}

TEST(QuotientGraph, RejectsInvalidPairs) {
  const Graph fork = fixture("FORK");
  EXPECT_THROW(quotient_graph(fork, pair_of(fork, {"v", "w"}, {})), ContractError);
  EXPECT_THROW(quotient_graph(fork, pair_of(fork, {"v"}, {"u"})), ContractError);
}

TEST(IdealGraph, Examples) {
  const Graph fork = fixture("FORK");
  const Graph i = ideal_graph(fork, set_of(fork, {"v"}));
  EXPECT_EQ(i, Graph({"v", "e"}, {{"bar_e", "e", "v"}}));

  // {w} is saturated once v also emits to z.
  const Graph branch({"u", "v", "w", "z"}, {{"e", "u", "v"}, {"f", "v", "w"}, {"h", "v", "z"}});
  const Graph j = ideal_graph(branch, set_of(branch, {"w"}));
  EXPECT_EQ(j.vertex_names(), (std::vector<std::string>{"w", "f", "ef"}));
  EXPECT_EQ(j.bundle_count(), 2U);
  for (const auto& b : j.bundles()) EXPECT_EQ(j.vertex_name(b.range), "w");

  // In LINE3 the saturation of {w} is everything.
  const Graph line = fixture("LINE3");
  EXPECT_EQ(ideal_graph(line, set_of(line, {"w"})), line);

  for (const auto& name : fixture_names()) {
    const Graph g = fixture(name);
    EXPECT_EQ(ideal_graph(g, g.all_vertices()), g) << name;
  }
}

TEST(IdealGraph, SaturatesFirstAndRefusesInfiniteEntrySets) {
  const Graph fork = fixture("FORK");
  EXPECT_EQ(ideal_graph(fork, set_of(fork, {"v", "w"})), fork);

  const Graph loop({"a", "b"}, {{"l", "a", "a"}, {"e", "a", "b"}});
  try {
    ideal_graph(loop, set_of(loop, {"b"}));
    FAIL() << "expected NotFinitelyPresentable";
  } catch (const NotFinitelyPresentable& e) {
    EXPECT_NE(std::string(e.what()).find("cycle l"), std::string::npos) << e.what();
  }
  const Graph o = fixture("OMEGA");
  try {
    ideal_graph(o, set_of(o, {"w"}));
    FAIL() << "expected NotFinitelyPresentable";
  } catch (const NotFinitelyPresentable& e) {
    EXPECT_NE(std::string(e.what()).find("'e'"), std::string::npos) << e.what();
  }
  EXPECT_THROW(ideal_graph(fork, set_of(fork, {"u"})), ContractError);
}

TEST(EnumerateAdmissiblePairs, Examples) {
  const Graph line = fixture("LINE3");
  const auto pairs = enumerate_admissible_pairs(line);
  ASSERT_EQ(pairs.size(), 2U);
  EXPECT_TRUE(pairs[0].hereditary.empty());
  EXPECT_EQ(pairs[1].hereditary, line.all_vertices());
  const Graph branch({"u", "v", "w", "z"}, {{"e", "u", "v"}, {"f", "v", "w"}, {"h", "v", "z"}});
  const auto bp = enumerate_admissible_pairs(branch);
  ASSERT_EQ(bp.size(), 4U);
  for (const auto& p : bp) EXPECT_TRUE(p.breaking.empty());
  EXPECT_EQ(bp[1].hereditary, set_of(branch, {"w"}));
  EXPECT_EQ(bp[2].hereditary, set_of(branch, {"z"}));
  EXPECT_EQ(enumerate_admissible_pairs(fixture("LOOP1")).size(), 2U);
  EXPECT_EQ(enumerate_admissible_pairs(fixture("PT")).size(), 2U);
  EXPECT_EQ(enumerate_admissible_pairs(fixture("OMEGA2")).size(), 6U);
}

TEST(EnumerateAdmissiblePairs, SizeGuard) {
  std::vector<std::string> vs;
  for (int i = 0; i < 21; ++i) vs.push_back("v" + std::to_string(i));
  EXPECT_THROW(enumerate_admissible_pairs(Graph(vs, {})), SizeError);
}

TEST(IdealLatticeProperties, PairCountMeetClosureAndOrder) {
  sweep::for_each_graph(4, 5, true, [&](const Graph& g) {
    const auto pairs = enumerate_admissible_pairs(g);
    ASSERT_EQ(pairs.size(), oracle::admissible_pair_count(g));
    const auto hs = saturated_hereditary_sets(g);
    for (const auto& a : hs)
      for (const auto& b : hs) ASSERT_TRUE(is_saturated_hereditary(g, a & b));
    for (const auto& p : pairs) {
      ASSERT_TRUE(pair_leq(p, p));
      ASSERT_TRUE(pair_leq({g.empty_set(), g.empty_set()}, p));
      ASSERT_TRUE(pair_leq(p, {g.all_vertices(), g.empty_set()}));
    }
  });
}

TEST(IdealLatticeProperties, QuotientGapSinksAreSinks) {
  sweep::for_each_graph(3, 4, true, [&](const Graph& g) {
    for (const auto& p : enumerate_admissible_pairs(g)) {
      const QuotientGraph q = quotient(g, p);
      const std::size_t gaps = (breaking_vertices(g, p.hereditary) - p.breaking).size();
      ASSERT_EQ(q.graph.vertex_count(), g.vertex_count() - p.hereditary.size() + gaps);
      for (VertexId x = 0; x < q.graph.vertex_count(); ++x)
        if (q.gap_of[x]) { ASSERT_EQ(classify_vertex(q.graph, x), VertexClass::Sink); }
    }
  });
}

TEST(IdealLatticeProperties, ClassCountsAddAcrossIdealAndQuotient) {
  std::size_t checked = 0;
  sweep::for_each_graph(4, 5, false, [&](const Graph& g) {
    const Cardinal total = enumerate_classes(g).cardinality;
    for (const auto& h : saturated_hereditary_sets(g)) {
      Graph ideal;
      try {
        ideal = ideal_graph(g, h);
      } catch (const NotFinitelyPresentable&) {
        continue;
      }
      const Cardinal inner = enumerate_classes(ideal).cardinality;
      const Cardinal outer = enumerate_classes(quotient_graph(g, {h, g.empty_set()})).cardinality;
      ASSERT_EQ(total, inner + outer);
      ++checked;
    }
  });
  EXPECT_GT(checked, 10000U);
}
