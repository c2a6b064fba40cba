#include <gtest/gtest.h>

#include "leavitt/boundary.hpp"
#include "leavitt/graph_io.hpp"
#include "support/oracles.hpp"
#include "support/sweep.hpp"

using namespace leavitt;

namespace {

BoundaryPath fin(const Graph& g, const std::string& p) { return BoundaryPath::finite(g, parse_path(g, p)); }

BoundaryPath per(const Graph& g, const std::string& prefix, const std::string& cycle) {
  return BoundaryPath::periodic(g, parse_path(g, prefix), parse_path(g, cycle).edges());
}

}  // namespace

TEST(BoundaryPath, Invariants) {
  const Graph line = fixture("LINE3");
  EXPECT_THROW(fin(line, "e"), ContractError);
  EXPECT_NO_THROW(fin(line, "e/f"));
  const Graph loop = fixture("LOOP1");
  EXPECT_THROW(per(loop, "v", "v"), ContractError);
  const Graph two({"a", "b"}, {{"x", "a", "b"}, {"y", "b", "a"}});
  EXPECT_THROW(per(two, "a", "x"), ContractError);
}

TEST(BoundaryPath, CanonicalFormIsPrimitiveAndMinimal) {
  const Graph two({"a", "b"}, {{"x", "a", "b"}, {"y", "b", "a"}});
  const BoundaryPath p = per(two, "x/y", "x/y/x/y");
  EXPECT_TRUE(p.prefix().is_vertex());
  EXPECT_EQ(render_cycle(two, p.cycle()), "x/y");
  EXPECT_EQ(p, per(two, "a", "x/y"));
  EXPECT_EQ(per(two, "y", "x/y"), per(two, "b", "y/x"));
  EXPECT_EQ(render_boundary_path(two, per(two, "y", "x/y")), "(y/x)^");

  const Graph tail({"s", "a"}, {{"t", "s", "a"}, {"l", "a", "a"}});
  EXPECT_EQ(render_boundary_path(tail, per(tail, "t/l/l", "l")), "t(l)^");
}

TEST(Shift, Examples) {
  const Graph line = fixture("LINE3");
  EXPECT_EQ(shift(line, fin(line, "w")), fin(line, "w"));
  EXPECT_EQ(shift(line, fin(line, "e/f")), fin(line, "f"));
  const Graph loop = fixture("LOOP1");
  EXPECT_EQ(shift(loop, per(loop, "v", "e")), per(loop, "v", "e"));
  const Graph two({"a", "b"}, {{"x", "a", "b"}, {"y", "b", "a"}});
  EXPECT_EQ(shift(two, per(two, "a", "x/y")), per(two, "b", "y/x"));
}

TEST(StEquivalent, Examples) {
  const Graph fork = fixture("FORK");
  EXPECT_TRUE(st_equivalent(fin(fork, "v"), fin(fork, "e")));
  EXPECT_FALSE(st_equivalent(fin(fork, "v"), fin(fork, "w")));
  const Graph rose = fixture("ROSE2");
  EXPECT_FALSE(st_equivalent(per(rose, "v", "e"), per(rose, "v", "f")));
  const Graph tail({"s", "a"}, {{"t", "s", "a"}, {"l", "a", "a"}, {"k", "s", "s"}});
  EXPECT_FALSE(st_equivalent(per(tail, "s", "k"), per(tail, "t", "l")));
  EXPECT_TRUE(st_equivalent(per(tail, "k/t", "l"), per(tail, "a", "l")));
}

TEST(EnumerateClasses, Examples) {
  const auto loop = enumerate_classes(fixture("LOOP1"));
  EXPECT_EQ(loop.cardinality, Cardinal::finite(1));
  ASSERT_EQ(loop.classes.size(), 1U);
  EXPECT_FALSE(loop.classes[0].representative.is_finite());
  EXPECT_EQ(loop.classes[0].size, Cardinal::finite(1));

  EXPECT_EQ(enumerate_classes(fixture("ROSE2")).cardinality, Cardinal::uncountable());

  const auto fork = enumerate_classes(fixture("FORK"));
  EXPECT_EQ(fork.cardinality, Cardinal::finite(2));
  ASSERT_EQ(fork.classes.size(), 2U);
  EXPECT_EQ(fork.classes[0].size, Cardinal::finite(2));
  EXPECT_EQ(fork.classes[1].size, Cardinal::finite(2));

  const auto o2 = enumerate_classes(fixture("OMEGA2"));
  EXPECT_EQ(o2.cardinality, Cardinal::finite(3));
  EXPECT_EQ(o2.classes[1].size, Cardinal::countably_infinite());
}

TEST(EnumerateClasses, CycleClassSizes) {
  // s → a, a ↺ l: the tail (l)^ is reached from a and through t.
  const Graph tail({"s", "a"}, {{"t", "s", "a"}, {"l", "a", "a"}});
  const auto census = enumerate_classes(tail);
  ASSERT_EQ(census.cardinality, Cardinal::finite(1));
  EXPECT_EQ(census.classes[0].size, Cardinal::finite(2));
  // A cycle feeding another cycle gives infinitely many paths per tail.
  const Graph chain({"a", "b"}, {{"k", "a", "a"}, {"t", "a", "b"}, {"l", "b", "b"}});
  const auto c2 = enumerate_classes(chain);
  ASSERT_EQ(c2.cardinality, Cardinal::finite(2));
  EXPECT_EQ(c2.classes[0].size, Cardinal::finite(1));
  EXPECT_EQ(c2.classes[1].size, Cardinal::countably_infinite());
}

// Properties.

TEST(BoundaryProperties, EquivalenceLawsAndShiftCrossCheckOnFixtures) {
  std::vector<Graph> graphs;
  for (const auto& name : fixture_names()) graphs.push_back(fixture(name));
  graphs.push_back(Graph({"s", "a"}, {{"t", "s", "a"}, {"l", "a", "a"}, {"k", "s", "s"}}));
  graphs.push_back(Graph({"a", "b"}, {{"x", "a", "b"}, {"y", "b", "a"}, {"z", "b", "b"}}));
  for (const Graph& g : graphs) {
    const auto paths = oracle::boundary_paths(g, 3, 3);
    ASSERT_FALSE(paths.empty());
    for (const auto& a : paths) {
      ASSERT_TRUE(st_equivalent(a, a));
      ASSERT_EQ(oracle::shift_tail(a, a), true);
      for (const auto& b : paths) {
        const bool eq = st_equivalent(a, b);
        ASSERT_EQ(eq, st_equivalent(b, a));
        ASSERT_EQ(eq, oracle::shift_tail(a, b));
        if (a.is_finite() != b.is_finite()) { ASSERT_FALSE(eq); }

        // Closed form against iterated shifting.
        const std::size_t bound = a.prefix().length() + b.prefix().length() + a.cycle().size() * b.cycle().size() + 1;
        bool met = false;
        BoundaryPath x = a;
        for (std::size_t m = 0; m <= bound && !met; ++m, x = shift(g, x)) {
          BoundaryPath y = b;
          for (std::size_t n = 0; n <= bound && !met; ++n, y = shift(g, y)) met = x == y;
        }
        ASSERT_EQ(eq, met);
      }
    }
    for (const auto& a : paths)
      for (const auto& b : paths) {
        if (!st_equivalent(a, b)) continue;
        for (const auto& c : paths)
          if (st_equivalent(b, c)) { ASSERT_TRUE(st_equivalent(a, c)); }
      }
  }
}

TEST(BoundaryProperties, CanonicalFormMatchesInfiniteWords) {
  const Graph g({"a", "b"}, {{"x", "a", "b"}, {"y", "b", "a"}, {"z", "b", "b"}});
  const auto paths = oracle::boundary_paths(g, 3, 4);
  for (const auto& a : paths)
    for (const auto& b : paths) {
      if (a.is_finite() || b.is_finite()) continue;
      ASSERT_EQ(a == b, oracle::word(a, 40) == oracle::word(b, 40));
    }
}

TEST(BoundaryProperties, CensusAgreesWithEnumeration) {
  sweep::for_each_graph(4, 5, true, [&](const Graph& g) {
    const ClassCensus census = enumerate_classes(g);
    ASSERT_EQ(census.cardinality == Cardinal::uncountable(), oracle::exponential_growth(g));
    if (!has_cycle(g)) {
      ASSERT_EQ(census.cardinality, Cardinal::finite(singular_vertices(g).size()));
      if (!g.has_omega()) { ASSERT_EQ(census.cardinality, Cardinal::finite(sinks(g).size())); }
    }
    for (std::size_t i = 0; i < census.classes.size(); ++i)
      for (std::size_t j = i + 1; j < census.classes.size(); ++j)
        ASSERT_FALSE(st_equivalent(census.classes[i].representative, census.classes[j].representative));
  });
}

TEST(BoundaryProperties, ClassSizesMatchPathCounts) {
  sweep::for_each_graph(4, 4, false, [&](const Graph& g) {
    if (has_cycle(g)) return;
    const auto census = enumerate_classes(g);
    const auto sink_paths = oracle::sink_paths(g);
    for (const auto& c : census.classes) {
      const auto n = std::count_if(sink_paths.begin(), sink_paths.end(),
                                   [&](const Path& p) { return p.range() == c.representative.prefix().range(); });
      ASSERT_EQ(c.size, Cardinal::finite(static_cast<std::uint64_t>(n)));
    }
  });
}
