#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "sepchordal/chordal.hpp"
#include "sepchordal/enumerate.hpp"
#include "sepchordal/patterns.hpp"

using namespace sepchordal;

namespace {

// Hajós labelling used throughout: x=0, y=1, z=2, a=3, b=4, c=5.
const VertexSet x_y{0, 1}, x_z{0, 2}, y_z{1, 2};

std::vector<std::vector<int>> all_orders(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

TEST(MaximumCardinalitySearch, CompleteGraphAnyOrderIsPeo) {
  auto order = maximum_cardinality_search(complete_graph(4));
  EXPECT_EQ(order.order, (std::vector<int>{0, 1, 2, 3}));
  EXPECT_TRUE(is_perfect_elimination_ordering(complete_graph(4), order.reversed()));
}

TEST(MaximumCardinalitySearch, FourCycleFails) {
  auto c4 = cycle_graph(4);
  EXPECT_FALSE(is_perfect_elimination_ordering(c4, maximum_cardinality_search(c4).reversed()));
}

TEST(MaximumCardinalitySearch, HajosPasses) {
  auto h = named::hajos();
  EXPECT_TRUE(oracle::chordal(h));
  EXPECT_TRUE(is_perfect_elimination_ordering(h, maximum_cardinality_search(h).reversed()));
}

TEST(MaximumCardinalitySearch, TiesGoToSmallestId) {
  // star centred at 2: 0 first, then its only neighbour 2, then 1, 3
  Graph star(4, {{2, 0}, {2, 1}, {2, 3}});
  EXPECT_EQ(maximum_cardinality_search(star).order, (std::vector<int>{0, 2, 1, 3}));
}

TEST(PerfectElimination, CompleteGraphEveryOrder) {
  for (const auto& o : all_orders(4)) EXPECT_TRUE(is_perfect_elimination_ordering(complete_graph(4), {o}));
}

TEST(PerfectElimination, FourCycleNoOrder) {
  for (const auto& o : all_orders(4)) EXPECT_FALSE(is_perfect_elimination_ordering(cycle_graph(4), {o}));
}

TEST(PerfectElimination, PathOrder0312) {
  EXPECT_TRUE(is_perfect_elimination_ordering(path_graph(4), {{0, 3, 1, 2}}));
  EXPECT_FALSE(is_perfect_elimination_ordering(path_graph(4), {{1, 0, 2, 3}}));
}

TEST(PerfectElimination, RejectsNonPermutation) {
  EXPECT_THROW(is_perfect_elimination_ordering(path_graph(3), {{0, 0, 1}}), domain_error);
  EXPECT_THROW(is_perfect_elimination_ordering(path_graph(3), {{0, 1}}), domain_error);
  EXPECT_THROW(is_perfect_elimination_ordering(path_graph(3), {{0, 1, 3}}), domain_error);
}

TEST(IsChordal, NamedGraphs) {
  EXPECT_FALSE(is_chordal(cycle_graph(4)));
  EXPECT_TRUE(is_chordal(named::gem()));
  EXPECT_TRUE(oracle::chordal(named::butterfly()));
  EXPECT_TRUE(is_chordal(named::butterfly()));
}

TEST(IsChordalBruteforce, NamedGraphs) {
  EXPECT_FALSE(is_chordal_bruteforce(cycle_graph(5)));
  EXPECT_TRUE(is_chordal_bruteforce(named::hajos()));
  oracle::RandomGraphs gen(5);
  for (int trial = 0; trial < 50; ++trial) {
    // random tree: attach each vertex to one earlier vertex
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v < 10; ++v) e.emplace_back(static_cast<int>(gen.next() % v), v);
    EXPECT_TRUE(is_chordal_bruteforce(Graph(10, e)));
  }
}

TEST(IsChordal, AgreesWithOracleOnAllLabelledSixVertexGraphs) {
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << 15); ++m) {
    auto g = oracle::from_pair_mask(6, m);
    bool fast = is_chordal(g);
    ASSERT_EQ(fast, is_chordal_bruteforce(g)) << to_graph6(g);
    if (m % 16 == 0) ASSERT_EQ(fast, oracle::chordal(g)) << to_graph6(g);
  }
}

TEST(IsChordal, AgreesWithBruteforceOnRandomLargerGraphs) {
  oracle::RandomGraphs gen(19);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = (trial % 2) ? gen.chordal_graph(12) : gen.graph(11, 30 + trial % 50);
    EXPECT_EQ(is_chordal(g), is_chordal_bruteforce(g)) << to_graph6(g);
  }
}

TEST(MaximalCliques, Hajos) {
  auto cliques = maximal_cliques(named::hajos());
  std::vector<VertexSet> expected{{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {1, 2, 5}};
  EXPECT_EQ(cliques, expected);
}

TEST(MaximalCliques, CompleteAndClaw) {
  EXPECT_EQ(maximal_cliques(complete_graph(4)), std::vector<VertexSet>{VertexSet::range(4)});
  std::vector<VertexSet> claw{{0, 1}, {0, 2}, {0, 3}};
  EXPECT_EQ(maximal_cliques(named::claw()), claw);
}

TEST(MaximalCliques, RejectsNonChordal) { EXPECT_THROW(maximal_cliques(cycle_graph(5)), domain_error); }

TEST(MaximalCliques, MatchBruteForceMaximality) {
  oracle::RandomGraphs gen(23);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = gen.chordal_graph(9);
    auto cliques = maximal_cliques(g);
    std::set<VertexSet> expected;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << 9); ++m) {
      VertexSet s(m);
      if (!g.is_clique(s)) continue;
      bool maximal = true;
      for (int v = 0; v < 9; ++v)
        if (!s.contains(v) && g.is_clique(s.with(v))) maximal = false;
      if (maximal) expected.insert(s);
    }
    EXPECT_EQ(cliques, std::vector<VertexSet>(expected.begin(), expected.end()));
    EXPECT_GE(cliques.size(), 1U);
    EXPECT_LE(static_cast<int>(cliques.size()), g.order());
  }
}

TEST(CliqueTree, HajosIsStarAroundInnerTriangle) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto t = build_clique_tree(named::hajos(), seed);
    ASSERT_EQ(t.cliques.size(), 4U);
    ASSERT_EQ(t.edges.size(), 3U);
    int centre = static_cast<int>(std::find(t.cliques.begin(), t.cliques.end(), VertexSet{0, 1, 2}) - t.cliques.begin());
    EXPECT_EQ(t.degree(centre), 3);
    std::vector<VertexSet> labels;
    for (const auto& e : t.edges) labels.push_back(e.label);
    std::sort(labels.begin(), labels.end());
    EXPECT_EQ(labels, (std::vector<VertexSet>{x_y, x_z, y_z}));
  }
}

TEST(CliqueTree, CompleteGraphSingleNode) {
  auto t = build_clique_tree(complete_graph(4), 3);
  EXPECT_EQ(t.cliques.size(), 1U);
  EXPECT_TRUE(t.edges.empty());
}

TEST(CliqueTree, PathOfThreeCliques) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto t = build_clique_tree(path_graph(4), seed);
    ASSERT_EQ(t.cliques.size(), 3U);
    EXPECT_EQ(separator_multiset(t).separators, (std::vector<VertexSet>{{1}, {2}}));
    EXPECT_EQ(t.degree(1), 2);  // {1,2} is the middle clique
  }
}

TEST(CliqueTree, Errors) {
  EXPECT_THROW(build_clique_tree(cycle_graph(4), 0), domain_error);
  EXPECT_THROW(build_clique_tree(named::two_p3(), 0), domain_error);
}

TEST(CliqueTree, SeedsCanChooseDifferentTrees) {
  // the claw's three cliques pairwise meet in the centre, so any two tree edges form a valid tree
  std::set<std::vector<std::pair<int, int>>> shapes;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto t = build_clique_tree(named::claw(), seed);
    EXPECT_TRUE(is_valid_clique_tree(t));
    std::vector<std::pair<int, int>> shape;
    for (const auto& e : t.edges) shape.emplace_back(e.a, e.b);
    shapes.insert(shape);
    auto again = build_clique_tree(named::claw(), seed);
    ASSERT_EQ(again.edges.size(), t.edges.size());
    for (std::size_t i = 0; i < t.edges.size(); ++i) EXPECT_EQ(again.edges[i].a, t.edges[i].a);
  }
  EXPECT_GE(shapes.size(), 2U);
}

TEST(CliqueTree, ValidityCatchesBrokenTrees) {
  auto t = build_clique_tree(path_graph(4), 0);
  EXPECT_TRUE(is_valid_clique_tree(t));
  auto bad_label = t;
  bad_label.edges[0].label = VertexSet{3};
  EXPECT_FALSE(is_valid_clique_tree(bad_label));
  // path {0,1}-{2,3}-{1,2}: vertex 1 and 2 subtrees break
  CliqueTree wrong{t.cliques, {{0, 2, VertexSet{}}, {1, 2, VertexSet{2}}}};
  EXPECT_FALSE(is_valid_clique_tree(wrong));
}

TEST(CliqueTree, InvariantsOnRandomChordalGraphs) {
  oracle::RandomGraphs gen(29);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = gen.chordal_graph(10);
    auto first = separator_multiset(build_clique_tree(g, 0));
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      auto t = build_clique_tree(g, seed);
      EXPECT_TRUE(is_valid_clique_tree(t));
      EXPECT_EQ(separator_multiset(t), first);
    }
    EXPECT_EQ(first.support(), minimal_separators_direct(g));
  }
}

TEST(SeparatorMultiset, NamedGraphs) {
  EXPECT_EQ(separator_multiset(build_clique_tree(named::hajos(), 0)).separators,
            (std::vector<VertexSet>{x_y, x_z, y_z}));
  EXPECT_TRUE(separator_multiset(build_clique_tree(complete_graph(4), 0)).empty());
}

TEST(SeparatorMultiset, Butterfly) {
  // centre 0, left middle 2, right middle 5
  auto f = separator_multiset(build_clique_tree(named::butterfly(), 0));
  EXPECT_EQ(f.separators, (std::vector<VertexSet>{{0}, {0, 2}, {0, 5}}));
  for (auto s : f.separators) EXPECT_TRUE(oracle::is_minimal_separator(named::butterfly(), s));
  int minimal = 0;
  for (std::uint64_t m = 1; m < 128; ++m) minimal += oracle::is_minimal_separator(named::butterfly(), VertexSet(m));
  EXPECT_EQ(minimal, 3);
}

TEST(SeparatorFamily, DisconnectedGraphsUnionComponents) {
  EXPECT_EQ(separator_family(named::two_p3()).separators, (std::vector<VertexSet>{{1}, {4}}));
  EXPECT_EQ(separator_family(named::claw()).separators, (std::vector<VertexSet>{{0}, {0}}));
  EXPECT_TRUE(separator_family(Graph(3)).empty());
  EXPECT_THROW(separator_family(cycle_graph(4)), domain_error);
}

TEST(MinimalSeparatorsDirect, NamedGraphs) {
  EXPECT_EQ(minimal_separators_direct(path_graph(4)), (std::vector<VertexSet>{{1}, {2}}));
  EXPECT_EQ(minimal_separators_direct(named::claw()), std::vector<VertexSet>{VertexSet{0}});
  EXPECT_TRUE(minimal_separators_direct(complete_graph(4)).empty());
  EXPECT_EQ(minimal_separators_direct(cycle_graph(4)), (std::vector<VertexSet>{{0, 2}, {1, 3}}));
}

TEST(MinimalSeparatorsDirect, AgreesWithExhaustiveAndOracle) {
  oracle::RandomGraphs gen(31);
  for (int trial = 0; trial < 150; ++trial) {
    auto g = gen.graph(8, 20 + trial % 60);
    auto direct = minimal_separators_direct(g);
    EXPECT_EQ(direct, minimal_separators_exhaustive(g)) << to_graph6(g);
    std::vector<VertexSet> expected;
    for (std::uint64_t m = 1; m < 256; ++m)
      if (oracle::is_minimal_separator(g, VertexSet(m))) expected.emplace_back(m);
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(direct, expected) << to_graph6(g);
  }
}

TEST(Dirac, ChordalIffSeparatorsAreCliques) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& g : enumerate_graphs(n, GraphFilter::connected)) {
      auto seps = minimal_separators_direct(g);
      bool cliques = std::all_of(seps.begin(), seps.end(), [&](VertexSet s) { return g.is_clique(s); });
      EXPECT_EQ(cliques, is_chordal(g)) << to_graph6(g);
    }
}

TEST(Dot, Rendering) {
  auto dot = to_dot(build_clique_tree(path_graph(3), 0), {"a", "b", "c"});
  EXPECT_EQ(dot,
            "graph clique_tree {\n"
            "  c0 [label=\"{a,b}\"];\n"
            "  c1 [label=\"{b,c}\"];\n"
            "  c0 -- c1 [label=\"{b}\"];\n"
            "}\n");
}
