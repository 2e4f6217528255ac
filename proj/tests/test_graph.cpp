#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sepchordal/graph.hpp"
#include "sepchordal/patterns.hpp"

using namespace sepchordal;

TEST(VertexSet, MembersAreSortedAndUnique) {
  VertexSet s{5, 1, 3, 1};
  EXPECT_EQ(s.members(), (std::vector<int>{1, 3, 5}));
  EXPECT_EQ(s.size(), 3);
  EXPECT_EQ(s.to_string(), "{1,3,5}");
  EXPECT_EQ(VertexSet({1, 3, 5}), s);
}

TEST(VertexSet, LexicographicOrderOnMemberLists) {
  EXPECT_LT((VertexSet{0, 5}), (VertexSet{1}));
  EXPECT_LT((VertexSet{1}), (VertexSet{1, 2}));
  EXPECT_LT((VertexSet{}), (VertexSet{0}));
  EXPECT_LT((VertexSet{1, 2, 9}), (VertexSet{1, 3}));
  EXPECT_EQ((VertexSet{2, 4}) <=> (VertexSet{4, 2}), std::strong_ordering::equal);
}

TEST(VertexSet, SetAlgebra) {
  VertexSet a{0, 1, 2}, b{1, 2, 3};
  EXPECT_EQ(a & b, (VertexSet{1, 2}));
  EXPECT_EQ(a | b, (VertexSet{0, 1, 2, 3}));
  EXPECT_EQ(a - b, (VertexSet{0}));
  EXPECT_TRUE((VertexSet{1, 2}).proper_subset_of(a));
  EXPECT_FALSE(a.proper_subset_of(a));
  EXPECT_TRUE(a.subset_of(a));
}

TEST(Graph, RejectsLoopsAndOutOfRange) {
  EXPECT_THROW(Graph(3, {{1, 1}}), domain_error);
  EXPECT_THROW(Graph(3, {{0, 3}}), domain_error);
  EXPECT_THROW(Graph(63), unsupported_size);
  EXPECT_THROW(Graph::from_rows({0b10, 0b00}), domain_error);  // asymmetric
}

TEST(Graph, AdjacencyIsSymmetric) {
  Graph g(4, {{0, 1}, {2, 1}});
  EXPECT_TRUE(g.adjacent(1, 2));
  EXPECT_TRUE(g.adjacent(2, 1));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_EQ(g.edge_count(), 2);
  EXPECT_EQ(g.degree(1), 2);
}

TEST(InducedSubgraph, GemOnItsPathIsP4) {
  auto gem = named::gem();
  auto h = induced_subgraph(gem, VertexSet{0, 1, 2, 3});
  EXPECT_EQ(h, path_graph(4));
}

TEST(InducedSubgraph, AllVerticesIsIdentity) {
  auto g = named::hajos();
  EXPECT_EQ(induced_subgraph(g, g.vertices()), g);
}

TEST(InducedSubgraph, HajosInnerTriangle) {
  EXPECT_EQ(induced_subgraph(named::hajos(), VertexSet{0, 1, 2}), complete_graph(3));
}

TEST(InducedSubgraph, RelabelsBySortedOrder) {
  Graph g(6, {{1, 4}, {4, 5}});
  auto h = induced_subgraph(g, VertexSet{1, 4, 5});
  EXPECT_EQ(h, path_graph(3));
  EXPECT_EQ(lift(VertexSet{0, 2}, VertexSet{1, 4, 5}), (VertexSet{1, 5}));
}

TEST(InducedSubgraph, OutOfRangeVertex) {
  EXPECT_THROW(induced_subgraph(path_graph(3), VertexSet{0, 3}), domain_error);
}

TEST(InducedSubgraph, FunctorialProperty) {
  oracle::RandomGraphs gen(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = gen.graph(9);
    VertexSet s(gen.next() & g.vertices().bits());
    auto h = induced_subgraph(g, s);
    VertexSet t(gen.next() & h.vertices().bits());
    EXPECT_EQ(induced_subgraph(h, t), induced_subgraph(g, lift(t, s)));
  }
}

TEST(ConnectedComponents, TwoP3) {
  auto comps = connected_components(named::two_p3());
  ASSERT_EQ(comps.size(), 2U);
  EXPECT_EQ(comps[0], (VertexSet{0, 1, 2}));
  EXPECT_EQ(comps[1], (VertexSet{3, 4, 5}));
}

TEST(ConnectedComponents, CompleteAndEdgeless) {
  EXPECT_EQ(connected_components(complete_graph(4)), std::vector<VertexSet>{VertexSet::range(4)});
  auto singletons = connected_components(Graph(3));
  EXPECT_EQ(singletons, (std::vector<VertexSet>{VertexSet{0}, VertexSet{1}, VertexSet{2}}));
}

TEST(ConnectedComponents, PartitionProperty) {
  oracle::RandomGraphs gen(11);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = gen.graph(10, 15);
    auto comps = connected_components(g);
    VertexSet seen;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      EXPECT_FALSE(seen.intersects(comps[i]));
      seen |= comps[i];
      EXPECT_TRUE(oracle::connected(induced_subgraph(g, comps[i])));
      EXPECT_TRUE(g.neighbors(comps[i]).empty()) << "edge leaving component " << comps[i];
      if (i > 0) EXPECT_LT(comps[i - 1].front(), comps[i].front());
    }
    EXPECT_EQ(seen, g.vertices());
  }
}
