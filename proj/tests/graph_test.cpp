#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "folkman/constructions.hpp"
#include "folkman/graph.hpp"
#include "oracles.hpp"

namespace folkman {
namespace {

TEST(CompleteTest, Sizes) {
  EXPECT_EQ(complete(1).order(), 1);
  EXPECT_EQ(complete(1).size(), 0);
  EXPECT_EQ(complete(6).order(), 6);
  EXPECT_EQ(complete(6).size(), 15);
  EXPECT_EQ(clique_number(complete(4)), 4);
  EXPECT_THROW(complete(0), GraphError);
}

TEST(CycleTest, Shape) {
  const Graph c5 = cycle(5);
  EXPECT_EQ(c5.order(), 5);
  EXPECT_EQ(c5.size(), 5);
  EXPECT_TRUE(enumerate_cliques(c5, 3).empty());
  EXPECT_EQ(clique_number(c5), 2);
  EXPECT_EQ(cycle(3), complete(3));
  EXPECT_THROW(cycle(2), GraphError);
}

TEST(K4MinusEdgeTest, MissingPairIsZeroOne) {
  const Graph g = k4_minus_edge();
  EXPECT_EQ(g.size(), 5);
  EXPECT_EQ(clique_number(g), 3);
  int missing = 0;
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v = u + 1; v < 4; ++v)
      if (!g.adjacent(u, v)) {
        ++missing;
        EXPECT_EQ(u, 0);
        EXPECT_EQ(v, 1);
      }
  EXPECT_EQ(missing, 1);
}

TEST(ZykovSumTest, EdgeArithmetic) {
  const Graph cc = zykov_sum(cycle(5), cycle(5));
  EXPECT_EQ(cc.order(), 10);
  EXPECT_EQ(cc.size(), 35);

  const Graph wheel = zykov_sum(complete(1), cycle(5));
  EXPECT_EQ(wheel.order(), 6);
  EXPECT_EQ(wheel.size(), 10);
  EXPECT_EQ(wheel.degree(0), 5);

  Graph h = cycle(5);
  for (int i = 0; i < 5; ++i) h = zykov_sum(h, cycle(5));
  EXPECT_EQ(h.order(), 30);
  EXPECT_EQ(h.size(), 6 * 5 + 15 * 25);
  EXPECT_EQ(h.size(), 405);
}

TEST(ZykovSumTest, LeftOperandKeepsItsLabels) {
  const Graph g = zykov_sum(complete(2), cycle(4));
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_TRUE(g.adjacent(2, 3));
  EXPECT_FALSE(g.adjacent(2, 4));
  EXPECT_TRUE(g.adjacent(1, 5));
}

TEST(InducedTest, Examples) {
  const Graph k6 = complete(6);
  const auto tri = induced(k6, VertexSet(6, {1, 3, 5}));
  EXPECT_EQ(tri.graph, complete(3));
  EXPECT_EQ(tri.to_host, (std::vector<Vertex>{1, 3, 5}));

  const auto path = induced(cycle(5), VertexSet(5, {0, 1, 2}));
  EXPECT_EQ(path.graph.size(), 2);
  EXPECT_TRUE(path.graph.adjacent(0, 1));
  EXPECT_TRUE(path.graph.adjacent(1, 2));
  EXPECT_FALSE(path.graph.adjacent(0, 2));

  const Graph h = build_named(NamedGraph::H).graph;
  EXPECT_EQ(induced(h, h.vertices()).graph, h);
}

TEST(InducedTest, RejectsForeignSet) { EXPECT_THROW(induced(cycle(5), VertexSet(6)), GraphError); }

TEST(NeighborhoodTest, Examples) {
  EXPECT_EQ(neighborhood(cycle(5), 0), VertexSet(5, {1, 4}));
  EXPECT_EQ(neighborhood(complete(6), 0), VertexSet(6, {1, 2, 3, 4, 5}));
  const Graph h = build_named(NamedGraph::H).graph;
  for (Vertex v = 0; v < h.order(); ++v) EXPECT_EQ(neighborhood(h, v).size(), 27);
  EXPECT_THROW(neighborhood(cycle(5), 5), GraphError);
  EXPECT_THROW(neighborhood(cycle(5), -1), GraphError);
}

TEST(EdgesBetweenTest, Examples) {
  const Graph cc = zykov_sum(cycle(5), cycle(5));
  EXPECT_EQ(edges_between(cc, VertexSet(10, {0, 1, 2, 3, 4}), VertexSet(10, {5, 6, 7, 8, 9})).size(), 25u);
  EXPECT_TRUE(edges_between(cycle(5), VertexSet(5, {0}), VertexSet(5, {2})).empty());
  // overlapping sets list a shared edge once
  const auto overlap = edges_between(complete(3), VertexSet(3, {0, 1}), VertexSet(3, {0, 1, 2}));
  EXPECT_EQ(overlap.size(), 3u);
}

TEST(CliqueNumberTest, EmptyAndSingleton) {
  EXPECT_EQ(clique_number(Graph()), 0);
  EXPECT_EQ(clique_number(Graph(1, {})), 1);
  EXPECT_EQ(clique_number(Graph(4, {})), 1);
}

TEST(CliqueNumberTest, NamedGraphs) {
  EXPECT_EQ(clique_number(build_named(NamedGraph::H).graph), 12);
  EXPECT_EQ(clique_number(build_named(NamedGraph::S).graph), 10);
  EXPECT_EQ(clique_number(build_named(NamedGraph::T).graph), 12);
  EXPECT_EQ(clique_number(build_named(NamedGraph::L).graph), 11);
  EXPECT_EQ(clique_number(build_named(NamedGraph::Q).graph), 12);
  EXPECT_EQ(clique_number(build_named(NamedGraph::Graham).graph), 5);
}

TEST(EnumerateCliquesTest, Examples) {
  EXPECT_EQ(enumerate_cliques(complete(6), 3).size(), 20u);
  EXPECT_TRUE(enumerate_cliques(cycle(5), 3).empty());
  EXPECT_EQ(enumerate_cliques(complete(3), 1).size(), 3u);
  EXPECT_THROW(enumerate_cliques(complete(3), 0), GraphError);
}

TEST(EnumerateCliquesTest, TrianglesOfH) {
  const Graph h = build_named(NamedGraph::H).graph;
  const long expected = 6 * 5 * 25 + 20 * 125;
  EXPECT_EQ(oracle::triangles_by_triples(h), expected);
  EXPECT_EQ(static_cast<long>(enumerate_cliques(h, 3).size()), 3250);
}

TEST(EnumerateCliquesTest, LexicographicOrder) {
  const auto cliques = enumerate_cliques(complete(5), 3);
  const auto expected = oracle::cliques_by_subsets(complete(5), 3);
  ASSERT_EQ(cliques.size(), expected.size());
  for (std::size_t i = 0; i < cliques.size(); ++i) EXPECT_EQ(cliques[i].members(), expected[i]);
}

TEST(GraphTest, RejectsLoopsRangeAndCap) {
  EXPECT_THROW(Graph(3, {{1, 1}}), GraphError);
  EXPECT_THROW(Graph(3, {{0, 3}}), GraphError);
  EXPECT_THROW(Graph(kMaxVertices + 1, {}), GraphError);
  EXPECT_NO_THROW(Graph(kMaxVertices, {}));
}

TEST(EdgeListTest, ReadsCommentsAndBlankLines) {
  std::istringstream in("# a triangle\n3 3\n\n0 1\n1 2 # tail\n2 0\n");
  const Graph g = read_edge_list(in);
  EXPECT_EQ(g, complete(3));
  std::ostringstream out;
  write_edge_list(out, g);
  EXPECT_EQ(out.str(), "3 3\n0 1\n0 2\n1 2\n");
}

TEST(EdgeListTest, RejectsCountMismatch) {
  std::istringstream in("3 2\n0 1\n");
  EXPECT_THROW(read_edge_list(in), GraphError);
}

// Properties over random small graphs.

class RandomGraphs : public ::testing::Test {
protected:
  std::mt19937_64 rng{20240611};
};

TEST_F(RandomGraphs, ZykovAdditivity) {
  std::uniform_int_distribution<int> order(1, 8);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph a = oracle::random_graph(order(rng), density(rng), rng);
    const Graph b = oracle::random_graph(order(rng), density(rng), rng);
    EXPECT_EQ(clique_number(zykov_sum(a, b)), clique_number(a) + clique_number(b));
  }
}

TEST_F(RandomGraphs, CliqueMachineryMatchesSubsetScan) {
  std::uniform_int_distribution<int> order(0, 10);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(order(rng), density(rng), rng);
    ASSERT_TRUE(g.invariants_hold());
    const int cl = clique_number(g);
    EXPECT_EQ(cl, oracle::clique_number_by_subsets(g));
    const VertexSet best = maximum_clique(g);
    EXPECT_EQ(best.size(), cl);
    for (Vertex u : best.members()) {
      for (Vertex v : best.members()) {
        if (u < v) {
          EXPECT_TRUE(g.adjacent(u, v));
        }
      }
    }
    for (int k = 1; k <= g.order(); ++k) {
      const auto fast = enumerate_cliques(g, k);
      EXPECT_EQ(fast.size(), oracle::cliques_by_subsets(g, k).size());
      EXPECT_EQ(fast.empty(), k > cl);
    }
  }
}

TEST_F(RandomGraphs, InducedMatchesEdgesBetween) {
  std::uniform_int_distribution<int> order(1, 10);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(order(rng), 0.5, rng);
    VertexSet s = g.empty_set();
    std::bernoulli_distribution pick(0.5);
    for (Vertex v = 0; v < g.order(); ++v)
      if (pick(rng)) s.insert(v);
    const auto sub = induced(g, s);
    const auto inside = edges_between(g, s, s);
    ASSERT_EQ(static_cast<std::size_t>(sub.graph.size()), inside.size());
    for (auto e : sub.graph.edges())
      EXPECT_TRUE(g.adjacent(sub.to_host[static_cast<std::size_t>(e.u)], sub.to_host[static_cast<std::size_t>(e.v)]));
  }
}

}  // namespace
}  // namespace folkman
