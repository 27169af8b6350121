#include <gtest/gtest.h>

#include "folkman/constructions.hpp"

namespace folkman {
namespace {

TEST(BuildNamedTest, Sizes) {
  struct Row {
    NamedGraph name;
    int n, m, blocks;
  };
  const Row rows[] = {
      {NamedGraph::H, 30, 405, 6},  {NamedGraph::S, 25, 275, 5}, {NamedGraph::T, 24, 256, 5},
      {NamedGraph::L, 24, 255, 5},  {NamedGraph::Q, 25, 279, 6}, {NamedGraph::Graham, 8, 23, 2},
  };
  for (const auto& row : rows) {
    const StructuredGraph g = build_named(row.name);
    EXPECT_EQ(g.graph.order(), row.n);
    EXPECT_EQ(g.graph.size(), row.m);
    EXPECT_EQ(static_cast<int>(g.blocks.size()), row.blocks);
    EXPECT_TRUE(g.invariants_hold());
    EXPECT_TRUE(g.graph.invariants_hold());
  }
}

TEST(BuildNamedTest, SIsHMinusLastCycle) {
  const StructuredGraph h = build_named(NamedGraph::H);
  const VertexSet rest = h.graph.vertices() - h.blocks.back().vertices;
  EXPECT_EQ(induced(h.graph, rest).graph, build_named(NamedGraph::S).graph);
}

TEST(BuildNamedTest, TIsLPlusPairEdge) {
  const StructuredGraph l = build_named(NamedGraph::L);
  const int k = l.find_block(BlockKind::k4_minus);
  ASSERT_EQ(k, 0);
  const auto members = l.blocks[static_cast<std::size_t>(k)].vertices.members();
  const Vertex a = members[0];
  const Vertex b = members[1];
  EXPECT_FALSE(l.graph.adjacent(a, b));
  std::vector<Edge> edges = l.graph.edges();
  edges.push_back({a, b});
  EXPECT_EQ(Graph(l.graph.order(), edges), build_named(NamedGraph::T).graph);
}

TEST(BuildNamedTest, QLayout) {
  const StructuredGraph q = build_named(NamedGraph::Q);
  EXPECT_EQ(q.blocks[0].kind, BlockKind::k1);
  EXPECT_EQ(q.blocks[0].vertices, VertexSet(25, {0}));
  EXPECT_EQ(q.blocks[1].kind, BlockKind::k4_minus);
  EXPECT_EQ(q.blocks[1].vertices, VertexSet(25, {1, 2, 3, 4}));
  EXPECT_FALSE(q.graph.adjacent(1, 2));
  EXPECT_EQ(q.graph.degree(0), 24);
  EXPECT_EQ(induced(q.graph, q.graph.vertices() - q.blocks[0].vertices).graph, build_named(NamedGraph::L).graph);
}

TEST(BuildNamedTest, NamesParse) {
  EXPECT_EQ(parse_named_graph("H"), NamedGraph::H);
  EXPECT_EQ(parse_named_graph("graham"), NamedGraph::Graham);
  EXPECT_EQ(parse_named_graph("GRAHAM"), NamedGraph::Graham);
  EXPECT_THROW(parse_named_graph("X"), std::invalid_argument);
  EXPECT_EQ(build_named("Q").graph, build_named(NamedGraph::Q).graph);
}

TEST(ExpressionTest, GrahamGraph) {
  const StructuredGraph g = parse_expression("K3+C5");
  EXPECT_EQ(g.graph.order(), 8);
  EXPECT_EQ(g.graph.size(), 23);
  EXPECT_EQ(g.graph, build_named(NamedGraph::Graham).graph);
  EXPECT_EQ(clique_number(g.graph), 5);
}

TEST(ExpressionTest, RepetitionMatchesH) {
  EXPECT_EQ(parse_expression("6*C5").graph, build_named(NamedGraph::H).graph);
  EXPECT_EQ(parse_expression(" 2*C5 + 4 * C5 ").graph, build_named(NamedGraph::H).graph);
  EXPECT_EQ(parse_expression("K4-e+4*C5").graph, build_named(NamedGraph::L).graph);
  EXPECT_EQ(parse_expression("K1+K4-e+4*C5").graph, build_named(NamedGraph::Q).graph);
}

TEST(ExpressionTest, CanonicalBlockKinds) {
  const StructuredGraph g = parse_expression("K1+K4+C5+K6+C7");
  ASSERT_EQ(g.blocks.size(), 5u);
  EXPECT_EQ(g.blocks[0].kind, BlockKind::k1);
  EXPECT_EQ(g.blocks[1].kind, BlockKind::k4);
  EXPECT_EQ(g.blocks[2].kind, BlockKind::cycle5);
  EXPECT_EQ(g.blocks[3].kind, BlockKind::clique);
  EXPECT_EQ(g.blocks[4].kind, BlockKind::cycle);
  EXPECT_TRUE(g.invariants_hold());
}

TEST(ExpressionTest, Errors) {
  EXPECT_THROW(parse_expression("C2"), ExpressionError);
  try {
    parse_expression("K3+Cx");
    FAIL() << "no error";
  } catch (const ExpressionError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(parse_expression(""), ExpressionError);
  EXPECT_THROW(parse_expression("K3+"), ExpressionError);
  EXPECT_THROW(parse_expression("K0"), ExpressionError);
  EXPECT_THROW(parse_expression("0*C5"), ExpressionError);
  EXPECT_THROW(parse_expression("K3 C5"), ExpressionError);
  EXPECT_THROW(parse_expression("K600"), ExpressionError);
}

TEST(ResolveGraphTest, NamesBeforeExpressions) {
  EXPECT_EQ(resolve_graph("S").graph, build_named(NamedGraph::S).graph);
  EXPECT_EQ(resolve_graph("K6").graph, complete(6));
}

}  // namespace
}  // namespace folkman
