#include <sstream>

#include <gtest/gtest.h>

#include "folkman/coloring.hpp"
#include "oracles.hpp"

namespace folkman {
namespace {

// Colour 1 on the pentagon 0-1-2-3-4-0, colour 2 on the pentagram.
EdgeColoring pentagon_k5() {
  const Graph k5 = complete(5);
  std::vector<std::uint8_t> colors(static_cast<std::size_t>(k5.size()));
  for (const Edge& e : k5.edges()) {
    const int gap = e.v - e.u;
    colors[static_cast<std::size_t>(k5.edge_id(e.u, e.v))] = (gap == 1 || gap == 4) ? 1 : 2;
  }
  return EdgeColoring(k5, colors);
}

TEST(ArrowingProblemTest, Validation) {
  EXPECT_THROW(ArrowingProblem(complete(3), {}), ColoringError);
  EXPECT_THROW(ArrowingProblem(complete(3), {3, 1}), ColoringError);
  EXPECT_EQ(ArrowingProblem(complete(3), {3, 4}).target(2), 4);
}

TEST(ParseTargetsTest, Forms) {
  EXPECT_EQ(parse_targets("3,3,3"), (std::vector<int>{3, 3, 3}));
  EXPECT_EQ(parse_targets("4"), (std::vector<int>{4}));
  EXPECT_THROW(parse_targets(""), ColoringError);
  EXPECT_THROW(parse_targets("3,,3"), ColoringError);
  EXPECT_THROW(parse_targets("3,x"), ColoringError);
  EXPECT_THROW(parse_targets("3,1"), ColoringError);
}

TEST(CheckColoringTest, MonochromaticTriangle) {
  const ArrowingProblem p(complete(3), {3, 3});
  const auto w = check_coloring(p, EdgeColoring::uniform(complete(3), 1));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->color, 1);
  EXPECT_EQ(w->vertices, VertexSet(3, {0, 1, 2}));
}

TEST(CheckColoringTest, PentagonIsGood) {
  const EdgeColoring c = pentagon_k5();
  EXPECT_FALSE(check_coloring(ArrowingProblem(complete(5), {3, 3}), c).has_value());
  std::vector<int> flat(c.colors().begin(), c.colors().end());
  EXPECT_FALSE(oracle::has_mono_clique(complete(5), flat, {3, 3}));
}

TEST(CheckColoringTest, CycleHasNoTriangles) {
  const ArrowingProblem p(cycle(5), {3, 3});
  EXPECT_FALSE(check_coloring(p, EdgeColoring::uniform(cycle(5), 1)).has_value());
  EXPECT_FALSE(check_coloring(p, EdgeColoring::uniform(cycle(5), 2)).has_value());
}

TEST(CheckColoringTest, WitnessIsLexicographicallyFirst) {
  // every triangle of K4 is colour 2 except ones touching edge {0,1}
  const Graph k4 = complete(4);
  std::vector<std::uint8_t> colors(6, 2);
  colors[static_cast<std::size_t>(k4.edge_id(0, 1))] = 1;
  const auto w = check_coloring(ArrowingProblem(k4, {3, 3}), EdgeColoring(k4, colors));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->color, 2);
  EXPECT_EQ(w->vertices, VertexSet(4, {0, 2, 3}));
  // colour 1 witnesses take precedence over colour 2
  const auto all1 = check_coloring(ArrowingProblem(k4, {3, 3}), EdgeColoring::uniform(k4, 1));
  EXPECT_EQ(all1->vertices, VertexSet(4, {0, 1, 2}));
}

TEST(CheckColoringTest, RejectsColourBeyondTargets) {
  EXPECT_THROW(check_coloring(ArrowingProblem(complete(3), {3, 3}), EdgeColoring::uniform(complete(3), 3)),
               ColoringError);
  EXPECT_THROW(check_coloring(ArrowingProblem(complete(4), {3, 3}), EdgeColoring::uniform(complete(3), 1)),
               ColoringError);
}

TEST(ColorNeighborhoodTest, Examples) {
  const EdgeColoring all1 = EdgeColoring::uniform(complete(4), 1);
  EXPECT_EQ(color_neighborhood(all1, 0, 1), VertexSet(4, {1, 2, 3}));
  EXPECT_TRUE(color_neighborhood(all1, 0, 2).empty());
  EXPECT_EQ(color_neighborhood(pentagon_k5(), 0, 1), VertexSet(5, {1, 4}));
  EXPECT_EQ(color_neighborhood(pentagon_k5(), 0, 2), VertexSet(5, {2, 3}));
}

TEST(ColorClassTest, PentagonSplitsIntoTwoCycles) {
  const Graph one = color_class(pentagon_k5(), 1);
  EXPECT_EQ(one.order(), 5);
  EXPECT_EQ(one, cycle(5));
  EXPECT_EQ(color_class(pentagon_k5(), 2).size(), 5);
}

TEST(EdgeColoringTest, Permuted) {
  const EdgeColoring swapped = pentagon_k5().permuted({2, 1});
  EXPECT_EQ(swapped.color(0, 1), 2);
  EXPECT_EQ(swapped.color(0, 2), 1);
  EXPECT_EQ(swapped.permuted({2, 1}), pentagon_k5());
  EXPECT_THROW((void)swapped.color(0, 0), ColoringError);
}

TEST(CertificateTest, RoundTrip) {
  const EdgeColoring c = pentagon_k5();
  std::ostringstream out;
  write_certificate(out, c);
  std::istringstream in(out.str());
  EXPECT_EQ(read_certificate(in, complete(5)), c);
}

TEST(CertificateTest, MalformedFiles) {
  const Graph k3 = complete(3);
  std::istringstream missing("0 1 1\n0 2 1\n");
  EXPECT_THROW(read_certificate(missing, k3), ColoringError);
  std::istringstream duplicate("0 1 1\n1 0 2\n0 2 1\n1 2 1\n");
  EXPECT_THROW(read_certificate(duplicate, k3), ColoringError);
  std::istringstream non_edge("0 1 1\n0 2 1\n1 2 1\n");
  EXPECT_THROW(read_certificate(non_edge, cycle(4)), ColoringError);
  std::istringstream zero_colour("0 1 0\n0 2 1\n1 2 1\n");
  EXPECT_THROW(read_certificate(zero_colour, k3), ColoringError);
  std::istringstream junk("0 1 x\n");
  EXPECT_THROW(read_certificate(junk, k3), ColoringError);
}

}  // namespace
}  // namespace folkman
