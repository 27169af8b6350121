#pragma once

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "folkman/vertex_set.hpp"

namespace folkman {

/// Hard cap on graph order. Every instance in this toolkit is far below it.
inline constexpr int kMaxVertices = 512;

class GraphError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  Vertex u = 0;
  Vertex v = 0;  // u < v

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple graph on vertices 0..n-1 with bitset adjacency rows.
///
/// Copies are cheap: the rows and the edge index are shared.
class Graph {
public:
  /// The empty graph (n = 0).
  Graph();

  /// Builds a graph from an edge list. Duplicate edges collapse; loops and
  /// out-of-range endpoints are rejected.
  Graph(int n, const std::vector<Edge>& edges);

  [[nodiscard]] int order() const { return data_->n; }
  [[nodiscard]] int size() const { return static_cast<int>(data_->edges.size()); }

  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const {
    return data_->rows[static_cast<std::size_t>(u)].contains(v);
  }
  [[nodiscard]] const VertexSet& row(Vertex v) const {
    return data_->rows[static_cast<std::size_t>(v)];
  }
  [[nodiscard]] int degree(Vertex v) const { return row(v).size(); }

  /// Edges in lexicographic (u, v) order, u < v. Edge ids index this list.
  [[nodiscard]] const std::vector<Edge>& edges() const { return data_->edges; }

  /// Id of edge {u, v} in edges(), or -1 if u and v are not adjacent.
  [[nodiscard]] int edge_id(Vertex u, Vertex v) const {
    return data_->edge_ids[static_cast<std::size_t>(u) * static_cast<std::size_t>(data_->n) +
                           static_cast<std::size_t>(v)];
  }

  [[nodiscard]] VertexSet vertices() const { return VertexSet::full(order()); }
  [[nodiscard]] VertexSet empty_set() const { return VertexSet(order()); }

  /// Checks symmetry, irreflexivity and the edge-count identity.
  [[nodiscard]] bool invariants_hold() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.edges() == b.edges();
  }

private:
  struct Data {
    int n = 0;
    std::vector<VertexSet> rows;
    std::vector<Edge> edges;
    std::vector<int> edge_ids;
  };
  std::shared_ptr<const Data> data_;
};

/// K_k.
Graph complete(int k);

/// C_k with edges {i, i+1 mod k}.
Graph cycle(int k);

/// K_4 with the edge {0, 1} removed.
Graph k4_minus_edge();

/// Zykov sum: disjoint union with g2 shifted by g1.order(), plus every cross pair.
Graph zykov_sum(const Graph& g1, const Graph& g2);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_host;  // new label -> host vertex
};

/// G[s], with s's members relabeled 0..|s|-1 in increasing order.
InducedSubgraph induced(const Graph& g, const VertexSet& s);

/// N(v).
VertexSet neighborhood(const Graph& g, Vertex v);

/// E(u1, u2): each edge with one endpoint in u1 and the other in u2, once.
std::vector<Edge> edges_between(const Graph& g, const VertexSet& u1, const VertexSet& u2);

/// cl(g) by branch and bound with a greedy-colouring bound.
int clique_number(const Graph& g);

/// Largest clique found by the same search, as a vertex set.
VertexSet maximum_clique(const Graph& g);

/// Every k-clique exactly once, in lexicographic order of sorted member lists.
std::vector<VertexSet> enumerate_cliques(const Graph& g, int k);

/// Number of k-cliques containing each edge, indexed by edge id.
std::vector<long> cliques_per_edge(const Graph& g, int k);

// Edge-list text format: "n m" then m lines "u v"; blank lines and '#'
// comments ignored.
void write_edge_list(std::ostream& out, const Graph& g);
Graph read_edge_list(std::istream& in);

}  // namespace folkman
