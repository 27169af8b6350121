#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "folkman/graph.hpp"

namespace folkman {

class ColoringError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// G together with targets (a_1, ..., a_r): does every r-colouring of E(G)
/// contain an a_i-clique in colour i for some i?
class ArrowingProblem {
public:
  /// Throws ColoringError unless r >= 1 and every 2 <= a_i.
  ArrowingProblem(Graph graph, std::vector<int> targets);

  [[nodiscard]] const Graph& graph() const { return graph_; }
  [[nodiscard]] const std::vector<int>& targets() const { return targets_; }
  [[nodiscard]] int colors() const { return static_cast<int>(targets_.size()); }
  [[nodiscard]] int target(int color) const { return targets_[static_cast<std::size_t>(color - 1)]; }

private:
  Graph graph_;
  std::vector<int> targets_;
};

/// Parses "3,3,3".
std::vector<int> parse_targets(const std::string& text);

/// One colour in 1..r per edge of the host, indexed by edge id.
class EdgeColoring {
public:
  EdgeColoring(Graph host, std::vector<std::uint8_t> colors);

  /// Every edge coloured `color`.
  static EdgeColoring uniform(const Graph& host, int color);

  [[nodiscard]] const Graph& host() const { return host_; }
  [[nodiscard]] int color(int edge_id) const { return colors_[static_cast<std::size_t>(edge_id)]; }
  [[nodiscard]] int color(Vertex u, Vertex v) const;
  [[nodiscard]] const std::vector<std::uint8_t>& colors() const { return colors_; }
  [[nodiscard]] int max_color() const;

  /// Same host, colours mapped through permutation[c-1].
  [[nodiscard]] EdgeColoring permuted(const std::vector<int>& permutation) const;

  friend bool operator==(const EdgeColoring& a, const EdgeColoring& b) {
    return a.host_ == b.host_ && a.colors_ == b.colors_;
  }

private:
  Graph host_;
  std::vector<std::uint8_t> colors_;
};

struct MonochromaticWitness {
  int color = 0;
  VertexSet vertices;
  friend bool operator==(const MonochromaticWitness&, const MonochromaticWitness&) = default;
};

/// The lexicographically first (colour, vertex set) monochromatic target
/// clique, or nullopt for a good colouring.
std::optional<MonochromaticWitness> check_coloring(const ArrowingProblem& problem, const EdgeColoring& coloring);

/// N_i(v): neighbours u of v with colour(uv) = i.
VertexSet color_neighborhood(const EdgeColoring& coloring, Vertex v, int color);

/// The spanning subgraph formed by the edges of one colour.
Graph color_class(const EdgeColoring& coloring, int color);

// Certificate file: one line "u v c" per edge (0-based vertices, 1-based
// colour). Reading demands that the lines cover exactly the host's edges.
void write_certificate(std::ostream& out, const EdgeColoring& coloring);
EdgeColoring read_certificate(std::istream& in, const Graph& host);

}  // namespace folkman
