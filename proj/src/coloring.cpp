#include "folkman/coloring.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace folkman {

ArrowingProblem::ArrowingProblem(Graph graph, std::vector<int> targets)
    : graph_(std::move(graph)), targets_(std::move(targets)) {
  if (targets_.empty()) throw ColoringError("at least one target is required");
  if (targets_.size() > 255) throw ColoringError("too many colours");
  for (int a : targets_)
    if (a < 2) throw ColoringError("targets must be at least 2, got " + std::to_string(a));
}

std::vector<int> parse_targets(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw ColoringError("target \"" + item + "\" is not an integer");
    }
    if (used != item.size()) throw ColoringError("target \"" + item + "\" is not an integer");
    if (value < 2) throw ColoringError("targets must be at least 2, got " + std::to_string(value));
    out.push_back(value);
  }
  if (out.empty()) throw ColoringError("empty target list");
  return out;
}

EdgeColoring::EdgeColoring(Graph host, std::vector<std::uint8_t> colors)
    : host_(std::move(host)), colors_(std::move(colors)) {
  if (colors_.size() != static_cast<std::size_t>(host_.size()))
    throw ColoringError("colouring has " + std::to_string(colors_.size()) + " entries for " +
                        std::to_string(host_.size()) + " edges");
  for (auto c : colors_)
    if (c < 1) throw ColoringError("colour indices start at 1");
}

EdgeColoring EdgeColoring::uniform(const Graph& host, int color) {
  return EdgeColoring(host, std::vector<std::uint8_t>(static_cast<std::size_t>(host.size()), static_cast<std::uint8_t>(color)));
}

int EdgeColoring::color(Vertex u, Vertex v) const {
  const int id = host_.edge_id(u, v);
  if (id < 0) throw ColoringError("{" + std::to_string(u) + ", " + std::to_string(v) + "} is not an edge");
  return colors_[static_cast<std::size_t>(id)];
}

int EdgeColoring::max_color() const {
  return colors_.empty() ? 0 : *std::max_element(colors_.begin(), colors_.end());
}

EdgeColoring EdgeColoring::permuted(const std::vector<int>& permutation) const {
  std::vector<std::uint8_t> out(colors_.size());
  for (std::size_t i = 0; i < colors_.size(); ++i)
    out[i] = static_cast<std::uint8_t>(permutation.at(static_cast<std::size_t>(colors_[i] - 1)));
  return EdgeColoring(host_, std::move(out));
}

Graph color_class(const EdgeColoring& coloring, int color) {
  std::vector<Edge> edges;
  const auto& all = coloring.host().edges();
  for (std::size_t i = 0; i < all.size(); ++i)
    if (coloring.color(static_cast<int>(i)) == color) edges.push_back(all[i]);
  return Graph(coloring.host().order(), edges);
}

std::optional<MonochromaticWitness> check_coloring(const ArrowingProblem& problem, const EdgeColoring& coloring) {
  if (!(coloring.host() == problem.graph())) throw ColoringError("colouring belongs to a different graph");
  if (coloring.max_color() > problem.colors())
    throw ColoringError("colour " + std::to_string(coloring.max_color()) + " exceeds r = " +
                        std::to_string(problem.colors()));
  for (int c = 1; c <= problem.colors(); ++c) {
    const Graph mono = color_class(coloring, c);
    // enumerate_cliques yields lexicographic order; the first one is the witness
    auto cliques = enumerate_cliques(mono, problem.target(c));
    if (!cliques.empty()) return MonochromaticWitness{c, std::move(cliques.front())};
  }
  return std::nullopt;
}

VertexSet color_neighborhood(const EdgeColoring& coloring, Vertex v, int color) {
  const Graph& g = coloring.host();
  if (v < 0 || v >= g.order()) throw ColoringError("vertex " + std::to_string(v) + " out of range");
  if (color < 1 || color > 255) throw ColoringError("colour " + std::to_string(color) + " out of range");
  VertexSet out = g.empty_set();
  const auto& nb = g.row(v);
  for (Vertex u = nb.first(); u >= 0; u = nb.next(u + 1))
    if (coloring.color(u, v) == color) out.insert(u);
  return out;
}

void write_certificate(std::ostream& out, const EdgeColoring& coloring) {
  const auto& edges = coloring.host().edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    out << edges[i].u << ' ' << edges[i].v << ' ' << coloring.color(static_cast<int>(i)) << '\n';
}

EdgeColoring read_certificate(std::istream& in, const Graph& host) {
  std::vector<int> colors(static_cast<std::size_t>(host.size()), 0);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    int u = 0;
    int v = 0;
    int c = 0;
    std::string extra;
    if (!(fields >> u >> v >> c) || (fields >> extra))
      throw ColoringError("certificate line " + std::to_string(line_no) + ": expected \"u v c\"");
    if (u < 0 || v < 0 || u >= host.order() || v >= host.order() || host.edge_id(u, v) < 0)
      throw ColoringError("certificate line " + std::to_string(line_no) + ": {" + std::to_string(u) + ", " +
                          std::to_string(v) + "} is not an edge of the graph");
    if (c < 1 || c > 255) throw ColoringError("certificate line " + std::to_string(line_no) + ": bad colour");
    auto& slot = colors[static_cast<std::size_t>(host.edge_id(u, v))];
    if (slot != 0) throw ColoringError("certificate line " + std::to_string(line_no) + ": edge listed twice");
    slot = c;
  }
  std::vector<std::uint8_t> out;
  out.reserve(colors.size());
  for (std::size_t i = 0; i < colors.size(); ++i) {
    if (colors[i] == 0) {
      const auto e = host.edges()[i];
      throw ColoringError("certificate does not colour edge {" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                          "}");
    }
    out.push_back(static_cast<std::uint8_t>(colors[i]));
  }
  return EdgeColoring(host, std::move(out));
}

}  // namespace folkman
