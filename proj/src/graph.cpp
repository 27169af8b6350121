#include "folkman/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace folkman {

namespace {

void check_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order())
    throw GraphError("vertex " + std::to_string(v) + " out of range for graph of order " +
                     std::to_string(g.order()));
}

void check_set(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order())
    throw GraphError("vertex set universe " + std::to_string(s.universe()) +
                     " does not match graph order " + std::to_string(g.order()));
}

// Vertices ordered by reverse degeneracy: the last vertex peeled off by
// min-degree removal comes first.
std::vector<Vertex> degeneracy_order(const Graph& g) {
  const int n = g.order();
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
  std::vector<bool> removed(static_cast<std::size_t>(n), false);
  std::vector<Vertex> peel;
  peel.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (removed[static_cast<std::size_t>(v)]) continue;
      if (best < 0 || deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(best)])
        best = v;
    }
    removed[static_cast<std::size_t>(best)] = true;
    peel.push_back(best);
    const auto& nb = g.row(best);
    for (Vertex u = nb.first(); u >= 0; u = nb.next(u + 1))
      if (!removed[static_cast<std::size_t>(u)]) --deg[static_cast<std::size_t>(u)];
  }
  std::reverse(peel.begin(), peel.end());
  return peel;
}

class MaxCliqueSearch {
public:
  explicit MaxCliqueSearch(const Graph& g) : order_(degeneracy_order(g)) {
    const int n = g.order();
    std::vector<int> position(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) position[static_cast<std::size_t>(order_[static_cast<std::size_t>(i)])] = i;
    rows_.assign(static_cast<std::size_t>(n), VertexSet(n));
    for (const auto& e : g.edges()) {
      const int a = position[static_cast<std::size_t>(e.u)];
      const int b = position[static_cast<std::size_t>(e.v)];
      rows_[static_cast<std::size_t>(a)].insert(b);
      rows_[static_cast<std::size_t>(b)].insert(a);
    }
    n_ = n;
  }

  VertexSet run() {
    std::vector<Vertex> current;
    if (n_ > 0) expand(current, VertexSet::full(n_));
    VertexSet out(n_);
    for (Vertex v : best_) out.insert(order_[static_cast<std::size_t>(v)]);
    return out;
  }

private:
  void expand(std::vector<Vertex>& current, VertexSet candidates) {
    // Greedy colouring of the candidates; colour k bounds the clique size
    // reachable from any vertex coloured <= k.
    std::vector<std::pair<Vertex, int>> coloured;
    coloured.reserve(static_cast<std::size_t>(candidates.size()));
    VertexSet uncoloured = candidates;
    for (int colour = 1; !uncoloured.empty(); ++colour) {
      VertexSet available = uncoloured;
      for (Vertex v = available.first(); v >= 0; v = available.next(v + 1)) {
        available -= rows_[static_cast<std::size_t>(v)];
        uncoloured.erase(v);
        coloured.emplace_back(v, colour);
      }
    }
    for (auto it = coloured.rbegin(); it != coloured.rend(); ++it) {
      const auto [v, bound] = *it;
      if (current.size() + static_cast<std::size_t>(bound) <= best_.size()) return;
      current.push_back(v);
      VertexSet next = candidates & rows_[static_cast<std::size_t>(v)];
      if (next.empty()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, std::move(next));
      }
      current.pop_back();
      candidates.erase(v);
    }
  }

  int n_ = 0;
  std::vector<Vertex> order_;
  std::vector<VertexSet> rows_;
  std::vector<Vertex> best_;
};

void collect_cliques(const Graph& g, int k, std::vector<Vertex>& current, const VertexSet& candidates,
                     std::vector<VertexSet>& out) {
  if (static_cast<int>(current.size()) == k) {
    VertexSet s(g.order());
    for (Vertex v : current) s.insert(v);
    out.push_back(std::move(s));
    return;
  }
  const int still_needed = k - static_cast<int>(current.size());
  if (candidates.size() < still_needed) return;
  for (Vertex v = candidates.first(); v >= 0; v = candidates.next(v + 1)) {
    VertexSet next = candidates & g.row(v);
    // keep only later vertices so each clique is produced once, in order
    for (Vertex u = next.first(); u >= 0 && u <= v; u = next.next(u + 1)) next.erase(u);
    current.push_back(v);
    collect_cliques(g, k, current, next, out);
    current.pop_back();
  }
}

}  // namespace

Graph::Graph() : Graph(0, {}) {}

Graph::Graph(int n, const std::vector<Edge>& edges) {
  if (n < 0) throw GraphError("negative vertex count");
  if (n > kMaxVertices)
    throw GraphError("graph order " + std::to_string(n) + " exceeds the cap of " +
                     std::to_string(kMaxVertices));
  auto data = std::make_shared<Data>();
  data->n = n;
  data->rows.assign(static_cast<std::size_t>(n), VertexSet(n));
  for (auto e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw GraphError("edge {" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                       "} out of range for order " + std::to_string(n));
    if (e.u == e.v) throw GraphError("loop at vertex " + std::to_string(e.u));
    data->rows[static_cast<std::size_t>(e.u)].insert(e.v);
    data->rows[static_cast<std::size_t>(e.v)].insert(e.u);
  }
  data->edge_ids.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
  for (Vertex u = 0; u < n; ++u) {
    const auto& r = data->rows[static_cast<std::size_t>(u)];
    for (Vertex v = r.next(u + 1); v >= 0; v = r.next(v + 1)) {
      const int id = static_cast<int>(data->edges.size());
      data->edges.push_back({u, v});
      data->edge_ids[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)] = id;
      data->edge_ids[static_cast<std::size_t>(v) * static_cast<std::size_t>(n) + static_cast<std::size_t>(u)] = id;
    }
  }
  data_ = std::move(data);
}

bool Graph::invariants_hold() const {
  long degree_sum = 0;
  for (Vertex v = 0; v < order(); ++v) {
    if (row(v).universe() != order() || row(v).contains(v)) return false;
    for (Vertex u = row(v).first(); u >= 0; u = row(v).next(u + 1))
      if (!row(u).contains(v)) return false;
    degree_sum += degree(v);
  }
  return degree_sum == 2L * size();
}

Graph complete(int k) {
  if (k < 1) throw GraphError("complete graph needs at least one vertex");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < k; ++u)
    for (Vertex v = u + 1; v < k; ++v) edges.push_back({u, v});
  return Graph(k, edges);
}

Graph cycle(int k) {
  if (k < 3) throw GraphError("cycle needs at least three vertices");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < k; ++i) {
    const Vertex j = (i + 1) % k;
    edges.push_back({std::min(i, j), std::max(i, j)});
  }
  return Graph(k, edges);
}

Graph k4_minus_edge() {
  return Graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

Graph zykov_sum(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  const int n = n1 + g2.order();
  std::vector<Edge> edges = g1.edges();
  edges.reserve(static_cast<std::size_t>(g1.size() + g2.size() + n1 * g2.order()));
  for (auto e : g2.edges()) edges.push_back({e.u + n1, e.v + n1});
  for (Vertex u = 0; u < n1; ++u)
    for (Vertex v = n1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, edges);
}

InducedSubgraph induced(const Graph& g, const VertexSet& s) {
  check_set(g, s);
  InducedSubgraph out;
  out.to_host = s.members();
  std::vector<int> relabel(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < out.to_host.size(); ++i)
    relabel[static_cast<std::size_t>(out.to_host[i])] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (auto e : g.edges()) {
    const int a = relabel[static_cast<std::size_t>(e.u)];
    const int b = relabel[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) edges.push_back({a, b});
  }
  out.graph = Graph(static_cast<int>(out.to_host.size()), edges);
  return out;
}

VertexSet neighborhood(const Graph& g, Vertex v) {
  check_vertex(g, v);
  return g.row(v);
}

std::vector<Edge> edges_between(const Graph& g, const VertexSet& u1, const VertexSet& u2) {
  check_set(g, u1);
  check_set(g, u2);
  std::vector<Edge> out;
  for (auto e : g.edges()) {
    const bool across = (u1.contains(e.u) && u2.contains(e.v)) || (u1.contains(e.v) && u2.contains(e.u));
    if (across) out.push_back(e);
  }
  return out;
}

VertexSet maximum_clique(const Graph& g) { return MaxCliqueSearch(g).run(); }

int clique_number(const Graph& g) { return maximum_clique(g).size(); }

std::vector<VertexSet> enumerate_cliques(const Graph& g, int k) {
  if (k < 1) throw GraphError("clique size must be positive");
  std::vector<VertexSet> out;
  std::vector<Vertex> current;
  collect_cliques(g, k, current, g.vertices(), out);
  return out;
}

std::vector<long> cliques_per_edge(const Graph& g, int k) {
  std::vector<long> counts(static_cast<std::size_t>(g.size()), 0);
  if (k < 2) return counts;
  for (const auto& q : enumerate_cliques(g, k)) {
    const auto m = q.members();
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j) ++counts[static_cast<std::size_t>(g.edge_id(m[i], m[j]))];
  }
  return counts;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (auto e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

Graph read_edge_list(std::istream& in) {
  std::vector<std::pair<long, long>> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    long a = 0;
    long b = 0;
    if (!(fields >> a)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw GraphError("edge list line " + std::to_string(line_no) + ": expected two integers");
    }
    std::string extra;
    if (!(fields >> b) || (fields >> extra))
      throw GraphError("edge list line " + std::to_string(line_no) + ": expected two integers");
    rows.emplace_back(a, b);
  }
  if (rows.empty()) throw GraphError("edge list is missing its \"n m\" header");
  const auto [n, m] = rows.front();
  if (n < 0 || n > kMaxVertices) throw GraphError("edge list header has invalid vertex count");
  if (m < 0 || static_cast<std::size_t>(m) != rows.size() - 1)
    throw GraphError("edge list header declares " + std::to_string(m) + " edges but " +
                     std::to_string(rows.size() - 1) + " follow");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    auto [u, v] = rows[i];
    if (u > v) std::swap(u, v);
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  return Graph(static_cast<int>(n), edges);
}

}  // namespace folkman
