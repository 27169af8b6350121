#include "folkman/encode.hpp"

#include <algorithm>

#include "folkman/constructions.hpp"

namespace folkman {

namespace {

// Colour groups: colours sharing a target value. Returns the first colour
// of each group.
std::vector<int> group_leaders(const std::vector<int>& targets) {
  std::vector<int> leaders;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    bool first = true;
    for (std::size_t j = 0; j < i; ++j)
      if (targets[j] == targets[i]) first = false;
    if (first) leaders.push_back(static_cast<int>(i) + 1);
  }
  return leaders;
}

// Edges of a clique given as a vertex set, as edge ids.
std::vector<int> clique_edge_ids(const Graph& g, const VertexSet& clique) {
  const auto m = clique.members();
  std::vector<int> ids;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) ids.push_back(g.edge_id(m[i], m[j]));
  return ids;
}

void require_model(const Encoding& encoding, const Model& model) {
  if (model.size() != static_cast<std::size_t>(encoding.cnf.num_vars) + 1)
    throw DecodeError("model has " + std::to_string(model.empty() ? 0 : model.size() - 1) + " variables, encoding has " +
                      std::to_string(encoding.cnf.num_vars));
  if (!verify_model(encoding.cnf, model)) throw DecodeError("model violates at least one clause");
}

// x(e, i) numbering shared by the arrowing and lemma 3 encodings.
int color_var(int edge_id, int color, int colors) { return edge_id * colors + color; }

void add_color_vars(Encoding& enc, int colors) {
  for (const auto& e : enc.graph.edges())
    for (int c = 1; c <= colors; ++c) enc.cnf.add_var(EdgeColorVar{e, c});
}

void add_blocking_clauses(Encoding& enc, int colors) {
  for (int c = 1; c <= colors; ++c) {
    for (const auto& clique : enumerate_cliques(enc.graph, enc.targets[static_cast<std::size_t>(c - 1)])) {
      Clause clause;
      for (int id : clique_edge_ids(enc.graph, clique)) clause.push_back(-color_var(id, c, colors));
      enc.cnf.add_clause(std::move(clause));
    }
  }
}

}  // namespace

Encoding encode_arrowing(const ArrowingProblem& problem, const EncodeOptions& options) {
  Encoding enc;
  enc.kind = EncodingKind::arrowing;
  enc.graph = problem.graph();
  enc.targets = problem.targets();
  const int r = problem.colors();
  add_color_vars(enc, r);
  for (int id = 0; id < enc.graph.size(); ++id) {
    Clause clause;
    for (int c = 1; c <= r; ++c) clause.push_back(color_var(id, c, r));
    enc.cnf.add_clause(std::move(clause));
  }
  add_blocking_clauses(enc, r);
  if (options.symmetry_break && enc.graph.size() > 0) {
    Clause clause;
    for (int leader : group_leaders(enc.targets)) clause.push_back(color_var(0, leader, r));
    enc.cnf.add_clause(std::move(clause));
  }
  return enc;
}

Encoding encode_lemma1() {
  const StructuredGraph t = build_named(NamedGraph::T);
  Encoding enc;
  enc.kind = EncodingKind::lemma1;
  enc.graph = t.graph;
  enc.targets = {3, 3};
  enc.hit_block = t.blocks[static_cast<std::size_t>(t.find_block(BlockKind::k4))].vertices;
  const Graph& g = enc.graph;
  const int m = g.size();
  constexpr int parts = 3;

  for (const auto& e : g.edges()) enc.cnf.add_var(EdgeBinaryVar{e});
  for (Vertex v = 0; v < g.order(); ++v)
    for (int i = 1; i <= parts; ++i) enc.cnf.add_var(VertexPartVar{v, i});
  auto y = [](int edge_id) { return edge_id + 1; };
  auto p = [m](Vertex v, int part) { return m + v * parts + part; };

  for (Vertex v = 0; v < g.order(); ++v) {
    enc.cnf.add_clause({p(v, 1), p(v, 2), p(v, 3)});
    for (int i = 1; i <= parts; ++i)
      for (int j = i + 1; j <= parts; ++j) enc.cnf.add_clause({-p(v, i), -p(v, j)});
  }
  for (int i = 1; i <= parts; ++i) {
    Clause hit;
    for (Vertex v : enc.hit_block.members()) hit.push_back(p(v, i));
    enc.cnf.add_clause(std::move(hit));
  }
  for (const auto& tri : enumerate_cliques(g, 3)) {
    const auto vs = tri.members();
    const auto ids = clique_edge_ids(g, tri);
    for (int i = 1; i <= parts; ++i) {
      Clause red{-p(vs[0], i), -p(vs[1], i), -p(vs[2], i)};
      Clause blue = red;
      for (int id : ids) {
        red.push_back(-y(id));
        blue.push_back(y(id));
      }
      enc.cnf.add_clause(std::move(red));
      enc.cnf.add_clause(std::move(blue));
    }
  }
  return enc;
}

Encoding encode_lemma3() {
  const StructuredGraph q = build_named(NamedGraph::Q);
  Encoding enc;
  enc.kind = EncodingKind::lemma3;
  enc.graph = q.graph;
  enc.targets = {3, 3, 3};
  enc.apex = q.blocks[static_cast<std::size_t>(q.find_block(BlockKind::k1))].vertices.first();
  enc.hit_block = q.blocks[static_cast<std::size_t>(q.find_block(BlockKind::k4_minus))].vertices;
  const auto block = enc.hit_block.members();
  enc.pair_a = block[0];
  enc.pair_b = block[1];
  constexpr int r = 3;

  add_color_vars(enc, r);
  for (int id = 0; id < enc.graph.size(); ++id) {
    enc.cnf.add_clause({color_var(id, 1, r), color_var(id, 2, r), color_var(id, 3, r)});
    for (int i = 1; i <= r; ++i)
      for (int j = i + 1; j <= r; ++j) enc.cnf.add_clause({-color_var(id, i, r), -color_var(id, j, r)});
  }
  add_blocking_clauses(enc, r);
  for (int c = 1; c <= r; ++c) {
    Clause cover;
    for (Vertex t : block) cover.push_back(color_var(enc.graph.edge_id(enc.apex, t), c, r));
    enc.cnf.add_clause(std::move(cover));
  }
  const int wa = enc.graph.edge_id(enc.apex, enc.pair_a);
  const int wb = enc.graph.edge_id(enc.apex, enc.pair_b);
  for (int c = 1; c <= r; ++c) enc.cnf.add_clause({-color_var(wa, c, r), -color_var(wb, c, r)});
  return enc;
}

bool lemma1_certificate_valid(const Encoding& encoding, const std::vector<int>& partition,
                              const EdgeColoring& coloring) {
  const Graph& g = encoding.graph;
  if (partition.size() != static_cast<std::size_t>(g.order())) return false;
  if (!(coloring.host() == g) || coloring.max_color() > 2) return false;
  for (int part = 1; part <= 3; ++part) {
    VertexSet members = g.empty_set();
    for (Vertex v = 0; v < g.order(); ++v)
      if (partition[static_cast<std::size_t>(v)] == part) members.insert(v);
    if ((members & encoding.hit_block).empty()) return false;
    const auto sub = induced(g, members);
    std::vector<std::uint8_t> colors;
    for (const auto& e : sub.graph.edges())
      colors.push_back(static_cast<std::uint8_t>(
          coloring.color(sub.to_host[static_cast<std::size_t>(e.u)], sub.to_host[static_cast<std::size_t>(e.v)])));
    const ArrowingProblem within(sub.graph, {3, 3});
    if (check_coloring(within, EdgeColoring(sub.graph, std::move(colors)))) return false;
  }
  for (int part : partition)
    if (part < 1 || part > 3) return false;
  return true;
}

bool lemma3_certificate_valid(const Encoding& encoding, const EdgeColoring& coloring) {
  if (!(coloring.host() == encoding.graph)) return false;
  if (check_coloring(ArrowingProblem(encoding.graph, {3, 3, 3}), coloring)) return false;
  std::vector<bool> seen(4, false);
  for (Vertex t : encoding.hit_block.members()) seen[static_cast<std::size_t>(coloring.color(encoding.apex, t))] = true;
  if (!(seen[1] && seen[2] && seen[3])) return false;
  return coloring.color(encoding.apex, encoding.pair_a) != coloring.color(encoding.apex, encoding.pair_b);
}

DecodedCertificate decode_model(const Encoding& encoding, const Model& model) {
  require_model(encoding, model);
  const Graph& g = encoding.graph;
  switch (encoding.kind) {
    case EncodingKind::arrowing:
    case EncodingKind::lemma3: {
      const int r = static_cast<int>(encoding.targets.size());
      std::vector<std::uint8_t> colors(static_cast<std::size_t>(g.size()), 0);
      for (int id = 0; id < g.size(); ++id) {
        for (int c = 1; c <= r; ++c) {
          if (model[static_cast<std::size_t>(color_var(id, c, r))]) {
            colors[static_cast<std::size_t>(id)] = static_cast<std::uint8_t>(c);
            break;
          }
        }
      }
      EdgeColoring coloring(g, std::move(colors));
      const bool valid = encoding.kind == EncodingKind::arrowing
                             ? !check_coloring(ArrowingProblem(g, encoding.targets), coloring).has_value()
                             : lemma3_certificate_valid(encoding, coloring);
      if (!valid) throw DecodeError("decoded colouring fails its re-check; the encoder is broken");
      return {encoding.kind, std::move(coloring), std::nullopt};
    }
    case EncodingKind::lemma1: {
      const int m = g.size();
      std::vector<std::uint8_t> colors;
      colors.reserve(static_cast<std::size_t>(m));
      for (int id = 0; id < m; ++id) colors.push_back(model[static_cast<std::size_t>(id) + 1] ? 1 : 2);
      std::vector<int> partition(static_cast<std::size_t>(g.order()), 0);
      for (Vertex v = 0; v < g.order(); ++v)
        for (int i = 1; i <= 3; ++i)
          if (model[static_cast<std::size_t>(m + v * 3 + i)]) partition[static_cast<std::size_t>(v)] = i;
      EdgeColoring coloring(g, std::move(colors));
      if (!lemma1_certificate_valid(encoding, partition, coloring))
        throw DecodeError("decoded partition fails its re-check; the encoder is broken");
      return {encoding.kind, std::move(coloring), std::move(partition)};
    }
  }
  throw DecodeError("unknown encoding kind");
}

std::optional<int> find_var(const Cnf& cnf, const VarMeaning& meaning) {
  for (std::size_t v = 1; v < cnf.var_map.size(); ++v)
    if (cnf.var_map[v] == meaning) return static_cast<int>(v);
  return std::nullopt;
}

PartialAssignment assignment_for(const Encoding& encoding, const EdgeColoring& coloring) {
  PartialAssignment out(static_cast<std::size_t>(encoding.cnf.num_vars) + 1);
  for (std::size_t v = 1; v < encoding.cnf.var_map.size(); ++v) {
    const auto& meaning = encoding.cnf.var_map[v];
    if (const auto* x = std::get_if<EdgeColorVar>(&meaning)) {
      if (coloring.host().edge_id(x->edge.u, x->edge.v) >= 0) out[v] = coloring.color(x->edge.u, x->edge.v) == x->color;
    } else if (const auto* y = std::get_if<EdgeBinaryVar>(&meaning)) {
      if (coloring.host().edge_id(y->edge.u, y->edge.v) >= 0) out[v] = coloring.color(y->edge.u, y->edge.v) == 1;
    }
  }
  return out;
}

}  // namespace folkman
