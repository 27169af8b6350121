#include "folkman/constructions.hpp"

#include <cctype>

namespace folkman {

std::string_view to_string(BlockKind kind) {
  switch (kind) {
    case BlockKind::cycle5: return "C5";
    case BlockKind::k4: return "K4";
    case BlockKind::k4_minus: return "K4-e";
    case BlockKind::k1: return "K1";
    case BlockKind::clique: return "K";
    case BlockKind::cycle: return "C";
  }
  return "?";
}

int StructuredGraph::find_block(BlockKind kind) const {
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (blocks[i].kind == kind) return static_cast<int>(i);
  return -1;
}

bool StructuredGraph::invariants_hold() const {
  if (!graph.invariants_hold()) return false;
  VertexSet covered = graph.empty_set();
  for (const auto& b : blocks) {
    if (b.vertices.universe() != graph.order()) return false;
    if (!(covered & b.vertices).empty()) return false;
    covered |= b.vertices;
    if (b.vertices.size() != b.size) return false;
    if (!(induced(graph, b.vertices).graph == block_shape(b.kind, b.size))) return false;
  }
  if (!(covered == graph.vertices())) return false;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j)
      if (static_cast<int>(edges_between(graph, blocks[i].vertices, blocks[j].vertices).size()) !=
          blocks[i].size * blocks[j].size)
        return false;
  return true;
}

Graph block_shape(BlockKind kind, int size) {
  switch (kind) {
    case BlockKind::k4_minus: return k4_minus_edge();
    case BlockKind::cycle5:
    case BlockKind::cycle: return cycle(size);
    case BlockKind::k4:
    case BlockKind::k1:
    case BlockKind::clique: return complete(size);
  }
  throw GraphError("unknown block kind");
}

StructuredGraph single_block(BlockKind kind, int size) {
  if (kind == BlockKind::clique && size == 1) kind = BlockKind::k1;
  if (kind == BlockKind::clique && size == 4) kind = BlockKind::k4;
  if (kind == BlockKind::cycle && size == 5) kind = BlockKind::cycle5;
  StructuredGraph out{block_shape(kind, size), {}};
  out.blocks.push_back({kind, size, out.graph.vertices()});
  return out;
}

StructuredGraph zykov_sum(const StructuredGraph& left, const StructuredGraph& right) {
  StructuredGraph out{zykov_sum(left.graph, right.graph), {}};
  const int n = out.graph.order();
  const int shift = left.graph.order();
  for (const auto& b : left.blocks) {
    VertexSet s(n);
    for (Vertex v : b.vertices.members()) s.insert(v);
    out.blocks.push_back({b.kind, b.size, std::move(s)});
  }
  for (const auto& b : right.blocks) {
    VertexSet s(n);
    for (Vertex v : b.vertices.members()) s.insert(v + shift);
    out.blocks.push_back({b.kind, b.size, std::move(s)});
  }
  return out;
}

NamedGraph parse_named_graph(std::string_view name) {
  if (name == "H") return NamedGraph::H;
  if (name == "S") return NamedGraph::S;
  if (name == "T") return NamedGraph::T;
  if (name == "L") return NamedGraph::L;
  if (name == "Q") return NamedGraph::Q;
  std::string upper(name);
  for (auto& ch : upper) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  if (upper == "GRAHAM") return NamedGraph::Graham;
  throw std::invalid_argument("unknown graph name \"" + std::string(name) + "\"");
}

namespace {

StructuredGraph repeat_c5(int copies, StructuredGraph acc) {
  for (int i = 0; i < copies; ++i) acc = zykov_sum(acc, single_block(BlockKind::cycle5, 5));
  return acc;
}

}  // namespace

StructuredGraph build_named(NamedGraph name) {
  switch (name) {
    case NamedGraph::H: return repeat_c5(5, single_block(BlockKind::cycle5, 5));
    case NamedGraph::S: return repeat_c5(4, single_block(BlockKind::cycle5, 5));
    case NamedGraph::T: return repeat_c5(4, single_block(BlockKind::k4, 4));
    case NamedGraph::L: return repeat_c5(4, single_block(BlockKind::k4_minus, 4));
    case NamedGraph::Q: return zykov_sum(single_block(BlockKind::k1, 1), build_named(NamedGraph::L));
    case NamedGraph::Graham: return zykov_sum(single_block(BlockKind::clique, 3), single_block(BlockKind::cycle5, 5));
  }
  throw std::invalid_argument("unknown named graph");
}

StructuredGraph build_named(std::string_view name) { return build_named(parse_named_graph(name)); }

namespace {

class ExpressionParser {
public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  StructuredGraph parse() {
    StructuredGraph acc = summand();
    skip_space();
    while (pos_ < text_.size()) {
      if (text_[pos_] != '+') throw ExpressionError("expected '+'", pos_);
      ++pos_;
      acc = zykov_sum(acc, summand());
      skip_space();
    }
    if (acc.graph.order() > kMaxVertices)
      throw ExpressionError("expression exceeds " + std::to_string(kMaxVertices) + " vertices", text_.size());
    return acc;
  }

private:
  StructuredGraph summand() {
    skip_space();
    int copies = 1;
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::size_t at = pos_;
      copies = integer();
      if (copies < 1) throw ExpressionError("repeat count must be positive", at);
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != '*') throw ExpressionError("expected '*'", pos_);
      ++pos_;
      skip_space();
    }
    StructuredGraph one = term();
    StructuredGraph acc = one;
    for (int i = 1; i < copies; ++i) {
      acc = zykov_sum(acc, one);
      if (acc.graph.order() > kMaxVertices)
        throw ExpressionError("expression exceeds " + std::to_string(kMaxVertices) + " vertices", pos_);
    }
    return acc;
  }

  StructuredGraph term() {
    if (pos_ >= text_.size()) throw ExpressionError("expected a term", pos_);
    const char head = text_[pos_];
    if (head != 'K' && head != 'C') throw ExpressionError("expected 'K' or 'C'", pos_);
    ++pos_;
    const std::size_t at = pos_;
    const int size = integer();
    if (head == 'K') {
      if (size == 4 && text_.substr(pos_, 2) == "-e") {
        pos_ += 2;
        return single_block(BlockKind::k4_minus, 4);
      }
      if (size < 1) throw ExpressionError("clique needs at least one vertex", at);
      return single_block(BlockKind::clique, size);
    }
    if (size < 3) throw ExpressionError("cycle needs at least three vertices", at);
    return single_block(BlockKind::cycle, size);
  }

  int integer() {
    const std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > kMaxVertices) throw ExpressionError("integer out of range", start);
      ++pos_;
    }
    if (pos_ == start) throw ExpressionError("expected an integer", start);
    return static_cast<int>(value);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

StructuredGraph parse_expression(std::string_view expr) { return ExpressionParser(expr).parse(); }

StructuredGraph resolve_graph(std::string_view text) {
  try {
    return build_named(parse_named_graph(text));
  } catch (const std::invalid_argument&) {
    return parse_expression(text);
  }
}

}  // namespace folkman
