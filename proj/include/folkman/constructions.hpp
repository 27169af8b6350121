#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "folkman/graph.hpp"

namespace folkman {

/// Shape of one Zykov summand.
///
/// cycle5, k4, k4_minus and k1 are the shapes the lemma encoders rely on.
/// Other cliques and cycles from expressions land in the generic kinds.
enum class BlockKind { cycle5, k4, k4_minus, k1, clique, cycle };

std::string_view to_string(BlockKind kind);

struct Block {
  BlockKind kind;
  int size;            // vertex count of the summand
  VertexSet vertices;  // in the host graph
};

/// A Zykov sum together with its summands, in definition order.
struct StructuredGraph {
  Graph graph;
  std::vector<Block> blocks;

  /// Index of the first block of the given kind, or -1.
  [[nodiscard]] int find_block(BlockKind kind) const;

  /// Blocks partition V, each block has its shape, and blocks are fully joined.
  [[nodiscard]] bool invariants_hold() const;
};

/// The graph a single summand stands for.
Graph block_shape(BlockKind kind, int size);

/// Block for K_k or C_k with the canonical kind for that size.
StructuredGraph single_block(BlockKind kind, int size);

/// Zykov sum that keeps track of both operands' blocks.
StructuredGraph zykov_sum(const StructuredGraph& left, const StructuredGraph& right);

enum class NamedGraph { H, S, T, L, Q, Graham };

/// Graph name to enum; accepts "H", "S", "T", "L", "Q", "GRAHAM" (any case for GRAHAM).
NamedGraph parse_named_graph(std::string_view name);

/// H = 6*C5, S = 5*C5, T = K4 + 4*C5, L = (K4-e) + 4*C5, Q = K1 + L,
/// GRAHAM = K3 + C5. The K4-e block's non-adjacent pair is its first two
/// vertices; in Q the K1 block is vertex 0.
StructuredGraph build_named(NamedGraph name);
StructuredGraph build_named(std::string_view name);

class ExpressionError : public std::invalid_argument {
public:
  ExpressionError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " at position " + std::to_string(position)), position_(position) {}
  [[nodiscard]] std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Parses a Zykov-sum expression:
///   term := "K" int | "C" int | "K4-e"
///   expr := [int "*"] term { "+" [int "*"] term }
/// Whitespace between tokens is ignored.
StructuredGraph parse_expression(std::string_view expr);

/// A named graph if `text` is one of the names, otherwise an expression.
StructuredGraph resolve_graph(std::string_view text);

}  // namespace folkman
