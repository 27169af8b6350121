#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "folkman/cnf.hpp"
#include "folkman/coloring.hpp"

namespace folkman {

enum class EncodingKind { arrowing, lemma1, lemma3 };

/// A CNF plus what is needed to turn its models back into certificates.
///
/// Every encoding is satisfiable exactly when a counterexample exists:
/// a good colouring for `arrowing`, a partition of T with a 2-colouring
/// free of within-part monochromatic triangles for `lemma1`, and a
/// triangle-free 3-colouring of Q meeting the side conditions for `lemma3`.
struct Encoding {
  EncodingKind kind = EncodingKind::arrowing;
  Cnf cnf;
  Graph graph;
  std::vector<int> targets;
  VertexSet hit_block;  // lemma1: the K4 block every part must meet; lemma3: the K4-e block
  Vertex apex = -1;     // lemma3: w
  Vertex pair_a = -1;   // lemma3: the non-adjacent pair of the K4-e block
  Vertex pair_b = -1;
};

struct EncodeOptions {
  /// Forces the first edge into the first colour of some target group.
  bool symmetry_break = false;
};

/// x(e, i) for every edge and colour, colours innermost; at-least-one per
/// edge and one blocking clause per (colour i, a_i-clique). No at-most-one
/// clauses: decoding takes the lowest true colour.
Encoding encode_arrowing(const ArrowingProblem& problem, const EncodeOptions& options = {});

/// Negation of: every 3-partition of V(T) whose parts all meet the K4
/// block has a part inducing a graph that arrows (3,3).
/// y(e) per edge first, then p(v, i); exactly-one part per vertex.
Encoding encode_lemma1();

/// Negation of: every 3-colouring of Q = K1 + L whose edges from w to the
/// K4-e block use all three colours, with wa and wb coloured differently,
/// has a monochromatic triangle. Exactly-one colour per edge.
Encoding encode_lemma3();

class DecodeError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct DecodedCertificate {
  EncodingKind kind = EncodingKind::arrowing;
  EdgeColoring coloring;
  std::optional<std::vector<int>> partition;  // lemma1: part (1..3) of each vertex
};

/// Rebuilds the certificate from a model and re-checks it combinatorially.
/// Throws DecodeError if the model is incomplete or violates a clause, or if
/// the decoded certificate fails its re-check (an encoder bug).
DecodedCertificate decode_model(const Encoding& encoding, const Model& model);

/// Independent re-checks used by decode_model; true when the certificate is
/// a genuine counterexample for its encoding kind.
bool lemma1_certificate_valid(const Encoding& encoding, const std::vector<int>& partition, const EdgeColoring& coloring);
bool lemma3_certificate_valid(const Encoding& encoding, const EdgeColoring& coloring);

/// Variable carrying `meaning`, or nullopt.
std::optional<int> find_var(const Cnf& cnf, const VarMeaning& meaning);

/// Assignment fixing every edge-colour variable to agree with `coloring`
/// (x(e, i) true iff e has colour i; y(e) true iff colour 1); other
/// variables stay unassigned.
PartialAssignment assignment_for(const Encoding& encoding, const EdgeColoring& coloring);

}  // namespace folkman
