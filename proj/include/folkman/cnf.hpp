#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "folkman/graph.hpp"

namespace folkman {

/// x(e, i): edge e carries colour i (1-based).
struct EdgeColorVar {
  Edge edge;
  int color = 1;
  friend bool operator==(const EdgeColorVar&, const EdgeColorVar&) = default;
};

/// p(v, i): vertex v lies in part i (1-based).
struct VertexPartVar {
  Vertex vertex = 0;
  int part = 1;
  friend bool operator==(const VertexPartVar&, const VertexPartVar&) = default;
};

/// y(e): true means colour 1, false colour 2.
struct EdgeBinaryVar {
  Edge edge;
  friend bool operator==(const EdgeBinaryVar&, const EdgeBinaryVar&) = default;
};

using VarMeaning = std::variant<std::monostate, EdgeColorVar, VertexPartVar, EdgeBinaryVar>;

/// Signed DIMACS literal: +v or -v for variable v >= 1.
using Literal = int;
using Clause = std::vector<Literal>;

/// Full assignment indexed by variable; slot 0 is unused.
using Model = std::vector<bool>;

/// Partial assignment indexed by variable; slot 0 is unused.
using PartialAssignment = std::vector<std::optional<bool>>;

class CnfError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Cnf {
  int num_vars = 0;
  std::vector<Clause> clauses;
  std::vector<VarMeaning> var_map{std::monostate{}};  // var_map[v] for v in 1..num_vars

  int add_var(VarMeaning meaning) {
    var_map.push_back(meaning);
    return ++num_vars;
  }
  void add_clause(Clause c) { clauses.push_back(std::move(c)); }

  /// Literals in range, no empty clause, every used variable has a meaning
  /// (checked only when `require_meanings`).
  [[nodiscard]] bool well_formed(bool require_meanings = true) const;
};

/// True iff every clause has a true literal under `model`.
bool verify_model(const Cnf& cnf, const Model& model);

/// Indices of clauses whose literals are all assigned and all false.
std::vector<std::size_t> falsified_clauses(const Cnf& cnf, const PartialAssignment& assignment);

// DIMACS CNF: "p cnf <vars> <clauses>" then one 0-terminated clause per line.
// With comments, a "c var <index> <meaning>" line precedes the header for
// every variable.
std::string write_dimacs(const Cnf& cnf, bool with_comments = false);
Cnf parse_dimacs(std::istream& in);

/// One line per variable: "<index> <meaning>", meaning as in describe().
void write_var_map(std::ostream& out, const Cnf& cnf);
std::vector<VarMeaning> read_var_map(std::istream& in);

/// "edge_color u v c", "vertex_part v i", "edge_binary u v", or "none".
std::string describe(const VarMeaning& meaning);

enum class SolverStatus { satisfiable, unsatisfiable, unknown };

/// Parsed output of a solver following the "s ..."/"v ..." convention.
struct SolverOutput {
  std::optional<SolverStatus> status;  // absent when no "s" line was seen
  std::vector<Literal> values;         // literals from "v" lines (or bare value lines)
};

SolverOutput parse_solver_output(std::istream& in);

/// Model from solver value literals. Variables the solver did not mention
/// are an error.
Model model_from_values(int num_vars, const std::vector<Literal>& values);

}  // namespace folkman
