#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "folkman/coloring.hpp"
#include "folkman/encode.hpp"
#include "folkman/sat.hpp"

namespace folkman {

enum class EdgeOrder {
  most_constrained,  // descending number of target-size cliques through the edge
  lexicographic,
};

struct SearchOptions {
  std::optional<std::uint64_t> node_budget;
  std::optional<double> seconds;
  EdgeOrder order = EdgeOrder::most_constrained;
  /// Colours within a group of equal targets are introduced in order.
  bool symmetry_breaking = true;
  /// Rejects a branch once some N_i(v) already spans a clique large enough
  /// to force a monochromatic clique in the remaining colours. Only active
  /// for a_i = 3 with the others being a single target or (3, 3).
  bool neighborhood_prune = false;
};

struct SearchOutcome {
  enum class Status { good, none, budget_exhausted };
  Status status = Status::none;
  std::optional<EdgeColoring> coloring;
  std::uint64_t nodes = 0;  // (edge, colour) assignments made
};

/// Depth-first search for a colouring with no monochromatic target clique.
/// Each assignment is rejected as soon as it closes a target clique in its
/// colour through the newly coloured edge.
SearchOutcome find_good_coloring(const ArrowingProblem& problem, const SearchOptions& options = {});

enum class Method { search, sat, automatic };

/// AUTO chooses SEARCH up to this many edges and SAT beyond.
inline constexpr int kAutoSearchMaxEdges = 64;

struct Budget {
  std::optional<std::uint64_t> nodes;      // search
  std::optional<double> seconds;           // search and SAT
  std::optional<std::uint64_t> conflicts;  // SAT
};

struct ArrowsOptions {
  SearchOptions search;
  sat::SolverConfig solver;
  EncodeOptions encode;
};

struct ArrowsResult {
  enum class Verdict { arrows, not_arrows, unknown };
  Verdict verdict = Verdict::unknown;
  std::optional<EdgeColoring> certificate;  // not_arrows only; re-validated
  std::string reason;                       // unknown only
  Method method = Method::search;           // the method actually run
  std::uint64_t nodes = 0;
  sat::Stats sat_stats;
  double elapsed_seconds = 0.0;
};

ArrowsResult arrows(const ArrowingProblem& problem, Method method, const Budget& budget = {},
                    const ArrowsOptions& options = {});

struct WitnessReport {
  int clique_number = 0;
  int q = 0;
  bool clique_below_q = false;
  std::optional<ArrowsResult> arrowing;  // absent when the clique test already failed
  enum class Outcome { witness, not_witness, inconclusive };
  Outcome outcome = Outcome::inconclusive;
};

/// cl(g) < q and g arrows the targets: one graph certifying
/// F_e(targets; q) <= |V(g)|. An unknown arrowing verdict makes the whole
/// check inconclusive, never false.
WitnessReport folkman_witness_check(const Graph& g, const std::vector<int>& targets, int q, Method method,
                                    const Budget& budget = {}, const ArrowsOptions& options = {});

std::string to_string(Method method);
std::string to_string(ArrowsResult::Verdict verdict);
std::string to_string(WitnessReport::Outcome outcome);
Method parse_method(const std::string& text);

}  // namespace folkman
