#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>

#include "folkman/cnf.hpp"

namespace folkman::sat {

/// Search constants. The defaults reproduce the acceptance runs; change
/// them only through the CLI flags.
struct SolverConfig {
  double var_decay = 0.95;
  double clause_decay = 0.999;
  int restart_first = 100;         // conflicts before the first restart
  double restart_growth = 1.5;     // geometric factor between restarts
  double learnt_fraction = 1.0 / 3.0;  // initial learnt-clause cap relative to input clauses
  double learnt_growth = 1.1;
  bool default_phase = false;
};

struct Limits {
  std::optional<double> seconds;
  std::optional<std::uint64_t> conflicts;
};

struct Stats {
  std::uint64_t decisions = 0;
  std::uint64_t propagations = 0;
  std::uint64_t conflicts = 0;
  std::uint64_t restarts = 0;
  std::uint64_t learnt_literals = 0;
  double elapsed_seconds = 0.0;
};

enum class Verdict { sat, unsat, timeout };

struct SolverResult {
  Verdict verdict = Verdict::timeout;
  Model model;  // set only for sat; passes verify_model
  Stats stats;
};

class MalformedCnf : public CnfError {
public:
  using CnfError::CnfError;
};

/// Conflict-driven clause learning: two watched literals, first-UIP
/// learning with recursive minimisation, VSIDS ordering, phase saving,
/// geometric restarts and activity-based learnt-clause reduction.
/// Deterministic for identical input, config and conflict limit.
SolverResult solve(const Cnf& cnf, const Limits& limits = {}, const SolverConfig& config = {});

/// Prints "s SATISFIABLE" / "s UNSATISFIABLE" / "s UNKNOWN", and for sat a
/// "v ... 0" model line.
void write_competition_output(std::ostream& out, const SolverResult& result);

}  // namespace folkman::sat
