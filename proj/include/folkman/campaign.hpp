#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "folkman/arrowing.hpp"

namespace folkman {

inline constexpr const char* kToolVersion = "0.1.0";

/// Line-oriented key/value record of one command run. Fields keep their
/// insertion order; adding a key twice appends a second line.
class RunReport {
public:
  explicit RunReport(std::string command);

  void add(const std::string& key, const std::string& value);
  void add(const std::string& key, long long value) { add(key, std::to_string(value)); }
  void add(const std::string& key, double value);

  /// Last value recorded for `key`, if any.
  [[nodiscard]] std::optional<std::string> get(const std::string& key) const;
  [[nodiscard]] const std::vector<std::pair<std::string, std::string>>& fields() const { return fields_; }

  /// "key=value" per line.
  [[nodiscard]] std::string to_text() const;
  /// JSON object; repeated keys become arrays.
  [[nodiscard]] std::string to_json() const;

private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

enum class CampaignOutcome { pass, fail, inconclusive };
std::string to_string(CampaignOutcome outcome);

struct CampaignOptions {
  std::filesystem::path out_dir = ".";
  std::optional<std::string> external_solver;  // command line; the CNF path is appended
  Budget budget;
  ArrowsOptions arrows;
};

struct CampaignResult {
  CampaignOutcome outcome = CampaignOutcome::inconclusive;
  RunReport report{"verify"};
};

/// Names accepted by run_campaign.
const std::vector<std::string>& campaign_names();

/// Runs one named end-to-end check: r33, graham, r333-lower,
/// folkman-13-clique, lemma1, lemma3 or theorem.
CampaignResult run_campaign(const std::string& name, const CampaignOptions& options);

struct ExternalSolverRun {
  std::string command;
  int exit_status = -1;
  std::filesystem::path output_path;
  SolverOutput output;
  double elapsed_seconds = 0.0;
};

class ExternalSolverError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Runs `command_line <cnf>` through the shell, capturing stdout into
/// `output_path` and stderr next to it.
ExternalSolverRun run_external_solver(const std::string& command_line, const std::filesystem::path& cnf,
                                      const std::filesystem::path& output_path);

/// Writes `stem`.cnf and `stem`.map for an encoding whose satisfiability
/// would refute a claim, and settles it with the external solver if one is
/// configured. PASS needs an UNSATISFIABLE answer; a model is decoded,
/// re-validated and written to `stem`.counterexample as a loud FAIL.
CampaignResult run_unsat_check(const std::string& campaign, const Encoding& encoding, const std::string& stem,
                               const CampaignOptions& options);

/// Writes a certificate, reads it back and re-checks it against the problem.
/// Throws if the round trip does not reproduce a good colouring.
void write_validated_certificate(const std::filesystem::path& path, const ArrowingProblem& problem,
                                 const EdgeColoring& coloring);

}  // namespace folkman
