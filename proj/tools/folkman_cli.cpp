// folkman: command-line front end for the arrowing toolkit.
//
// Exit codes
//   0   success (graph, ARROWS, GOOD certificate, PASS, solve UNKNOWN)
//   2   usage, parse or I/O error
//   10  arrows: NOT-ARROWS          solve: SATISFIABLE
//   20  arrows: UNKNOWN             solve: UNSATISFIABLE; verify: INCONCLUSIVE
//   30  check-certificate: monochromatic witness found
//   40  verify: FAIL

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "folkman/arrowing.hpp"
#include "folkman/campaign.hpp"
#include "folkman/constructions.hpp"
#include "folkman/encode.hpp"
#include "folkman/sat.hpp"

namespace fs = std::filesystem;
using namespace folkman;

namespace {

constexpr int kExitError = 2;
constexpr int kExitNotArrows = 10;
constexpr int kExitUnknown = 20;
constexpr int kExitWitness = 30;
constexpr int kExitFail = 40;

struct BudgetFlags {
  std::string budget;
  std::optional<std::uint64_t> nodes;
  std::optional<std::uint64_t> conflicts;

  void attach(CLI::App* cmd) {
    cmd->add_option("--budget", budget,
                    "Time limit with unit suffix (e.g. 30s, 5m, 1h), or a bare count used as node and conflict "
                    "limit");
    cmd->add_option("--nodes", nodes, "Search node limit");
    cmd->add_option("--conflicts", conflicts, "SAT conflict limit");
  }

  [[nodiscard]] Budget resolve() const {
    Budget b;
    if (!budget.empty()) {
      const char unit = budget.back();
      std::size_t used = 0;
      if (unit == 's' || unit == 'm' || unit == 'h') {
        const double value = std::stod(budget.substr(0, budget.size() - 1), &used);
        if (used + 1 != budget.size() || value < 0) throw CLI::ValidationError("--budget", "bad duration " + budget);
        b.seconds = value * (unit == 's' ? 1.0 : unit == 'm' ? 60.0 : 3600.0);
      } else {
        const auto count = std::stoull(budget, &used);
        if (used != budget.size()) throw CLI::ValidationError("--budget", "bad count " + budget);
        b.nodes = count;
        b.conflicts = count;
      }
    }
    if (nodes) b.nodes = nodes;
    if (conflicts) b.conflicts = conflicts;
    return b;
  }
};

struct SolverFlags {
  sat::SolverConfig config;
  void attach(CLI::App* cmd) {
    cmd->add_option("--restart-first", config.restart_first, "Conflicts before the first restart")->capture_default_str();
    cmd->add_option("--restart-growth", config.restart_growth, "Geometric restart factor")->capture_default_str();
    cmd->add_option("--var-decay", config.var_decay, "Variable activity decay")->capture_default_str();
    cmd->add_option("--clause-decay", config.clause_decay, "Learnt clause activity decay")->capture_default_str();
  }
};

std::string echo_command(int argc, char** argv) {
  std::string out;
  for (int i = 0; i < argc; ++i) {
    if (i) out += ' ';
    out += argv[i];
  }
  return out;
}

void emit(const RunReport& report, const std::string& json_path) {
  std::cout << report.to_text();
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    out << report.to_json() << '\n';
    if (!out) throw std::runtime_error("cannot write report " + json_path);
  }
}

std::string format_set(const VertexSet& s) {
  std::string out = "{";
  for (Vertex v : s.members()) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge-arrowing and Folkman-number verification toolkit"};
  app.require_subcommand(1);
  std::string json_report;
  app.add_option("--report", json_report, "Also write the run report as JSON to this path");
  app.set_version_flag("--version", std::string(kToolVersion));
  const std::string command = echo_command(argc, argv);

  // graph
  auto* graph_cmd = app.add_subcommand("graph", "Build a named graph or Zykov-sum expression");
  std::string graph_expr;
  bool graph_stats = false;
  std::string graph_export;
  graph_cmd->add_option("expr", graph_expr, "H, S, T, L, Q, GRAHAM or an expression such as \"K3+C5\"")->required();
  graph_cmd->add_flag("--stats", graph_stats, "Print n, m and the clique number");
  graph_cmd->add_option("--export", graph_export, "Write the edge list to this path");

  // arrows
  auto* arrows_cmd = app.add_subcommand("arrows", "Decide G -> (a1,...,ar)");
  std::string arrows_expr;
  std::string arrows_targets;
  std::string arrows_method = "auto";
  std::string arrows_cert = "arrows.cert";
  std::string arrows_order = "constrained";
  bool arrows_prune = false;
  bool arrows_no_symmetry = false;
  bool arrows_symmetry_clauses = false;
  BudgetFlags arrows_budget;
  SolverFlags arrows_solver;
  arrows_cmd->add_option("expr", arrows_expr, "Graph")->required();
  arrows_cmd->add_option("--targets", arrows_targets, "Comma-separated clique sizes, e.g. 3,3,3")->required();
  arrows_cmd->add_option("--method", arrows_method, "search, sat or auto")->capture_default_str();
  arrows_cmd->add_option("--cert-out", arrows_cert, "Where to write a good-colouring certificate")->capture_default_str();
  arrows_cmd->add_option("--edge-order", arrows_order, "constrained or lex")->capture_default_str();
  arrows_cmd->add_flag("--neighborhood-prune", arrows_prune, "Enable the neighbourhood clique prune");
  arrows_cmd->add_flag("--no-symmetry", arrows_no_symmetry, "Disable colour symmetry breaking in the search");
  arrows_cmd->add_flag("--symmetry-clauses", arrows_symmetry_clauses, "Add the first-edge symmetry clause (SAT)");
  arrows_budget.attach(arrows_cmd);
  arrows_solver.attach(arrows_cmd);

  // encode
  auto* encode_cmd = app.add_subcommand("encode", "Write a DIMACS encoding and its variable map");
  std::string encode_target;
  std::string encode_expr;
  std::string encode_targets;
  std::string encode_out;
  std::string encode_map;
  bool encode_comments = false;
  bool encode_symmetry = false;
  encode_cmd->add_option("target", encode_target, "arrowing, lemma1 or lemma3")
      ->required()
      ->check(CLI::IsMember({"arrowing", "lemma1", "lemma3"}));
  encode_cmd->add_option("expr", encode_expr, "Graph (arrowing only)");
  encode_cmd->add_option("--targets", encode_targets, "Clique sizes (arrowing only)");
  encode_cmd->add_option("--out", encode_out, "DIMACS output path")->required();
  encode_cmd->add_option("--map", encode_map, "Variable map path (default: <out>.map)");
  encode_cmd->add_flag("--comments", encode_comments, "Embed the variable map as DIMACS comments");
  encode_cmd->add_flag("--symmetry-clauses", encode_symmetry, "Add the first-edge symmetry clause (arrowing only)");

  // check-certificate
  auto* check_cmd = app.add_subcommand("check-certificate", "Re-check a colouring certificate");
  std::string check_expr;
  std::string check_targets;
  std::string check_path;
  check_cmd->add_option("expr", check_expr, "Graph")->required();
  check_cmd->add_option("--targets", check_targets, "Clique sizes")->required();
  check_cmd->add_option("--coloring", check_path, "Certificate file (\"u v c\" lines)")->required();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Run a named verification campaign");
  std::string verify_campaign;
  std::string verify_solver;
  std::string verify_out = ".";
  BudgetFlags verify_budget;
  SolverFlags verify_solver_flags;
  verify_cmd->add_option("campaign", verify_campaign)->required()->check(CLI::IsMember(campaign_names()));
  verify_cmd->add_option("--external-solver", verify_solver,
                         "Solver command line; the CNF path is appended (default: $FOLKMAN_SOLVER)");
  verify_cmd->add_option("--out-dir", verify_out, "Directory for emitted files")->capture_default_str();
  verify_budget.attach(verify_cmd);
  verify_solver_flags.attach(verify_cmd);

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Run the embedded CDCL solver on a DIMACS file");
  std::string solve_path;
  std::optional<double> solve_seconds;
  std::optional<std::uint64_t> solve_conflicts;
  SolverFlags solve_flags;
  solve_cmd->add_option("cnf", solve_path, "DIMACS CNF file")->required();
  solve_cmd->add_option("--seconds", solve_seconds, "Time limit");
  solve_cmd->add_option("--conflicts", solve_conflicts, "Conflict limit");
  solve_flags.attach(solve_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    RunReport report(command);

    if (*graph_cmd) {
      const StructuredGraph sg = resolve_graph(graph_expr);
      report.add("n", static_cast<long long>(sg.graph.order()));
      report.add("m", static_cast<long long>(sg.graph.size()));
      report.add("blocks", static_cast<long long>(sg.blocks.size()));
      if (graph_stats) report.add("cl", static_cast<long long>(clique_number(sg.graph)));
      if (!graph_export.empty()) {
        std::ostringstream text;
        write_edge_list(text, sg.graph);
        write_text(graph_export, text.str());
        report.add("export", graph_export);
      }
      emit(report, json_report);
      return 0;
    }

    if (*arrows_cmd) {
      const StructuredGraph sg = resolve_graph(arrows_expr);
      const ArrowingProblem problem(sg.graph, parse_targets(arrows_targets));
      ArrowsOptions options;
      options.solver = arrows_solver.config;
      options.encode.symmetry_break = arrows_symmetry_clauses;
      options.search.neighborhood_prune = arrows_prune;
      options.search.symmetry_breaking = !arrows_no_symmetry;
      if (arrows_order == "lex") options.search.order = EdgeOrder::lexicographic;
      else if (arrows_order != "constrained") throw std::invalid_argument("unknown edge order " + arrows_order);
      const Budget budget = arrows_budget.resolve();

      report.add("n", static_cast<long long>(sg.graph.order()));
      report.add("m", static_cast<long long>(sg.graph.size()));
      report.add("cl", static_cast<long long>(clique_number(sg.graph)));
      report.add("targets", arrows_targets);
      const ArrowsResult result = arrows(problem, parse_method(arrows_method), budget, options);
      report.add("method", to_string(result.method));
      report.add("verdict", to_string(result.verdict));
      if (result.method == Method::search) report.add("nodes", static_cast<long long>(result.nodes));
      else report.add("conflicts", static_cast<long long>(result.sat_stats.conflicts));
      report.add("elapsed_s", result.elapsed_seconds);
      if (!result.reason.empty()) report.add("reason", result.reason);
      if (result.certificate) {
        write_validated_certificate(arrows_cert, problem, *result.certificate);
        report.add("certificate", arrows_cert);
      }
      emit(report, json_report);
      switch (result.verdict) {
        case ArrowsResult::Verdict::arrows: return 0;
        case ArrowsResult::Verdict::not_arrows: return kExitNotArrows;
        case ArrowsResult::Verdict::unknown: return kExitUnknown;
      }
    }

    if (*encode_cmd) {
      Encoding enc;
      if (encode_target == "arrowing") {
        if (encode_expr.empty() || encode_targets.empty())
          throw std::invalid_argument("encode arrowing needs a graph and --targets");
        EncodeOptions opts;
        opts.symmetry_break = encode_symmetry;
        enc = encode_arrowing(ArrowingProblem(resolve_graph(encode_expr).graph, parse_targets(encode_targets)), opts);
      } else {
        if (!encode_expr.empty() || !encode_targets.empty() || encode_symmetry)
          throw std::invalid_argument("encode " + encode_target + " takes no graph, targets or symmetry flag");
        enc = encode_target == "lemma1" ? encode_lemma1() : encode_lemma3();
      }
      if (encode_map.empty()) encode_map = encode_out + ".map";
      write_text(encode_out, write_dimacs(enc.cnf, encode_comments));
      std::ostringstream map;
      write_var_map(map, enc.cnf);
      write_text(encode_map, map.str());
      report.add("encoding", encode_target);
      report.add("vars", static_cast<long long>(enc.cnf.num_vars));
      report.add("clauses", static_cast<long long>(enc.cnf.clauses.size()));
      report.add("header", "p cnf " + std::to_string(enc.cnf.num_vars) + " " + std::to_string(enc.cnf.clauses.size()));
      report.add("cnf", encode_out);
      report.add("var_map", encode_map);
      emit(report, json_report);
      return 0;
    }

    if (*check_cmd) {
      const StructuredGraph sg = resolve_graph(check_expr);
      const ArrowingProblem problem(sg.graph, parse_targets(check_targets));
      std::ifstream in(check_path);
      if (!in) throw std::runtime_error("cannot read " + check_path);
      const EdgeColoring coloring = read_certificate(in, sg.graph);
      const auto witness = check_coloring(problem, coloring);
      if (witness) {
        report.add("verdict", std::string("WITNESS"));
        report.add("witness.color", static_cast<long long>(witness->color));
        report.add("witness.vertices", format_set(witness->vertices));
        emit(report, json_report);
        return kExitWitness;
      }
      report.add("verdict", std::string("GOOD"));
      emit(report, json_report);
      return 0;
    }

    if (*verify_cmd) {
      CampaignOptions options;
      options.out_dir = verify_out;
      options.budget = verify_budget.resolve();
      options.arrows.solver = verify_solver_flags.config;
      if (!verify_solver.empty()) options.external_solver = verify_solver;
      else if (const char* env = std::getenv("FOLKMAN_SOLVER"); env != nullptr && *env != '\0')
        options.external_solver = std::string(env);
      CampaignResult result = run_campaign(verify_campaign, options);
      // keep the exact invocation in the record
      RunReport full(command);
      for (const auto& [k, v] : result.report.fields())
        if (k != "command" && k != "tool_version") full.add(k, v);
      emit(full, json_report);
      switch (result.outcome) {
        case CampaignOutcome::pass: return 0;
        case CampaignOutcome::fail: return kExitFail;
        case CampaignOutcome::inconclusive: return kExitUnknown;
      }
    }

    if (*solve_cmd) {
      std::ifstream in(solve_path);
      if (!in) throw std::runtime_error("cannot read " + solve_path);
      const Cnf cnf = parse_dimacs(in);
      const auto result = sat::solve(cnf, {solve_seconds, solve_conflicts}, solve_flags.config);
      std::cout << "c conflicts " << result.stats.conflicts << " decisions " << result.stats.decisions << " elapsed "
                << result.stats.elapsed_seconds << "s\n";
      sat::write_competition_output(std::cout, result);
      switch (result.verdict) {
        case sat::Verdict::sat: return 10;
        case sat::Verdict::unsat: return 20;
        case sat::Verdict::timeout: return 0;
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return 0;
}
