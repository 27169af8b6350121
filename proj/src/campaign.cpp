#include "folkman/campaign.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include <json.hpp>

#include "folkman/constructions.hpp"

namespace folkman {

namespace fs = std::filesystem;

RunReport::RunReport(std::string command) {
  add("command", std::move(command));
  add("tool_version", std::string(kToolVersion));
}

void RunReport::add(const std::string& key, const std::string& value) { fields_.emplace_back(key, value); }

void RunReport::add(const std::string& key, double value) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3) << value;
  add(key, out.str());
}

std::optional<std::string> RunReport::get(const std::string& key) const {
  for (auto it = fields_.rbegin(); it != fields_.rend(); ++it)
    if (it->first == key) return it->second;
  return std::nullopt;
}

std::string RunReport::to_text() const {
  std::string out;
  for (const auto& [k, v] : fields_) out += k + "=" + v + "\n";
  return out;
}

std::string RunReport::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [k, v] : fields_) {
    if (!j.contains(k)) {
      j[k] = v;
    } else {
      if (!j[k].is_array()) j[k] = nlohmann::ordered_json::array({j[k]});
      j[k].push_back(v);
    }
  }
  return j.dump(2);
}

std::string to_string(CampaignOutcome outcome) {
  switch (outcome) {
    case CampaignOutcome::pass: return "PASS";
    case CampaignOutcome::fail: return "FAIL";
    case CampaignOutcome::inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

const std::vector<std::string>& campaign_names() {
  static const std::vector<std::string> names{"r33", "graham", "r333-lower", "folkman-13-clique",
                                              "lemma1", "lemma3", "theorem"};
  return names;
}

namespace {

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') out += "'\\''";
    else out += c;
  }
  return out + "'";
}

void write_file(const fs::path& path, const std::string& contents) {
  std::ofstream out(path);
  out << contents;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

void record_graph(RunReport& report, const std::string& prefix, const Graph& g) {
  report.add(prefix + ".n", static_cast<long long>(g.order()));
  report.add(prefix + ".m", static_cast<long long>(g.size()));
}

void record_arrows(RunReport& report, const std::string& prefix, const ArrowsResult& r) {
  report.add(prefix + ".verdict", to_string(r.verdict));
  report.add(prefix + ".method", to_string(r.method));
  if (r.method == Method::search) report.add(prefix + ".nodes", static_cast<long long>(r.nodes));
  else report.add(prefix + ".conflicts", static_cast<long long>(r.sat_stats.conflicts));
  report.add(prefix + ".elapsed_s", r.elapsed_seconds);
  if (!r.reason.empty()) report.add(prefix + ".reason", r.reason);
}

ArrowsResult arrows_of(const std::string& expr, const std::vector<int>& targets, Method method,
                       const CampaignOptions& options) {
  return arrows(ArrowingProblem(resolve_graph(expr).graph, targets), method, options.budget, options.arrows);
}

CampaignOutcome combine(std::initializer_list<CampaignOutcome> parts) {
  bool inconclusive = false;
  for (auto p : parts) {
    if (p == CampaignOutcome::fail) return CampaignOutcome::fail;
    if (p == CampaignOutcome::inconclusive) inconclusive = true;
  }
  return inconclusive ? CampaignOutcome::inconclusive : CampaignOutcome::pass;
}

CampaignOutcome expect(const ArrowsResult& r, ArrowsResult::Verdict wanted) {
  if (r.verdict == ArrowsResult::Verdict::unknown) return CampaignOutcome::inconclusive;
  return r.verdict == wanted ? CampaignOutcome::pass : CampaignOutcome::fail;
}

CampaignResult campaign_r33(const CampaignOptions& options) {
  CampaignResult out;
  out.report = RunReport("verify r33");
  const auto k6 = arrows_of("K6", {3, 3}, Method::automatic, options);
  record_arrows(out.report, "K6", k6);
  const auto k5 = arrows_of("K5", {3, 3}, Method::automatic, options);
  record_arrows(out.report, "K5", k5);
  if (k5.certificate) {
    const auto path = options.out_dir / "k5_33.cert";
    write_validated_certificate(path, ArrowingProblem(complete(5), {3, 3}), *k5.certificate);
    out.report.add("K5.certificate", path.string());
  }
  out.outcome = combine({expect(k6, ArrowsResult::Verdict::arrows), expect(k5, ArrowsResult::Verdict::not_arrows)});
  return out;
}

CampaignResult campaign_graham(const CampaignOptions& options) {
  CampaignResult out;
  out.report = RunReport("verify graham");
  const Graph g = build_named(NamedGraph::Graham).graph;
  record_graph(out.report, "K3+C5", g);
  const auto by_search = arrows(ArrowingProblem(g, {3, 3}), Method::search, options.budget, options.arrows);
  record_arrows(out.report, "search", by_search);
  const auto by_sat = arrows(ArrowingProblem(g, {3, 3}), Method::sat, options.budget, options.arrows);
  record_arrows(out.report, "sat", by_sat);
  const int cl = clique_number(g);
  out.report.add("K3+C5.clique_number", static_cast<long long>(cl));
  const auto clique_ok = cl < 6 ? CampaignOutcome::pass : CampaignOutcome::fail;
  out.report.add("bound", std::string("F_e(3,3;6) <= 8"));
  out.outcome = combine({expect(by_search, ArrowsResult::Verdict::arrows), expect(by_sat, ArrowsResult::Verdict::arrows),
                         clique_ok});
  return out;
}

CampaignResult campaign_r333_lower(const CampaignOptions& options) {
  CampaignResult out;
  out.report = RunReport("verify r333-lower");
  CampaignOptions opts = options;
  if (!opts.budget.seconds && !opts.budget.conflicts) opts.budget.seconds = 600.0;
  const auto k16 = arrows_of("K16", {3, 3, 3}, Method::sat, opts);
  record_arrows(out.report, "K16", k16);
  if (k16.certificate) {
    const auto path = options.out_dir / "k16_333.cert";
    write_validated_certificate(path, ArrowingProblem(complete(16), {3, 3, 3}), *k16.certificate);
    out.report.add("K16.certificate", path.string());
  }
  out.outcome = expect(k16, ArrowsResult::Verdict::not_arrows);
  return out;
}

CampaignOutcome check_h_clique(RunReport& report) {
  const Graph h = build_named(NamedGraph::H).graph;
  record_graph(report, "H", h);
  const int cl = clique_number(h);
  report.add("H.clique_number", static_cast<long long>(cl));
  return cl == 12 ? CampaignOutcome::pass : CampaignOutcome::fail;
}

CampaignResult campaign_folkman_clique(const CampaignOptions&) {
  CampaignResult out;
  out.report = RunReport("verify folkman-13-clique");
  out.outcome = check_h_clique(out.report);
  return out;
}

void write_counterexample(const fs::path& path, const DecodedCertificate& cert) {
  std::ostringstream out;
  if (cert.partition) {
    out << "# partition: vertex part\n";
    for (std::size_t v = 0; v < cert.partition->size(); ++v) out << "p " << v << ' ' << (*cert.partition)[v] << '\n';
  }
  out << "# colouring: u v colour\n";
  write_certificate(out, cert.coloring);
  write_file(path, out.str());
}

}  // namespace

ExternalSolverRun run_external_solver(const std::string& command_line, const fs::path& cnf, const fs::path& output_path) {
  ExternalSolverRun run;
  fs::path err_path = output_path;
  err_path += ".err";
  run.command = command_line + " " + shell_quote(cnf.string());
  run.output_path = output_path;
  const std::string full = run.command + " > " + shell_quote(output_path.string()) + " 2> " + shell_quote(err_path.string());
  const auto start = std::chrono::steady_clock::now();
  const int raw = std::system(full.c_str());
  run.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (raw == -1) throw ExternalSolverError("could not launch external solver: " + run.command);
  run.exit_status = WIFEXITED(raw) ? WEXITSTATUS(raw) : 128 + WTERMSIG(raw);
  if (run.exit_status == 126 || run.exit_status == 127)
    throw ExternalSolverError("external solver failed to start (exit " + std::to_string(run.exit_status) +
                              "): " + run.command);
  std::ifstream in(output_path);
  run.output = parse_solver_output(in);
  return run;
}

CampaignResult run_unsat_check(const std::string& campaign, const Encoding& encoding, const std::string& stem,
                               const CampaignOptions& options) {
  CampaignResult out;
  out.report = RunReport("verify " + campaign);
  fs::create_directories(options.out_dir);
  const fs::path cnf_path = options.out_dir / (stem + ".cnf");
  const fs::path map_path = options.out_dir / (stem + ".map");
  write_file(cnf_path, write_dimacs(encoding.cnf, true));
  {
    std::ostringstream map;
    write_var_map(map, encoding.cnf);
    write_file(map_path, map.str());
  }
  out.report.add("cnf", cnf_path.string());
  out.report.add("var_map", map_path.string());
  out.report.add("vars", static_cast<long long>(encoding.cnf.num_vars));
  out.report.add("clauses", static_cast<long long>(encoding.cnf.clauses.size()));

  if (!options.external_solver) {
    out.report.add("solver", std::string("none"));
    out.report.add("note", std::string("no external solver configured; encoding emitted only"));
    out.outcome = CampaignOutcome::inconclusive;
    return out;
  }

  fs::path output_path = options.out_dir / (stem + ".out");
  const auto run = run_external_solver(*options.external_solver, cnf_path, output_path);
  out.report.add("solver", run.command);
  out.report.add("solver.exit_status", static_cast<long long>(run.exit_status));
  out.report.add("solver.output", output_path.string());
  out.report.add("solver.elapsed_s", run.elapsed_seconds);

  if (run.output.status == SolverStatus::unsatisfiable) {
    out.report.add("solver.status", std::string("UNSATISFIABLE"));
    out.outcome = CampaignOutcome::pass;
    return out;
  }
  if (run.output.status == SolverStatus::satisfiable) {
    out.report.add("solver.status", std::string("SATISFIABLE"));
    // decode_model re-validates; a bad model throws instead of producing FAIL
    const Model model = model_from_values(encoding.cnf.num_vars, run.output.values);
    const DecodedCertificate cert = decode_model(encoding, model);
    const fs::path cex = options.out_dir / (stem + ".counterexample");
    write_counterexample(cex, cert);
    out.report.add("counterexample", cex.string());
    out.report.add("note", std::string("COUNTEREXAMPLE FOUND: the claim is refuted by the decoded certificate"));
    out.outcome = CampaignOutcome::fail;
    return out;
  }
  out.report.add("solver.status", std::string("UNKNOWN"));
  out.outcome = CampaignOutcome::inconclusive;
  return out;
}

void write_validated_certificate(const fs::path& path, const ArrowingProblem& problem, const EdgeColoring& coloring) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  {
    std::ostringstream text;
    write_certificate(text, coloring);
    write_file(path, text.str());
  }
  std::ifstream in(path);
  const EdgeColoring reread = read_certificate(in, problem.graph());
  if (!(reread == coloring) || check_coloring(problem, reread))
    throw std::runtime_error("certificate " + path.string() + " did not survive re-validation");
}

namespace {

CampaignResult dispatch_campaign(const std::string& name, const CampaignOptions& options) {
  if (name == "r33") return campaign_r33(options);
  if (name == "graham") return campaign_graham(options);
  if (name == "r333-lower") return campaign_r333_lower(options);
  if (name == "folkman-13-clique") return campaign_folkman_clique(options);
  if (name == "lemma1") return run_unsat_check(name, encode_lemma1(), "lemma1", options);
  if (name == "lemma3") return run_unsat_check(name, encode_lemma3(), "lemma3", options);
  if (name == "theorem") {
    const Graph h = build_named(NamedGraph::H).graph;
    auto result = run_unsat_check(name, encode_arrowing(ArrowingProblem(h, {3, 3, 3}), options.arrows.encode), "h",
                                  options);
    const auto clique = check_h_clique(result.report);
    result.outcome = combine({clique, result.outcome});
    result.report.add("bound", std::string("F_e(3,3,3;13) <= 30"));
    return result;
  }
  throw std::invalid_argument("unknown campaign \"" + name + "\"");
}

}  // namespace

CampaignResult run_campaign(const std::string& name, const CampaignOptions& options) {
  fs::create_directories(options.out_dir);
  auto result = dispatch_campaign(name, options);
  result.report.add("verdict", to_string(result.outcome));
  return result;
}

}  // namespace folkman
