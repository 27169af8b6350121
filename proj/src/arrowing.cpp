#include "folkman/arrowing.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

namespace folkman {

namespace {

using Clock = std::chrono::steady_clock;

// True if `candidates` holds a k-clique of the graph given by `rows`.
bool has_clique(const std::vector<VertexSet>& rows, const VertexSet& candidates, int k) {
  if (k <= 0) return true;
  if (candidates.size() < k) return false;
  for (Vertex v = candidates.first(); v >= 0; v = candidates.next(v + 1)) {
    VertexSet rest = candidates & rows[static_cast<std::size_t>(v)];
    for (Vertex u = rest.first(); u >= 0 && u <= v; u = rest.next(u + 1)) rest.erase(u);
    if (has_clique(rows, rest, k - 1)) return true;
  }
  return false;
}

std::vector<int> edge_order(const ArrowingProblem& problem, EdgeOrder order) {
  const Graph& g = problem.graph();
  std::vector<int> ids(static_cast<std::size_t>(g.size()));
  std::iota(ids.begin(), ids.end(), 0);
  if (order == EdgeOrder::lexicographic) return ids;
  std::vector<int> sizes = problem.targets();
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  std::vector<long> weight(ids.size(), 0);
  for (int k : sizes) {
    const auto counts = cliques_per_edge(g, k);
    for (std::size_t i = 0; i < counts.size(); ++i) weight[i] += counts[i];
  }
  std::stable_sort(ids.begin(), ids.end(),
                   [&](int a, int b) { return weight[static_cast<std::size_t>(a)] > weight[static_cast<std::size_t>(b)]; });
  return ids;
}

// Neighbourhood clique size that forces a monochromatic target clique, or 0
// when the prune does not apply to this colour.
int neighborhood_threshold(const std::vector<int>& targets, int color) {
  if (targets[static_cast<std::size_t>(color - 1)] != 3) return 0;
  std::vector<int> others;
  for (std::size_t i = 0; i < targets.size(); ++i)
    if (static_cast<int>(i) != color - 1) others.push_back(targets[i]);
  if (others.size() == 1) return others[0];
  if (others.size() == 2 && others[0] == 3 && others[1] == 3) return 6;
  return 0;
}

class GoodColoringSearch {
public:
  GoodColoringSearch(const ArrowingProblem& problem, const SearchOptions& options)
      : problem_(problem), options_(options), order_(edge_order(problem, options.order)) {
    const Graph& g = problem.graph();
    const int r = problem.colors();
    mono_.assign(static_cast<std::size_t>(r) + 1, std::vector<VertexSet>(static_cast<std::size_t>(g.order()), g.empty_set()));
    used_.assign(static_cast<std::size_t>(r) + 1, 0);
    colors_.assign(static_cast<std::size_t>(g.size()), 0);
    previous_in_group_.assign(static_cast<std::size_t>(r) + 1, 0);
    for (int c = 1; c <= r; ++c)
      for (int d = c - 1; d >= 1; --d)
        if (problem.target(d) == problem.target(c)) {
          previous_in_group_[static_cast<std::size_t>(c)] = d;
          break;
        }
    thresholds_.assign(static_cast<std::size_t>(r) + 1, 0);
    for (Vertex v = 0; v < g.order(); ++v) host_rows_.push_back(g.row(v));
    if (options.neighborhood_prune)
      for (int c = 1; c <= r; ++c) thresholds_[static_cast<std::size_t>(c)] = neighborhood_threshold(problem.targets(), c);
  }

  SearchOutcome run() {
    start_ = Clock::now();
    SearchOutcome out;
    const bool found = descend(0);
    out.nodes = nodes_;
    if (exhausted_) {
      out.status = SearchOutcome::Status::budget_exhausted;
    } else if (found) {
      out.status = SearchOutcome::Status::good;
      out.coloring = EdgeColoring(problem_.graph(), colors_);
    } else {
      out.status = SearchOutcome::Status::none;
    }
    return out;
  }

private:
  bool over_budget() {
    if (options_.node_budget && nodes_ >= *options_.node_budget) return true;
    if (options_.seconds && (nodes_ & 4095U) == 0 &&
        std::chrono::duration<double>(Clock::now() - start_).count() >= *options_.seconds)
      return true;
    return false;
  }

  [[nodiscard]] bool color_allowed(int c) const {
    if (!options_.symmetry_breaking) return true;
    const int prev = previous_in_group_[static_cast<std::size_t>(c)];
    return prev == 0 || used_[static_cast<std::size_t>(prev)] > 0;
  }

  // Whether colouring {u, v} with c closes a monochromatic target clique.
  [[nodiscard]] bool closes_clique(Vertex u, Vertex v, int c) const {
    const auto& rows = mono_[static_cast<std::size_t>(c)];
    const VertexSet common = rows[static_cast<std::size_t>(u)] & rows[static_cast<std::size_t>(v)];
    return has_clique(rows, common, problem_.target(c) - 2);
  }

  [[nodiscard]] bool neighborhood_forces(Vertex x, int c) const {
    const int threshold = thresholds_[static_cast<std::size_t>(c)];
    if (threshold == 0) return false;
    const auto& nb = mono_[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)];
    if (nb.size() < threshold) return false;
    return has_clique(host_rows_, nb, threshold);
  }

  bool descend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const int id = order_[depth];
    const Edge e = problem_.graph().edges()[static_cast<std::size_t>(id)];
    for (int c = 1; c <= problem_.colors(); ++c) {
      if (!color_allowed(c)) continue;
      if (over_budget()) {
        exhausted_ = true;
        return false;
      }
      ++nodes_;
      if (closes_clique(e.u, e.v, c)) continue;
      auto& rows = mono_[static_cast<std::size_t>(c)];
      rows[static_cast<std::size_t>(e.u)].insert(e.v);
      rows[static_cast<std::size_t>(e.v)].insert(e.u);
      ++used_[static_cast<std::size_t>(c)];
      colors_[static_cast<std::size_t>(id)] = static_cast<std::uint8_t>(c);
      const bool pruned = options_.neighborhood_prune && (neighborhood_forces(e.u, c) || neighborhood_forces(e.v, c));
      if (!pruned && descend(depth + 1)) return true;
      colors_[static_cast<std::size_t>(id)] = 0;
      --used_[static_cast<std::size_t>(c)];
      rows[static_cast<std::size_t>(e.u)].erase(e.v);
      rows[static_cast<std::size_t>(e.v)].erase(e.u);
      if (exhausted_) return false;
    }
    return false;
  }

  const ArrowingProblem& problem_;
  SearchOptions options_;
  std::vector<int> order_;
  std::vector<std::vector<VertexSet>> mono_;  // mono_[c][v]: colour-c neighbours so far
  std::vector<int> used_;
  std::vector<int> previous_in_group_;
  std::vector<int> thresholds_;
  std::vector<VertexSet> host_rows_;
  std::vector<std::uint8_t> colors_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  Clock::time_point start_;
};

}  // namespace

SearchOutcome find_good_coloring(const ArrowingProblem& problem, const SearchOptions& options) {
  return GoodColoringSearch(problem, options).run();
}

ArrowsResult arrows(const ArrowingProblem& problem, Method method, const Budget& budget,
                    const ArrowsOptions& options) {
  const auto start = Clock::now();
  ArrowsResult result;
  if (method == Method::automatic)
    method = problem.graph().size() <= kAutoSearchMaxEdges ? Method::search : Method::sat;
  result.method = method;

  if (method == Method::search) {
    SearchOptions so = options.search;
    if (budget.nodes) so.node_budget = budget.nodes;
    if (budget.seconds) so.seconds = budget.seconds;
    auto outcome = find_good_coloring(problem, so);
    result.nodes = outcome.nodes;
    switch (outcome.status) {
      case SearchOutcome::Status::good:
        result.verdict = ArrowsResult::Verdict::not_arrows;
        result.certificate = std::move(outcome.coloring);
        break;
      case SearchOutcome::Status::none: result.verdict = ArrowsResult::Verdict::arrows; break;
      case SearchOutcome::Status::budget_exhausted:
        result.verdict = ArrowsResult::Verdict::unknown;
        result.reason = "search budget exhausted after " + std::to_string(outcome.nodes) + " nodes";
        break;
    }
  } else {
    const Encoding enc = encode_arrowing(problem, options.encode);
    const auto solved = sat::solve(enc.cnf, {budget.seconds, budget.conflicts}, options.solver);
    result.sat_stats = solved.stats;
    switch (solved.verdict) {
      case sat::Verdict::sat:
        result.verdict = ArrowsResult::Verdict::not_arrows;
        result.certificate = decode_model(enc, solved.model).coloring;
        break;
      case sat::Verdict::unsat: result.verdict = ArrowsResult::Verdict::arrows; break;
      case sat::Verdict::timeout:
        result.verdict = ArrowsResult::Verdict::unknown;
        result.reason = "solver limit reached after " + std::to_string(solved.stats.conflicts) + " conflicts";
        break;
    }
  }
  if (result.certificate && check_coloring(problem, *result.certificate))
    throw std::logic_error("certificate failed re-validation");
  result.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return result;
}

WitnessReport folkman_witness_check(const Graph& g, const std::vector<int>& targets, int q, Method method,
                                    const Budget& budget, const ArrowsOptions& options) {
  if (q < 2) throw ColoringError("q must be at least 2");
  WitnessReport report;
  report.q = q;
  report.clique_number = clique_number(g);
  report.clique_below_q = report.clique_number < q;
  if (!report.clique_below_q) {
    report.outcome = WitnessReport::Outcome::not_witness;
    return report;
  }
  report.arrowing = arrows(ArrowingProblem(g, targets), method, budget, options);
  switch (report.arrowing->verdict) {
    case ArrowsResult::Verdict::arrows: report.outcome = WitnessReport::Outcome::witness; break;
    case ArrowsResult::Verdict::not_arrows: report.outcome = WitnessReport::Outcome::not_witness; break;
    case ArrowsResult::Verdict::unknown: report.outcome = WitnessReport::Outcome::inconclusive; break;
  }
  return report;
}

std::string to_string(Method method) {
  switch (method) {
    case Method::search: return "search";
    case Method::sat: return "sat";
    case Method::automatic: return "auto";
  }
  return "?";
}

std::string to_string(ArrowsResult::Verdict verdict) {
  switch (verdict) {
    case ArrowsResult::Verdict::arrows: return "ARROWS";
    case ArrowsResult::Verdict::not_arrows: return "NOT-ARROWS";
    case ArrowsResult::Verdict::unknown: return "UNKNOWN";
  }
  return "?";
}

std::string to_string(WitnessReport::Outcome outcome) {
  switch (outcome) {
    case WitnessReport::Outcome::witness: return "WITNESS";
    case WitnessReport::Outcome::not_witness: return "NOT-WITNESS";
    case WitnessReport::Outcome::inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

Method parse_method(const std::string& text) {
  if (text == "search" || text == "SEARCH") return Method::search;
  if (text == "sat" || text == "SAT") return Method::sat;
  if (text == "auto" || text == "AUTO") return Method::automatic;
  throw std::invalid_argument("unknown method \"" + text + "\"");
}

}  // namespace folkman
