#include "folkman/sat.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ostream>

namespace folkman::sat {

namespace {

// Internal literal: 2*var + sign, var 0-based, sign 1 for negated.
using Lit = std::uint32_t;
using ClauseRef = std::uint32_t;
constexpr ClauseRef kNoReason = ~ClauseRef{0};

inline Lit make_lit(int var, bool negated) { return static_cast<Lit>(2 * var + (negated ? 1 : 0)); }
inline int var_of(Lit l) { return static_cast<int>(l >> 1); }
inline bool negated(Lit l) { return (l & 1U) != 0; }
inline Lit negate(Lit l) { return l ^ 1U; }

enum class Value : std::int8_t { f = 0, t = 1, undef = 2 };

struct StoredClause {
  std::vector<Lit> lits;
  double activity = 0.0;
  bool learnt = false;
  bool removed = false;
};

struct Watcher {
  ClauseRef cref;
  Lit blocker;
};

class VarHeap {
public:
  explicit VarHeap(const std::vector<double>& activity) : activity_(activity) {}

  void reserve(int n) { index_.assign(static_cast<std::size_t>(n), -1); }
  [[nodiscard]] bool empty() const { return heap_.empty(); }
  [[nodiscard]] bool contains(int v) const { return index_[static_cast<std::size_t>(v)] >= 0; }

  void insert(int v) {
    if (contains(v)) return;
    index_[static_cast<std::size_t>(v)] = static_cast<int>(heap_.size());
    heap_.push_back(v);
    sift_up(heap_.size() - 1);
  }
  void increased(int v) {
    if (contains(v)) sift_up(static_cast<std::size_t>(index_[static_cast<std::size_t>(v)]));
  }
  int pop() {
    const int top = heap_.front();
    index_[static_cast<std::size_t>(top)] = -1;
    heap_.front() = heap_.back();
    heap_.pop_back();
    if (!heap_.empty()) {
      index_[static_cast<std::size_t>(heap_.front())] = 0;
      sift_down(0);
    }
    return top;
  }

private:
  [[nodiscard]] bool before(int a, int b) const {
    const double aa = activity_[static_cast<std::size_t>(a)];
    const double ab = activity_[static_cast<std::size_t>(b)];
    return aa > ab || (aa == ab && a < b);
  }
  void place(std::size_t i, int v) {
    heap_[i] = v;
    index_[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  void sift_up(std::size_t i) {
    const int v = heap_[i];
    while (i > 0) {
      const std::size_t parent = (i - 1) / 2;
      if (!before(v, heap_[parent])) break;
      place(i, heap_[parent]);
      i = parent;
    }
    place(i, v);
  }
  void sift_down(std::size_t i) {
    const int v = heap_[i];
    while (true) {
      std::size_t child = 2 * i + 1;
      if (child >= heap_.size()) break;
      if (child + 1 < heap_.size() && before(heap_[child + 1], heap_[child])) ++child;
      if (!before(heap_[child], v)) break;
      place(i, heap_[child]);
      i = child;
    }
    place(i, v);
  }

  const std::vector<double>& activity_;
  std::vector<int> heap_;
  std::vector<int> index_;
};

class Solver {
public:
  Solver(const Cnf& cnf, const SolverConfig& config) : config_(config), heap_(activity_) {
    if (!cnf.well_formed(false)) throw MalformedCnf("clause set has an empty clause or an out-of-range literal");
    num_vars_ = cnf.num_vars;
    const auto n = static_cast<std::size_t>(num_vars_);
    assigns_.assign(n, Value::undef);
    level_.assign(n, 0);
    reason_.assign(n, kNoReason);
    activity_.assign(n, 0.0);
    polarity_.assign(n, !config.default_phase);
    seen_.assign(n, 0);
    watches_.assign(2 * n, {});
    heap_.reserve(num_vars_);
    for (int v = 0; v < num_vars_; ++v) heap_.insert(v);

    for (const auto& c : cnf.clauses) {
      std::vector<Lit> lits;
      lits.reserve(c.size());
      for (Literal l : c) lits.push_back(make_lit(std::abs(l) - 1, l < 0));
      if (!add_input_clause(std::move(lits))) {
        trivially_unsat_ = true;
        break;
      }
    }
    num_input_clauses_ = clauses_.size();
  }

  SolverResult run(const Limits& limits) {
    const auto start = std::chrono::steady_clock::now();
    SolverResult result;
    auto elapsed = [&] {
      return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };

    Verdict verdict = Verdict::timeout;
    if (trivially_unsat_ || propagate() != kNoReason) {
      verdict = Verdict::unsat;
    } else {
      max_learnts_ = std::max(static_cast<double>(num_input_clauses_) * config_.learnt_fraction, 1000.0);
      double restart_budget = config_.restart_first;
      while (true) {
        const auto outcome = search(static_cast<std::uint64_t>(restart_budget), limits, start);
        if (outcome) {
          verdict = *outcome;
          break;
        }
        if (out_of_budget(limits, start)) break;
        restart_budget *= config_.restart_growth;
        ++stats_.restarts;
      }
    }

    result.verdict = verdict;
    if (verdict == Verdict::sat) {
      result.model.assign(static_cast<std::size_t>(num_vars_) + 1, false);
      for (int v = 0; v < num_vars_; ++v)
        result.model[static_cast<std::size_t>(v) + 1] = assigns_[static_cast<std::size_t>(v)] == Value::t;
    }
    stats_.elapsed_seconds = elapsed();
    result.stats = stats_;
    return result;
  }

private:
  [[nodiscard]] Value value(Lit l) const {
    const Value v = assigns_[static_cast<std::size_t>(var_of(l))];
    if (v == Value::undef) return Value::undef;
    return (v == Value::t) != negated(l) ? Value::t : Value::f;
  }
  [[nodiscard]] int decision_level() const { return static_cast<int>(trail_lim_.size()); }

  bool add_input_clause(std::vector<Lit> lits) {
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    for (std::size_t i = 1; i < lits.size(); ++i)
      if (lits[i] == negate(lits[i - 1])) return true;  // tautology
    std::vector<Lit> kept;
    for (Lit l : lits) {
      if (value(l) == Value::t) return true;
      if (value(l) == Value::undef) kept.push_back(l);
    }
    if (kept.empty()) return false;
    if (kept.size() == 1) {
      enqueue(kept[0], kNoReason);
      return propagate() == kNoReason;
    }
    attach(store(std::move(kept), false));
    return true;
  }

  ClauseRef store(std::vector<Lit> lits, bool learnt) {
    clauses_.push_back({std::move(lits), 0.0, learnt, false});
    return static_cast<ClauseRef>(clauses_.size() - 1);
  }

  void attach(ClauseRef cref) {
    const auto& c = clauses_[cref].lits;
    watches_[negate(c[0])].push_back({cref, c[1]});
    watches_[negate(c[1])].push_back({cref, c[0]});
  }

  void enqueue(Lit l, ClauseRef reason) {
    const auto v = static_cast<std::size_t>(var_of(l));
    assigns_[v] = negated(l) ? Value::f : Value::t;
    level_[v] = decision_level();
    reason_[v] = reason;
    trail_.push_back(l);
  }

  // Returns the conflicting clause or kNoReason.
  ClauseRef propagate() {
    ClauseRef conflict = kNoReason;
    while (qhead_ < trail_.size()) {
      const Lit p = trail_[qhead_++];  // p became true; clauses watching ~p need attention
      auto& ws = watches_[p];
      ++stats_.propagations;
      std::size_t i = 0;
      std::size_t j = 0;
      const Lit false_lit = negate(p);
      while (i < ws.size()) {
        const Watcher w = ws[i];
        if (clauses_[w.cref].removed) {
          ++i;
          continue;
        }
        if (value(w.blocker) == Value::t) {
          ws[j++] = ws[i++];
          continue;
        }
        auto& c = clauses_[w.cref].lits;
        if (c[0] == false_lit) std::swap(c[0], c[1]);
        ++i;
        const Lit first = c[0];
        if (first != w.blocker && value(first) == Value::t) {
          ws[j++] = {w.cref, first};
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < c.size(); ++k) {
          if (value(c[k]) != Value::f) {
            std::swap(c[1], c[k]);
            watches_[negate(c[1])].push_back({w.cref, first});
            moved = true;
            break;
          }
        }
        if (moved) continue;
        ws[j++] = {w.cref, first};
        if (value(first) == Value::f) {
          conflict = w.cref;
          qhead_ = trail_.size();
          while (i < ws.size()) ws[j++] = ws[i++];
        } else {
          enqueue(first, w.cref);
        }
      }
      ws.resize(j);
      if (conflict != kNoReason) break;
    }
    return conflict;
  }

  void bump_var(int v) {
    auto& a = activity_[static_cast<std::size_t>(v)];
    a += var_inc_;
    if (a > 1e100) {
      for (auto& x : activity_) x *= 1e-100;
      var_inc_ *= 1e-100;
    }
    heap_.increased(v);
  }

  void bump_clause(ClauseRef cref) {
    auto& a = clauses_[cref].activity;
    a += clause_inc_;
    if (a > 1e20) {
      for (auto& c : clauses_)
        if (c.learnt) c.activity *= 1e-20;
      clause_inc_ *= 1e-20;
    }
  }

  [[nodiscard]] std::uint32_t abstract_level(int v) const {
    return std::uint32_t{1} << (level_[static_cast<std::size_t>(v)] & 31);
  }

  // Whether `p` is implied by literals already marked in the learnt clause.
  bool redundant(Lit p, std::uint32_t levels) {
    analyze_stack_.clear();
    analyze_stack_.push_back(p);
    const std::size_t top = analyze_toclear_.size();
    while (!analyze_stack_.empty()) {
      const int v = var_of(analyze_stack_.back());
      analyze_stack_.pop_back();
      const auto& c = clauses_[reason_[static_cast<std::size_t>(v)]].lits;
      for (std::size_t i = 1; i < c.size(); ++i) {
        const int u = var_of(c[i]);
        const auto ui = static_cast<std::size_t>(u);
        if (seen_[ui] || level_[ui] == 0) continue;
        if (reason_[ui] != kNoReason && (abstract_level(u) & levels) != 0) {
          seen_[ui] = 1;
          analyze_stack_.push_back(c[i]);
          analyze_toclear_.push_back(c[i]);
        } else {
          for (std::size_t k = top; k < analyze_toclear_.size(); ++k)
            seen_[static_cast<std::size_t>(var_of(analyze_toclear_[k]))] = 0;
          analyze_toclear_.resize(top);
          return false;
        }
      }
    }
    return true;
  }

  // First-UIP learning. out_learnt[0] is the asserting literal.
  void analyze(ClauseRef conflict, std::vector<Lit>& out_learnt, int& backtrack_level) {
    out_learnt.clear();
    out_learnt.push_back(0);
    int path = 0;
    Lit p = 0;
    bool have_p = false;
    std::size_t index = trail_.size();
    ClauseRef cref = conflict;
    do {
      if (clauses_[cref].learnt) bump_clause(cref);
      const auto& c = clauses_[cref].lits;
      for (std::size_t k = have_p ? 1 : 0; k < c.size(); ++k) {
        const Lit q = c[k];
        const auto v = static_cast<std::size_t>(var_of(q));
        if (seen_[v] || level_[v] == 0) continue;
        seen_[v] = 1;
        bump_var(var_of(q));
        if (level_[v] >= decision_level()) ++path;
        else out_learnt.push_back(q);
      }
      while (!seen_[static_cast<std::size_t>(var_of(trail_[--index]))]) {
      }
      p = trail_[index];
      have_p = true;
      cref = reason_[static_cast<std::size_t>(var_of(p))];
      seen_[static_cast<std::size_t>(var_of(p))] = 0;
      --path;
    } while (path > 0);
    out_learnt[0] = negate(p);

    analyze_toclear_ = out_learnt;
    std::uint32_t levels = 0;
    for (std::size_t i = 1; i < out_learnt.size(); ++i) levels |= abstract_level(var_of(out_learnt[i]));
    std::size_t j = 1;
    for (std::size_t i = 1; i < out_learnt.size(); ++i) {
      const auto v = static_cast<std::size_t>(var_of(out_learnt[i]));
      if (reason_[v] == kNoReason || !redundant(out_learnt[i], levels)) out_learnt[j++] = out_learnt[i];
    }
    out_learnt.resize(j);

    if (out_learnt.size() == 1) {
      backtrack_level = 0;
    } else {
      std::size_t max_i = 1;
      for (std::size_t i = 2; i < out_learnt.size(); ++i)
        if (level_[static_cast<std::size_t>(var_of(out_learnt[i]))] >
            level_[static_cast<std::size_t>(var_of(out_learnt[max_i]))])
          max_i = i;
      std::swap(out_learnt[1], out_learnt[max_i]);
      backtrack_level = level_[static_cast<std::size_t>(var_of(out_learnt[1]))];
    }
    for (Lit l : analyze_toclear_) seen_[static_cast<std::size_t>(var_of(l))] = 0;
  }

  void cancel_until(int level) {
    if (decision_level() <= level) return;
    const auto keep = static_cast<std::size_t>(trail_lim_[static_cast<std::size_t>(level)]);
    for (std::size_t i = trail_.size(); i-- > keep;) {
      const int v = var_of(trail_[i]);
      const auto vi = static_cast<std::size_t>(v);
      assigns_[vi] = Value::undef;
      reason_[vi] = kNoReason;
      polarity_[vi] = negated(trail_[i]);
      heap_.insert(v);
    }
    trail_.resize(keep);
    qhead_ = keep;
    trail_lim_.resize(static_cast<std::size_t>(level));
  }

  std::optional<Lit> pick_branch() {
    while (!heap_.empty()) {
      const int v = heap_.pop();
      if (assigns_[static_cast<std::size_t>(v)] == Value::undef) return make_lit(v, polarity_[static_cast<std::size_t>(v)]);
    }
    return std::nullopt;
  }

  // A reason clause is locked while it justifies its first literal.
  [[nodiscard]] bool locked(ClauseRef cref) const {
    const Lit first = clauses_[cref].lits[0];
    return value(first) == Value::t && reason_[static_cast<std::size_t>(var_of(first))] == cref;
  }

  void reduce_learnts() {
    std::vector<ClauseRef> learnts;
    for (ClauseRef c = static_cast<ClauseRef>(num_input_clauses_); c < clauses_.size(); ++c)
      if (clauses_[c].learnt && !clauses_[c].removed) learnts.push_back(c);
    std::sort(learnts.begin(), learnts.end(), [&](ClauseRef a, ClauseRef b) {
      const auto& ca = clauses_[a];
      const auto& cb = clauses_[b];
      if ((ca.lits.size() > 2) != (cb.lits.size() > 2)) return ca.lits.size() > 2;
      if (ca.activity != cb.activity) return ca.activity < cb.activity;
      return a < b;
    });
    const double threshold = clause_inc_ / static_cast<double>(std::max<std::size_t>(learnts.size(), 1));
    for (std::size_t i = 0; i < learnts.size(); ++i) {
      auto& c = clauses_[learnts[i]];
      if (c.lits.size() <= 2 || locked(learnts[i])) continue;
      if (i < learnts.size() / 2 || c.activity < threshold) {
        c.removed = true;
        c.lits.clear();
        c.lits.shrink_to_fit();
        --num_learnts_;
      }
    }
  }

  bool out_of_budget(const Limits& limits, std::chrono::steady_clock::time_point start) const {
    if (limits.conflicts && stats_.conflicts >= *limits.conflicts) return true;
    if (limits.seconds) {
      const double spent = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      if (spent >= *limits.seconds) return true;
    }
    return false;
  }

  // nullopt means restart (or budget exhausted; the caller checks).
  std::optional<Verdict> search(std::uint64_t conflict_budget, const Limits& limits,
                                std::chrono::steady_clock::time_point start) {
    std::uint64_t conflicts_here = 0;
    std::vector<Lit> learnt;
    while (true) {
      const ClauseRef conflict = propagate();
      if (conflict != kNoReason) {
        ++stats_.conflicts;
        ++conflicts_here;
        if (decision_level() == 0) return Verdict::unsat;
        int backtrack_level = 0;
        analyze(conflict, learnt, backtrack_level);
        cancel_until(backtrack_level);
        stats_.learnt_literals += learnt.size();
        if (learnt.size() == 1) {
          enqueue(learnt[0], kNoReason);
        } else {
          const ClauseRef cref = store(learnt, true);
          ++num_learnts_;
          attach(cref);
          bump_clause(cref);
          enqueue(learnt[0], cref);
        }
        var_inc_ /= config_.var_decay;
        clause_inc_ /= config_.clause_decay;
        if ((stats_.conflicts & 255U) == 0 && out_of_budget(limits, start)) {
          cancel_until(0);
          return std::nullopt;
        }
        if (limits.conflicts && stats_.conflicts >= *limits.conflicts) {
          cancel_until(0);
          return std::nullopt;
        }
      } else {
        if (conflicts_here >= conflict_budget) {
          cancel_until(0);
          return std::nullopt;
        }
        if (static_cast<double>(num_learnts_) - static_cast<double>(trail_.size()) >= max_learnts_) {
          reduce_learnts();
          max_learnts_ *= config_.learnt_growth;
        }
        const auto next = pick_branch();
        if (!next) return Verdict::sat;
        ++stats_.decisions;
        trail_lim_.push_back(static_cast<int>(trail_.size()));
        enqueue(*next, kNoReason);
      }
    }
  }

  SolverConfig config_;
  int num_vars_ = 0;
  bool trivially_unsat_ = false;
  std::size_t num_input_clauses_ = 0;
  std::size_t num_learnts_ = 0;
  double max_learnts_ = 0.0;
  std::vector<StoredClause> clauses_;
  std::vector<std::vector<Watcher>> watches_;
  std::vector<Value> assigns_;
  std::vector<int> level_;
  std::vector<ClauseRef> reason_;
  std::vector<double> activity_;
  std::vector<bool> polarity_;  // saved phase, true means negated; reason clauses keep the implied literal in slot 0
  std::vector<char> seen_;
  std::vector<Lit> trail_;
  std::vector<int> trail_lim_;
  std::size_t qhead_ = 0;
  double var_inc_ = 1.0;
  double clause_inc_ = 1.0;
  std::vector<Lit> analyze_stack_;
  std::vector<Lit> analyze_toclear_;
  VarHeap heap_;
  Stats stats_;
};

}  // namespace

SolverResult solve(const Cnf& cnf, const Limits& limits, const SolverConfig& config) {
  Solver solver(cnf, config);
  SolverResult result = solver.run(limits);
  if (result.verdict == Verdict::sat && !verify_model(cnf, result.model))
    throw std::logic_error("solver produced a model that violates the input clauses");
  return result;
}

void write_competition_output(std::ostream& out, const SolverResult& result) {
  switch (result.verdict) {
    case Verdict::sat: {
      out << "s SATISFIABLE\nv";
      for (std::size_t v = 1; v < result.model.size(); ++v)
        out << ' ' << (result.model[v] ? static_cast<long>(v) : -static_cast<long>(v));
      out << " 0\n";
      break;
    }
    case Verdict::unsat: out << "s UNSATISFIABLE\n"; break;
    case Verdict::timeout: out << "s UNKNOWN\n"; break;
  }
}

}  // namespace folkman::sat
