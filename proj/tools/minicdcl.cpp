// minicdcl — a small deterministic CDCL SAT solver for DIMACS CNF files.
//
// usage: minicdcl <file.cnf>
//
// Prints "s SATISFIABLE" plus "v" model lines (0-terminated), or
// "s UNSATISFIABLE"; exits 10/20 accordingly (SAT-competition convention).
// No preprocessing, no randomness: identical input gives identical output.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

namespace {

// literal encoding: variable v in 1..N -> positive 2(v-1), negative 2(v-1)+1
inline int make_lit(int dimacs) {
  const int v = dimacs < 0 ? -dimacs : dimacs;
  return 2 * (v - 1) + (dimacs < 0);
}
inline int neg_lit(int lit) { return lit ^ 1; }
inline int var_of(int lit) { return lit >> 1; }
inline int to_dimacs(int lit) { return (lit & 1) ? -(var_of(lit) + 1) : var_of(lit) + 1; }

struct Clause {
  std::vector<int> lits;
  double act = 0.0;
  bool learned = false;
  bool dead = false;
};

class Solver {
public:
  bool parse(const char* path) {
    std::ifstream is(path);
    if (!is)
      return false;
    std::string tok;
    std::vector<int> lits;
    while (is >> tok) {
      if (tok == "c") {
        std::string rest;
        std::getline(is, rest);
      } else if (tok == "p") {
        std::string fmt;
        int declared_vars = 0, declared_clauses = 0;
        if (!(is >> fmt >> declared_vars >> declared_clauses))
          return false;
        reserve_vars(declared_vars);
      } else if (tok == "%") {
        break;
      } else {
        int lit = 0;
        try {
          lit = std::stoi(tok);
        } catch (...) {
          return false;
        }
        if (lit == 0) {
          if (!add_input_clause(lits))
            root_conflict_ = true;
          lits.clear();
        } else {
          reserve_vars(lit < 0 ? -lit : lit);
          lits.push_back(make_lit(lit));
        }
      }
    }
    if (!lits.empty() && !add_input_clause(lits))
      root_conflict_ = true;
    return true;
  }

  // returns 10 (sat) or 20 (unsat)
  int solve() {
    if (root_conflict_)
      return 20;
    if (propagate() != -1)
      return 20;
    max_learnts_ = std::max<double>(4000.0, 0.4 * static_cast<double>(clauses_.size()));
    std::uint64_t restart_idx = 0;
    std::uint64_t conflicts_until_restart = luby(restart_idx) * 128;
    std::vector<int> learnt;
    for (;;) {
      const int confl = propagate();
      if (confl != -1) {
        ++conflicts_;
        if (decision_level() == 0)
          return 20;
        int bt_level = 0;
        analyze(confl, learnt, bt_level);
        cancel_until(bt_level);
        attach_learnt(learnt);
        decay_activities();
        if (conflicts_until_restart > 0)
          --conflicts_until_restart;
      } else {
        if (conflicts_until_restart == 0) {
          ++restart_idx;
          conflicts_until_restart = luby(restart_idx) * 128;
          cancel_until(0);
          continue;
        }
        if (static_cast<double>(learnts_.size()) > max_learnts_)
          reduce_db();
        const int next = pick_branch_lit();
        if (next == -1)
          return 10; // everything assigned, no conflict
        ++decisions_;
        trail_lim_.push_back(static_cast<int>(trail_.size()));
        enqueue(next, -1);
      }
    }
  }

  void print_model(FILE* out) const {
    std::string line = "v";
    int in_line = 0;
    for (int v = 0; v < nvars_; ++v) {
      const int lit = assigns_[v] >= 0 ? 2 * v : 2 * v + 1;
      line += ' ';
      line += std::to_string(to_dimacs(lit));
      if (++in_line == 16) {
        std::fprintf(out, "%s\n", line.c_str());
        line = "v";
        in_line = 0;
      }
    }
    line += " 0";
    std::fprintf(out, "%s\n", line.c_str());
  }

  void print_stats(FILE* out) const {
    std::fprintf(out, "c conflicts %llu\nc decisions %llu\nc propagations %llu\n",
                 static_cast<unsigned long long>(conflicts_),
                 static_cast<unsigned long long>(decisions_),
                 static_cast<unsigned long long>(propagations_));
  }

private:
  void reserve_vars(int v) {
    while (nvars_ < v) {
      ++nvars_;
      assigns_.push_back(0);
      level_.push_back(0);
      reason_.push_back(-1);
      activity_.push_back(0.0);
      saved_phase_.push_back(0);
      heap_pos_.push_back(-1);
      seen_.push_back(0);
      watches_.emplace_back();
      watches_.emplace_back();
      heap_insert(nvars_ - 1);
    }
  }

  // ---- assignment primitives ----------------------------------------

  int value(int lit) const { // +1 true, -1 false, 0 unassigned
    const int a = assigns_[var_of(lit)];
    return (lit & 1) ? -a : a;
  }
  int decision_level() const { return static_cast<int>(trail_lim_.size()); }

  void enqueue(int lit, int reason_cref) {
    const int v = var_of(lit);
    assigns_[v] = (lit & 1) ? -1 : 1;
    level_[v] = decision_level();
    reason_[v] = reason_cref;
    trail_.push_back(lit);
  }

  void cancel_until(int lvl) {
    if (decision_level() <= lvl)
      return;
    const int bound = trail_lim_[lvl];
    for (int i = static_cast<int>(trail_.size()) - 1; i >= bound; --i) {
      const int v = var_of(trail_[i]);
      saved_phase_[v] = assigns_[v] > 0;
      assigns_[v] = 0;
      reason_[v] = -1;
      if (heap_pos_[v] == -1)
        heap_insert(v);
    }
    trail_.resize(static_cast<std::size_t>(bound));
    trail_lim_.resize(static_cast<std::size_t>(lvl));
    qhead_ = static_cast<std::size_t>(bound);
  }

  // ---- clauses and watches -------------------------------------------

  bool add_input_clause(std::vector<int>& lits) {
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    for (std::size_t i = 0; i + 1 < lits.size(); ++i)
      if (lits[i + 1] == neg_lit(lits[i]))
        return true; // tautology
    if (lits.empty())
      return false;
    if (lits.size() == 1) {
      if (value(lits[0]) < 0)
        return false;
      if (value(lits[0]) == 0)
        enqueue(lits[0], -1);
      return true;
    }
    const int cref = static_cast<int>(clauses_.size());
    clauses_.push_back(Clause{lits, 0.0, false, false});
    watches_[neg_lit(lits[0])].push_back(cref);
    watches_[neg_lit(lits[1])].push_back(cref);
    return true;
  }

  void attach_learnt(const std::vector<int>& lits) {
    if (lits.size() == 1) {
      enqueue(lits[0], -1);
      return;
    }
    const int cref = static_cast<int>(clauses_.size());
    clauses_.push_back(Clause{lits, cla_inc_, true, false});
    learnts_.push_back(cref);
    watches_[neg_lit(lits[0])].push_back(cref);
    watches_[neg_lit(lits[1])].push_back(cref);
    enqueue(lits[0], cref);
  }

  // returns conflicting clause ref or -1
  int propagate() {
    while (qhead_ < trail_.size()) {
      const int p = trail_[qhead_++];
      ++propagations_;
      std::vector<int>& ws = watches_[p];
      std::size_t keep = 0;
      for (std::size_t i = 0; i < ws.size(); ++i) {
        const int cref = ws[i];
        Clause& c = clauses_[static_cast<std::size_t>(cref)];
        if (c.dead)
          continue; // dropped by reduce_db
        // ensure the falsified literal sits at position 1
        const int false_lit = neg_lit(p);
        if (c.lits[0] == false_lit)
          std::swap(c.lits[0], c.lits[1]);
        if (value(c.lits[0]) > 0) {
          ws[keep++] = cref;
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < c.lits.size(); ++k) {
          if (value(c.lits[k]) >= 0) {
            std::swap(c.lits[1], c.lits[k]);
            watches_[neg_lit(c.lits[1])].push_back(cref);
            moved = true;
            break;
          }
        }
        if (moved)
          continue;
        // unit or conflicting
        ws[keep++] = cref;
        if (value(c.lits[0]) < 0) {
          for (std::size_t j = i + 1; j < ws.size(); ++j)
            ws[keep++] = ws[j];
          ws.resize(keep);
          return cref;
        }
        enqueue(c.lits[0], cref);
      }
      ws.resize(keep);
    }
    return -1;
  }

  // first-UIP conflict analysis
  void analyze(int confl, std::vector<int>& learnt, int& bt_level) {
    learnt.clear();
    learnt.push_back(0); // slot for the asserting literal
    int counter = 0;
    int p = -1;
    int idx = static_cast<int>(trail_.size()) - 1;
    const int cur_level = decision_level();
    for (;;) {
      Clause& c = clauses_[static_cast<std::size_t>(confl)];
      if (c.learned)
        bump_clause(c);
      for (const int q : c.lits) {
        if (q == p)
          continue;
        const int v = var_of(q);
        if (!seen_[v] && level_[v] > 0) {
          seen_[v] = 1;
          bump_var(v);
          if (level_[v] >= cur_level)
            ++counter;
          else
            learnt.push_back(q);
        }
      }
      while (!seen_[var_of(trail_[static_cast<std::size_t>(idx)])])
        --idx;
      p = trail_[static_cast<std::size_t>(idx)];
      --idx;
      seen_[var_of(p)] = 0;
      --counter;
      if (counter == 0)
        break;
      confl = reason_[var_of(p)];
    }
    learnt[0] = neg_lit(p);

    // drop literals whose reason is covered by the rest of the clause
    to_clear_.assign(learnt.begin() + 1, learnt.end());
    std::size_t out = 1;
    for (std::size_t i = 1; i < learnt.size(); ++i) {
      const int r = reason_[var_of(learnt[i])];
      if (r == -1) {
        learnt[out++] = learnt[i];
        continue;
      }
      bool redundant = true;
      for (const int q : clauses_[static_cast<std::size_t>(r)].lits) {
        if (var_of(q) != var_of(learnt[i]) && !seen_[var_of(q)] && level_[var_of(q)] > 0) {
          redundant = false;
          break;
        }
      }
      if (!redundant)
        learnt[out++] = learnt[i];
    }
    learnt.resize(out);
    for (const int q : to_clear_)
      seen_[var_of(q)] = 0;

    bt_level = 0;
    if (learnt.size() > 1) {
      std::size_t max_i = 1;
      for (std::size_t i = 2; i < learnt.size(); ++i)
        if (level_[var_of(learnt[i])] > level_[var_of(learnt[max_i])])
          max_i = i;
      std::swap(learnt[1], learnt[max_i]);
      bt_level = level_[var_of(learnt[1])];
    }
  }

  // ---- heuristics ------------------------------------------------------

  void bump_var(int v) {
    activity_[v] += var_inc_;
    if (activity_[v] > 1e100) {
      for (auto& a : activity_)
        a *= 1e-100;
      var_inc_ *= 1e-100;
    }
    if (heap_pos_[v] != -1)
      heap_up(heap_pos_[v]);
  }
  void bump_clause(Clause& c) {
    c.act += cla_inc_;
    if (c.act > 1e20) {
      for (const int cref : learnts_)
        clauses_[static_cast<std::size_t>(cref)].act *= 1e-20;
      cla_inc_ *= 1e-20;
    }
  }
  void decay_activities() {
    var_inc_ /= 0.95;
    cla_inc_ /= 0.999;
  }

  int pick_branch_lit() {
    while (!heap_.empty()) {
      const int v = heap_[0];
      heap_remove_top();
      if (assigns_[v] == 0)
        return saved_phase_[v] ? 2 * v : 2 * v + 1;
    }
    return -1;
  }

  void reduce_db() {
    std::vector<int> sorted = learnts_;
    std::sort(sorted.begin(), sorted.end(), [&](int a, int b) {
      const Clause& ca = clauses_[static_cast<std::size_t>(a)];
      const Clause& cb = clauses_[static_cast<std::size_t>(b)];
      if (ca.act != cb.act)
        return ca.act < cb.act;
      return a < b;
    });
    const std::size_t drop_target = sorted.size() / 2;
    std::size_t dropped = 0;
    for (const int cref : sorted) {
      if (dropped >= drop_target)
        break;
      Clause& c = clauses_[static_cast<std::size_t>(cref)];
      if (c.lits.size() <= 2 || is_reason(cref))
        continue;
      c.dead = true;
      c.lits.clear();
      c.lits.shrink_to_fit();
      ++dropped;
    }
    learnts_.erase(std::remove_if(learnts_.begin(), learnts_.end(),
                                  [&](int cref) {
                                    return clauses_[static_cast<std::size_t>(cref)].dead;
                                  }),
                   learnts_.end());
    max_learnts_ *= 1.2;
  }

  bool is_reason(int cref) const {
    const Clause& c = clauses_[static_cast<std::size_t>(cref)];
    if (c.lits.empty())
      return false;
    const int v = var_of(c.lits[0]);
    return assigns_[v] != 0 && reason_[v] == cref;
  }

  static std::uint64_t luby(std::uint64_t i) {
    // 1 1 2 1 1 2 4 1 1 2 1 1 2 4 8 ... (0-based)
    std::uint64_t size = 1, seq = 0;
    while (size < i + 1) {
      ++seq;
      size = 2 * size + 1;
    }
    while (size - 1 != i) {
      size = (size - 1) / 2;
      --seq;
      i %= size;
    }
    return std::uint64_t{1} << seq;
  }

  // ---- activity-ordered heap of variables ------------------------------

  bool heap_less(int a, int b) const {
    if (activity_[a] != activity_[b])
      return activity_[a] > activity_[b];
    return a < b;
  }
  void heap_insert(int v) {
    heap_pos_[v] = static_cast<int>(heap_.size());
    heap_.push_back(v);
    heap_up(heap_pos_[v]);
  }
  void heap_up(int i) {
    const int v = heap_[static_cast<std::size_t>(i)];
    while (i > 0) {
      const int parent = (i - 1) / 2;
      if (!heap_less(v, heap_[static_cast<std::size_t>(parent)]))
        break;
      heap_[static_cast<std::size_t>(i)] = heap_[static_cast<std::size_t>(parent)];
      heap_pos_[heap_[static_cast<std::size_t>(i)]] = i;
      i = parent;
    }
    heap_[static_cast<std::size_t>(i)] = v;
    heap_pos_[v] = i;
  }
  void heap_down(int i) {
    const int v = heap_[static_cast<std::size_t>(i)];
    const int n = static_cast<int>(heap_.size());
    for (;;) {
      int child = 2 * i + 1;
      if (child >= n)
        break;
      if (child + 1 < n &&
          heap_less(heap_[static_cast<std::size_t>(child + 1)], heap_[static_cast<std::size_t>(child)]))
        ++child;
      if (!heap_less(heap_[static_cast<std::size_t>(child)], v))
        break;
      heap_[static_cast<std::size_t>(i)] = heap_[static_cast<std::size_t>(child)];
      heap_pos_[heap_[static_cast<std::size_t>(i)]] = i;
      i = child;
    }
    heap_[static_cast<std::size_t>(i)] = v;
    heap_pos_[v] = i;
  }
  void heap_remove_top() {
    const int v = heap_[0];
    heap_pos_[v] = -1;
    const int last = heap_.back();
    heap_.pop_back();
    if (!heap_.empty() && last != v) {
      heap_[0] = last;
      heap_pos_[last] = 0;
      heap_down(0);
    }
  }

  int nvars_ = 0;
  bool root_conflict_ = false;
  std::vector<Clause> clauses_;
  std::vector<int> learnts_;
  std::vector<std::vector<int>> watches_;
  std::vector<signed char> assigns_;
  std::vector<int> level_;
  std::vector<int> reason_;
  std::vector<int> trail_;
  std::vector<int> trail_lim_;
  std::size_t qhead_ = 0;
  std::vector<double> activity_;
  double var_inc_ = 1.0;
  double cla_inc_ = 1.0;
  double max_learnts_ = 4000.0;
  std::vector<int> heap_;
  std::vector<int> heap_pos_;
  std::vector<signed char> saved_phase_;
  std::vector<signed char> seen_;
  std::vector<int> to_clear_;
  std::uint64_t conflicts_ = 0, decisions_ = 0, propagations_ = 0;
};

} // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: minicdcl <file.cnf>\n");
    return 1;
  }
  Solver solver;
  if (!solver.parse(argv[1])) {
    std::fprintf(stderr, "minicdcl: cannot parse '%s'\n", argv[1]);
    return 1;
  }
  const int res = solver.solve();
  solver.print_stats(stdout);
  if (res == 10) {
    std::printf("s SATISFIABLE\n");
    solver.print_model(stdout);
  } else {
    std::printf("s UNSATISFIABLE\n");
  }
  return res;
}
