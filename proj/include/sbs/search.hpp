#pragma once

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdio>
#include <map>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "analysis.hpp"
#include "cnf.hpp"
#include "errors.hpp"
#include "records.hpp"
#include "solver.hpp"

namespace sbs {

struct search_options {
  bool prune_singletons = true; ///< drop partitions with more than s parts of size 1
  scan_limits limits{};
};

struct search_feasible {
  truth_table function;
  partition part;
};

/*! \brief Outcome of one (n, s, bs) point. */
struct search_outcome {
  enum class kind { feasible, infeasible, unknown };
  kind result = kind::infeasible;
  std::optional<search_feasible> found;  ///< present iff feasible
  int solver_calls = 0;                  ///< subprocess invocations actually made
  int partitions_considered = 0;         ///< after pruning

  bool feasible() const { return result == kind::feasible; }
  bool infeasible() const { return result == kind::infeasible; }
  bool unknown() const { return result == kind::unknown; }
};

namespace detail {

/*! \brief Re-check a decoded candidate with the exact analyzers: s(f) <= s
 * and f sensitive at 0...0 on every partition block. */
inline bool verify_candidate(const truth_table& f, int s, const partition& p,
                             const scan_limits& limits) {
  if (sensitivity(f, limits).value > s)
    return false;
  const bool base = f(0);
  if (base)
    return false;
  for (std::size_t i = 0; i < p.parts.size(); ++i)
    if (f(p.block_flip_index(i)) == base)
      return false;
  const auto sv = sensitivity(f, limits).value;
  const auto bsv = static_cast<int>(p.parts.size());
  if (!within_quadratic_bound(sv, bsv))
    std::fprintf(stderr,
                 "sbs: NOTE: decoded function has bs >= %d with s = %d, beyond the "
                 "quadratic regression bound; keeping it, please investigate\n",
                 bsv, sv);
  return true;
}

} // namespace detail

/*! \brief Decide "some f on n variables has s(f) <= s and bs(f) >= bs".
 *
 * One instance per partition, solved with a bounded worker pool. Results
 * commit in partition rank order, so verdicts and artifacts do not depend
 * on the worker count: the first satisfiable rank wins, later ranks are
 * cancelled and never logged. Every committed verdict is appended to the
 * record log; completed cells found in the log are reused, not re-solved.
 */
inline search_outcome search_point(int n, int s, int bs, const solver_config& config,
                                   record_log& log, const search_options& options = {}) {
  if (s < 1 || s > n || bs < 1 || bs > n)
    throw std::invalid_argument("search_point: need 1 <= s <= n and 1 <= bs <= n");
  const auto partitions =
      enumerate_partitions(n, bs, options.prune_singletons ? std::optional<int>(s) : std::nullopt);

  search_outcome outcome;
  outcome.partitions_considered = static_cast<int>(partitions.size());
  if (partitions.empty())
    return outcome; // no admissible block layout exists at all

  // rank -> cached completed record, or slot to be solved
  struct slot {
    std::optional<solver_verdict> verdict;
    std::exception_ptr error;
    bool cached = false;
    const search_record* cached_record = nullptr;
  };
  std::vector<slot> slots(partitions.size());
  std::vector<std::size_t> todo;
  for (std::size_t r = 0; r < partitions.size(); ++r) {
    if (const auto* rec = log.find_completed(n, s, bs, partitions[r].parts)) {
      slots[r].cached = true;
      slots[r].cached_record = rec;
    } else {
      todo.push_back(r);
    }
  }

  std::mutex m;
  std::condition_variable cv;
  std::atomic<bool> cancel{false};
  std::atomic<std::size_t> next{0};
  std::atomic<int> calls{0};

  auto worker = [&]() {
    for (;;) {
      if (cancel.load())
        return;
      const std::size_t t = next.fetch_add(1);
      if (t >= todo.size())
        return;
      const std::size_t rank = todo[t];
      try {
        cnf_instance inst = build_instance(n, s, bs, partitions[rank]);
        calls.fetch_add(1);
        solver_verdict v = run_solver(inst, config, &cancel);
        {
          std::lock_guard<std::mutex> lock(m);
          slots[rank].verdict = std::move(v);
        }
      } catch (...) {
        {
          std::lock_guard<std::mutex> lock(m);
          slots[rank].error = std::current_exception();
        }
        cv.notify_all();
        return;
      }
      cv.notify_all();
    }
  };

  const int pool = std::min<int>(config.workers, static_cast<int>(todo.size()));
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(pool));
  for (int i = 0; i < pool; ++i)
    threads.emplace_back(worker);
  auto join_all = [&]() {
    cancel.store(true);
    cv.notify_all();
    for (auto& t : threads)
      if (t.joinable())
        t.join();
  };

  bool saw_unknown = false;
  try {
    for (std::size_t rank = 0; rank < partitions.size(); ++rank) {
      const partition& p = partitions[rank];
      solve_status status;
      std::optional<std::string> function_text;
      double elapsed = 0.0;

      if (slots[rank].cached) {
        const search_record* rec = slots[rank].cached_record;
        status = rec->status;
        function_text = rec->function_text;
        elapsed = rec->elapsed_s;
      } else {
        std::unique_lock<std::mutex> lock(m);
        cv.wait(lock, [&] { return slots[rank].verdict.has_value() || slots[rank].error; });
        if (slots[rank].error) {
          lock.unlock();
          std::rethrow_exception(slots[rank].error);
        }
        const solver_verdict& v = *slots[rank].verdict;
        status = v.status;
        elapsed = v.elapsed;
        if (status == solve_status::satisfiable)
          function_text = decode_model(build_instance(n, s, bs, p), *v.model).to_text();
      }

      if (status == solve_status::satisfiable) {
        truth_table f = truth_table::from_text(*function_text);
        const bool ok = detail::verify_candidate(f, s, p, options.limits);
        if (!slots[rank].cached)
          log.append({n, s, bs, p.parts, status, elapsed, function_text, ok});
        if (!ok)
          throw internal_error("search_point: decoded model failed exact re-verification "
                               "(encoder bug) at n=" + std::to_string(n) +
                               " s=" + std::to_string(s) + " bs=" + std::to_string(bs) +
                               " partition=" + p.to_string());
        join_all();
        outcome.result = search_outcome::kind::feasible;
        outcome.found = search_feasible{std::move(f), p};
        outcome.solver_calls = calls.load();
        return outcome;
      }
      if (status == solve_status::unknown)
        saw_unknown = true;
      if (!slots[rank].cached)
        log.append({n, s, bs, p.parts, status, elapsed, std::nullopt, false});
    }
  } catch (...) {
    join_all();
    throw;
  }
  join_all();
  outcome.solver_calls = calls.load();
  outcome.result =
      saw_unknown ? search_outcome::kind::unknown : search_outcome::kind::infeasible;
  return outcome;
}

struct max_bs_result {
  int value = 0;
  bool exact = true; ///< false when an Unknown verdict aborted the scan
};

/*! \brief Largest bs with search_point(n, s, bs) feasible, scanning upward
 * from bs = s (always achievable via singleton blocks at a sensitivity
 * witness). An Unknown verdict aborts with the best confirmed value. */
inline max_bs_result max_bs(int n, int s, const solver_config& config, record_log& log,
                            const search_options& options = {}) {
  if (s < 1 || s > n)
    throw std::invalid_argument("max_bs: need 1 <= s <= n");
  max_bs_result res{s - 1, true};
  for (int bs = s; bs <= n; ++bs) {
    const search_outcome out = search_point(n, s, bs, config, log, options);
    if (out.feasible()) {
      res.value = bs;
    } else if (out.infeasible()) {
      return res;
    } else {
      res.exact = false;
      return res;
    }
  }
  return res; // bs cannot exceed n
}

struct table_row {
  int n = 0; ///< minimal n at which (s, bs) becomes achievable
  int s = 0;
  int bs = 0;
  friend bool operator==(const table_row&, const table_row&) = default;
};

struct separation_table {
  int max_n = 0;
  std::vector<std::vector<int>> max_bs_value; ///< [n][s], entries 1..max_n x 1..n
  std::vector<table_row> rows;                ///< separations (bs > s) at their minimal n
  bool complete = true;                       ///< false if any scan aborted Unknown
};

/*! \brief The (minimal n, s, max bs) separation table up to max_n,
 * resumable through the record log. */
inline separation_table build_table(int max_n, const solver_config& config, record_log& log,
                                    const search_options& options = {}) {
  if (max_n < 1)
    throw std::invalid_argument("build_table: max_n must be >= 1");
  separation_table table;
  table.max_n = max_n;
  table.max_bs_value.assign(static_cast<std::size_t>(max_n) + 1, {});
  for (int n = 1; n <= max_n; ++n) {
    table.max_bs_value[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, 0);
    for (int s = 1; s <= n; ++s) {
      const max_bs_result r = max_bs(n, s, config, log, options);
      table.max_bs_value[static_cast<std::size_t>(n)][static_cast<std::size_t>(s)] = r.value;
      table.complete = table.complete && r.exact;
    }
  }
  for (int s = 1; s <= max_n; ++s) {
    int best = 0;
    for (int n = s; n <= max_n; ++n)
      best = std::max(best, table.max_bs_value[static_cast<std::size_t>(n)][static_cast<std::size_t>(s)]);
    for (int bs = s + 1; bs <= best; ++bs) {
      for (int n = s; n <= max_n; ++n) {
        if (table.max_bs_value[static_cast<std::size_t>(n)][static_cast<std::size_t>(s)] >= bs) {
          table.rows.push_back({n, s, bs});
          break;
        }
      }
    }
  }
  std::sort(table.rows.begin(), table.rows.end(), [](const table_row& a, const table_row& b) {
    if (a.n != b.n)
      return a.n < b.n;
    if (a.s != b.s)
      return a.s < b.s;
    return a.bs < b.bs;
  });
  return table;
}

struct oracle_entry {
  int max_bs = 0;
  truth_table witness; ///< smallest-index function attaining max_bs for this s

  oracle_entry() : witness(1) {}
  oracle_entry(int bs, truth_table w) : max_bs(bs), witness(std::move(w)) {}
};

/*! \brief Brute force over all 2^(2^n) functions: for each attained
 * sensitivity s >= 1, the exact maximum bs among functions with s(f) = s.
 *
 * The independent reference for every small-n claim. n <= 4 by default;
 * n = 5 only with allow_slow (enumerates 2^32 functions; hours to days).
 */
inline std::map<int, oracle_entry> oracle_max_bs(int n, std::optional<int> s_filter = {},
                                                 bool allow_slow = false) {
  if (n < 1 || n > 5 || (n == 5 && !allow_slow))
    throw capacity_error("oracle_max_bs: n = " + std::to_string(n) +
                         " exceeds the enumeration limit (n <= 4, n = 5 behind allow_slow)");
  const std::uint64_t table_bits = std::uint64_t{1} << n;
  const std::uint64_t total = std::uint64_t{1} << table_bits;
  std::map<int, oracle_entry> best;
  truth_table f(n);
  for (std::uint64_t code = 0; code < total; ++code) {
    for (std::uint64_t i = 0; i < table_bits; ++i)
      f.set(i, (code >> i) & 1u);
    const int s = sensitivity(f).value;
    if (s == 0)
      continue;
    if (s_filter && s != *s_filter)
      continue;
    const int bs = block_sensitivity(f).value;
    if (!within_quadratic_bound(s, bs))
      std::fprintf(stderr,
                   "sbs: NOTE: enumerated function with s = %d, bs = %d beyond the quadratic "
                   "regression bound; keeping it, please investigate\n",
                   s, bs);
    auto it = best.find(s);
    if (it == best.end())
      best.emplace(s, oracle_entry(bs, f));
    else if (bs > it->second.max_bs)
      it->second = oracle_entry(bs, f);
  }
  return best;
}

} // namespace sbs
