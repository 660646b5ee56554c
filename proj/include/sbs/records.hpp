#pragma once

#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "partition.hpp"
#include "solver.hpp"

namespace sbs {

/*! \brief Persisted verdict for one (n, s, bs, partition) cell. */
struct search_record {
  int n = 0;
  int s = 0;
  int bs = 0;
  std::vector<int> parts;
  solve_status status = solve_status::unknown;
  double elapsed_s = 0.0;
  std::optional<std::string> function_text; ///< truth-table text, present iff sat
  bool verified = false;

  std::string to_json_line() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["s"] = s;
    j["bs"] = bs;
    j["partition"] = parts;
    j["status"] = to_string(status);
    j["elapsed_s"] = elapsed_s;
    if (function_text)
      j["function"] = *function_text;
    else
      j["function"] = nullptr;
    j["verified"] = verified;
    return j.dump();
  }

  static search_record from_json_line(const std::string& line) {
    const auto j = nlohmann::json::parse(line);
    search_record r;
    r.n = j.at("n").get<int>();
    r.s = j.at("s").get<int>();
    r.bs = j.at("bs").get<int>();
    r.parts = j.at("partition").get<std::vector<int>>();
    const std::string st = j.at("status").get<std::string>();
    if (st == "sat")
      r.status = solve_status::satisfiable;
    else if (st == "unsat")
      r.status = solve_status::unsatisfiable;
    else if (st == "unknown")
      r.status = solve_status::unknown;
    else
      throw std::invalid_argument("search_record: unknown status '" + st + "'");
    r.elapsed_s = j.at("elapsed_s").get<double>();
    if (!j.at("function").is_null())
      r.function_text = j.at("function").get<std::string>();
    r.verified = j.at("verified").get<bool>();
    return r;
  }
};

/*! \brief Append-only log of solver verdicts, one JSON record per line.
 *
 * The log is the source of truth for resumable searches: completed cells
 * (sat/unsat) are never re-solved. A path-less log keeps records in
 * memory only. Unparseable lines (torn tail after a kill) are skipped.
 */
class record_log {
public:
  record_log() = default;

  explicit record_log(std::filesystem::path path) : path_(std::move(path)) {
    std::ifstream is(*path_);
    std::string line;
    while (std::getline(is, line)) {
      if (line.empty())
        continue;
      try {
        entries_.push_back(search_record::from_json_line(line));
      } catch (const std::exception&) {
        continue;
      }
    }
  }

  void append(const search_record& r) {
    std::lock_guard<std::mutex> lock(mutex_);
    entries_.push_back(r);
    if (path_) {
      std::ofstream os(*path_, std::ios::app);
      os << r.to_json_line() << "\n";
      os.flush();
    }
  }

  const std::vector<search_record>& entries() const { return entries_; }

  /*! \brief Latest completed (sat/unsat) record for a cell, if any. */
  const search_record* find_completed(int n, int s, int bs,
                                      const std::vector<int>& parts) const {
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
      if (it->n == n && it->s == s && it->bs == bs && it->parts == parts &&
          it->status != solve_status::unknown)
        return &*it;
    }
    return nullptr;
  }

private:
  std::optional<std::filesystem::path> path_;
  std::vector<search_record> entries_;
  std::mutex mutex_;
};

} // namespace sbs
