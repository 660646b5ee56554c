#pragma once

#include <atomic>
#include <cerrno>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include "cnf.hpp"
#include "errors.hpp"

namespace sbs {

/*! \brief How to invoke the external SAT solver.
 *
 * `command` is run through /bin/sh; every "{file}" is replaced by the
 * DIMACS path (the path is appended when the placeholder is absent). The
 * solver must print "s SATISFIABLE" / "s UNSATISFIABLE" and, when
 * satisfiable, "v" value lines terminated by 0; exit codes 10/20 are
 * accepted as equivalent status signals.
 */
struct solver_config {
  std::string command;
  double time_limit = 600.0; ///< wall-clock seconds per instance
  int workers = 1;

  void validate() const {
    if (command.empty())
      throw config_error("solver_config: no solver command configured");
    if (!(time_limit > 0.0))
      throw config_error("solver_config: time_limit must be positive");
    if (workers < 1)
      throw config_error("solver_config: workers must be >= 1");
  }
};

enum class solve_status { satisfiable, unsatisfiable, unknown };

inline const char* to_string(solve_status s) {
  switch (s) {
  case solve_status::satisfiable:
    return "sat";
  case solve_status::unsatisfiable:
    return "unsat";
  default:
    return "unknown";
  }
}

struct solver_verdict {
  solve_status status = solve_status::unknown;
  std::optional<std::vector<int>> model; ///< present iff satisfiable
  double elapsed = 0.0;
};

namespace detail {

inline std::string substitute_file(const std::string& tmpl, const std::string& path) {
  std::string quoted = "'";
  for (char c : path) {
    if (c == '\'')
      quoted += "'\\''";
    else
      quoted += c;
  }
  quoted += "'";
  std::string cmd;
  std::size_t pos = 0, hit = 0;
  bool replaced = false;
  while ((hit = tmpl.find("{file}", pos)) != std::string::npos) {
    cmd.append(tmpl, pos, hit - pos);
    cmd += quoted;
    pos = hit + 6;
    replaced = true;
  }
  cmd.append(tmpl, pos, std::string::npos);
  if (!replaced)
    cmd += " " + quoted;
  return cmd;
}

struct temp_cnf_file {
  std::filesystem::path path;

  explicit temp_cnf_file(const std::string& contents) {
    static std::atomic<std::uint64_t> counter{0};
    const auto dir = std::filesystem::temp_directory_path();
    path = dir / ("sbs-" + std::to_string(::getpid()) + "-" +
                  std::to_string(counter.fetch_add(1)) + ".cnf");
    std::ofstream os(path, std::ios::binary);
    os << contents;
    if (!os)
      throw std::runtime_error("cannot write temporary CNF file " + path.string());
  }
  temp_cnf_file(const temp_cnf_file&) = delete;
  temp_cnf_file& operator=(const temp_cnf_file&) = delete;
  ~temp_cnf_file() {
    std::error_code ec;
    std::filesystem::remove(path, ec);
  }
};

struct raw_run_result {
  std::string output;
  int exit_code = -1;   ///< -1 when not exited normally
  bool timed_out = false;
  bool cancelled = false;
  double elapsed = 0.0;
};

/*! \brief Run a shell command capturing stdout, killing the whole process
 * group on deadline or cancellation. */
inline raw_run_result run_command(const std::string& cmd, double time_limit,
                                  const std::atomic<bool>* cancel) {
  int fds[2];
  if (::pipe(fds) != 0)
    throw std::runtime_error("pipe() failed");
  const auto start = std::chrono::steady_clock::now();
  const pid_t pid = ::fork();
  if (pid < 0) {
    ::close(fds[0]);
    ::close(fds[1]);
    throw std::runtime_error("fork() failed");
  }
  if (pid == 0) {
    ::setpgid(0, 0);
    ::dup2(fds[1], STDOUT_FILENO);
    ::close(fds[0]);
    ::close(fds[1]);
    ::execl("/bin/sh", "sh", "-c", cmd.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  ::close(fds[1]);

  raw_run_result res;
  auto seconds_left = [&]() {
    const std::chrono::duration<double> used = std::chrono::steady_clock::now() - start;
    return time_limit - used.count();
  };
  char buf[4096];
  bool killed = false;
  for (;;) {
    if (!killed && cancel && cancel->load(std::memory_order_relaxed)) {
      ::kill(-pid, SIGKILL);
      killed = true;
      res.cancelled = true;
    }
    const double left = seconds_left();
    if (!killed && left <= 0.0) {
      ::kill(-pid, SIGKILL);
      killed = true;
      res.timed_out = true;
    }
    struct pollfd pfd{fds[0], POLLIN, 0};
    const int timeout_ms = killed ? 1000 : std::max(1, std::min(200, static_cast<int>(left * 1000)));
    const int pr = ::poll(&pfd, 1, timeout_ms);
    if (pr < 0) {
      if (errno == EINTR)
        continue;
      break;
    }
    if (pr > 0) {
      const ssize_t got = ::read(fds[0], buf, sizeof(buf));
      if (got > 0) {
        res.output.append(buf, static_cast<std::size_t>(got));
        continue;
      }
      break; // EOF or error
    }
  }
  ::close(fds[0]);
  int status = 0;
  while (::waitpid(pid, &status, 0) < 0 && errno == EINTR) {
  }
  if (!killed && WIFEXITED(status))
    res.exit_code = WEXITSTATUS(status);
  res.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

} // namespace detail

/*! \brief Solve a DIMACS file via the configured external solver.
 *
 * Output is parsed per SAT-competition conventions. A wall-clock timeout
 * yields status unknown; unparseable output raises protocol_error; a
 * command the shell cannot find raises config_error.
 */
inline solver_verdict run_solver_file(const std::string& cnf_path, const solver_config& config,
                                      const std::atomic<bool>* cancel = nullptr) {
  config.validate();
  const std::string cmd = detail::substitute_file(config.command, cnf_path);
  detail::raw_run_result raw = detail::run_command(cmd, config.time_limit, cancel);

  solver_verdict verdict;
  verdict.elapsed = raw.elapsed;
  if (raw.timed_out || raw.cancelled) {
    verdict.status = solve_status::unknown;
    return verdict;
  }
  if (raw.exit_code == 127 || raw.exit_code == 126)
    throw config_error("solver command failed to start (exit " +
                       std::to_string(raw.exit_code) + "): " + cmd);

  std::optional<solve_status> status;
  std::vector<int> model;
  bool model_done = false;
  std::istringstream lines(raw.output);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.rfind("s ", 0) == 0) {
      std::string word = line.substr(2);
      while (!word.empty() && (word.back() == '\r' || word.back() == ' '))
        word.pop_back();
      if (word == "SATISFIABLE")
        status = solve_status::satisfiable;
      else if (word == "UNSATISFIABLE")
        status = solve_status::unsatisfiable;
      else if (word == "UNKNOWN" || word == "INDETERMINATE")
        status = solve_status::unknown;
      else
        throw protocol_error("unrecognized solver status line: " + line);
    } else if (line.rfind("v", 0) == 0 && (line.size() == 1 || line[1] == ' ')) {
      std::istringstream vs(line.substr(1));
      int lit = 0;
      while (vs >> lit) {
        if (lit == 0) {
          model_done = true;
          break;
        }
        model.push_back(lit);
      }
    }
  }
  if (!status) {
    if (raw.exit_code == 10)
      status = solve_status::satisfiable;
    else if (raw.exit_code == 20)
      status = solve_status::unsatisfiable;
    else
      throw protocol_error("solver produced no status line and exit code " +
                           std::to_string(raw.exit_code) + ": " + cmd);
  }
  verdict.status = *status;
  if (verdict.status == solve_status::satisfiable) {
    if (model.empty() || !model_done)
      throw protocol_error("satisfiable verdict without a 0-terminated model: " + cmd);
    verdict.model = std::move(model);
  }
  return verdict;
}

/*! \brief Emit the instance to a temporary file and solve it. */
inline solver_verdict run_solver(const cnf_instance& inst, const solver_config& config,
                                 const std::atomic<bool>* cancel = nullptr) {
  detail::temp_cnf_file tmp(emit_dimacs(inst));
  return run_solver_file(tmp.path.string(), config, cancel);
}

/*! \brief Solver command from SBS_SOLVER_CMD, or a minicdcl binary found
 * next to the running executable or on PATH. */
inline std::optional<std::string> default_solver_command() {
  if (const char* env = std::getenv("SBS_SOLVER_CMD"); env && *env)
    return std::string(env);
  std::error_code ec;
  const auto self = std::filesystem::read_symlink("/proc/self/exe", ec);
  if (!ec) {
    const auto sibling = self.parent_path() / "minicdcl";
    if (std::filesystem::exists(sibling, ec) && ::access(sibling.c_str(), X_OK) == 0)
      return sibling.string() + " {file}";
  }
  if (const char* path_env = std::getenv("PATH")) {
    std::istringstream dirs(path_env);
    std::string dir;
    while (std::getline(dirs, dir, ':')) {
      if (dir.empty())
        continue;
      const auto candidate = std::filesystem::path(dir) / "minicdcl";
      if (std::filesystem::exists(candidate, ec) && ::access(candidate.c_str(), X_OK) == 0)
        return candidate.string() + " {file}";
    }
  }
  return std::nullopt;
}

} // namespace sbs
