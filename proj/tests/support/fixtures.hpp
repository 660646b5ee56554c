#pragma once

// Shared test plumbing: locating the bundled solver, temp dirs, fake
// solver scripts, deterministic random tables.

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include <sys/stat.h>
#include <unistd.h>

#include "sbs/solver.hpp"
#include "sbs/truth_table.hpp"

namespace testsupport {

inline std::string minicdcl_path() {
  if (const char* env = std::getenv("SBS_TEST_MINICDCL"); env && *env)
    return env;
#ifdef SBS_MINICDCL_PATH
  return SBS_MINICDCL_PATH;
#else
  return "minicdcl";
#endif
}

inline sbs::solver_config solver_config_for_tests(double time_limit = 120.0, int workers = 2) {
  return sbs::solver_config{minicdcl_path() + " {file}", time_limit, workers};
}

struct temp_dir {
  std::filesystem::path path;

  explicit temp_dir(const std::string& tag) {
    static std::atomic<int> counter{0};
    path = std::filesystem::temp_directory_path() /
           ("sbs-test-" + tag + "-" + std::to_string(::getpid()) + "-" +
            std::to_string(counter.fetch_add(1)));
    std::filesystem::create_directories(path);
  }
  temp_dir(const temp_dir&) = delete;
  temp_dir& operator=(const temp_dir&) = delete;
  ~temp_dir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
};

// Writes an executable shell script and returns its path.
inline std::string write_script(const temp_dir& dir, const std::string& name,
                                const std::string& body) {
  const auto path = dir.path / name;
  {
    std::ofstream os(path);
    os << "#!/bin/sh\n" << body << "\n";
  }
  ::chmod(path.c_str(), 0755);
  return path.string();
}

inline sbs::truth_table random_table(int n, std::mt19937& rng) {
  sbs::truth_table f(n);
  std::bernoulli_distribution bit(0.5);
  for (std::uint64_t i = 0; i < f.size(); ++i)
    f.set(i, bit(rng));
  return f;
}

} // namespace testsupport
