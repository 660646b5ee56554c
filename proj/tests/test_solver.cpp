#include <doctest.h>

#include "sbs/cnf.hpp"
#include "sbs/solver.hpp"
#include "support/fixtures.hpp"

using namespace sbs;
using testsupport::temp_dir;
using testsupport::write_script;

namespace {

cnf_instance toy_instance(std::vector<clause> clauses, int var_count) {
  cnf_instance inst;
  inst.n = 1;
  inst.var_count = var_count;
  inst.clauses = std::move(clauses);
  inst.vars = var_map{1, var_count, 0, 0};
  return inst;
}

} // namespace

TEST_CASE("run_solver: single unit clause is satisfiable with that literal") {
  const auto cfg = testsupport::solver_config_for_tests();
  const auto v = run_solver(toy_instance({{1}}, 1), cfg);
  REQUIRE(v.status == solve_status::satisfiable);
  REQUIRE(v.model.has_value());
  CHECK(std::find(v.model->begin(), v.model->end(), 1) != v.model->end());
  CHECK(v.elapsed >= 0.0);
}

TEST_CASE("run_solver: {x}, {not x} is unsatisfiable") {
  const auto cfg = testsupport::solver_config_for_tests();
  const auto v = run_solver(toy_instance({{1}, {-1}}, 1), cfg);
  CHECK(v.status == solve_status::unsatisfiable);
  CHECK(!v.model.has_value());
}

TEST_CASE("run_solver: near-zero time limit forces unknown") {
  temp_dir dir("slow");
  const std::string slow = write_script(dir, "slow.sh", "sleep 5\necho s SATISFIABLE");
  solver_config cfg{slow + " {file}", 0.2, 1};
  const auto v = run_solver(toy_instance({{1}}, 1), cfg);
  CHECK(v.status == solve_status::unknown);
  CHECK(!v.model.has_value());
  CHECK(v.elapsed < 4.0); // killed well before the sleep finishes
}

TEST_CASE("run_solver: garbage output is a protocol error, not unknown") {
  temp_dir dir("garbage");
  const std::string bad = write_script(dir, "bad.sh", "echo hello world");
  solver_config cfg{bad + " {file}", 10.0, 1};
  CHECK_THROWS_AS(run_solver(toy_instance({{1}}, 1), cfg), protocol_error);

  const std::string silent = write_script(dir, "silent.sh", "exit 0");
  solver_config cfg2{silent + " {file}", 10.0, 1};
  CHECK_THROWS_AS(run_solver(toy_instance({{1}}, 1), cfg2), protocol_error);
}

TEST_CASE("run_solver: missing executable is a configuration error") {
  solver_config cfg{"/nonexistent/solver-xyz {file}", 10.0, 1};
  CHECK_THROWS_AS(run_solver(toy_instance({{1}}, 1), cfg), config_error);
  CHECK_THROWS_AS(solver_config{}.validate(), config_error);
  CHECK_THROWS_AS((solver_config{"x", 0.0, 1}).validate(), config_error);
  CHECK_THROWS_AS((solver_config{"x", 1.0, 0}).validate(), config_error);
}

TEST_CASE("run_solver: bare exit codes 10/20 are accepted as status") {
  temp_dir dir("codes");
  const std::string unsat20 = write_script(dir, "unsat.sh", "exit 20");
  CHECK(run_solver(toy_instance({{1}}, 1), solver_config{unsat20 + " {file}", 10.0, 1}).status ==
        solve_status::unsatisfiable);

  const std::string sat10 = write_script(dir, "sat.sh", "echo v 1 0\nexit 10");
  const auto v = run_solver(toy_instance({{1}}, 1), solver_config{sat10 + " {file}", 10.0, 1});
  CHECK(v.status == solve_status::satisfiable);
  REQUIRE(v.model.has_value());
  CHECK(*v.model == std::vector<int>{1});
}

TEST_CASE("run_solver: satisfiable without a model is a protocol error") {
  temp_dir dir("nomodel");
  const std::string liar = write_script(dir, "liar.sh", "echo s SATISFIABLE");
  CHECK_THROWS_AS(run_solver(toy_instance({{1}}, 1), solver_config{liar + " {file}", 10.0, 1}),
                  protocol_error);
}

TEST_CASE("run_solver: path is appended when the template has no placeholder") {
  temp_dir dir("append");
  const std::string probe = write_script(
      dir, "probe.sh", "test -r \"$1\" && echo s UNSATISFIABLE || echo s SATISFIABLE");
  solver_config cfg{probe, 10.0, 1};
  CHECK(run_solver(toy_instance({{1}}, 1), cfg).status == solve_status::unsatisfiable);
}

TEST_CASE("run_solver: multi-line models are concatenated") {
  temp_dir dir("multiline");
  const std::string multi = write_script(
      dir, "multi.sh", "echo s SATISFIABLE\necho v 1 -2\necho v 3\necho v 0");
  const auto v =
      run_solver(toy_instance({{1}}, 3), solver_config{multi + " {file}", 10.0, 1});
  REQUIRE(v.status == solve_status::satisfiable);
  CHECK(*v.model == std::vector<int>{1, -2, 3});
}
