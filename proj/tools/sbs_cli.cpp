// sbs — command-line workbench for sensitivity vs block sensitivity:
// exact analysis of truth tables, the separating families, CNF instance
// generation, and SAT-solver-driven searches over small n.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sbs/analysis.hpp"
#include "sbs/cnf.hpp"
#include "sbs/families.hpp"
#include "sbs/input.hpp"
#include "sbs/partition.hpp"
#include "sbs/records.hpp"
#include "sbs/search.hpp"
#include "sbs/solver.hpp"
#include "sbs/truth_table.hpp"

namespace {

struct global_options {
  std::string solver_cmd;
  double time_limit = 600.0;
  int workers = 1;
  bool no_prune_singletons = false;
  std::string records_path = "sbs-records.jsonl";
};

sbs::solver_config make_solver_config(const global_options& g) {
  sbs::solver_config cfg;
  if (!g.solver_cmd.empty()) {
    cfg.command = g.solver_cmd;
  } else if (auto def = sbs::default_solver_command()) {
    cfg.command = *def;
  } else {
    throw sbs::config_error(
        "no SAT solver configured: pass --solver-cmd, set SBS_SOLVER_CMD, or put "
        "minicdcl next to this binary or on PATH");
  }
  cfg.time_limit = g.time_limit;
  cfg.workers = g.workers;
  return cfg;
}

sbs::search_options make_search_options(const global_options& g) {
  sbs::search_options opt;
  opt.prune_singletons = !g.no_prune_singletons;
  return opt;
}

std::string blocks_to_string(const std::vector<sbs::index_set>& blocks) {
  std::string out;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    out += b ? " {" : "{";
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      if (i)
        out += ",";
      out += std::to_string(blocks[b][i]);
    }
    out += "}";
  }
  return out;
}

int cmd_analyze(const std::string& path) {
  sbs::truth_table f = [&] {
    if (path == "-")
      return sbs::truth_table::read(std::cin);
    std::ifstream is(path);
    if (!is)
      throw std::runtime_error("cannot open '" + path + "'");
    return sbs::truth_table::read(is);
  }();
  const int n = f.num_vars();
  std::printf("n = %d\n", n);
  const auto s = sbs::sensitivity(f);
  std::printf("s(f) = %d  witness = %s  sensitive = %s\n", s.value, s.witness.to_string().c_str(),
              blocks_to_string({s.sensitive_indices}).c_str());
  sbs::scan_limits limits;
  if (n <= limits.block_scan) {
    const auto bs = sbs::block_sensitivity(f);
    std::printf("bs(f) = %d  witness = %s  blocks = %s\n", bs.value,
                bs.certificate.witness.to_string().c_str(),
                blocks_to_string(bs.certificate.blocks).c_str());
  } else {
    std::printf("bs(f): skipped, exhaustive scan is limited to n <= %d\n", limits.block_scan);
  }
  return 0;
}

// The zero input is the construction's witness: for the section family it
// attains both measures and carries the explicit disjoint blocks; for the
// interval family only bs is attained there (no single flip completes a
// pair, so s(f, 0...0) = 0 and the sensitivity witness lies elsewhere).
template <sbs::boolean_function F>
int check_family(FILE* msg, const F& f, const std::optional<sbs::block_set>& witness_blocks,
                 int expected_s, int expected_bs, bool full_scan) {
  const int n = f.num_vars();
  sbs::scan_limits limits;
  if (full_scan)
    limits.sensitivity_scan = sbs::scan_limits::sensitivity_scan_opt_in;
  bool ok = true;

  if (witness_blocks) {
    const auto s0 = sbs::sensitivity_at(f, sbs::input::all_zero(n));
    std::fprintf(msg, "s(f, 0^n) = %d\n", s0.value);
    ok = ok && s0.value == expected_s;

    const bool blocks_ok = sbs::validates(f, *witness_blocks);
    std::fprintf(msg, "witness blocks at 0^n: %zu disjoint blocks, %s\n",
                 witness_blocks->blocks.size(), blocks_ok ? "all flip f" : "INVALID");
    ok = ok && blocks_ok &&
         static_cast<int>(witness_blocks->blocks.size()) == expected_bs;
  }

  if (n <= limits.block_at) {
    const auto bs0 = sbs::block_sensitivity_at(f, sbs::input::all_zero(n));
    std::fprintf(msg, "bs(f, 0^n) = %d  [exact packing]\n", bs0.value);
    ok = ok && bs0.value == expected_bs;
  } else if (witness_blocks) {
    std::fprintf(msg, "bs(f, 0^n) >= %zu  [witness blocks; exact packing limited to n <= %d]\n",
                 witness_blocks->blocks.size(), limits.block_at);
  }

  if (n <= limits.sensitivity_scan) {
    const auto s = sbs::sensitivity(f, limits);
    std::fprintf(msg, "s(f) = %d  [exhaustive over %llu inputs]\n", s.value,
                 static_cast<unsigned long long>(std::uint64_t{1} << n));
    ok = ok && s.value == expected_s;
  } else {
    std::fprintf(msg, "s(f): full scan skipped at n = %d (re-run with --full-scan for n <= %d)\n",
                 n, sbs::scan_limits::sensitivity_scan_opt_in);
  }

  if (n <= limits.block_scan) {
    const auto bs = sbs::block_sensitivity(f, limits);
    std::fprintf(msg, "bs(f) = %d  [exhaustive over %llu inputs]\n", bs.value,
                 static_cast<unsigned long long>(std::uint64_t{1} << n));
    ok = ok && bs.value == expected_bs;
  }

  std::fprintf(msg, "check: %s (expected s = %d, bs at 0^n %s %d)\n", ok ? "OK" : "FAILED",
               expected_s, n <= limits.block_at ? "=" : ">=", expected_bs);
  return ok ? 0 : 1;
}

int cmd_family(std::optional<int> virza_k, std::optional<int> rubinstein_m, bool emit_table,
               bool check, bool full_scan) {
  if (virza_k.has_value() == rubinstein_m.has_value())
    throw CLI::ValidationError("family", "pass exactly one of --virza-k, --rubinstein-m");
  // with --emit-table, stdout carries exactly the table text
  FILE* msg = emit_table ? stderr : stdout;
  int rc = 0;
  if (virza_k) {
    sbs::virza_function f(*virza_k);
    std::fprintf(msg, "family: virza k=%d (n = %d), expected s = %d, bs = %d\n", f.k(),
                 f.num_vars(), f.expected_sensitivity(), f.expected_block_sensitivity());
    if (check)
      rc = check_family(msg, f, sbs::virza_witness_blocks(f.k()), f.expected_sensitivity(),
                        f.expected_block_sensitivity(), full_scan);
    if (emit_table)
      std::fputs(sbs::to_table(f).to_text().c_str(), stdout);
  } else {
    sbs::rubinstein_function f(*rubinstein_m);
    std::fprintf(msg, "family: rubinstein m=%d (n = %d), expected s = %d, bs = %d\n", f.m(),
                 f.num_vars(), f.expected_sensitivity(), f.expected_block_sensitivity());
    if (check)
      rc = check_family(msg, f, std::nullopt, f.expected_sensitivity(),
                        f.expected_block_sensitivity(), full_scan);
    if (emit_table)
      std::fputs(sbs::to_table(f).to_text().c_str(), stdout);
  }
  return rc;
}

int cmd_encode(int n, int s, int bs, const std::string& partition_arg, const std::string& out_dir,
               const global_options& g) {
  std::vector<sbs::partition> parts;
  if (!partition_arg.empty()) {
    std::vector<int> ps;
    std::stringstream ss(partition_arg);
    std::string item;
    while (std::getline(ss, item, ','))
      ps.push_back(std::stoi(item));
    parts.emplace_back(n, ps);
  } else {
    parts = sbs::enumerate_partitions(
        n, bs, g.no_prune_singletons ? std::nullopt : std::optional<int>(s));
  }
  if (parts.empty()) {
    std::printf("no instances: every partition of %d into %d parts is pruned "
                "(more than %d singletons)\n",
                n, bs, s);
    return 0;
  }
  std::filesystem::create_directories(out_dir);
  for (const auto& p : parts) {
    auto inst = sbs::build_instance(n, s, bs, p);
    std::string name = "n" + std::to_string(n) + "_s" + std::to_string(s) + "_bs" +
                       std::to_string(bs) + "_p" + p.to_string() + ".cnf";
    for (auto& c : name)
      if (c == ',')
        c = '-';
    const auto path = std::filesystem::path(out_dir) / name;
    std::ofstream os(path, std::ios::binary);
    os << sbs::emit_dimacs(inst);
    std::printf("%s: %d vars, %zu clauses\n", path.c_str(), inst.var_count, inst.clauses.size());
  }
  return 0;
}

int cmd_search(int n, int s, int bs, const global_options& g) {
  sbs::record_log log{std::filesystem::path(g.records_path)};
  const auto out = sbs::search_point(n, s, bs, make_solver_config(g), log, make_search_options(g));
  if (out.feasible()) {
    std::printf("search n=%d s=%d bs=%d: FEASIBLE (partition %s; solver calls: %d)\n", n, s, bs,
                out.found->part.to_string().c_str(), out.solver_calls);
    std::fputs(out.found->function.to_text().c_str(), stdout);
    return 0;
  }
  if (out.infeasible()) {
    std::printf("search n=%d s=%d bs=%d: INFEASIBLE (partitions: %d; solver calls: %d)\n", n, s,
                bs, out.partitions_considered, out.solver_calls);
    return 1;
  }
  std::printf("search n=%d s=%d bs=%d: UNKNOWN (some instances timed out)\n", n, s, bs);
  return 2;
}

int cmd_max_bs(int n, int s, const global_options& g) {
  sbs::record_log log{std::filesystem::path(g.records_path)};
  const auto r = sbs::max_bs(n, s, make_solver_config(g), log, make_search_options(g));
  std::printf("max bs for n=%d, s=%d: %d (%s)\n", n, s, r.value, r.exact ? "exact" : "partial");
  return r.exact ? 0 : 2;
}

int cmd_table(int max_n, const global_options& g) {
  sbs::record_log log{std::filesystem::path(g.records_path)};
  const auto t = sbs::build_table(max_n, make_solver_config(g), log, make_search_options(g));
  std::printf("max bs by (n, s), n <= %d:\n", max_n);
  std::printf("%4s", "n\\s");
  for (int s = 1; s <= max_n; ++s)
    std::printf("%4d", s);
  std::printf("\n");
  for (int n = 1; n <= max_n; ++n) {
    std::printf("%4d", n);
    for (int s = 1; s <= n; ++s)
      std::printf("%4d", t.max_bs_value[static_cast<std::size_t>(n)][static_cast<std::size_t>(s)]);
    std::printf("\n");
  }
  std::printf("separations (minimal n per achievable (s, bs) with bs > s):\n");
  if (t.rows.empty())
    std::printf("  none\n");
  for (const auto& row : t.rows)
    std::printf("  >=%d  s=%d  bs=%d\n", row.n, row.s, row.bs);
  if (!t.complete)
    std::printf("table is PARTIAL: some scans aborted on unknown verdicts\n");
  return t.complete ? 0 : 2;
}

int cmd_oracle(int n, std::optional<int> s_filter, const std::string& out_dir, bool allow_slow) {
  if (n == 5)
    std::fprintf(stderr, "oracle: WARNING: enumerating all 2^32 functions on 5 variables; "
                         "this takes a very long time\n");
  const auto result = sbs::oracle_max_bs(n, s_filter, allow_slow);
  for (const auto& [s, entry] : result) {
    std::printf("n=%d s=%d: max bs = %d\n", n, s, entry.max_bs);
    if (!out_dir.empty()) {
      std::filesystem::create_directories(out_dir);
      const auto path = std::filesystem::path(out_dir) /
                        ("oracle_n" + std::to_string(n) + "_s" + std::to_string(s) + ".tt");
      std::ofstream os(path, std::ios::binary);
      os << entry.witness.to_text();
      std::printf("  witness written to %s\n", path.c_str());
    }
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"sbs — sensitivity vs block sensitivity workbench"};
  app.require_subcommand(1);

  global_options g;
  app.add_option("--solver-cmd", g.solver_cmd,
                 "SAT solver command; '{file}' is replaced by the DIMACS path "
                 "(default: $SBS_SOLVER_CMD, else a minicdcl binary nearby)");
  app.add_option("--time-limit", g.time_limit, "per-instance wall-clock limit in seconds")
      ->check(CLI::PositiveNumber);
  app.add_option("--workers", g.workers, "parallel solver processes")->check(CLI::PositiveNumber);
  app.add_flag("--no-prune-singletons", g.no_prune_singletons,
               "keep partitions with more than s size-1 parts");
  app.add_option("--records", g.records_path, "verdict log path (JSON lines, append-only)");

  // analyze
  std::string table_path;
  auto* analyze = app.add_subcommand("analyze", "exact s and bs of a truth-table file");
  analyze->add_option("table-file", table_path, "truth-table text file, '-' for stdin")
      ->required();

  // family
  std::optional<int> virza_k, rubinstein_m;
  bool emit_table = false, do_check = false, full_scan = false;
  auto* family = app.add_subcommand("family", "construct and verify the separating families");
  family->add_option("--virza-k", virza_k, "section family parameter k >= 0");
  family->add_option("--rubinstein-m", rubinstein_m, "interval family parameter (even m >= 2)");
  family->add_flag("--emit-table", emit_table, "print the truth table (n <= 20)");
  family->add_flag("--check", do_check, "verify the family's measures exhaustively");
  family->add_flag("--full-scan", full_scan,
                   "allow the exhaustive sensitivity scan up to n = 25");

  // encode
  int en = 0, es = 0, ebs = 0;
  std::string partition_arg, out_dir;
  auto* encode = app.add_subcommand("encode", "write DIMACS instances, one per partition");
  encode->add_option("--n", en, "number of variables")->required()->check(CLI::PositiveNumber);
  encode->add_option("--s", es, "sensitivity bound")->required()->check(CLI::PositiveNumber);
  encode->add_option("--bs", ebs, "block sensitivity target")
      ->required()
      ->check(CLI::PositiveNumber);
  encode->add_option("--partition", partition_arg, "single partition p1,p2,... (default: all)");
  encode->add_option("--out", out_dir, "output directory")->required();

  // search
  int sn = 0, ss = 0, sbs_target = 0;
  auto* search = app.add_subcommand("search", "decide one (n, s, bs) point via SAT");
  search->add_option("--n", sn)->required()->check(CLI::PositiveNumber);
  search->add_option("--s", ss)->required()->check(CLI::PositiveNumber);
  search->add_option("--bs", sbs_target)->required()->check(CLI::PositiveNumber);

  // max-bs
  int mn = 0, ms = 0;
  auto* maxbs = app.add_subcommand("max-bs", "largest feasible bs for fixed n and s");
  maxbs->add_option("--n", mn)->required()->check(CLI::PositiveNumber);
  maxbs->add_option("--s", ms)->required()->check(CLI::PositiveNumber);

  // table
  int max_n = 9;
  auto* table = app.add_subcommand("table", "separation table for all n up to max-n");
  table->add_option("--max-n", max_n, "largest n to scan (default 9)")
      ->check(CLI::PositiveNumber);

  // oracle
  int on = 0;
  std::optional<int> os_filter;
  std::string oracle_out;
  bool allow_slow = false;
  auto* oracle = app.add_subcommand("oracle", "brute-force max bs per sensitivity (n <= 4)");
  oracle->add_option("--n", on)->required()->check(CLI::PositiveNumber);
  oracle->add_option("--s", os_filter, "restrict to one sensitivity value");
  oracle->add_option("--out", oracle_out, "directory for witness tables");
  oracle->add_flag("--allow-slow", allow_slow, "permit the n = 5 enumeration");

  for (auto* sub : app.get_subcommands(
           [](const CLI::App*) { return true; })) // global flags usable after the subcommand
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze)
      return cmd_analyze(table_path);
    if (*family)
      return cmd_family(virza_k, rubinstein_m, emit_table, do_check, full_scan);
    if (*encode)
      return cmd_encode(en, es, ebs, partition_arg, out_dir, g);
    if (*search)
      return cmd_search(sn, ss, sbs_target, g);
    if (*maxbs)
      return cmd_max_bs(mn, ms, g);
    if (*table)
      return cmd_table(max_n, g);
    if (*oracle)
      return cmd_oracle(on, os_filter, oracle_out, allow_slow);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "sbs: error: %s\n", e.what());
    return 3;
  }
  return 0;
}
