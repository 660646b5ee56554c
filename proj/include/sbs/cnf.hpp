#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"
#include "truth_table.hpp"

namespace sbs {

using clause = std::vector<int>;

/*! \brief Deterministic variable layout of one instance.
 *
 * Table variable for input index idx is idx+1 (x_1 is the least
 * significant index bit). Ladder cells c_{i,j}, 1 <= j <= i <= n, follow,
 * grouped per input in ascending index order, row-major within a group:
 * cell (i,j) of input w sits at ladder_base + w*ladder_stride + i(i-1)/2 + j-1.
 */
struct var_map {
  int n = 0;
  int table_vars = 0;    ///< 2^n
  int ladder_stride = 0; ///< n(n+1)/2, 0 when the constraint is empty
  int ladder_base = 0;   ///< first ladder variable, 0 when none exist

  int table_var(std::uint64_t idx) const { return static_cast<int>(idx) + 1; }
  int ladder_var(std::uint64_t w, int i, int j) const {
    return ladder_base + static_cast<int>(w) * ladder_stride + i * (i - 1) / 2 + (j - 1);
  }
};

struct cnf_instance {
  int n = 0;
  int s = 0;
  int bs = 0;
  std::optional<partition> part;
  int var_count = 0;
  std::vector<clause> clauses;
  var_map vars;
};

/*! \brief Unary counting ladder: c_{i,j} = (c_{i-1,j-1} AND b_i) OR c_{i-1,j}.
 *
 * Base rows are constants (c_{i,0} true, c_{i,j} false for i < j) and are
 * folded away rather than materialized. Cells get consecutive variables
 * from first_cell_var, row-major, with full equivalence clauses so every
 * cell value is forced by the b's. Returns the full-width row c_{n,1..n},
 * whose j-th entry is true iff at least j of the b's are true.
 */
inline std::vector<int> append_counting_ladder(std::span<const int> b_vars, int first_cell_var,
                                               std::vector<clause>& out) {
  const int n = static_cast<int>(b_vars.size());
  auto cell = [&](int i, int j) { return first_cell_var + i * (i - 1) / 2 + (j - 1); };
  for (int i = 1; i <= n; ++i) {
    const int b = b_vars[static_cast<std::size_t>(i - 1)];
    for (int j = 1; j <= i; ++j) {
      const int c = cell(i, j);
      if (i == 1) { // c = b_1
        out.push_back({-c, b});
        out.push_back({c, -b});
      } else if (j == 1) { // c = b_i OR c_{i-1,1}
        const int q = cell(i - 1, 1);
        out.push_back({-c, b, q});
        out.push_back({c, -b});
        out.push_back({c, -q});
      } else if (j == i) { // c = c_{i-1,i-1} AND b_i
        const int p = cell(i - 1, i - 1);
        out.push_back({-c, p});
        out.push_back({-c, b});
        out.push_back({c, -p, -b});
      } else { // c = (c_{i-1,j-1} AND b_i) OR c_{i-1,j}
        const int p = cell(i - 1, j - 1);
        const int q = cell(i - 1, j);
        out.push_back({-c, p, q});
        out.push_back({-c, b, q});
        out.push_back({c, -q});
        out.push_back({c, -p, -b});
      }
    }
  }
  std::vector<int> a(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j)
    a[static_cast<std::size_t>(j - 1)] = cell(n, j);
  return a;
}

/*! \brief Units pinning f(0...0) = 0 and f(0...0 ^ P_i) = 1 for each block
 * of the partition; exactly parts+1 unit clauses. */
inline std::vector<clause> encode_bs_constraint(const partition& p) {
  std::vector<clause> out;
  out.push_back({-1});
  for (std::size_t i = 0; i < p.parts.size(); ++i)
    out.push_back({static_cast<int>(p.block_flip_index(i)) + 1});
  return out;
}

struct sensitivity_encoding {
  std::vector<clause> clauses;
  var_map vars;
};

/*! \brief s(f, w) <= s for every input w, one counting ladder per input.
 *
 * For input w with b_i the table variable of w^{i}, the ladder outputs
 * a_j say whether at least j neighbors evaluate to 1; the per-input
 * constraint is the clause pair (NOT v_w OR a_{n-s}) and (v_w OR NOT
 * a_{s+1}), with boundary cases folded: the a_{s+1} clause is dropped when
 * s+1 > n, the a_{n-s} clause when n-s <= 0, and s >= n emits nothing.
 */
inline sensitivity_encoding encode_sensitivity_constraint(int n, int s) {
  if (n < 1 || n > truth_table::max_vars)
    throw std::invalid_argument("encode_sensitivity_constraint: n out of range");
  if (s < 0)
    throw std::invalid_argument("encode_sensitivity_constraint: s must be >= 0");
  sensitivity_encoding enc;
  const int table_vars = 1 << n;
  enc.vars = var_map{n, table_vars, 0, 0};
  if (s >= n)
    return enc; // every function satisfies s(f) <= n
  enc.vars.ladder_stride = n * (n + 1) / 2;
  enc.vars.ladder_base = table_vars + 1;
  std::vector<int> b(static_cast<std::size_t>(n));
  for (std::uint64_t w = 0; w < static_cast<std::uint64_t>(table_vars); ++w) {
    for (int i = 0; i < n; ++i)
      b[static_cast<std::size_t>(i)] = enc.vars.table_var(w ^ (std::uint64_t{1} << i));
    const std::vector<int> a =
        append_counting_ladder(b, enc.vars.ladder_var(w, 1, 1), enc.clauses);
    const int v = enc.vars.table_var(w);
    if (n - s >= 1)
      enc.clauses.push_back({-v, a[static_cast<std::size_t>(n - s - 1)]});
    if (s + 1 <= n)
      enc.clauses.push_back({v, -a[static_cast<std::size_t>(s)]});
  }
  return enc;
}

/*! \brief One SAT instance: "some f has s(f) <= s and is sensitive at
 * 0...0 on the partition's blocks" (hence bs(f) >= bs). */
inline cnf_instance build_instance(int n, int s, int bs, const partition& p) {
  if (p.n != n)
    throw std::invalid_argument("build_instance: partition is over " + std::to_string(p.n) +
                                " variables, expected " + std::to_string(n));
  if (p.size() != bs)
    throw std::invalid_argument("build_instance: partition has " + std::to_string(p.size()) +
                                " parts, expected bs = " + std::to_string(bs));
  cnf_instance inst;
  inst.n = n;
  inst.s = s;
  inst.bs = bs;
  inst.part = p;
  inst.clauses = encode_bs_constraint(p);
  sensitivity_encoding enc = encode_sensitivity_constraint(n, s);
  inst.vars = enc.vars;
  inst.clauses.insert(inst.clauses.end(), enc.clauses.begin(), enc.clauses.end());
  inst.var_count =
      inst.vars.table_vars + (enc.vars.ladder_stride > 0
                                  ? inst.vars.table_vars * enc.vars.ladder_stride
                                  : 0);
  return inst;
}

/*! \brief Standard DIMACS CNF text; byte-identical for identical instances. */
inline std::string emit_dimacs(const cnf_instance& inst) {
  std::string out;
  out.reserve(inst.clauses.size() * 12 + 256);
  out += "c meta n=" + std::to_string(inst.n) + " s=" + std::to_string(inst.s) +
         " bs=" + std::to_string(inst.bs) + " partition=" +
         (inst.part ? inst.part->to_string() : "-") + " bitorder=lsb-x1\n";
  out += "c vars table=1.." + std::to_string(inst.vars.table_vars);
  if (inst.vars.ladder_base > 0) {
    out += " ladder=" + std::to_string(inst.vars.ladder_base) + ".." +
           std::to_string(inst.var_count) +
           " stride=" + std::to_string(inst.vars.ladder_stride);
  } else {
    out += " ladder=none";
  }
  out += "\n";
  out += "p cnf " + std::to_string(inst.var_count) + " " + std::to_string(inst.clauses.size()) +
         "\n";
  for (const clause& c : inst.clauses) {
    for (int lit : c) {
      out += std::to_string(lit);
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

/*! \brief Read the function back off the table variables of a model;
 * ladder variables are ignored. */
inline truth_table decode_model(const cnf_instance& inst, std::span<const int> model) {
  std::vector<signed char> value(static_cast<std::size_t>(inst.vars.table_vars) + 1, 0);
  for (int lit : model) {
    const int v = lit < 0 ? -lit : lit;
    if (v >= 1 && v <= inst.vars.table_vars)
      value[static_cast<std::size_t>(v)] = lit > 0 ? 1 : -1;
  }
  truth_table f(inst.n);
  for (std::uint64_t idx = 0; idx < f.size(); ++idx) {
    const signed char val = value[idx + 1];
    if (val == 0)
      throw decode_error("decode_model: model does not assign table variable " +
                         std::to_string(idx + 1));
    f.set(idx, val > 0);
  }
  return f;
}

} // namespace sbs
