#pragma once

#include <concepts>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>

#include "truth_table.hpp"

namespace sbs {

/*! \brief Anything evaluable on canonical input indices: truth tables,
 * structured evaluators, the family functors. */
template <typename F>
concept boolean_function = requires(const F& f, std::uint64_t idx) {
  { f.num_vars() } -> std::convertible_to<int>;
  { f(idx) } -> std::convertible_to<bool>;
};

/*! \brief Predicate-evaluated function for n too large for explicit tables.
 *
 * The evaluator must be pure: the same index always yields the same bit.
 */
class structured_function {
public:
  structured_function(int n, std::function<bool(std::uint64_t)> evaluator)
      : n_(n), eval_(std::move(evaluator)) {
    if (n < 1 || n > 64)
      throw std::invalid_argument("structured_function: n must be in 1..64");
    if (!eval_)
      throw std::invalid_argument("structured_function: evaluator must be callable");
  }

  int num_vars() const { return n_; }
  bool operator()(std::uint64_t idx) const { return eval_(idx); }

private:
  int n_;
  std::function<bool(std::uint64_t)> eval_;
};

/*! \brief Materialize any function as an explicit table (n <= 20). */
template <boolean_function F>
truth_table to_table(const F& f) {
  truth_table t(f.num_vars());
  for (std::uint64_t i = 0; i < t.size(); ++i)
    t.set(i, f(i));
  return t;
}

} // namespace sbs
