#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "input.hpp"
#include "structured_function.hpp"
#include "truth_table.hpp"

namespace sbs {

/*! \brief Size caps for the exhaustive scans; defaults keep commands interactive. */
struct scan_limits {
  int sensitivity_scan = 20; ///< max n for exhaustive s(f) scans
  int block_scan = 12;       ///< max n for exhaustive bs(f) scans
  int block_at = 16;         ///< max n for exact bs(f, w) packing search

  /*! \brief Opt-in cap for structured-evaluator sensitivity scans. */
  static constexpr int sensitivity_scan_opt_in = 25;
};

struct sensitivity_report {
  int value = 0;
  input witness;
  index_set sensitive_indices;
};

/*! \brief Disjoint blocks certifying bs(f, witness) >= blocks.size(). */
struct block_set {
  input witness;
  std::vector<index_set> blocks;
};

struct block_sensitivity_report {
  int value = 0;
  block_set certificate;
};

namespace detail {

inline void check_dims(int fn, const input& w) {
  if (fn != w.num_vars())
    throw std::invalid_argument("analysis: input has " + std::to_string(w.num_vars()) +
                                " variables, function has " + std::to_string(fn));
}

inline index_set mask_to_indices(std::uint32_t m) {
  index_set s;
  while (m) {
    const int b = std::countr_zero(m);
    s.push_back(b + 1);
    m &= m - 1;
  }
  return s;
}

/*! \brief Exact maximum disjoint packing over minimal sensitive blocks.
 *
 * Sensitive singletons are committed up front (exchange argument: any
 * maximum packing can be rewritten to contain every sensitive singleton),
 * the remaining minimal blocks are packed depth-first with the bound
 * prune count + free_bits / smallest_remaining_size.
 */
class block_packer {
public:
  block_packer(int n, std::uint32_t singleton_mask, std::vector<std::uint32_t> blocks)
      : n_(n), blocks_(std::move(blocks)) {
    std::sort(blocks_.begin(), blocks_.end(), [](std::uint32_t a, std::uint32_t b) {
      const int pa = std::popcount(a), pb = std::popcount(b);
      return pa != pb ? pa < pb : a < b;
    });
    best_count_ = std::popcount(singleton_mask);
    base_used_ = singleton_mask;
    best_chosen_.clear();
    chosen_.clear();
    dfs(0, base_used_, best_count_);
  }

  int count() const { return best_count_; }
  const std::vector<std::uint32_t>& chosen() const { return best_chosen_; }

private:
  void dfs(std::size_t i, std::uint32_t used, int count) {
    if (count > best_count_) {
      best_count_ = count;
      best_chosen_ = chosen_;
    }
    if (i == blocks_.size())
      return;
    const int free_bits = n_ - std::popcount(used);
    if (count + free_bits / std::popcount(blocks_[i]) <= best_count_)
      return;
    if ((blocks_[i] & used) == 0) {
      chosen_.push_back(blocks_[i]);
      dfs(i + 1, used | blocks_[i], count + 1);
      chosen_.pop_back();
    }
    dfs(i + 1, used, count);
  }

  int n_;
  std::vector<std::uint32_t> blocks_;
  std::uint32_t base_used_ = 0;
  int best_count_ = 0;
  std::vector<std::uint32_t> chosen_, best_chosen_;
};

} // namespace detail

/*! \brief s(f, w): count of single-bit flips of w that change f. */
template <boolean_function F>
sensitivity_report sensitivity_at(const F& f, const input& w) {
  detail::check_dims(f.num_vars(), w);
  const int n = f.num_vars();
  const std::uint64_t idx = w.index();
  const bool base = f(idx);
  sensitivity_report r{0, w, {}};
  for (int i = 0; i < n; ++i) {
    if (f(idx ^ (std::uint64_t{1} << i)) != base) {
      ++r.value;
      r.sensitive_indices.push_back(i + 1);
    }
  }
  return r;
}

/*! \brief s(f): maximum of s(f, w); witness is the smallest index attaining it. */
template <boolean_function F>
sensitivity_report sensitivity(const F& f, const scan_limits& limits = {}) {
  const int n = f.num_vars();
  if (n > limits.sensitivity_scan)
    throw capacity_error("sensitivity: exhaustive scan at n = " + std::to_string(n) +
                         " exceeds the limit " + std::to_string(limits.sensitivity_scan));
  std::uint64_t best_w = 0;
  int best = -1;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t w = 0; w < total; ++w) {
    const bool base = f(w);
    int cnt = 0;
    for (int i = 0; i < n; ++i)
      cnt += f(w ^ (std::uint64_t{1} << i)) != base;
    if (cnt > best) {
      best = cnt;
      best_w = w;
      if (best == n)
        break;
    }
  }
  return sensitivity_at(f, input(n, best_w));
}

/*! \brief bs(f, w) by exact search, with an attaining block set. */
template <boolean_function F>
block_sensitivity_report block_sensitivity_at(const F& f, const input& w,
                                              const scan_limits& limits = {}) {
  detail::check_dims(f.num_vars(), w);
  const int n = f.num_vars();
  if (n > limits.block_at)
    throw capacity_error("block_sensitivity_at: exact search at n = " + std::to_string(n) +
                         " exceeds the limit " + std::to_string(limits.block_at));
  const std::uint64_t widx = w.index();
  const bool base = f(widx);
  const std::uint32_t n_masks = std::uint32_t{1} << n;

  std::vector<char> sensitive(n_masks, 0);
  for (std::uint32_t m = 1; m < n_masks; ++m)
    sensitive[m] = f(widx ^ m) != base;

  // minimal sensitive blocks: sensitive, and no one-smaller subset is
  std::uint32_t singletons = 0;
  std::vector<std::uint32_t> minimal;
  for (std::uint32_t m = 1; m < n_masks; ++m) {
    if (!sensitive[m])
      continue;
    bool is_minimal = true;
    for (std::uint32_t r = m; r && is_minimal; r &= r - 1)
      is_minimal = !sensitive[m ^ (r & -r)];
    if (!is_minimal)
      continue;
    if (std::popcount(m) == 1)
      singletons |= m;
    else
      minimal.push_back(m);
  }

  detail::block_packer packer(n, singletons, std::move(minimal));

  block_sensitivity_report r{0, block_set{w, {}}};
  r.value = packer.count();
  for (std::uint32_t s = singletons; s; s &= s - 1)
    r.certificate.blocks.push_back({std::countr_zero(s) + 1});
  for (std::uint32_t m : packer.chosen())
    r.certificate.blocks.push_back(detail::mask_to_indices(m));
  std::sort(r.certificate.blocks.begin(), r.certificate.blocks.end(),
            [](const index_set& a, const index_set& b) { return a.front() < b.front(); });
  return r;
}

/*! \brief bs(f): maximum of bs(f, w); witness is the smallest index attaining it. */
template <boolean_function F>
block_sensitivity_report block_sensitivity(const F& f, const scan_limits& limits = {}) {
  const int n = f.num_vars();
  if (n > limits.block_scan)
    throw capacity_error("block_sensitivity: exhaustive scan at n = " + std::to_string(n) +
                         " exceeds the limit " + std::to_string(limits.block_scan));
  block_sensitivity_report best = block_sensitivity_at(f, input::all_zero(n), limits);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t w = 1; w < total; ++w) {
    auto r = block_sensitivity_at(f, input(n, w), limits);
    if (r.value > best.value)
      best = std::move(r);
  }
  return best;
}

/*! \brief g with g(x) = f(x^T); preserves s and bs, involutive in T. */
inline truth_table shift_compose(const truth_table& f, std::span<const int> t) {
  const std::uint64_t mask = input::all_zero(f.num_vars()).mask_of(t);
  truth_table g(f.num_vars());
  for (std::uint64_t x = 0; x < g.size(); ++x)
    g.set(x, f(x ^ mask));
  return g;
}

inline truth_table shift_compose(const truth_table& f, std::initializer_list<int> t) {
  return shift_compose(f, std::span<const int>(t.begin(), t.size()));
}

/*! \brief Re-check a block set: non-empty pairwise-disjoint blocks, each flipping f. */
template <boolean_function F>
bool validates(const F& f, const block_set& bs) {
  if (bs.witness.num_vars() != f.num_vars())
    return false;
  const bool base = f(bs.witness.index());
  std::uint64_t used = 0;
  for (const auto& block : bs.blocks) {
    if (block.empty())
      return false;
    std::uint64_t m = 0;
    for (int i : block) {
      if (i < 1 || i > f.num_vars())
        return false;
      m |= std::uint64_t{1} << (i - 1);
    }
    if ((m & used) != 0)
      return false;
    used |= m;
    if (f(bs.witness.index() ^ m) == base)
      return false;
  }
  return true;
}

/*! \brief Regression bound 2*bs <= s^2 + s; no function has ever beaten it here. */
inline bool within_quadratic_bound(int s, int bs) { return 2 * bs <= s * s + s; }

} // namespace sbs
