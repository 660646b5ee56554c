#pragma once

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "input.hpp"

namespace sbs {

/*! \brief Non-increasing positive parts summing to n; block P_i is the
 * consecutive index range starting after P_1..P_{i-1}. */
struct partition {
  int n = 0;
  std::vector<int> parts;

  partition(int n_, std::vector<int> parts_) : n(n_), parts(std::move(parts_)) {
    if (parts.empty())
      throw std::invalid_argument("partition: needs at least one part");
    int sum = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] < 1)
        throw std::invalid_argument("partition: parts must be positive");
      if (i > 0 && parts[i] > parts[i - 1])
        throw std::invalid_argument("partition: parts must be non-increasing");
      sum += parts[i];
    }
    if (sum != n)
      throw std::invalid_argument("partition: parts sum to " + std::to_string(sum) +
                                  ", expected " + std::to_string(n));
  }

  int size() const { return static_cast<int>(parts.size()); }

  int singleton_count() const {
    int c = 0;
    for (int p : parts)
      c += p == 1;
    return c;
  }

  /*! \brief P_i as 1-based index sets. */
  std::vector<index_set> blocks() const {
    std::vector<index_set> out;
    int next = 1;
    for (int p : parts) {
      index_set b(static_cast<std::size_t>(p));
      std::iota(b.begin(), b.end(), next);
      next += p;
      out.push_back(std::move(b));
    }
    return out;
  }

  /*! \brief Canonical input index of 0...0 with block P_i flipped. */
  std::uint64_t block_flip_index(std::size_t i) const {
    int start = 0;
    for (std::size_t j = 0; j < i; ++j)
      start += parts[j];
    const std::uint64_t width_mask = (std::uint64_t{1} << parts[i]) - 1;
    return width_mask << start;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i)
        s += ',';
      s += std::to_string(parts[i]);
    }
    return s;
  }

  friend bool operator==(const partition&, const partition&) = default;
};

/*! \brief All partitions of n into exactly bs non-increasing parts, in
 * lexicographically decreasing order. With max_singletons set, partitions
 * carrying more parts of size 1 are omitted. bs > n yields an empty list. */
inline std::vector<partition> enumerate_partitions(int n, int bs,
                                                   std::optional<int> max_singletons = {}) {
  if (n < 1 || bs < 1)
    throw std::invalid_argument("enumerate_partitions: n and bs must be >= 1");
  if (max_singletons && *max_singletons < 0)
    throw std::invalid_argument("enumerate_partitions: max_singletons must be >= 0");
  std::vector<partition> out;
  if (bs > n)
    return out;
  std::vector<int> parts;
  parts.reserve(static_cast<std::size_t>(bs));
  auto emit = [&]() {
    partition p(n, parts);
    if (!max_singletons || p.singleton_count() <= *max_singletons)
      out.push_back(std::move(p));
  };
  auto rec = [&](auto&& self, int remaining, int slots, int max_part) -> void {
    if (slots == 0) {
      emit();
      return;
    }
    const int hi = std::min(max_part, remaining - (slots - 1));
    const int lo = (remaining + slots - 1) / slots;
    for (int p = hi; p >= lo; --p) {
      parts.push_back(p);
      self(self, remaining - p, slots - 1, p);
      parts.pop_back();
    }
  };
  rec(rec, n, bs, n);
  return out;
}

} // namespace sbs
