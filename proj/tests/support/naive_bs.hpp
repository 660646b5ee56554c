#pragma once

// Naive block sensitivity reference for tiny n: enumerates every family of
// pairwise-disjoint sensitive subsets directly, no minimality reasoning.

#include <cstdint>
#include <functional>
#include <vector>

namespace testsupport {

template <typename F>
int naive_block_sensitivity_at(const F& f, std::uint64_t w) {
  const int n = f.num_vars();
  const bool base = f(w);
  std::vector<std::uint32_t> sensitive;
  for (std::uint32_t m = 1; m < (std::uint32_t{1} << n); ++m)
    if (f(w ^ m) != base)
      sensitive.push_back(m);
  std::function<int(std::size_t, std::uint32_t)> go = [&](std::size_t i,
                                                          std::uint32_t used) -> int {
    if (i == sensitive.size())
      return 0;
    int best = go(i + 1, used);
    if ((sensitive[i] & used) == 0)
      best = std::max(best, 1 + go(i + 1, used | sensitive[i]));
    return best;
  };
  return go(0, 0);
}

} // namespace testsupport
