#include <doctest.h>

#include <set>

#include "sbs/partition.hpp"

using namespace sbs;

TEST_CASE("partition: shape validation") {
  CHECK_THROWS_AS(partition(4, {2, 1}), std::invalid_argument);    // wrong sum
  CHECK_THROWS_AS(partition(4, {1, 2, 1}), std::invalid_argument); // increasing
  CHECK_THROWS_AS(partition(4, {4, 0}), std::invalid_argument);    // zero part
  CHECK_THROWS_AS(partition(3, {}), std::invalid_argument);

  const partition p(4, {2, 1, 1});
  CHECK(p.size() == 3);
  CHECK(p.singleton_count() == 2);
  CHECK(p.to_string() == "2,1,1");
}

TEST_CASE("partition: consecutive blocks and their flip indices") {
  const partition p(4, {2, 2});
  CHECK(p.blocks() == std::vector<index_set>{{1, 2}, {3, 4}});
  CHECK(p.block_flip_index(0) == 3);  // 1100
  CHECK(p.block_flip_index(1) == 12); // 0011

  const partition q(3, {1, 1, 1});
  CHECK(q.block_flip_index(0) == 1);
  CHECK(q.block_flip_index(1) == 2);
  CHECK(q.block_flip_index(2) == 4);
}

TEST_CASE("enumerate_partitions: the frozen small cases") {
  CHECK(enumerate_partitions(4, 3) == std::vector<partition>{partition(4, {2, 1, 1})});
  CHECK(enumerate_partitions(9, 6, 3) ==
        std::vector<partition>{partition(9, {2, 2, 2, 1, 1, 1})});
  CHECK(enumerate_partitions(8, 6, 3).empty());
  CHECK(enumerate_partitions(3, 5).empty()); // bs > n is empty, not an error
}

TEST_CASE("enumerate_partitions: lexicographically decreasing order") {
  const auto got = enumerate_partitions(6, 3);
  CHECK(got == std::vector<partition>{partition(6, {4, 1, 1}), partition(6, {3, 2, 1}),
                                      partition(6, {2, 2, 2})});
  const auto nine = enumerate_partitions(9, 6);
  CHECK(nine == std::vector<partition>{partition(9, {4, 1, 1, 1, 1, 1}),
                                       partition(9, {3, 2, 1, 1, 1, 1}),
                                       partition(9, {2, 2, 2, 1, 1, 1})});
}

TEST_CASE("enumerate_partitions: every output is well formed, no duplicates") {
  // p(10) = 42 partitions in total across all part counts
  std::size_t total = 0;
  for (int bs = 1; bs <= 10; ++bs) {
    const auto ps = enumerate_partitions(10, bs);
    std::set<std::vector<int>> seen;
    for (const auto& p : ps) {
      CHECK(p.n == 10);
      CHECK(p.size() == bs);
      int sum = 0;
      for (std::size_t i = 0; i < p.parts.size(); ++i) {
        sum += p.parts[i];
        CHECK(p.parts[i] >= 1);
        if (i > 0)
          CHECK(p.parts[i] <= p.parts[i - 1]);
      }
      CHECK(sum == 10);
      CHECK(seen.insert(p.parts).second);
    }
    total += ps.size();
  }
  CHECK(total == 42);
}

TEST_CASE("enumerate_partitions: singleton cap filters, zero allowed") {
  CHECK(enumerate_partitions(4, 4, 0).empty());            // (1,1,1,1) has 4 singletons
  CHECK(enumerate_partitions(4, 2, 0) ==
        std::vector<partition>{partition(4, {2, 2})});     // (3,1) dropped
  CHECK(enumerate_partitions(4, 2) ==
        std::vector<partition>{partition(4, {3, 1}), partition(4, {2, 2})});
  CHECK_THROWS_AS(enumerate_partitions(4, 2, -1), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_partitions(0, 1), std::invalid_argument);
}
