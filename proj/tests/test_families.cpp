#include <doctest.h>

#include <random>

#include "sbs/analysis.hpp"
#include "sbs/families.hpp"

using namespace sbs;

TEST_CASE("virza k=0: the identity on one variable") {
  const virza_function f(0);
  CHECK(f.num_vars() == 1);
  CHECK(f(0) == false);
  CHECK(f(1) == true);
  const auto blocks = virza_witness_blocks(0);
  CHECK(blocks.blocks == std::vector<index_set>{{1}});
  CHECK(blocks.witness == input::all_zero(1));
  CHECK(validates(f, blocks));
  CHECK(sensitivity(f).value == 1);
}

TEST_CASE("virza k=1: good sections, measures, witness blocks") {
  const virza_function f(1);
  CHECK(f.num_vars() == 9);
  CHECK(f(input::from_string("110000000").index()) == true);
  CHECK(f(input::from_string("010000000").index()) == false);
  CHECK(f(input::from_string("001000000").index()) == true);  // lone last bit of section 1
  CHECK(f(input::from_string("000110000").index()) == true);  // pair of section 2
  CHECK(f(input::from_string("111000000").index()) == false); // pair plus extra bit
  CHECK(f(input::from_string("110110000").index()) == true);  // two good sections

  CHECK(sensitivity_at(f, input::all_zero(9)).value == 3);
  CHECK(sensitivity(f).value == 3);

  const auto blocks = virza_witness_blocks(1);
  CHECK(blocks.blocks ==
        std::vector<index_set>{{1, 2}, {3}, {4, 5}, {6}, {7, 8}, {9}});
  CHECK(validates(f, blocks));
  for (const auto& b : blocks.blocks)
    CHECK(f(input::all_zero(9).flipped(b).index()) == true);

  CHECK(block_sensitivity_at(f, input::all_zero(9)).value == 6);
  const auto bs = block_sensitivity(to_table(f));
  CHECK(bs.value == 6);
  CHECK(f.expected_sensitivity() == 3);
  CHECK(f.expected_block_sensitivity() == 6);
}

TEST_CASE("virza k=1: structured evaluator agrees with the explicit table") {
  const virza_function f(1);
  const structured_function sf = virza_family(1);
  const truth_table table = to_table(f);
  CHECK(table.size() == 512);
  for (std::uint64_t i = 0; i < 512; ++i) {
    CHECK(sf(i) == f(i));
    CHECK(table(i) == f(i));
  }
}

TEST_CASE("virza k=1 table keeps its measures under random shifts") {
  const truth_table f = to_table(virza_function(1));
  std::mt19937 rng(31);
  for (int round = 0; round < 5; ++round) {
    index_set t;
    for (int i = 1; i <= 9; ++i)
      if (rng() & 1u)
        t.push_back(i);
    const truth_table g = shift_compose(f, t);
    CHECK(sensitivity(g).value == 3);
    CHECK(block_sensitivity(g).value == 6);
  }
}

TEST_CASE("virza k=2: local checks at the all-zero input") {
  const virza_function f(2);
  CHECK(f.num_vars() == 25);
  CHECK(sensitivity_at(f, input::all_zero(25)).value == 5);
  const auto blocks = virza_witness_blocks(2);
  CHECK(blocks.blocks.size() == 15);
  CHECK(validates(f, blocks));
  CHECK(f.expected_sensitivity() == 5);
  CHECK(f.expected_block_sensitivity() == 15);
}

TEST_CASE("virza: bad parameters") {
  CHECK_THROWS_AS(virza_function(-1), std::invalid_argument);
  CHECK_THROWS_AS(virza_function(4), std::invalid_argument); // n = 81 > 64 bits
}

TEST_CASE("rubinstein m=2: evaluation and exhaustive measures") {
  const rubinstein_function f(2);
  CHECK(f.num_vars() == 4);
  CHECK(f(input::from_string("1100").index()) == true);
  CHECK(f(input::from_string("1000").index()) == false);
  CHECK(f(input::from_string("1111").index()) == true);
  CHECK(f(input::from_string("0110").index()) == false); // pair not aligned to {2j-1, 2j}

  CHECK(sensitivity(f).value == 2);
  CHECK(block_sensitivity(to_table(f)).value == 2);
  CHECK(f.expected_sensitivity() == 2);
  CHECK(f.expected_block_sensitivity() == 2);
}

TEST_CASE("rubinstein m=4: s = 4 exhaustively, bs at the zero input = 8") {
  const rubinstein_function f(4);
  CHECK(f.num_vars() == 16);
  CHECK(sensitivity(f).value == 4);
  CHECK(block_sensitivity_at(f, input::all_zero(16)).value == 8);
}

TEST_CASE("rubinstein: odd or tiny m rejected") {
  CHECK_THROWS_AS(rubinstein_function(3), std::invalid_argument);
  CHECK_THROWS_AS(rubinstein_function(1), std::invalid_argument);
  CHECK_THROWS_AS(rubinstein_function(0), std::invalid_argument);
  CHECK_THROWS_AS(rubinstein_family(5), std::invalid_argument);
}
