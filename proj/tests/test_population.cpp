#include "qgaforge/population.hpp"

#include <cmath>

#include "doctest.h"
#include "qgaforge/bitstring.hpp"
#include "qgaforge/errors.hpp"
#include "qgaforge/rng.hpp"

using namespace qgaforge;

TEST_CASE("bitstring conventions: most significant bit first") {
  CHECK(index_to_bitstring(11, 4) == "1011");
  CHECK(bitstring_to_index("1011") == 11);
  CHECK(index_to_bitstring(3, 3) == "011");
  CHECK(bitstring_to_index("011") == 3);
  CHECK(index_to_bitstring(0, 5) == "00000");

  CHECK_THROWS_AS(index_to_bitstring(16, 4), std::out_of_range);
  CHECK_THROWS_AS(index_to_bitstring(1, 0), std::out_of_range);
  CHECK_THROWS_AS(bitstring_to_index("10x1"), std::invalid_argument);
  CHECK_THROWS_AS(bitstring_to_index(""), std::out_of_range);
}

TEST_CASE("bitstring round trip") {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int width = 1 + static_cast<int>(rng.next_index(24));
    const std::uint64_t index = rng.next_index(std::uint64_t{1} << width);
    CHECK(bitstring_to_index(index_to_bitstring(index, width)) == index);
  }
}

TEST_CASE("chromosome conversions agree with the bitstring helpers") {
  const Chromosome c = chromosome_from_string("1011");
  CHECK(to_index(c) == 11);
  CHECK(to_bitstring(c) == "1011");
  CHECK(chromosome_from_index(11, 4) == c);
  CHECK(c.width() == 4);
  CHECK_THROWS_AS(chromosome_from_string("12"), std::invalid_argument);
}

TEST_CASE("evaluate_population applies the problem evaluator") {
  const FitnessFunction f1 = find_problem("f1-paper");
  const std::vector<Chromosome> pop = {chromosome_from_string("1011"),
                                       chromosome_from_string("0101"),
                                       chromosome_from_string("0000")};
  const std::vector<double> fitness = evaluate_population(pop, f1);
  REQUIRE(fitness.size() == 3);
  CHECK(std::abs(fitness[0] - 5.9999412398) < 1e-9);
  CHECK(fitness[1] == 0.0);
  CHECK(fitness[2] == 2.5);
}

TEST_CASE("evaluate_population rejects width mismatches") {
  const FitnessFunction f1 = find_problem("f1-paper");
  const std::vector<Chromosome> pop = {chromosome_from_string("101")};
  CHECK_THROWS_AS(evaluate_population(pop, f1), ShapeError);
}
