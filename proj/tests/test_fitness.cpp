#include "qgaforge/fitness.hpp"

#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "qgaforge/bitstring.hpp"
#include "qgaforge/errors.hpp"
#include "qgaforge/rng.hpp"

using namespace qgaforge;

namespace {

// Quantized benchmark values over the full domain, derived independently by
// brute force from |(x-5)/(2+sin x)| with scale 100 before being frozen here.
constexpr std::uint64_t kBenchmarkWords[16] = {250, 140, 103, 93,  80,  0,
                                               58,  75,  100, 165, 343, 599,
                                               478, 330, 300, 377};
const char* const kBenchmarkBits[16] = {
    "0011111010", "0010001100", "0001100111", "0001011101",
    "0001010000", "0000000000", "0000111010", "0001001011",
    "0001100100", "0010100101", "0101010111", "1001010111",
    "0111011110", "0101001010", "0100101100", "0101111001"};

// Reference argmax: linear scan collecting every tie.
std::vector<std::uint64_t> naive_argmax(const FitnessTable& table) {
  std::uint64_t best = 0;
  for (const FitnessRow& row : table.rows) {
    best = std::max(best, row.word);
  }
  std::vector<std::uint64_t> ties;
  for (const FitnessRow& row : table.rows) {
    if (row.word == best) {
      ties.push_back(row.x);
    }
  }
  return ties;
}

FitnessFunction two_peak_problem() {
  return make_table_problem("two-peak", 3, {0, 1, 2, 3, 3, 2, 1, 0});
}

}  // namespace

TEST_CASE("benchmark values at the anchor points") {
  CHECK(benchmark_f1(5) == 0.0);
  CHECK(benchmark_f1(0) == 2.5);
  CHECK(std::abs(benchmark_f1(11) - 6.0 / (2.0 + std::sin(11.0))) < 1e-12);
  CHECK(std::abs(benchmark_f1(11) - 5.9999412398) < 1e-9);
  CHECK_THROWS_AS(benchmark_f1(16), std::domain_error);
}

TEST_CASE("quantization uses floor and renders fixed-width words") {
  const QuantizationRule rule{100.0, 10};
  CHECK(quantize_fitness(benchmark_f1(11), rule) == 599);
  CHECK(index_to_bitstring(599, 10) == "1001010111");
  CHECK(quantize_fitness(0.0, rule) == 0);
  CHECK(quantize_fitness(benchmark_f1(10), rule) == 343);
  CHECK(index_to_bitstring(343, 10) == "0101010111");
}

TEST_CASE("quantization overflow names the value and the capacity") {
  const QuantizationRule rule{100.0, 10};
  CHECK_THROWS_WITH_AS(quantize_fitness(10.24, rule),
                       doctest::Contains("1023"), QuantizationError);
  CHECK_THROWS_WITH_AS(quantize_fitness(10.24, rule),
                       doctest::Contains("10.24"), QuantizationError);
  CHECK_THROWS_AS(quantize_fitness(1.0, QuantizationRule{0.0, 10}),
                  ConfigError);
  CHECK_THROWS_AS(quantize_fitness(1.0, QuantizationRule{100.0, 0}),
                  ConfigError);
}

TEST_CASE("benchmark table reproduces the frozen golden words") {
  const FitnessTable table =
      build_fitness_table(find_problem("f1-paper"), QuantizationRule{});
  REQUIRE(table.rows.size() == 16);
  for (std::uint64_t x = 0; x < 16; ++x) {
    CHECK(table.rows[x].x == x);
    CHECK(table.rows[x].word == kBenchmarkWords[x]);
    CHECK(index_to_bitstring(table.rows[x].word, 10) == kBenchmarkBits[x]);
  }
  CHECK(table.max_word == 599);
  CHECK(argmax_set(table) == std::vector<std::uint64_t>{11});
}

TEST_CASE("degenerate and monotone tables") {
  const FitnessFunction zero =
      make_table_problem("zero", 2, {0.0, 0.0, 0.0, 0.0});
  const FitnessTable zero_table =
      build_fitness_table(zero, QuantizationRule{100.0, 4});
  for (const FitnessRow& row : zero_table.rows) {
    CHECK(row.word == 0);
  }
  CHECK(argmax_set(zero_table) == std::vector<std::uint64_t>{0, 1, 2, 3});

  const FitnessFunction identity = make_table_problem(
      "identity", 3, {0, 1, 2, 3, 4, 5, 6, 7});
  const FitnessTable id_table =
      build_fitness_table(identity, QuantizationRule{1.0, 3});
  for (std::uint64_t x = 0; x < 8; ++x) {
    CHECK(id_table.rows[x].word == x);
  }
  CHECK(argmax_set(id_table) == std::vector<std::uint64_t>{7});

  // 7 needs three bits; a two-bit word cannot hold it.
  CHECK_THROWS_AS(build_fitness_table(identity, QuantizationRule{1.0, 2}),
                  QuantizationError);
}

TEST_CASE("argmax keeps ties and the last-wins scan picks the final one") {
  const FitnessTable table =
      build_fitness_table(two_peak_problem(), QuantizationRule{1.0, 3});
  CHECK(argmax_set(table) == std::vector<std::uint64_t>{3, 4});
  CHECK(argmax_last_scan(table) == 4);
}

TEST_CASE("argmax matches a naive reference on random tables") {
  Rng rng(211);
  for (int trial = 0; trial < 1000; ++trial) {
    const int bits = 1 + static_cast<int>(rng.next_index(6));
    const std::uint64_t dim = std::uint64_t{1} << bits;
    std::vector<double> values(dim);
    for (double& v : values) {
      // Small integer values make word-level ties frequent.
      v = static_cast<double>(rng.next_index(8));
    }
    const FitnessTable table = build_fitness_table(
        make_table_problem("random", bits, values), QuantizationRule{1.0, 3});
    CHECK(argmax_set(table) == naive_argmax(table));
  }
}

TEST_CASE("quantization is monotone for a fixed rule") {
  Rng rng(223);
  const QuantizationRule rule{100.0, 12};
  for (int trial = 0; trial < 500; ++trial) {
    const double a = rng.next_double(0.0, 40.0);
    const double b = rng.next_double(0.0, 40.0);
    const double lo = std::min(a, b);
    const double hi = std::max(a, b);
    CHECK(quantize_fitness(lo, rule) <= quantize_fitness(hi, rule));
  }
}

TEST_CASE("scaling every fitness value by a constant keeps the argmax") {
  Rng rng(227);
  for (int trial = 0; trial < 100; ++trial) {
    const int bits = 2 + static_cast<int>(rng.next_index(4));
    const std::uint64_t dim = std::uint64_t{1} << bits;
    std::vector<double> values(dim), scaled(dim);
    const double factor = 3.0;
    for (std::uint64_t x = 0; x < dim; ++x) {
      values[x] = static_cast<double>(rng.next_index(64));
      scaled[x] = values[x] * factor;
    }
    const FitnessTable base = build_fitness_table(
        make_table_problem("base", bits, values), QuantizationRule{1.0, 6});
    const FitnessTable wide = build_fitness_table(
        make_table_problem("scaled", bits, scaled), QuantizationRule{1.0, 8});
    CHECK(argmax_set(base) == argmax_set(wide));
  }
}

TEST_CASE("problem registry") {
  const FitnessFunction f1 = find_problem("f1-paper");
  CHECK(f1.domain_bits == 4);
  CHECK(f1.known_optimum == 11);
  CHECK(std::abs(f1.evaluator(11) - benchmark_f1(11)) == 0.0);

  const std::vector<std::string> names = problem_names();
  CHECK(std::find(names.begin(), names.end(), "f1-paper") != names.end());

  CHECK_THROWS_WITH_AS(find_problem("nope"), doctest::Contains("nope"),
                       ConfigError);
}

TEST_CASE("table problems validate their values") {
  CHECK_THROWS_AS(make_table_problem("short", 3, {1.0, 2.0}), ConfigError);
  CHECK_THROWS_AS(make_table_problem("neg", 1, {1.0, -2.0}), ConfigError);
  CHECK_THROWS_AS(make_table_problem("nan", 1, {1.0, std::nan("")}),
                  ConfigError);
  const FitnessFunction ok = make_table_problem("ok", 1, {1.5, 2.5}, 1);
  CHECK(ok.evaluator(0) == 1.5);
  CHECK(ok.evaluator(1) == 2.5);
  CHECK(ok.known_optimum == 1);
}

TEST_CASE("fitness table rejects negative evaluators") {
  FitnessFunction bad;
  bad.name = "bad";
  bad.domain_bits = 2;
  bad.evaluator = [](std::uint64_t x) { return x == 2 ? -1.0 : 1.0; };
  CHECK_THROWS_AS(build_fitness_table(bad, QuantizationRule{}),
                  std::domain_error);
}
