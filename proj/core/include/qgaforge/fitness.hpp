#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qgaforge {

/// A fitness landscape over the integer domain [0, 2^domain_bits). The
/// evaluator must return finite, non-negative values; problems with negative
/// fitness must be shifted by the caller before registration.
struct FitnessFunction {
  std::string name;
  int domain_bits = 0;
  std::function<double(std::uint64_t)> evaluator;
  /// Declared optimum, when known. Sweeps use it to score success.
  std::optional<std::uint64_t> known_optimum;
};

/// How real fitness maps to a fixed-width binary word:
/// word = floor(scale * fitness), rendered on word_bits bits.
struct QuantizationRule {
  double scale = 100.0;
  int word_bits = 10;
};

struct FitnessRow {
  std::uint64_t x = 0;
  double fitness = 0.0;
  std::uint64_t word = 0;
};

/// Exhaustive fitness evaluation over the whole chromosome domain, with the
/// maximum word and the full tie set of argmax indices cached.
struct FitnessTable {
  int domain_bits = 0;
  QuantizationRule rule;
  std::vector<FitnessRow> rows;  // rows[x].x == x for every x
  std::uint64_t max_word = 0;
  std::vector<std::uint64_t> argmax;  // sorted; every member attains max_word
};

/// |(x - 5) / (2 + sin x)| on x in [0, 15], x in radians. Maximum at x = 11.
double benchmark_f1(std::uint64_t x);

/// floor(rule.scale * value) as an m-bit word. Throws QuantizationError when
/// the word does not fit.
std::uint64_t quantize_fitness(double value, const QuantizationRule& rule);

FitnessTable build_fitness_table(const FitnessFunction& problem,
                                 const QuantizationRule& rule);

/// Every index attaining the maximum quantized word (ties preserved).
std::vector<std::uint64_t> argmax_set(const FitnessTable& table);

/// Single winner chosen by a forward >= scan, so the last index attaining
/// the maximum wins. Used by the paper-compat mode only.
std::uint64_t argmax_last_scan(const FitnessTable& table);

/// Built-in problems, keyed by name. "f1-paper" is the benchmark above.
const std::map<std::string, FitnessFunction>& builtin_problems();

std::vector<std::string> problem_names();

/// Looks up a built-in problem; throws ConfigError naming the problem.
FitnessFunction find_problem(const std::string& name);

/// Problem defined by an explicit per-chromosome fitness table.
FitnessFunction make_table_problem(std::string name, int domain_bits,
                                   std::vector<double> values,
                                   std::optional<std::uint64_t> known_optimum = {});

}  // namespace qgaforge
