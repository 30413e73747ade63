#include "qgaforge/fitness.hpp"

#include <cmath>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "qgaforge/errors.hpp"
#include "qgaforge/statevector.hpp"

namespace qgaforge {

namespace {

void check_domain_bits(int domain_bits) {
  if (domain_bits < 1 || domain_bits > kMaxQubits) {
    throw ConfigError("domain_bits must be in [1, " +
                      std::to_string(kMaxQubits) + "], got " +
                      std::to_string(domain_bits));
  }
}

double checked_fitness(const FitnessFunction& problem, std::uint64_t x) {
  const double value = problem.evaluator(x);
  if (!std::isfinite(value) || value < 0.0) {
    std::ostringstream msg;
    msg << "fitness must be finite and non-negative, got " << value
        << " at x=" << x << " for problem '" << problem.name << "'";
    throw std::domain_error(msg.str());
  }
  return value;
}

}  // namespace

double benchmark_f1(std::uint64_t x) {
  if (x > 15) {
    throw std::domain_error("benchmark_f1 domain is [0, 15], got " +
                            std::to_string(x));
  }
  const double xd = static_cast<double>(x);
  return std::fabs((xd - 5.0) / (2.0 + std::sin(xd)));
}

std::uint64_t quantize_fitness(double value, const QuantizationRule& rule) {
  if (rule.scale <= 0.0) {
    throw ConfigError("quantization scale must be positive, got " +
                      std::to_string(rule.scale));
  }
  if (rule.word_bits < 1 || rule.word_bits > 63) {
    throw ConfigError("word_bits must be in [1, 63], got " +
                      std::to_string(rule.word_bits));
  }
  const double scaled = std::floor(rule.scale * value);
  const double capacity = std::ldexp(1.0, rule.word_bits);  // 2^m
  if (!(scaled >= 0.0)) {
    throw QuantizationError("cannot quantize negative or NaN fitness " +
                            std::to_string(value));
  }
  if (scaled >= capacity) {
    std::ostringstream msg;
    msg << "quantized fitness " << scaled << " for value " << value
        << " exceeds the " << rule.word_bits << "-bit capacity (max "
        << (capacity - 1.0) << ")";
    throw QuantizationError(msg.str());
  }
  return static_cast<std::uint64_t>(scaled);
}

FitnessTable build_fitness_table(const FitnessFunction& problem,
                                 const QuantizationRule& rule) {
  check_domain_bits(problem.domain_bits);
  if (!problem.evaluator) {
    throw ConfigError("problem '" + problem.name + "' has no evaluator");
  }
  const std::uint64_t dim = std::uint64_t{1} << problem.domain_bits;

  FitnessTable table;
  table.domain_bits = problem.domain_bits;
  table.rule = rule;
  table.rows.reserve(dim);
  for (std::uint64_t x = 0; x < dim; ++x) {
    const double value = checked_fitness(problem, x);
    table.rows.push_back({x, value, quantize_fitness(value, rule)});
  }

  table.max_word = 0;
  for (const FitnessRow& row : table.rows) {
    if (row.word > table.max_word) {
      table.max_word = row.word;
    }
  }
  for (const FitnessRow& row : table.rows) {
    if (row.word == table.max_word) {
      table.argmax.push_back(row.x);
    }
  }
  return table;
}

std::vector<std::uint64_t> argmax_set(const FitnessTable& table) {
  if (table.argmax.empty()) {
    throw std::invalid_argument("fitness table has no cached argmax set");
  }
  return table.argmax;
}

std::uint64_t argmax_last_scan(const FitnessTable& table) {
  if (table.rows.empty()) {
    throw std::invalid_argument("fitness table is empty");
  }
  std::uint64_t best = 0;
  std::uint64_t best_word = table.rows.front().word;
  for (const FitnessRow& row : table.rows) {
    if (row.word >= best_word) {
      best_word = row.word;
      best = row.x;
    }
  }
  return best;
}

const std::map<std::string, FitnessFunction>& builtin_problems() {
  static const std::map<std::string, FitnessFunction> problems = [] {
    std::map<std::string, FitnessFunction> m;
    m.emplace("f1-paper",
              FitnessFunction{"f1-paper", 4, benchmark_f1, 11});
    return m;
  }();
  return problems;
}

std::vector<std::string> problem_names() {
  std::vector<std::string> names;
  for (const auto& [name, problem] : builtin_problems()) {
    names.push_back(name);
  }
  return names;
}

FitnessFunction find_problem(const std::string& name) {
  const auto& problems = builtin_problems();
  const auto it = problems.find(name);
  if (it == problems.end()) {
    std::string known;
    for (const auto& [key, problem] : problems) {
      known += known.empty() ? key : ", " + key;
    }
    throw ConfigError("unknown problem '" + name + "'; known problems: " +
                      known);
  }
  return it->second;
}

FitnessFunction make_table_problem(std::string name, int domain_bits,
                                   std::vector<double> values,
                                   std::optional<std::uint64_t> known_optimum) {
  check_domain_bits(domain_bits);
  const std::uint64_t dim = std::uint64_t{1} << domain_bits;
  if (values.size() != dim) {
    throw ConfigError("problem '" + name + "' with domain_bits=" +
                      std::to_string(domain_bits) + " needs " +
                      std::to_string(dim) + " fitness values, got " +
                      std::to_string(values.size()));
  }
  for (std::size_t x = 0; x < values.size(); ++x) {
    if (!std::isfinite(values[x]) || values[x] < 0.0) {
      throw ConfigError("problem '" + name + "' has invalid fitness " +
                        std::to_string(values[x]) + " at x=" +
                        std::to_string(x) + "; values must be finite and "
                        "non-negative");
    }
  }
  auto shared = std::make_shared<std::vector<double>>(std::move(values));
  FitnessFunction problem;
  problem.name = std::move(name);
  problem.domain_bits = domain_bits;
  problem.evaluator = [shared](std::uint64_t x) { return shared->at(x); };
  problem.known_optimum = known_optimum;
  return problem;
}

}  // namespace qgaforge
