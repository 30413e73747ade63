#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qgaforge/fitness.hpp"

namespace qgaforge {

/// Fixed-width classical chromosome. bits[0] is the most significant bit,
/// matching the project-wide bitstring convention.
struct Chromosome {
  std::vector<std::uint8_t> bits;

  int width() const { return static_cast<int>(bits.size()); }
  bool operator==(const Chromosome& other) const = default;
};

std::string to_bitstring(const Chromosome& c);
std::uint64_t to_index(const Chromosome& c);
Chromosome chromosome_from_index(std::uint64_t index, int width);
Chromosome chromosome_from_string(std::string_view bits);

/// One line of a convergence trace, shared by both genetic algorithms.
struct GenerationRecord {
  int generation = 0;
  std::string best_bitstring;
  double best_fitness = 0.0;
  double mean_fitness = 0.0;
};

/// Per-chromosome fitness through the problem evaluator. Throws ShapeError
/// when a chromosome width differs from the problem's domain_bits.
std::vector<double> evaluate_population(const std::vector<Chromosome>& pop,
                                        const FitnessFunction& problem);

}  // namespace qgaforge
