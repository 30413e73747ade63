#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qgaforge/population.hpp"
#include "qgaforge/rng.hpp"

namespace qgaforge {

struct SgaConfig {
  int population_size = 16;  // must be even (crossover pairs)
  int n_genes = 4;
  int max_generations = 50;
  double crossover_prob = 0.8;
  double mutation_prob = 0.01;  // per bit
  bool elitism = true;
  std::optional<double> target_fitness;
  std::uint64_t seed = 0;
};

struct SgaReport {
  std::vector<GenerationRecord> records;
  std::string best_bitstring;
  std::uint64_t best_index = 0;
  double best_fitness = 0.0;
  SgaConfig config;
  double wall_ms = 0.0;
};

void validate(const SgaConfig& config);

/// Fitness-proportional selection: index i is drawn with probability
/// fitness_i / sum(fitness). When every fitness is zero the draw falls back
/// to uniform.
std::size_t roulette_select(const std::vector<double>& fitness, Rng& rng);

/// Splices at `point` in [1, width-1]: child1 = a[0..point) ++ b[point..),
/// child2 the mirror image.
std::pair<Chromosome, Chromosome> one_point_crossover(const Chromosome& a,
                                                      const Chromosome& b,
                                                      int point);

/// Flips each bit independently with the given probability.
Chromosome bit_flip_mutation(const Chromosome& c, double mutation_prob,
                             Rng& rng);

SgaReport run_sga(const SgaConfig& config, const FitnessFunction& problem);

}  // namespace qgaforge
