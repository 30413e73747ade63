#pragma once

#include <cstdint>
#include <numbers>
#include <optional>
#include <vector>

#include "qgaforge/population.hpp"
#include "qgaforge/rng.hpp"

namespace qgaforge {

/// One qubit gene with real amplitudes, alpha^2 + beta^2 = 1. Measuring the
/// gene yields bit 1 with probability beta^2.
struct QubitGene {
  double alpha = 0.0;
  double beta = 0.0;
};

struct QuantumChromosome {
  std::vector<QubitGene> genes;
};

inline constexpr double kDefaultRotationDelta = 0.05 * std::numbers::pi;

struct QgaConfig {
  int population_size = 16;
  int n_genes = 4;
  int max_generations = 50;
  double rotation_delta = kDefaultRotationDelta;  // radians per update
  double mutation_prob = 0.01;                    // per gene
  bool elitism = true;
  std::optional<double> target_fitness;
  std::uint64_t seed = 0;
};

struct QgaReport {
  std::vector<GenerationRecord> records;
  std::string best_bitstring;
  std::uint64_t best_index = 0;
  double best_fitness = 0.0;
  /// max |alpha^2 + beta^2 - 1| seen over every gene of every generation.
  double max_gene_norm_error = 0.0;
  QgaConfig config;
  double wall_ms = 0.0;
};

/// Throws ConfigError describing the offending field.
void validate(const QgaConfig& config);

/// Each gene starts at (1/sqrt2, 1/sqrt2) and is rotated by an independent
/// random angle in [0, pi/2).
std::vector<QuantumChromosome> init_quantum_population(const QgaConfig& config,
                                                       Rng& rng);

/// Samples every gene independently: bit 1 with probability beta^2. The
/// quantum population is left untouched (simulation convenience; hardware
/// measurement would collapse it).
std::vector<Chromosome> observe_population(
    const std::vector<QuantumChromosome>& qpop, Rng& rng);

/// Rotates genes of strictly-worse chromosomes toward the elite: wherever an
/// observed bit disagrees with the elite bit, the gene turns by up to `delta`
/// radians in the direction that raises the elite bit's probability. The step
/// is capped at the pole so the probability strictly increases.
void rotation_update(std::vector<QuantumChromosome>& qpop,
                     const std::vector<Chromosome>& observed,
                     const std::vector<double>& fitness,
                     const Chromosome& elite_bits, double elite_fitness,
                     double delta);

/// Swaps (alpha, beta) of each gene independently with probability
/// mutation_prob. `exempt` protects the elite's chromosome when elitism is on.
void mutation_update(std::vector<QuantumChromosome>& qpop,
                     double mutation_prob, Rng& rng,
                     std::optional<std::size_t> exempt = std::nullopt);

QgaReport run_qga(const QgaConfig& config, const FitnessFunction& problem);

}  // namespace qgaforge
