#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qgaforge/fitness.hpp"
#include "qgaforge/grover.hpp"
#include "qgaforge/population.hpp"
#include "qgaforge/qga.hpp"
#include "qgaforge/sga.hpp"
#include "qgaforge/statevector.hpp"

namespace qgaforge {

enum class Algorithm { kSga, kQga, kRqga, kGrover };

const char* to_string(Algorithm algorithm);
Algorithm algorithm_from_string(const std::string& name);

/// Problem supplied inline as an explicit fitness table instead of a
/// registry name.
struct CustomProblem {
  std::string name = "custom";
  int domain_bits = 0;
  std::vector<double> values;
  std::optional<std::uint64_t> known_optimum;
};

/// One runnable experiment. Fields irrelevant to the chosen algorithm keep
/// their defaults and are neither echoed nor validated.
struct ExperimentConfig {
  Algorithm algorithm = Algorithm::kRqga;
  std::string problem = "f1-paper";
  std::optional<CustomProblem> custom_problem;
  std::uint64_t seed = 1;

  // rqga + grover
  std::uint64_t shots = 10000;
  IterationPolicy policy;
  QuantizationRule quantization;  // rqga only

  // grover only
  int qubits = 4;
  std::vector<std::uint64_t> marked;

  // qga + sga
  int population = 16;
  int generations = 50;
  double rotation_delta = kDefaultRotationDelta;  // qga
  double mutation_prob = 0.01;
  double crossover_prob = 0.8;  // sga
  bool elitism = true;
  std::optional<double> target_fitness;
};

/// Everything a finished run reports; per-algorithm fields are optional.
struct RunOutcome {
  Algorithm algorithm = Algorithm::kRqga;
  std::string winner_bitstring;
  std::uint64_t winner_index = 0;
  std::optional<double> winner_fitness;
  std::optional<Histogram> histogram;         // rqga, grover
  std::optional<GroverTrace> trace;           // rqga, grover
  std::vector<GenerationRecord> generations;  // qga, sga
  std::optional<double> norm_drift;           // qga
  double wall_ms = 0.0;
};

/// Resolves the problem (custom table wins over the registry name).
FitnessFunction resolve_problem(const ExperimentConfig& config);

/// Validates and dispatches to the chosen algorithm.
RunOutcome run_experiment(const ExperimentConfig& config);

// --- serialization ----------------------------------------------------

/// Parses a config document; unknown or ill-typed fields raise ConfigError
/// naming the field. The same schema is emitted by config_to_json, so a
/// report's config block is itself a valid config file.
ExperimentConfig config_from_json(const std::string& text);

std::string config_to_json(const ExperimentConfig& config);

/// Full report document (config echo, winner, histogram/trace/generations,
/// timing, artifact version). Key order and number formatting are
/// deterministic, so identical runs serialize byte-identically.
std::string report_to_json(const ExperimentConfig& config,
                           const RunOutcome& outcome);

/// "generation,best_fitness,mean_fitness,best_bitstring" rows.
std::string generations_to_csv(const std::vector<GenerationRecord>& records);

// --- verify-paper ------------------------------------------------------

struct PaperCheck {
  std::string name;
  bool pass = false;
  std::string detail;  // expected vs actual on failure
};

/// Recomputes the five golden facts: the 16-entry quantized fitness table,
/// the uniform 4-qubit amplitudes, the oracle-marked vector, the
/// post-diffusion vector, and the two iteration counts. `quantization_scale`
/// exists as a perturbation knob for negative-control tests.
std::vector<PaperCheck> verify_paper(double quantization_scale = 100.0);

// --- sweep --------------------------------------------------------------

struct SeedOutcome {
  std::uint64_t seed = 0;
  bool ok = false;
  std::string error;  // set when ok is false
  std::string winner_bitstring;
  std::uint64_t winner_index = 0;
  std::optional<double> winner_fitness;
  std::optional<bool> success;  // winner == known optimum, when declared
  std::optional<int> generations_to_optimum;
};

struct SweepResult {
  std::uint64_t seed_first = 0;
  std::uint64_t seed_last = 0;
  std::vector<SeedOutcome> per_seed;  // ordered by seed
  std::uint64_t successes = 0;
  std::uint64_t failures = 0;  // runs that raised an error
  std::optional<double> success_rate;
  std::optional<double> mean_generations_to_optimum;
  double wall_ms = 0.0;
};

/// Runs [seed_first, seed_last] independently (in parallel) and aggregates.
/// Per-seed errors are recorded without aborting the sweep; configuration
/// errors that would fail every seed are raised before any run starts.
SweepResult run_sweep(const ExperimentConfig& base, std::uint64_t seed_first,
                      std::uint64_t seed_last);

std::string sweep_to_json(const ExperimentConfig& base,
                          const SweepResult& result);

}  // namespace qgaforge
