#include "qgaforge/rqga.hpp"

#include <chrono>
#include <cmath>
#include <set>
#include <stdexcept>

#include "qgaforge/bitstring.hpp"
#include "qgaforge/errors.hpp"

namespace qgaforge {

FullRegisterState build_entangled_state(const FitnessTable& table) {
  const int n = table.domain_bits;
  const int m = table.rule.word_bits;
  if (n + m > kMaxQubits) {
    throw ConfigError("index_bits + fitness_bits must be <= " +
                      std::to_string(kMaxQubits) + ", got " +
                      std::to_string(n) + " + " + std::to_string(m));
  }
  const std::uint64_t chromosomes = std::uint64_t{1} << n;
  const std::uint64_t dim = std::uint64_t{1} << (n + m);
  const double amp = 1.0 / std::sqrt(static_cast<double>(chromosomes));

  FullRegisterState state{n, m, std::vector<Complex>(dim)};
  for (const FitnessRow& row : table.rows) {
    const std::uint64_t position = (row.x << m) | row.word;
    state.amplitudes[position] = Complex{amp, 0.0};
  }
  return state;
}

std::pair<std::uint64_t, std::string> decode_winner(const Histogram& hist) {
  if (hist.counts.empty()) {
    throw std::invalid_argument("cannot decode a winner from an empty histogram");
  }
  std::uint64_t winner = 0;
  std::uint64_t winner_count = 0;
  // counts is ordered by key, so a strict > keeps the smallest index on ties.
  for (const auto& [index, count] : hist.counts) {
    if (count > winner_count) {
      winner = index;
      winner_count = count;
    }
  }
  return {winner, index_to_bitstring(winner, hist.n_qubits)};
}

RqgaReport run_rqga(const RqgaConfig& config) {
  if (config.shots < 1) {
    throw ConfigError("shots must be >= 1, got " + std::to_string(config.shots));
  }
  const auto start = std::chrono::steady_clock::now();

  const FitnessTable table =
      build_fitness_table(config.problem, config.quantization);

  // Paper-compat reproduces the reference scan that keeps a single winner;
  // every other policy hands the full tie set to the oracle.
  std::set<std::uint64_t> marked;
  if (config.policy.mode == IterationMode::kPaperCompat) {
    marked.insert(argmax_last_scan(table));
  } else {
    const std::vector<std::uint64_t> ties = argmax_set(table);
    marked.insert(ties.begin(), ties.end());
  }

  const DiagonalOperator oracle =
      oracle_from_marked(table.domain_bits, marked);
  GroverResult grover = run_grover(table.domain_bits, oracle, config.policy);

  Rng rng(config.seed);
  RqgaReport report;
  report.histogram = measure_shots(grover.state, config.shots, rng);
  report.trace = std::move(grover.trace);
  std::tie(report.winner_index, report.winner_bitstring) =
      decode_winner(report.histogram);
  report.winner_fitness = table.rows[report.winner_index].fitness;
  report.config = config;
  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

}  // namespace qgaforge
