#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "qgaforge/fitness.hpp"
#include "qgaforge/grover.hpp"
#include "qgaforge/statevector.hpp"

namespace qgaforge {

/// Reduced quantum genetic algorithm: the generational loop is replaced by a
/// single Grover search over the superposition of all chromosomes.
///
/// Fitness is evaluated classically and exhaustively over the domain; the
/// quantum fitness operator that would annotate the superposition in place
/// has no known implementation, so this simulator computes the same table on
/// the classical side and feeds its argmax to the oracle.
struct RqgaConfig {
  FitnessFunction problem;
  QuantizationRule quantization;
  IterationPolicy policy;
  std::uint64_t shots = 10000;
  std::uint64_t seed = 0;
};

/// The chromosome register entangled with its fitness register, index word
/// most significant: the only nonzero amplitudes sit at
/// index * 2^fitness_bits + fitness_word(index), each 1/sqrt(2^index_bits).
/// Built for inspection and tests; the search itself runs on the index
/// register with the fitness table as a classical sidecar.
struct FullRegisterState {
  int index_bits = 0;
  int fitness_bits = 0;
  std::vector<Complex> amplitudes;
};

struct RqgaReport {
  std::uint64_t winner_index = 0;
  std::string winner_bitstring;
  double winner_fitness = 0.0;
  Histogram histogram;
  GroverTrace trace;
  RqgaConfig config;
  double wall_ms = 0.0;
};

/// Requires index_bits + fitness_bits <= kMaxQubits.
FullRegisterState build_entangled_state(const FitnessTable& table);

/// Pipeline: fitness table -> argmax set -> phase oracle -> Grover loop on
/// the index register -> shot measurement -> winner decode. Deterministic
/// given the seed.
RqgaReport run_rqga(const RqgaConfig& config);

/// Most frequent histogram key; ties break to the smallest index.
std::pair<std::uint64_t, std::string> decode_winner(const Histogram& hist);

}  // namespace qgaforge
