#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "qgaforge/statevector.hpp"

namespace qgaforge {

enum class IterationMode {
  /// floor((pi/4) * sqrt(N/M)) iterations, the textbook count.
  kStandard,
  /// max(0, round(trunc((pi/4) * sqrt(N))) - 1). Reproduces the reference
  /// Python loop, whose `range(1, iter)` runs one body fewer than its own
  /// formula computes and ignores the marked-set size.
  kPaperCompat,
  /// Exactly `explicit_count` iterations.
  kExplicit,
};

struct IterationPolicy {
  IterationMode mode = IterationMode::kStandard;
  std::uint64_t explicit_count = 0;  // used only in kExplicit mode

  static IterationPolicy standard() { return {IterationMode::kStandard, 0}; }
  static IterationPolicy paper_compat() {
    return {IterationMode::kPaperCompat, 0};
  }
  static IterationPolicy fixed(std::uint64_t count) {
    return {IterationMode::kExplicit, count};
  }
};

const char* to_string(IterationMode mode);

/// State of the marked subspace after `iteration` oracle+diffusion rounds.
/// iteration 0 is the initial uniform superposition. Starting from the
/// uniform state, all unmarked amplitudes stay equal to each other, so one
/// representative value describes them.
struct GroverIterationRecord {
  std::uint64_t iteration = 0;
  std::vector<Complex> marked_amplitudes;  // one per marked index, in order
  Complex unmarked_amplitude{0.0, 0.0};
  double marked_probability = 0.0;
};

struct GroverTrace {
  std::vector<std::uint64_t> marked;  // sorted marked indices
  std::vector<GroverIterationRecord> records;

  /// Oracle calls made during the run; the initial record costs none.
  std::uint64_t oracle_applications() const {
    return records.empty() ? 0 : records.size() - 1;
  }
};

struct GroverResult {
  Statevector state;
  GroverTrace trace;
};

/// Phase oracle with -1 at every marked index and +1 elsewhere. The marked
/// set must be a non-empty proper subset of the 2^n basis states.
DiagonalOperator oracle_from_marked(int n_qubits,
                                    const std::set<std::uint64_t>& marked);

/// Iteration count under the given policy. Requires 1 <= n_marked < n_states.
std::uint64_t grover_iteration_count(std::uint64_t n_states,
                                     std::uint64_t n_marked,
                                     const IterationPolicy& policy);

/// Amplitude amplification: starts from the uniform superposition and applies
/// (oracle; inversion about the mean) the policy-determined number of times.
/// The trace records the marked amplitudes after every round.
GroverResult run_grover(int n_qubits, const DiagonalOperator& oracle,
                        const IterationPolicy& policy);

/// Analytic success probability sin^2((2k+1) * asin(sqrt(M/N))), used as an
/// independent check on the simulated amplitudes.
double success_probability_closed_form(std::uint64_t n_states,
                                       std::uint64_t n_marked,
                                       std::uint64_t iterations);

}  // namespace qgaforge
