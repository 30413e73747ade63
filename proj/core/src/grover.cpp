#include "qgaforge/grover.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qgaforge/errors.hpp"

namespace qgaforge {

namespace {

GroverIterationRecord record_marked(const Statevector& state,
                                    const std::vector<std::uint64_t>& marked,
                                    std::uint64_t first_unmarked,
                                    std::uint64_t iteration) {
  GroverIterationRecord rec;
  rec.iteration = iteration;
  rec.marked_amplitudes.reserve(marked.size());
  for (std::uint64_t index : marked) {
    const Complex a = state.amplitudes[index];
    rec.marked_amplitudes.push_back(a);
    rec.marked_probability += std::norm(a);
  }
  rec.unmarked_amplitude = state.amplitudes[first_unmarked];
  return rec;
}

}  // namespace

const char* to_string(IterationMode mode) {
  switch (mode) {
    case IterationMode::kStandard:
      return "standard";
    case IterationMode::kPaperCompat:
      return "paper-compat";
    case IterationMode::kExplicit:
      return "explicit";
  }
  return "unknown";
}

DiagonalOperator oracle_from_marked(int n_qubits,
                                    const std::set<std::uint64_t>& marked) {
  if (marked.empty()) {
    throw OracleError("oracle marked set is empty");
  }
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw ConfigError("n_qubits must be in [1, " + std::to_string(kMaxQubits) +
                      "], got " + std::to_string(n_qubits));
  }
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  for (std::uint64_t index : marked) {
    if (index >= dim) {
      throw std::out_of_range("marked index " + std::to_string(index) +
                              " out of range for " + std::to_string(n_qubits) +
                              " qubits");
    }
  }
  if (marked.size() == dim) {
    throw OracleError(
        "oracle marks every basis state; the flip is a global phase and the "
        "search is meaningless");
  }
  std::vector<Complex> phases(dim, Complex{1.0, 0.0});
  for (std::uint64_t index : marked) {
    phases[index] = Complex{-1.0, 0.0};
  }
  return DiagonalOperator{n_qubits, std::move(phases)};
}

std::uint64_t grover_iteration_count(std::uint64_t n_states,
                                     std::uint64_t n_marked,
                                     const IterationPolicy& policy) {
  if (n_marked < 1 || n_marked >= n_states) {
    throw std::domain_error("marked-state count must satisfy 1 <= M < N, got M=" +
                            std::to_string(n_marked) + ", N=" +
                            std::to_string(n_states));
  }
  constexpr double quarter_pi = std::numbers::pi / 4.0;
  switch (policy.mode) {
    case IterationMode::kStandard: {
      const double ratio =
          static_cast<double>(n_states) / static_cast<double>(n_marked);
      return static_cast<std::uint64_t>(
          std::floor(quarter_pi * std::sqrt(ratio)));
    }
    case IterationMode::kPaperCompat: {
      const double raw = quarter_pi * std::sqrt(static_cast<double>(n_states));
      const long long count = std::llround(std::trunc(raw)) - 1;
      return count < 0 ? 0 : static_cast<std::uint64_t>(count);
    }
    case IterationMode::kExplicit:
      return policy.explicit_count;
  }
  throw std::logic_error("unreachable iteration mode");
}

GroverResult run_grover(int n_qubits, const DiagonalOperator& oracle,
                        const IterationPolicy& policy) {
  if (oracle.n_qubits != n_qubits ||
      oracle.dim() != (std::uint64_t{1} << n_qubits)) {
    throw ShapeError("dimension mismatch: run requested " +
                     std::to_string(n_qubits) + " qubits, oracle has " +
                     std::to_string(oracle.dim()) + " entries");
  }

  std::vector<std::uint64_t> marked;
  for (std::size_t i = 0; i < oracle.dim(); ++i) {
    const Complex phase = oracle.phases[i];
    if (std::abs(phase - Complex{1.0, 0.0}) <= kUnitaryTolerance) {
      continue;
    }
    if (std::abs(phase - Complex{-1.0, 0.0}) <= kUnitaryTolerance) {
      marked.push_back(i);
      continue;
    }
    throw OracleError("operator is not a phase oracle: entry " +
                      std::to_string(i) + " is neither +1 nor -1");
  }
  if (marked.empty()) {
    throw OracleError("oracle marks no basis state");
  }

  const std::uint64_t iterations =
      grover_iteration_count(oracle.dim(), marked.size(), policy);

  // marked is ascending, so the first gap is the first unmarked index.
  std::uint64_t first_unmarked = 0;
  for (std::uint64_t index : marked) {
    if (index != first_unmarked) {
      break;
    }
    ++first_unmarked;
  }

  GroverResult result{uniform_superposition(n_qubits), {}};
  result.trace.marked = marked;
  result.trace.records.push_back(
      record_marked(result.state, marked, first_unmarked, 0));
  for (std::uint64_t k = 1; k <= iterations; ++k) {
    result.state = apply_diagonal(result.state, oracle);
    result.state = apply_inversion_about_mean(result.state);
    result.trace.records.push_back(
        record_marked(result.state, marked, first_unmarked, k));
  }
  return result;
}

double success_probability_closed_form(std::uint64_t n_states,
                                       std::uint64_t n_marked,
                                       std::uint64_t iterations) {
  if (n_marked < 1 || n_marked >= n_states) {
    throw std::domain_error("marked-state count must satisfy 1 <= M < N, got M=" +
                            std::to_string(n_marked) + ", N=" +
                            std::to_string(n_states));
  }
  const double theta = std::asin(std::sqrt(static_cast<double>(n_marked) /
                                           static_cast<double>(n_states)));
  const double s = std::sin((2.0 * static_cast<double>(iterations) + 1.0) * theta);
  return s * s;
}

}  // namespace qgaforge
