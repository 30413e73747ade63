#include "qgaforge/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qgaforge/errors.hpp"

namespace qgaforge {

namespace {

void check_qubit_count(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw ConfigError("n_qubits must be in [1, " + std::to_string(kMaxQubits) +
                      "], got " + std::to_string(n_qubits));
  }
}

std::size_t dim_of(int n_qubits) { return std::size_t{1} << n_qubits; }

}  // namespace

double norm_error(const Statevector& state) {
  double sum = 0.0;
  for (const Complex& a : state.amplitudes) {
    sum += std::norm(a);
  }
  return std::abs(sum - 1.0);
}

Statevector make_statevector(int n_qubits, std::vector<Complex> amplitudes) {
  check_qubit_count(n_qubits);
  if (amplitudes.size() != dim_of(n_qubits)) {
    throw ShapeError("statevector for " + std::to_string(n_qubits) +
                     " qubits needs " + std::to_string(dim_of(n_qubits)) +
                     " amplitudes, got " + std::to_string(amplitudes.size()));
  }
  Statevector state{n_qubits, std::move(amplitudes)};
  if (norm_error(state) > kNormTolerance) {
    throw std::invalid_argument("statevector is not normalized: |norm^2 - 1| = " +
                                std::to_string(norm_error(state)));
  }
  return state;
}

Statevector basis_state(int n_qubits, std::uint64_t index) {
  check_qubit_count(n_qubits);
  if (index >= dim_of(n_qubits)) {
    throw std::out_of_range("basis index " + std::to_string(index) +
                            " out of range for " + std::to_string(n_qubits) +
                            " qubits");
  }
  Statevector state{n_qubits, std::vector<Complex>(dim_of(n_qubits))};
  state.amplitudes[index] = Complex{1.0, 0.0};
  return state;
}

Statevector uniform_superposition(int n_qubits) {
  check_qubit_count(n_qubits);
  const std::size_t dim = dim_of(n_qubits);
  const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
  return Statevector{n_qubits, std::vector<Complex>(dim, Complex{amp, 0.0})};
}

DiagonalOperator make_diagonal(int n_qubits, std::vector<Complex> phases) {
  check_qubit_count(n_qubits);
  if (phases.size() != dim_of(n_qubits)) {
    throw ShapeError("diagonal for " + std::to_string(n_qubits) +
                     " qubits needs " + std::to_string(dim_of(n_qubits)) +
                     " entries, got " + std::to_string(phases.size()));
  }
  for (std::size_t i = 0; i < phases.size(); ++i) {
    if (std::abs(std::abs(phases[i]) - 1.0) > kUnitaryTolerance) {
      throw std::invalid_argument("diagonal entry " + std::to_string(i) +
                                  " does not have unit modulus");
    }
  }
  return DiagonalOperator{n_qubits, std::move(phases)};
}

bool is_unitary(const Gate2x2& g, double tol) {
  // G * G^dagger == I, checked elementwise.
  const Complex r00 = g.m00 * std::conj(g.m00) + g.m01 * std::conj(g.m01);
  const Complex r01 = g.m00 * std::conj(g.m10) + g.m01 * std::conj(g.m11);
  const Complex r10 = g.m10 * std::conj(g.m00) + g.m11 * std::conj(g.m01);
  const Complex r11 = g.m10 * std::conj(g.m10) + g.m11 * std::conj(g.m11);
  return std::abs(r00 - 1.0) <= tol && std::abs(r01) <= tol &&
         std::abs(r10) <= tol && std::abs(r11 - 1.0) <= tol;
}

Gate2x2 hadamard_gate() {
  const double s = 1.0 / std::sqrt(2.0);
  return Gate2x2{{s, 0}, {s, 0}, {s, 0}, {-s, 0}};
}

Gate2x2 pauli_x_gate() { return Gate2x2{{0, 0}, {1, 0}, {1, 0}, {0, 0}}; }

Gate2x2 rotation_gate(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return Gate2x2{{c, 0}, {-s, 0}, {s, 0}, {c, 0}};
}

Statevector apply_diagonal(const Statevector& state, const DiagonalOperator& op) {
  if (state.dim() != op.dim()) {
    throw ShapeError("dimension mismatch: state has " +
                     std::to_string(state.dim()) + " amplitudes, operator has " +
                     std::to_string(op.dim()) + " entries");
  }
  Statevector out{state.n_qubits, std::vector<Complex>(state.dim())};
  for (std::size_t i = 0; i < state.dim(); ++i) {
    out.amplitudes[i] = op.phases[i] * state.amplitudes[i];
  }
  return out;
}

Statevector apply_inversion_about_mean(const Statevector& state) {
  Complex sum{0.0, 0.0};
  for (const Complex& a : state.amplitudes) {
    sum += a;
  }
  const Complex two_mu = 2.0 * sum / static_cast<double>(state.dim());
  Statevector out{state.n_qubits, std::vector<Complex>(state.dim())};
  for (std::size_t i = 0; i < state.dim(); ++i) {
    out.amplitudes[i] = two_mu - state.amplitudes[i];
  }
  return out;
}

Statevector apply_single_qubit_gate(const Statevector& state,
                                    const Gate2x2& gate, int target) {
  if (target < 0 || target >= state.n_qubits) {
    throw std::out_of_range("target qubit " + std::to_string(target) +
                            " out of range for " +
                            std::to_string(state.n_qubits) + " qubits");
  }
  if (!is_unitary(gate)) {
    throw std::invalid_argument("gate is not unitary within tolerance");
  }
  // Qubit 0 is the most significant bit of the basis index.
  const int bit = state.n_qubits - 1 - target;
  const std::size_t stride = std::size_t{1} << bit;
  Statevector out{state.n_qubits, state.amplitudes};
  for (std::size_t base = 0; base < state.dim(); base += 2 * stride) {
    for (std::size_t offset = 0; offset < stride; ++offset) {
      const std::size_t i0 = base + offset;
      const std::size_t i1 = i0 + stride;
      const Complex a0 = state.amplitudes[i0];
      const Complex a1 = state.amplitudes[i1];
      out.amplitudes[i0] = gate.m00 * a0 + gate.m01 * a1;
      out.amplitudes[i1] = gate.m10 * a0 + gate.m11 * a1;
    }
  }
  return out;
}

std::vector<double> state_probabilities(const Statevector& state) {
  std::vector<double> probs(state.dim());
  for (std::size_t i = 0; i < state.dim(); ++i) {
    probs[i] = std::norm(state.amplitudes[i]);
  }
  return probs;
}

Histogram measure_shots(const Statevector& state, std::uint64_t shots,
                        Rng& rng) {
  if (shots < 1) {
    throw ConfigError("shots must be >= 1, got " + std::to_string(shots));
  }
  const std::vector<double> probs = state_probabilities(state);
  std::vector<double> cdf(probs.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    cdf[i] = acc;
  }
  cdf.back() = 1.0;  // guard against rounding in the tail

  Histogram hist{state.n_qubits, {}, shots};
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = rng.next_double();
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const auto index =
        static_cast<std::uint64_t>(std::distance(cdf.begin(), it));
    ++hist.counts[index];
  }
  return hist;
}

}  // namespace qgaforge
