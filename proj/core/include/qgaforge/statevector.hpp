#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "qgaforge/rng.hpp"

namespace qgaforge {

using Complex = std::complex<double>;

/// Practical desk-scale ceiling: 2^24 complex amplitudes (256 MiB).
inline constexpr int kMaxQubits = 24;

inline constexpr double kNormTolerance = 1e-10;
inline constexpr double kUnitaryTolerance = 1e-12;

/// Full amplitude vector of an n-qubit register. amplitudes[i] is the
/// coefficient of basis state |i>, with qubit 0 the most significant bit
/// of i (see bitstring.hpp).
struct Statevector {
  int n_qubits = 0;
  std::vector<Complex> amplitudes;

  std::size_t dim() const { return amplitudes.size(); }
};

/// Diagonal unitary: result_i = phases_i * amplitude_i. A phase oracle is
/// the specialization whose entries are all +1 or -1.
struct DiagonalOperator {
  int n_qubits = 0;
  std::vector<Complex> phases;

  std::size_t dim() const { return phases.size(); }
};

/// Single-qubit gate, row-major 2x2.
struct Gate2x2 {
  Complex m00, m01, m10, m11;
};

/// Shot counts per observed basis index. Only outcomes that occurred are
/// stored; the counts always sum to `shots`.
struct Histogram {
  int n_qubits = 0;
  std::map<std::uint64_t, std::uint64_t> counts;
  std::uint64_t shots = 0;
};

/// | sum_i |a_i|^2 - 1 |, distance from unit norm.
double norm_error(const Statevector& state);

/// Validates length 2^n_qubits and unit norm (within kNormTolerance).
Statevector make_statevector(int n_qubits, std::vector<Complex> amplitudes);

Statevector basis_state(int n_qubits, std::uint64_t index);

/// All 2^n amplitudes set to 1/sqrt(2^n). Throws ConfigError when n_qubits
/// is outside [1, kMaxQubits].
Statevector uniform_superposition(int n_qubits);

/// Validates that every entry has unit modulus (within kUnitaryTolerance).
DiagonalOperator make_diagonal(int n_qubits, std::vector<Complex> phases);

bool is_unitary(const Gate2x2& gate, double tol = kUnitaryTolerance);

Gate2x2 hadamard_gate();
Gate2x2 pauli_x_gate();

/// Real rotation [[cos t, -sin t], [sin t, cos t]].
Gate2x2 rotation_gate(double theta);

/// Elementwise product with the diagonal; norm preserving.
Statevector apply_diagonal(const Statevector& state, const DiagonalOperator& op);

/// Inversion about the mean: result_i = 2*mu - a_i with mu the amplitude
/// average. Matrix-free O(N); equivalent to multiplying by the dense matrix
/// with 2/N everywhere and 2/N - 1 on the diagonal. Self-inverse.
Statevector apply_inversion_about_mean(const Statevector& state);

/// Applies a unitary 2x2 gate to the target qubit (0 = most significant).
Statevector apply_single_qubit_gate(const Statevector& state,
                                    const Gate2x2& gate, int target);

/// p_i = |a_i|^2.
std::vector<double> state_probabilities(const Statevector& state);

/// Draws `shots` independent basis-state samples from the state's
/// probability distribution. Deterministic given the Rng seed.
///
/// The state is NOT collapsed: this is a simulator, so callers may sample
/// the same state repeatedly, which real hardware cannot do.
Histogram measure_shots(const Statevector& state, std::uint64_t shots,
                        Rng& rng);

}  // namespace qgaforge
