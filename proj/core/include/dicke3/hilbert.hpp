#pragma once

#include <initializer_list>
#include <span>
#include <string_view>

#include "dicke3/operators.hpp"

namespace dicke3 {

// Basis conventions
// -----------------
// Composite states are |q1 q2 q3> (x) |n>, qubits first. Each qubit has |e>
// indexed before |g>; qubit 1 is the most significant bit of the 3-bit
// configuration index (bit value 0 = e, 1 = g), so |eee> = 0 and |ggg> = 7.
// Fock states ascend. composite_index(c, n) = c * (n_max + 1) + n.

inline constexpr int kQubits = 3;
inline constexpr int kQubitDim = 8;
inline constexpr Eigen::Index kMaxTensorDim = 100000;

enum class Axis { x, y, z };

/// Configuration index for a label such as "eeg". Throws ParameterError.
int qubit_config(std::string_view label);

/// True when qubit `qubit` (1-based) is excited in configuration `config`.
bool is_excited(int config, int qubit);

/// Eigenvalue of sigma_z1 + sigma_z2 + sigma_z3 for a configuration: -3, -1, +1 or +3.
int collective_z(int config);

inline Eigen::Index composite_index(int config, int n, int n_max) {
  return static_cast<Eigen::Index>(config) * (n_max + 1) + n;
}

/// Single-qubit Pauli matrix in the {|e>, |g>} basis.
Matrix pauli_matrix(Axis axis);

/// sigma_axis on qubit `qubit` (1..3) tensored with identity on the others (8x8).
DenseHermitianOperator pauli(Axis axis, int qubit);

/// Truncated annihilation operator: <n-1|a|n> = sqrt(n), n = 1..n_max.
Matrix annihilation(int n_max);

/// a^dagger a on |0> ... |n_max>.
Matrix number_operator(int n_max);

struct Quadratures {
  DenseHermitianOperator x;  // (a + a^dagger) / 2
  DenseHermitianOperator p;  // (a - a^dagger) / (2i)
};

Quadratures quadratures(int n_max);

/// Kronecker product in the listed order (qubit 1, qubit 2, qubit 3, oscillator).
/// Throws ParameterError for non-square factors or when the result exceeds kMaxTensorDim.
Matrix tensor(std::span<const Matrix> factors);
Matrix tensor(std::initializer_list<Matrix> factors);

/// exp(beta (a^dagger - a)) restricted to |0> ... |n_max>.
///
/// The exponential is taken in a padded space and then truncated. Throws
/// TruncationError(insufficient) when the columns n with
/// sqrt(n) + |beta| + 4 <= sqrt(n_max) (at least n = 0) lose more than 1e-8 of
/// their norm, i.e. n_max is too small for beta.
RealMatrix displacement_operator(double beta, int n_max);

}  // namespace dicke3
