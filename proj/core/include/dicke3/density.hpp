#pragma once

#include <array>

#include "dicke3/operators.hpp"

namespace dicke3 {

inline constexpr double kDensityTolerance = 1e-10;
inline constexpr double kZeroEigenvalue = 1e-14;

/// Hermitian, unit trace, positive semidefinite (eigenvalues >= -1e-10).
class DensityMatrix {
 public:
  DensityMatrix() = default;
  explicit DensityMatrix(Matrix entries, double tolerance = kDensityTolerance);

  static DensityMatrix pure(const StateVector& psi);

  Eigen::Index dim() const { return entries_.rows(); }
  const Matrix& matrix() const { return entries_; }
  RealVector eigenvalues() const;

 private:
  Matrix entries_;
};

enum class Keep { oscillator, qubits, pair12, pair13, pair23 };

/// Reduced state of a composite pure state of dimension 8 (n_max + 1).
DensityMatrix partial_trace(const StateVector& psi, Keep keep);

/// Reduced state of a composite density matrix of dimension 8 (n_max + 1).
DensityMatrix partial_trace(const DensityMatrix& rho, Keep keep);

/// Two-qubit state of qubits i < j (1-based) from the 8x8 three-qubit state.
DensityMatrix qubit_pair(const DensityMatrix& rho_q, int i, int j);

/// Single-qubit state of qubit i from the 8x8 three-qubit state.
DensityMatrix single_qubit(const DensityMatrix& rho_q, int i);

/// -Tr rho log2 rho; eigenvalues below 1e-14 count as zero.
double von_neumann_entropy(const DensityMatrix& rho);

/// Wootters concurrence of a 4x4 two-qubit state.
double concurrence(const DensityMatrix& rho_pair);

struct Squeezing {
  double s_x;  // 4 Var(X) - 1
  double s_p;  // 4 Var(P) - 1
  double k;    // (1 + s_x)(1 + s_p) / 4
};

/// Quadrature moments with exact X^2 = (a^2 + a^dagger^2 + 2N + 1)/4 and
/// P^2 = (-a^2 - a^dagger^2 + 2N + 1)/4 matrix elements.
Squeezing squeezing_parameters(const DensityMatrix& rho_osc);

/// Eigen-decomposition rho = sum_k p_k v_k v_k^dagger keeping p_k > 1e-14.
struct Mixture {
  RealVector weights;
  Matrix vectors;  // columns
};
Mixture decompose(const DensityMatrix& rho);

}  // namespace dicke3
