#pragma once

#include <Eigen/Dense>
#include <complex>

namespace dicke3 {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kNormTolerance = 1e-10;

/// max_ij |A_ij - conj(A_ji)|
double hermiticity_defect(const Matrix& m);

/// Square complex matrix that is Hermitian by construction.
///
/// The carrier for Hamiltonians, observables and density matrices. The
/// constructor checks the Hermiticity invariant and throws
/// NotHermitianError when it fails.
class DenseHermitianOperator {
 public:
  DenseHermitianOperator() = default;
  explicit DenseHermitianOperator(Matrix entries, double tolerance = kHermitianTolerance);

  Eigen::Index dim() const { return entries_.rows(); }
  const Matrix& matrix() const { return entries_; }

  /// True when every imaginary part is exactly zero.
  bool is_real() const;

 private:
  Matrix entries_;
};

/// Normalised state vector (sum |c_i|^2 = 1 within 1e-10).
class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(Vector amplitudes, double tolerance = kNormTolerance);

  /// Normalises `amplitudes` instead of rejecting them.
  static StateVector normalized(Vector amplitudes);

  Eigen::Index dim() const { return amplitudes_.size(); }
  const Vector& amplitudes() const { return amplitudes_; }

 private:
  Vector amplitudes_;
};

}  // namespace dicke3
