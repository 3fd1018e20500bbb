#include "dicke3/operators.hpp"

#include <cmath>
#include <string>

#include "dicke3/errors.hpp"

namespace dicke3 {

double hermiticity_defect(const Matrix& m) {
  if (m.rows() != m.cols()) return INFINITY;
  double worst = 0.0;
  const Eigen::Index n = m.rows();
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = j; i < n; ++i) {
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return worst;
}

DenseHermitianOperator::DenseHermitianOperator(Matrix entries, double tolerance)
    : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) {
    throw NotHermitianError("operator is not square");
  }
  const double defect = hermiticity_defect(entries_);
  if (!(defect <= tolerance)) {
    throw NotHermitianError("operator is not Hermitian (defect " + std::to_string(defect) + ")");
  }
}

bool DenseHermitianOperator::is_real() const {
  return (entries_.imag().array() == 0.0).all();
}

StateVector::StateVector(Vector amplitudes, double tolerance)
    : amplitudes_(std::move(amplitudes)) {
  const double norm2 = amplitudes_.squaredNorm();
  if (!(std::abs(norm2 - 1.0) <= tolerance)) {
    throw ParameterError("state vector is not normalised (|psi|^2 = " + std::to_string(norm2) +
                         ")");
  }
}

StateVector StateVector::normalized(Vector amplitudes) {
  const double n = amplitudes.norm();
  if (!(n > 0.0)) throw ParameterError("cannot normalise a zero vector");
  amplitudes /= n;
  return StateVector(std::move(amplitudes));
}

}  // namespace dicke3
