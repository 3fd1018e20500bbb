#pragma once

#include "dicke3/operators.hpp"

namespace dicke3 {

struct RealEigenpairs {
  RealVector values;   // ascending
  RealMatrix vectors;  // one column per value
};

struct Eigenpairs {
  RealVector values;  // ascending
  Matrix vectors;
};

/// k lowest eigenpairs of a real symmetric matrix (LAPACK dsyevr).
/// k <= 0 or k > dim returns the full spectrum. Throws NotHermitianError for
/// asymmetric input.
RealEigenpairs eigendecompose(const RealMatrix& h, int k = -1);

/// k lowest eigenpairs of a Hermitian operator. Real operators go through
/// dsyevr, complex ones through zheevr.
Eigenpairs eigendecompose(const DenseHermitianOperator& h, int k = -1);

/// Eigenvalues only.
RealVector eigenvalues(const RealMatrix& h, int k = -1);

}  // namespace dicke3
