#include "dicke3/hilbert.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <string>

#include "dicke3/errors.hpp"

namespace dicke3 {

int qubit_config(std::string_view label) {
  if (label.size() != kQubits) throw ParameterError("qubit label must have three letters");
  int config = 0;
  for (char c : label) {
    config <<= 1;
    if (c == 'g') {
      config |= 1;
    } else if (c != 'e') {
      throw ParameterError("qubit label letters must be 'e' or 'g'");
    }
  }
  return config;
}

bool is_excited(int config, int qubit) { return ((config >> (kQubits - qubit)) & 1) == 0; }

int collective_z(int config) {
  int s = 0;
  for (int j = 1; j <= kQubits; ++j) s += is_excited(config, j) ? 1 : -1;
  return s;
}

Matrix pauli_matrix(Axis axis) {
  const Complex i{0.0, 1.0};
  Matrix m(2, 2);
  switch (axis) {
    case Axis::x:
      m << 0.0, 1.0, 1.0, 0.0;
      break;
    case Axis::y:
      // sigma_y |e> = i|g>, sigma_y |g> = -i|e>
      m << 0.0, -i, i, 0.0;
      break;
    case Axis::z:
      m << 1.0, 0.0, 0.0, -1.0;
      break;
  }
  return m;
}

DenseHermitianOperator pauli(Axis axis, int qubit) {
  if (qubit < 1 || qubit > kQubits) {
    throw ParameterError("qubit index must be 1, 2 or 3 (got " + std::to_string(qubit) + ")");
  }
  const Matrix id = Matrix::Identity(2, 2);
  Matrix f[3] = {id, id, id};
  f[qubit - 1] = pauli_matrix(axis);
  return DenseHermitianOperator(tensor({f[0], f[1], f[2]}));
}

Matrix annihilation(int n_max) {
  if (n_max < 1) throw ParameterError("n_max must be >= 1");
  Matrix a = Matrix::Zero(n_max + 1, n_max + 1);
  for (int n = 1; n <= n_max; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

Matrix number_operator(int n_max) {
  if (n_max < 1) throw ParameterError("n_max must be >= 1");
  Matrix n = Matrix::Zero(n_max + 1, n_max + 1);
  for (int k = 0; k <= n_max; ++k) n(k, k) = static_cast<double>(k);
  return n;
}

Quadratures quadratures(int n_max) {
  const Matrix a = annihilation(n_max);
  const Matrix ad = a.adjoint();
  const Complex two_i{0.0, 2.0};
  return {DenseHermitianOperator((a + ad) / 2.0), DenseHermitianOperator((a - ad) / two_i)};
}

Matrix tensor(std::span<const Matrix> factors) {
  if (factors.empty()) return Matrix::Identity(1, 1);
  Eigen::Index dim = 1;
  for (const auto& f : factors) {
    if (f.rows() != f.cols()) throw ParameterError("tensor: factor is not square");
    if (f.rows() == 0) throw ParameterError("tensor: empty factor");
    if (dim > kMaxTensorDim / f.rows()) {
      throw ParameterError("tensor: product dimension exceeds " + std::to_string(kMaxTensorDim));
    }
    dim *= f.rows();
  }
  Matrix out = factors[0];
  for (std::size_t k = 1; k < factors.size(); ++k) {
    const Matrix& b = factors[k];
    Matrix next(out.rows() * b.rows(), out.cols() * b.cols());
    for (Eigen::Index i = 0; i < out.rows(); ++i) {
      for (Eigen::Index j = 0; j < out.cols(); ++j) {
        next.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = out(i, j) * b;
      }
    }
    out = std::move(next);
  }
  return out;
}

Matrix tensor(std::initializer_list<Matrix> factors) {
  return tensor(std::span<const Matrix>(factors.begin(), factors.size()));
}

RealMatrix displacement_operator(double beta, int n_max) {
  if (n_max < 1) throw ParameterError("n_max must be >= 1");
  if (!std::isfinite(beta)) throw ParameterError("displacement must be finite");
  const int dim = n_max + 1;
  const double reach = std::sqrt(static_cast<double>(n_max)) + std::abs(beta) + 8.0;
  const int padded = std::max(dim + 20, static_cast<int>(std::ceil(reach * reach)));

  RealMatrix gen = RealMatrix::Zero(padded, padded);
  for (int n = 1; n < padded; ++n) {
    const double s = beta * std::sqrt(static_cast<double>(n));
    gen(n, n - 1) = s;   // beta a^dagger
    gen(n - 1, n) = -s;  // -beta a
  }
  RealMatrix d = gen.exp().topLeftCorner(dim, dim);

  // Columns whose displaced image should fit well inside the cutoff:
  // sqrt(n) + |beta| + 4 <= sqrt(n_max). Column 0 is always checked.
  const double room = std::sqrt(static_cast<double>(n_max)) - std::abs(beta) - 4.0;
  const int checked = room > 0.0 ? std::min(dim, static_cast<int>(room * room) + 1) : 1;
  const RealMatrix gram = d.leftCols(checked).transpose() * d.leftCols(checked);
  const double leak = (gram - RealMatrix::Identity(checked, checked)).cwiseAbs().maxCoeff();
  if (leak > 1e-8) {
    const int suggest = static_cast<int>(std::ceil(reach * reach));
    throw TruncationError(TruncationError::Kind::insufficient,
                          "displacement " + std::to_string(beta) + " leaks out of n_max=" +
                              std::to_string(n_max),
                          suggest);
  }
  return d;
}

}  // namespace dicke3
