#include "dicke3/density.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <string>

#include "dicke3/errors.hpp"
#include "dicke3/hilbert.hpp"

namespace dicke3 {

DensityMatrix::DensityMatrix(Matrix entries, double tolerance) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
    throw ParameterError("density matrix must be square and non-empty");
  }
  const double defect = hermiticity_defect(entries_);
  if (!(defect <= tolerance)) {
    throw NotHermitianError("density matrix is not Hermitian (defect " + std::to_string(defect) + ")");
  }
  const Complex tr = entries_.trace();
  if (!(std::abs(tr - 1.0) <= tolerance)) {
    throw ParameterError("density matrix trace is " + std::to_string(tr.real()));
  }
  const double lowest = eigenvalues().minCoeff();
  if (lowest < -tolerance) {
    throw ParameterError("density matrix has negative eigenvalue " + std::to_string(lowest));
  }
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
  Matrix m = psi.amplitudes() * psi.amplitudes().adjoint();
  m = 0.5 * (m + m.adjoint()).eval();
  return DensityMatrix(std::move(m));
}

RealVector DensityMatrix::eigenvalues() const {
  return Eigen::SelfAdjointEigenSolver<Matrix>(entries_, Eigen::EigenvaluesOnly).eigenvalues();
}

namespace {

int oscillator_dim_of(Eigen::Index composite) {
  if (composite % kQubitDim != 0 || composite < 2 * kQubitDim) {
    throw ParameterError("dimension " + std::to_string(composite) + " is not 8 (n_max + 1)");
  }
  return static_cast<int>(composite / kQubitDim);
}

Matrix hermitize(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

}  // namespace

DensityMatrix qubit_pair(const DensityMatrix& rho_q, int i, int j) {
  if (rho_q.dim() != kQubitDim) throw ParameterError("qubit_pair expects an 8x8 state");
  if (i < 1 || j > kQubits || i >= j) throw ParameterError("qubit pair must satisfy 1 <= i < j <= 3");
  const int traced = 6 - i - j;
  auto bit = [](int c, int q) { return (c >> (kQubits - q)) & 1; };
  Matrix out = Matrix::Zero(4, 4);
  for (int a = 0; a < kQubitDim; ++a) {
    for (int b = 0; b < kQubitDim; ++b) {
      if (bit(a, traced) != bit(b, traced)) continue;
      const int ra = bit(a, i) * 2 + bit(a, j);
      const int rb = bit(b, i) * 2 + bit(b, j);
      out(ra, rb) += rho_q.matrix()(a, b);
    }
  }
  return DensityMatrix(hermitize(out));
}

DensityMatrix single_qubit(const DensityMatrix& rho_q, int i) {
  if (rho_q.dim() != kQubitDim) throw ParameterError("single_qubit expects an 8x8 state");
  if (i < 1 || i > kQubits) throw ParameterError("qubit index must be 1, 2 or 3");
  Matrix out = Matrix::Zero(2, 2);
  for (int a = 0; a < kQubitDim; ++a) {
    for (int b = 0; b < kQubitDim; ++b) {
      if ((a ^ b) & ~(1 << (kQubits - i)) & 7) continue;
      out((a >> (kQubits - i)) & 1, (b >> (kQubits - i)) & 1) += rho_q.matrix()(a, b);
    }
  }
  return DensityMatrix(hermitize(out));
}

DensityMatrix partial_trace(const StateVector& psi, Keep keep) {
  const int osc = oscillator_dim_of(psi.dim());
  // column-major view: m(n, c) = psi[c * osc + n]
  const Eigen::Map<const Matrix> m(psi.amplitudes().data(), osc, kQubitDim);
  if (keep == Keep::oscillator) return DensityMatrix(hermitize(m * m.adjoint()));
  DensityMatrix rho_q(hermitize((m.adjoint() * m).transpose()));
  switch (keep) {
    case Keep::qubits: return rho_q;
    case Keep::pair12: return qubit_pair(rho_q, 1, 2);
    case Keep::pair13: return qubit_pair(rho_q, 1, 3);
    case Keep::pair23: return qubit_pair(rho_q, 2, 3);
    case Keep::oscillator: break;
  }
  throw std::logic_error("unreachable");
}

DensityMatrix partial_trace(const DensityMatrix& rho, Keep keep) {
  const int osc = oscillator_dim_of(rho.dim());
  const Matrix& r = rho.matrix();
  if (keep == Keep::oscillator) {
    Matrix out = Matrix::Zero(osc, osc);
    for (int c = 0; c < kQubitDim; ++c) out += r.block(c * osc, c * osc, osc, osc);
    return DensityMatrix(hermitize(out));
  }
  Matrix q(kQubitDim, kQubitDim);
  for (int a = 0; a < kQubitDim; ++a) {
    for (int b = 0; b < kQubitDim; ++b) q(a, b) = r.block(a * osc, b * osc, osc, osc).trace();
  }
  DensityMatrix rho_q(hermitize(q));
  switch (keep) {
    case Keep::qubits: return rho_q;
    case Keep::pair12: return qubit_pair(rho_q, 1, 2);
    case Keep::pair13: return qubit_pair(rho_q, 1, 3);
    case Keep::pair23: return qubit_pair(rho_q, 2, 3);
    case Keep::oscillator: break;
  }
  throw std::logic_error("unreachable");
}

double von_neumann_entropy(const DensityMatrix& rho) {
  double s = 0.0;
  for (double p : rho.eigenvalues()) {
    if (p > kZeroEigenvalue) s -= p * std::log2(p);
  }
  return std::max(0.0, s);
}

Mixture decompose(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.matrix());
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = es.eigenvalues().size() - 1; i >= 0; --i) {
    if (es.eigenvalues()[i] > kZeroEigenvalue) keep.push_back(i);
  }
  Mixture mix;
  mix.weights.resize(static_cast<Eigen::Index>(keep.size()));
  mix.vectors.resize(rho.dim(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) {
    mix.weights[static_cast<Eigen::Index>(k)] = es.eigenvalues()[keep[k]];
    mix.vectors.col(static_cast<Eigen::Index>(k)) = es.eigenvectors().col(keep[k]);
  }
  return mix;
}

double concurrence(const DensityMatrix& rho_pair) {
  if (rho_pair.dim() != 4) throw ParameterError("concurrence expects a 4x4 two-qubit state");
  // rho = A A^dagger with A = V diag(sqrt p). The eigenvalues of
  // rho (YY) rho* (YY) are the squared singular values of A^dagger (YY) A*.
  const Mixture mix = decompose(rho_pair);
  const Matrix a = mix.vectors * mix.weights.cwiseSqrt().asDiagonal();
  Matrix yy = Matrix::Zero(4, 4);
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  const Matrix t = a.adjoint() * yy * a.conjugate();
  const RealVector sv = Eigen::JacobiSVD<Matrix>(t).singularValues();
  double c = sv.size() ? sv[0] : 0.0;
  for (Eigen::Index i = 1; i < sv.size(); ++i) c -= sv[i];
  return std::clamp(c, 0.0, 1.0);
}

Squeezing squeezing_parameters(const DensityMatrix& rho_osc) {
  const Matrix& r = rho_osc.matrix();
  const Eigen::Index dim = r.rows();
  // Tr(rho a) = sum_n sqrt(n) rho(n, n-1); Tr(rho a^2) = sum_n sqrt(n(n-1)) rho(n, n-2)
  Complex ea = 0.0, ea2 = 0.0;
  double en = 0.0;
  for (Eigen::Index n = 0; n < dim; ++n) {
    en += n * r(n, n).real();
    if (n >= 1) ea += std::sqrt(static_cast<double>(n)) * r(n, n - 1);
    if (n >= 2) ea2 += std::sqrt(static_cast<double>(n * (n - 1))) * r(n, n - 2);
  }
  const double ex = ea.real();                 // <(a + a^dagger)/2>
  const double ep = ea.imag();                 // <(a - a^dagger)/(2i)>
  const double ex2 = 0.25 * (2.0 * ea2.real() + 2.0 * en + 1.0);
  const double ep2 = 0.25 * (-2.0 * ea2.real() + 2.0 * en + 1.0);
  Squeezing s;
  s.s_x = 4.0 * (ex2 - ex * ex) - 1.0;
  s.s_p = 4.0 * (ep2 - ep * ep) - 1.0;
  s.k = 0.25 * (1.0 + s.s_x) * (1.0 + s.s_p);
  return s;
}

}  // namespace dicke3
