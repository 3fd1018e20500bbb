#include "dicke3/eigensolver.hpp"

#include <complex>
#define LAPACK_COMPLEX_CPP
#include <lapacke.h>

#include <string>
#include <vector>

#include "dicke3/errors.hpp"

namespace dicke3 {

namespace {

double asymmetry(const RealMatrix& h) {
  return (h - h.transpose()).cwiseAbs().maxCoeff();
}

int clamp_k(int k, Eigen::Index dim) {
  return (k <= 0 || k > dim) ? static_cast<int>(dim) : k;
}

RealEigenpairs run_dsyevr(const RealMatrix& h, int k, bool want_vectors) {
  const lapack_int n = static_cast<lapack_int>(h.rows());
  RealMatrix a = h;  // column major, overwritten by LAPACK
  RealVector w(n);
  RealMatrix z(want_vectors ? n : 1, want_vectors ? k : 1);
  std::vector<lapack_int> isuppz(2 * static_cast<std::size_t>(std::max(k, 1)));
  lapack_int found = 0;
  const char range = (k == n) ? 'A' : 'I';
  const lapack_int info =
      LAPACKE_dsyevr(LAPACK_COL_MAJOR, want_vectors ? 'V' : 'N', range, 'L', n, a.data(), n, 0.0,
                     0.0, 1, k, 0.0, &found, w.data(), z.data(), z.rows(), isuppz.data());
  if (info != 0) throw std::runtime_error("dsyevr failed, info=" + std::to_string(info));
  RealEigenpairs out;
  out.values = w.head(found);
  if (want_vectors) out.vectors = z.leftCols(found);
  return out;
}

}  // namespace

RealEigenpairs eigendecompose(const RealMatrix& h, int k) {
  if (h.rows() != h.cols()) throw NotHermitianError("eigendecompose: matrix is not square");
  if (h.rows() == 0) return {};
  const double defect = asymmetry(h);
  if (!(defect <= kHermitianTolerance * std::max(1.0, h.cwiseAbs().maxCoeff()))) {
    throw NotHermitianError("eigendecompose: matrix is not symmetric (defect " +
                            std::to_string(defect) + ")");
  }
  return run_dsyevr(h, clamp_k(k, h.rows()), true);
}

RealVector eigenvalues(const RealMatrix& h, int k) {
  if (h.rows() != h.cols()) throw NotHermitianError("eigenvalues: matrix is not square");
  if (h.rows() == 0) return {};
  const double defect = asymmetry(h);
  if (!(defect <= kHermitianTolerance * std::max(1.0, h.cwiseAbs().maxCoeff()))) {
    throw NotHermitianError("eigenvalues: matrix is not symmetric");
  }
  return run_dsyevr(h, clamp_k(k, h.rows()), false).values;
}

Eigenpairs eigendecompose(const DenseHermitianOperator& h, int k) {
  if (h.dim() == 0) return {};
  const int kk = clamp_k(k, h.dim());
  if (h.is_real()) {
    RealEigenpairs r = run_dsyevr(h.matrix().real(), kk, true);
    return {std::move(r.values), r.vectors.cast<Complex>()};
  }

  const lapack_int n = static_cast<lapack_int>(h.dim());
  Matrix a = h.matrix();
  RealVector w(n);
  Matrix z(n, kk);
  std::vector<lapack_int> isuppz(2 * static_cast<std::size_t>(kk));
  lapack_int found = 0;
  const lapack_int info = LAPACKE_zheevr(
      LAPACK_COL_MAJOR, 'V', kk == n ? 'A' : 'I', 'L', n,
      reinterpret_cast<lapack_complex_double*>(a.data()), n, 0.0, 0.0, 1, kk, 0.0, &found,
      w.data(), reinterpret_cast<lapack_complex_double*>(z.data()), n, isuppz.data());
  if (info != 0) throw std::runtime_error("zheevr failed, info=" + std::to_string(info));
  return {w.head(found), z.leftCols(found)};
}

}  // namespace dicke3
