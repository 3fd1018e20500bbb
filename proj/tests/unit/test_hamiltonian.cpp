#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "dicke3/dicke3.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace dicke3;

TEST(Hamiltonian, MatchesTensorAssembly) {
  testkit::Gen gen(11);
  for (int trial = 0; trial < 5; ++trial) {
    const SystemParams p = gen.params(7);
    const Matrix ref = testkit::hamiltonian_from_tensors(p);
    const RealMatrix h = hamiltonian_matrix(p);
    EXPECT_LT((ref - h.cast<Complex>()).cwiseAbs().maxCoeff(), 1e-13) << p.describe();
  }
}

TEST(Hamiltonian, BundleInvariants) {
  const SystemParams p{1.0, 0.0, 1.0, 0.7, 15};
  const auto b = build_full_hamiltonian(p);
  EXPECT_EQ(b.h_total.dim(), 8 * 16);
  EXPECT_TRUE(b.h_total.is_real());
  EXPECT_LT(hermiticity_defect(b.h_total.matrix()), 1e-12);
  const Matrix& h = b.h_total.matrix();
  const Matrix& pi = b.parity_op.matrix();
  EXPECT_LT((h * pi - pi * h).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Hamiltonian, CouplingMatrixElement) {
  const SystemParams p{1.0, 0.3, 1.0, 0.4, 10};
  const RealMatrix h = hamiltonian_matrix(p);
  const int eee = qubit_config("eee");
  for (int n = 0; n < 10; ++n) {
    EXPECT_NEAR(h(composite_index(eee, n, 10), composite_index(eee, n + 1, 10)),
                3.0 * p.lambda * std::sqrt(n + 1.0), 1e-14);
  }
}

TEST(Hamiltonian, DecoupledSpectrum) {
  const SystemParams p{1.0, 0.0, 1.0, 0.0, 6};
  const RealVector e = eigenvalues(hamiltonian_matrix(p));
  std::vector<double> expect;
  for (int n = 0; n <= 6; ++n)
    for (int s : {-3, -1, -1, -1, 1, 1, 1, 3}) expect.push_back(n + 0.5 * s);
  std::sort(expect.begin(), expect.end());
  for (std::size_t i = 0; i < expect.size(); ++i) EXPECT_NEAR(e[static_cast<Eigen::Index>(i)], expect[i], 1e-10);
  EXPECT_NEAR(e[0], -1.5, 1e-12);
}

TEST(Hamiltonian, DecoupledBiasedSpectrum) {
  testkit::Gen gen(5);
  for (int trial = 0; trial < 4; ++trial) {
    SystemParams p = gen.params(5);
    p.lambda = 0.0;
    const RealVector e = eigenvalues(hamiltonian_matrix(p));
    std::vector<double> expect;
    for (int n = 0; n <= 5; ++n)
      for (int s : {-3, -1, -1, -1, 1, 1, 1, 3}) expect.push_back(n * p.w0 + 0.5 * s * p.qubit_splitting());
    std::sort(expect.begin(), expect.end());
    for (std::size_t i = 0; i < expect.size(); ++i)
      EXPECT_NEAR(e[static_cast<Eigen::Index>(i)], expect[i], 1e-10);
  }
}

TEST(Parity, Basics) {
  const int n_max = 9;
  const RealMatrix pi = parity_matrix(n_max);
  EXPECT_TRUE((pi * pi).isApprox(RealMatrix::Identity(pi.rows(), pi.cols())));
  EXPECT_TRUE(pi.isApprox(pi.transpose()));
  RealVector ggg0 = RealVector::Zero(pi.rows());
  ggg0[composite_index(qubit_config("ggg"), 0, n_max)] = 1.0;
  const RealVector out = pi * ggg0;
  EXPECT_EQ(out[composite_index(qubit_config("eee"), 0, n_max)], 1.0);
  EXPECT_EQ(out.cwiseAbs().sum(), 1.0);
}

TEST(Parity, CommutesOnlyWithoutBias) {
  const int n_max = 12;
  const RealMatrix pi = parity_matrix(n_max);
  for (double lam : {0.0, 0.3, 0.9, 1.7}) {
    const RealMatrix h = hamiltonian_matrix({1.0, 0.0, 1.0, lam, n_max});
    EXPECT_LT((h * pi - pi * h).cwiseAbs().maxCoeff(), 1e-10) << lam;
  }
  double prev = 0.0;
  for (double eps : {0.25, 0.5, 1.0}) {
    const RealMatrix h = hamiltonian_matrix({1.0, eps, 1.0, 0.5, n_max});
    const double c = (h * pi - pi * h).cwiseAbs().maxCoeff();
    EXPECT_GT(c, 0.1);
    if (prev > 0.0) EXPECT_NEAR(c / prev, 2.0, 1e-12);  // linear in epsilon
    prev = c;
  }
}

TEST(Permutation, RelabelsQubits) {
  const int n_max = 4;
  const RealMatrix id = permutation_operator({1, 2, 3}, n_max);
  EXPECT_TRUE(id.isApprox(RealMatrix::Identity(id.rows(), id.cols())));
  EXPECT_EQ(permute_config(qubit_config("egg"), {1, 3, 2}), qubit_config("egg"));
  EXPECT_EQ(permute_config(qubit_config("geg"), {1, 3, 2}), qubit_config("gge"));
  EXPECT_THROW(permutation_operator({1, 1, 2}, n_max), ParameterError);
}

TEST(Permutation, CommutesWithHamiltonian) {
  testkit::Gen gen(21);
  for (int trial = 0; trial < 4; ++trial) {
    const SystemParams p = gen.params(8);
    const RealMatrix h = hamiltonian_matrix(p);
    for (const auto& perm : all_permutations()) {
      const RealMatrix u = permutation_operator(perm, p.n_max);
      EXPECT_TRUE((u.transpose() * u).isApprox(RealMatrix::Identity(u.rows(), u.cols())));
      EXPECT_LT((h * u - u * h).cwiseAbs().maxCoeff(), 1e-12);
    }
  }
}
