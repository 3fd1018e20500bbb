#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

#include "dicke3/dicke3.hpp"

using namespace dicke3;

namespace {

RealVector eig(const RealMatrix& m) { return Eigen::SelfAdjointEigenSolver<RealMatrix>(m).eigenvalues(); }

}  // namespace

TEST(Sector, EnergyShifts) {
  const SystemParams p{1.0, 0.0, 1.0, 1.0, 10};
  EXPECT_NEAR(sector_energy(DisplacedSector::make(3, p), 0, p), -9.0, 1e-15);
  EXPECT_NEAR(sector_energy(DisplacedSector::make(-3, p), 0, p), -9.0, 1e-15);
  const SystemParams q{1.0, 0.0, 1.0, 0.0, 10};
  EXPECT_NEAR(sector_energy(DisplacedSector::make(1, q), 2, q), 2.0, 1e-15);
  const SystemParams r{1.0, 0.0, 1.0, 0.5, 10};
  EXPECT_NEAR(sector_energy(DisplacedSector::make(-1, r), 1, r), 0.75, 1e-15);
  EXPECT_NEAR(DisplacedSector::make(-3, r).displacement, -1.5, 1e-15);
  EXPECT_THROW(DisplacedSector::make(2, r), ParameterError);
}

TEST(Block, DecoupledEigenvalues) {
  const SystemParams p{0.8, 0.6, 10.0, 0.0, 10};
  const auto b = effective_qubit_block(0, p);
  EXPECT_DOUBLE_EQ(b.l, 1.0);
  const RealVector e = eig(b.matrix);
  const double eq = p.qubit_splitting();
  const double expect[8] = {-1.5, -0.5, -0.5, -0.5, 0.5, 0.5, 0.5, 1.5};
  for (int i = 0; i < 8; ++i) EXPECT_NEAR(e[i], expect[i] * eq, 1e-12);
}

TEST(Block, HermitianAndBasisOrder) {
  const SystemParams p{1.0, 0.4, 5.0, 0.9, 10};
  const auto b = effective_qubit_block(3, p);
  EXPECT_TRUE(b.matrix.isApprox(b.matrix.transpose()));
  EXPECT_EQ(b.labels, (std::array<int, 8>{3, 1, 1, 1, -1, -1, -1, -3}));
  // no double or triple flips
  EXPECT_EQ(b.matrix(0, 4), 0.0);
  EXPECT_EQ(b.matrix(0, 7), 0.0);
  EXPECT_NEAR(b.matrix(0, 1), -0.5 * p.delta * b.l, 1e-15);
}

TEST(Block, ProjectionOfFullHamiltonian) {
  // <gamma_a|H|gamma_b> evaluated with explicit displaced vectors in a large Fock space
  const SystemParams p{1.0, 0.3, 4.0, 0.6, 60};
  const int n = 2;
  const RealMatrix h = hamiltonian_matrix(p);
  RealMatrix g(h.rows(), 8);
  g.setZero();
  for (int a = 0; a < 8; ++a) {
    const int c = kGammaOrder[a];
    const RealMatrix d = displacement_operator(-collective_z(c) * p.lambda / p.w0, p.n_max);
    g.block(static_cast<Eigen::Index>(c) * (p.n_max + 1), a, p.n_max + 1, 1) = d.col(n);
  }
  EXPECT_LT((g.transpose() * g - RealMatrix::Identity(8, 8)).cwiseAbs().maxCoeff(), 1e-10);
  const RealMatrix proj = g.transpose() * h * g;
  EXPECT_LT((proj - effective_qubit_block(n, p).matrix).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(ClosedForm, Values) {
  const SystemParams p{1.0, 0.0, 1.0, 0.0, 10};
  const auto c = closed_form_qubit_energies(0, p);
  EXPECT_DOUBLE_EQ(c.plus1, 0.5);
  EXPECT_DOUBLE_EQ(c.minus3, -1.5);
  const SystemParams q{1.0, 0.0, 1.0, 1.0, 10};
  EXPECT_NEAR(closed_form_qubit_energies(0, q).plus1, 0.5 * std::exp(-2.0), 1e-15);
  // l -> 0 leaves +-epsilon/2
  const SystemParams r = SystemParams::from_theta(1.0, std::numbers::pi / 6, 1.0, 4.0);
  EXPECT_NEAR(closed_form_qubit_energies(0, r).plus1, 0.5 * r.epsilon, 1e-12);
  EXPECT_NEAR(closed_form_qubit_energies(0, r).plus3, 1.5 * r.epsilon, 1e-12);
}

TEST(ClosedForm, EqualsQubitPartOfBlock) {
  for (double theta : {0.0, std::numbers::pi / 6, std::numbers::pi / 3}) {
    for (double lam : {0.1, 0.3, 0.8}) {
      const SystemParams p = SystemParams::from_theta(0.1, theta, 1.0, lam);
      for (int n : {0, 1, 4}) {
        const auto cmp = compare_block_closed_form(n, p);
        EXPECT_LT(cmp.max_dev_qubit_part, 1e-12) << theta << ' ' << lam << ' ' << n;
      }
    }
  }
}

TEST(ClosedForm, ThetaZeroTriplets) {
  const SystemParams p{1.0, 0.0, 1.0, 0.4, 10};
  const auto b = effective_qubit_block(2, p);
  const RealVector e = eig(b.qubit_part(p));
  const double half = 0.5 * p.delta * std::abs(b.l);
  int plus = 0, minus = 0;
  for (int i = 0; i < 8; ++i) {
    plus += std::abs(e[i] - half) < 1e-12;
    minus += std::abs(e[i] + half) < 1e-12;
  }
  EXPECT_EQ(plus, 3);
  EXPECT_EQ(minus, 3);
}

TEST(ClosedForm, ShiftedBlockAtModerateCoupling) {
  // The closed forms leave out the sector energies, so the full block departs
  // from them by an amount set by lambda^2 / w0, never more than the -3 shift
  // plus the qubit scale.
  const SystemParams p = SystemParams::from_theta(0.1, std::numbers::pi / 6, 1.0, 0.3);
  const auto cmp = compare_block_closed_form(0, p);
  const double l2 = p.lambda * p.lambda / p.w0;
  EXPECT_GT(cmp.max_dev_block, 0.5 * l2);
  EXPECT_LT(cmp.max_dev_block, 9.0 * l2 + 3.0 * p.qubit_splitting());
  EXPECT_LT(cmp.max_dev_qubit_part, 1e-12);
}

TEST(ApproxSpectrum, DecoupledIsExact) {
  const SystemParams p{1.0, 0.2, 1.0, 0.0, 20};
  const auto approx = approx_low_spectrum(p, 16);
  const RealVector exact = low_spectrum(p, 16);
  for (int i = 0; i < 16; ++i) EXPECT_NEAR(approx[i].energy, exact[i], 1e-10);
  EXPECT_EQ(approx[0].n, 0);
}

TEST(ApproxSpectrum, PairsFormAtLargeCoupling) {
  const SystemParams p{0.1, 0.0, 1.0, 1.0, 60};
  const auto a = approx_low_spectrum(p, 8);
  for (int i = 0; i < 8; i += 2) EXPECT_LT(a[i + 1].energy - a[i].energy, 1e-3);
  EXPECT_EQ(std::abs(a[0].dominant_label), 3);
}

TEST(ApproxSpectrum, MatchesExactDeepInRegime) {
  const SystemParams p{0.05, 0.0, 1.0, 0.5, 60};
  const auto a = approx_low_spectrum(p, 8);
  const int n = certify_truncation(p, 8);
  const RealVector e = low_spectrum(p.with_n_max(n), 8);
  for (int i = 0; i < 8; ++i) EXPECT_NEAR(a[i].energy, e[i], 0.01 * p.w0);
}

TEST(ApproxSpectrum, CsvHasSourceColumn) {
  const auto t = approx_spectrum_sweep({0.1, 0.0, 1.0, 0.0, 10}, {0.0, 0.5}, 3);
  const std::string s = approx_spectrum_csv(t).str();
  EXPECT_EQ(s.substr(0, s.find('\n')), "lambda,E1,E2,E3,source");
  EXPECT_NE(s.find(",adiabatic_fast\n"), std::string::npos);
}

TEST(GapDecay, GaussianSlope) {
  const SystemParams p{0.05, 0.0, 1.0, 0.0, 10};
  const double slope = gap_decay_slope(0, p, linear_grid(0.5, 1.5, 11));
  EXPECT_NEAR(slope, -2.0, 0.02);
  // the gap itself is about 2 delta l at n = 0
  const SystemParams q = p.with_lambda(1.0);
  EXPECT_NEAR(block_pair_gap(0, q) / (2.0 * p.delta * l_factor(0, q)), 1.0, 0.05);
}

// Build the displaced basis explicitly in the composite space and project the
// full Hamiltonian onto it.
TEST(EffectiveBlock, MatchesExplicitProjection) {
  const int n_max = 70;
  for (const SystemParams& base : {SystemParams{0.3, 0.0, 1.0, 0.4, n_max}, SystemParams{0.2, 0.15, 1.0, 0.7, n_max}}) {
    const RealMatrix h = hamiltonian_matrix(base);
    RealMatrix disp[7];  // indexed by label + 3
    for (int s : {-3, -1, 1, 3}) disp[s + 3] = displacement_operator(-s * base.lambda / base.w0, n_max);
    for (int n : {0, 1, 3}) {
      RealMatrix v = RealMatrix::Zero(h.rows(), 8);
      for (int a = 0; a < 8; ++a) {
        const int c = kGammaOrder[a];
        v.block(composite_index(c, 0, n_max), a, n_max + 1, 1) = disp[collective_z(c) + 3].col(n);
      }
      const RealMatrix gram = v.transpose() * v;
      EXPECT_LT((gram - RealMatrix::Identity(8, 8)).cwiseAbs().maxCoeff(), 1e-12) << "n=" << n;
      const RealMatrix projected = v.transpose() * h * v;
      const auto b = effective_qubit_block(n, base);
      EXPECT_LT((projected - b.matrix).cwiseAbs().maxCoeff(), 1e-10) << "n=" << n;
    }
  }
}
