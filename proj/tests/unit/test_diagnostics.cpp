#include <gtest/gtest.h>

#include <cmath>

#include "dicke3/dicke3.hpp"

using namespace dicke3;

TEST(GroundState, Decoupled) {
  const SystemParams p{1.0, 0.0, 1.0, 0.0, 10};
  const auto gs = ground_state(p);
  EXPECT_NEAR(gs.energy, -1.5, 1e-12);
  EXPECT_FALSE(gs.parity_resolved);
  // all qubits in the sigma_x = +1 state: equal weights on the eight configurations
  for (int c = 0; c < 8; ++c) {
    EXPECT_NEAR(gs.state.amplitudes()[composite_index(c, 0, 10)].real(), 1.0 / std::sqrt(8.0), 1e-12);
  }
}

TEST(GroundState, BundleAndParamsAgree) {
  const SystemParams p{1.0, 0.3, 1.0, 0.6, 20};
  const auto a = ground_state(p);
  const auto b = ground_state(build_full_hamiltonian(p));
  EXPECT_NEAR(a.energy, b.energy, 1e-12);
  EXPECT_LT((a.state.amplitudes() - b.state.amplitudes()).norm(), 1e-10);
}

TEST(GroundState, DegeneratePairResolvedByParity) {
  const SystemParams p{1.0, 0.0, 1.0, 2.0, 120};
  const auto gs = ground_state(p);
  EXPECT_EQ(gs.cluster_size, 2);
  EXPECT_TRUE(gs.parity_resolved);
  RealVector v = gs.state.amplitudes().real();
  const RealVector pv = apply_parity(v, p.n_max);
  EXPECT_NEAR(v.dot(pv), 1.0, 1e-8);
  // phase convention: largest amplitude is real and positive
  Eigen::Index i;
  gs.state.amplitudes().cwiseAbs().maxCoeff(&i);
  EXPECT_GT(gs.state.amplitudes()[i].real(), 0.0);
  // deterministic
  const auto again = ground_state(p);
  EXPECT_EQ(gs.state.amplitudes(), again.state.amplitudes());
}

TEST(GroundState, EnergyDecreasesWithCoupling) {
  double prev = 1e300;
  for (double lam = 0.0; lam <= 1.2; lam += 0.2) {
    const auto gs = ground_state({1.0, 0.2, 1.0, lam, 60});
    EXPECT_LE(gs.energy, prev + 1e-12);
    prev = gs.energy;
    // Hellmann-Feynman: dE/dlambda = <(a + a^dagger) S_z> <= 0
    const double hf = coupling_expectation(gs.state);
    EXPECT_LE(hf, 1e-9);
    if (lam == 0.0) continue;
    const double h = 1e-5;
    const double fd = (ground_state({1.0, 0.2, 1.0, lam + h, 60}).energy -
                       ground_state({1.0, 0.2, 1.0, lam - h, 60}).energy) / (2 * h);
    EXPECT_NEAR(fd, hf, 1e-5);
  }
}

TEST(Report, DecoupledProduct) {
  ReportOptions o;
  o.grid = GridSpec{-4, 4, 41, -4, 4, 41};
  const auto r = build_report({1.0, 0.0, 1.0, 0.0, 60}, o);
  EXPECT_NEAR(r.entropy_S, 0.0, 1e-10);
  EXPECT_NEAR(r.concurrence_C, 0.0, 1e-10);
  EXPECT_NEAR(r.s_x, 0.0, 1e-12);
  EXPECT_NEAR(r.s_p, 0.0, 1e-12);
  // the vacuum W is positive; its far tail is below rounding
  EXPECT_GT(r.wigner_min, -1e-12);
  EXPECT_TRUE(r.q_grid.has_value());
  const std::string text = report_text(r);
  EXPECT_NE(text.find("entropy_S=0\n"), std::string::npos);
  EXPECT_NE(text.find("n_max=20\n"), std::string::npos);
}

TEST(Report, InvariantsAcrossCouplings) {
  ReportOptions o;
  o.grid = GridSpec{-8, 8, 81, -8, 8, 81};
  for (double lam : {0.3, 0.8, 1.3}) {
    const auto r = build_report({1.0, 0.0, 1.0, lam, 60}, o);
    EXPECT_GE(r.entropy_S, 0.0);
    EXPECT_LE(r.entropy_S, 3.0);
    EXPECT_NEAR(r.entropy_S, r.entropy_osc, 1e-8);
    EXPECT_GE(r.concurrence_C, 0.0);
    EXPECT_LE(r.concurrence_C, 1.0);
    EXPECT_NEAR(r.pair_concurrence[0], r.pair_concurrence[1], 1e-10);
    EXPECT_NEAR(r.pair_concurrence[1], r.pair_concurrence[2], 1e-10);
    EXPECT_GE(r.s_x, -1.0);
    EXPECT_GE(r.s_p, -1.0);
    EXPECT_GE(r.K_uncertainty, 0.25 - 1e-9);
    EXPECT_NEAR(r.w_grid->integral(), 1.0, 0.02);
  }
}

TEST(Report, BiasKillsEntanglementAtLargeCoupling) {
  ReportOptions o;
  o.with_grids = false;
  const auto r = build_report({1.0, 0.5, 1.0, 2.0, 60}, o);
  EXPECT_LT(r.entropy_S, 1e-2);
  EXPECT_LT(r.concurrence_C, 1e-3);
  EXPECT_TRUE(std::isnan(r.wigner_min));
}

TEST(DiagnosticsSweep, CsvAndOrdering) {
  SweepOptions o;
  o.jobs = 2;
  const auto rows = diagnostics_sweep({1.0, 0.0, 1.0, 0.0, 60}, linear_grid(0.0, 0.6, 4), o);
  ASSERT_EQ(rows.size(), 4u);
  for (std::size_t i = 0; i < rows.size(); ++i) EXPECT_DOUBLE_EQ(rows[i].lambda, 0.2 * i);
  const std::string csv = diagnostics_csv(rows).str();
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "lambda,E0,S,C,s_x,s_p,K");
}
