#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dicke3/csv.hpp"
#include "dicke3/density.hpp"
#include "dicke3/hamiltonian.hpp"
#include "dicke3/phase_space.hpp"
#include "dicke3/spectra.hpp"

namespace dicke3 {

struct GroundState {
  StateVector state;
  double energy = 0.0;
  double gap = 0.0;               // E1 - E0
  bool near_degenerate = false;   // gap < 1e-10 w0
  bool parity_resolved = false;   // picked the even member of a degenerate cluster
  int cluster_size = 1;           // levels within the degeneracy tolerance of E0
  int n_max = 0;
};

/// Lowest eigenvector, largest-magnitude amplitude made real and positive.
///
/// When several levels lie within `degeneracy_tol` w0 of the ground level
/// and epsilon = 0, parity is diagonalised inside that cluster and the
/// even (+1) state is returned.
GroundState ground_state(const SystemParams& params, double degeneracy_tol = kDegeneracyTolerance);
GroundState ground_state(const HamiltonianBundle& bundle, double degeneracy_tol = kDegeneracyTolerance);

/// Pi v for a real composite vector.
RealVector apply_parity(const RealVector& v, int n_max);

/// <(a + a^dagger)(sz1 + sz2 + sz3)>, i.e. dE0/dlambda for an eigenstate.
double coupling_expectation(const StateVector& psi);

struct ReportOptions {
  bool with_grids = true;
  std::optional<GridSpec> grid;  // default GridSpec::for_coupling
  double rel_tol = kDefaultRelTol;
  int n_max = 0;  // > 0 skips certification
  int jobs = 1;
};

struct GroundStateReport {
  SystemParams params;  // n_max is the cutoff actually used
  double ground_energy = 0.0;
  double gap = 0.0;
  bool parity_resolved = false;
  double entropy_S = 0.0;       // qubits vs oscillator, log2
  double entropy_osc = 0.0;     // same cut computed from the oscillator side
  double concurrence_C = 0.0;   // qubits 2 and 3
  std::array<double, 3> pair_concurrence{};  // (1,2), (1,3), (2,3)
  double s_x = 0.0;
  double s_p = 0.0;
  double K_uncertainty = 0.25;
  double wigner_min = 0.0;      // NaN without grids
  std::optional<PhaseSpaceGrid> q_grid;
  std::optional<PhaseSpaceGrid> w_grid;
};

GroundStateReport build_report(const SystemParams& params, const ReportOptions& options = {});

/// `key=value` lines, one scalar per line.
std::string report_text(const GroundStateReport& report);

struct DiagnosticsRow {
  double lambda;
  double energy;
  double entropy;
  double concurrence;
  double s_x;
  double s_p;
  double k;
};

/// Scalar diagnostics over a coupling grid at one cutoff, certified at the
/// largest coupling (k = 2 levels).
std::vector<DiagnosticsRow> diagnostics_sweep(const SystemParams& params_base,
                                              const std::vector<double>& lambda_grid,
                                              const SweepOptions& options = {});

/// `lambda,E0,S,C,s_x,s_p,K`
CsvTable diagnostics_csv(const std::vector<DiagnosticsRow>& rows);

}  // namespace dicke3
