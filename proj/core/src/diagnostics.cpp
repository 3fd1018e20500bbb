#include "dicke3/diagnostics.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>
#include <sstream>

#include "dicke3/eigensolver.hpp"
#include "dicke3/errors.hpp"
#include "dicke3/hilbert.hpp"

namespace dicke3 {

namespace {

constexpr int kGroundLevels = 4;

StateVector fix_phase(const RealVector& v) {
  const double top = v.cwiseAbs().maxCoeff();
  Eigen::Index pick = 0;
  while (std::abs(v[pick]) < top * (1.0 - 1e-9)) ++pick;
  RealVector out = (v[pick] < 0.0) ? RealVector(-v) : v;
  return StateVector::normalized(out.cast<Complex>());
}

GroundState solve_ground(const RealMatrix& h, const SystemParams& params, double tol) {
  const int k = std::min<int>(kGroundLevels, static_cast<int>(h.rows()));
  const RealEigenpairs ep = eigendecompose(h, k);
  GroundState gs;
  gs.energy = ep.values[0];
  gs.gap = k > 1 ? ep.values[1] - ep.values[0] : std::numeric_limits<double>::infinity();
  gs.near_degenerate = gs.gap < 1e-10 * params.w0;
  gs.n_max = params.n_max;
  int cluster = 1;
  while (cluster < k && ep.values[cluster] - ep.values[0] < tol * params.w0) ++cluster;
  gs.cluster_size = cluster;

  RealVector v = ep.vectors.col(0);
  if (cluster > 1 && params.epsilon == 0.0) {
    const RealMatrix basis = ep.vectors.leftCols(cluster);
    RealMatrix pb(basis.rows(), cluster);
    for (int j = 0; j < cluster; ++j) pb.col(j) = apply_parity(basis.col(j), params.n_max);
    RealMatrix restricted = basis.transpose() * pb;
    restricted = 0.5 * (restricted + restricted.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(restricted);
    v = basis * es.eigenvectors().col(cluster - 1);  // eigenvalue closest to +1
    gs.parity_resolved = true;
  }
  gs.state = fix_phase(v);
  return gs;
}

}  // namespace

RealVector apply_parity(const RealVector& v, int n_max) {
  RealVector out(v.size());
  for (int c = 0; c < kQubitDim; ++c) {
    for (int n = 0; n <= n_max; ++n) {
      out[composite_index(c ^ 7, n, n_max)] = ((n % 2) ? -1.0 : 1.0) * v[composite_index(c, n, n_max)];
    }
  }
  return out;
}

GroundState ground_state(const SystemParams& params, double degeneracy_tol) {
  return solve_ground(hamiltonian_matrix(params), params, degeneracy_tol);
}

GroundState ground_state(const HamiltonianBundle& bundle, double degeneracy_tol) {
  if (!bundle.h_total.is_real()) throw ParameterError("ground_state expects a real Hamiltonian");
  return solve_ground(bundle.h_total.matrix().real(), bundle.params, degeneracy_tol);
}

double coupling_expectation(const StateVector& psi) {
  const Eigen::Index osc = psi.dim() / kQubitDim;
  const Vector& a = psi.amplitudes();
  double acc = 0.0;
  for (int c = 0; c < kQubitDim; ++c) {
    const int s = collective_z(c);
    for (Eigen::Index n = 0; n + 1 < osc; ++n) {
      const Complex lo = a[c * osc + n];
      const Complex hi = a[c * osc + n + 1];
      acc += 2.0 * s * std::sqrt(static_cast<double>(n + 1)) * std::real(std::conj(lo) * hi);
    }
  }
  return acc;
}

GroundStateReport build_report(const SystemParams& params, const ReportOptions& options) {
  params.validate();
  const int n_max = options.n_max > 0 ? options.n_max : certify_truncation(params, 2, options.rel_tol);
  const SystemParams p = params.with_n_max(n_max);
  const GroundState gs = ground_state(p);

  GroundStateReport r;
  r.params = p;
  r.ground_energy = gs.energy;
  r.gap = gs.gap;
  r.parity_resolved = gs.parity_resolved;

  const DensityMatrix rho_q = partial_trace(gs.state, Keep::qubits);
  const DensityMatrix rho_osc = partial_trace(gs.state, Keep::oscillator);
  r.entropy_S = std::min(3.0, von_neumann_entropy(rho_q));
  r.entropy_osc = von_neumann_entropy(rho_osc);
  r.pair_concurrence = {concurrence(qubit_pair(rho_q, 1, 2)), concurrence(qubit_pair(rho_q, 1, 3)),
                        concurrence(qubit_pair(rho_q, 2, 3))};
  r.concurrence_C = r.pair_concurrence[2];
  const Squeezing sq = squeezing_parameters(rho_osc);
  r.s_x = sq.s_x;
  r.s_p = sq.s_p;
  r.K_uncertainty = sq.k;

  r.wigner_min = std::numeric_limits<double>::quiet_NaN();
  if (options.with_grids) {
    const GridSpec spec = options.grid.value_or(GridSpec::for_coupling(p.lambda, p.w0));
    r.q_grid = q_function(rho_osc, spec, options.jobs);
    r.w_grid = wigner_function(rho_osc, spec, options.jobs);
    r.wigner_min = r.w_grid->min();
  }
  return r;
}

std::string report_text(const GroundStateReport& r) {
  std::ostringstream os;
  auto kv = [&os](const char* key, double v) { os << key << '=' << format_number(v) << '\n'; };
  kv("delta", r.params.delta);
  kv("epsilon", r.params.epsilon);
  kv("w0", r.params.w0);
  kv("lambda", r.params.lambda);
  os << "n_max=" << r.params.n_max << '\n';
  kv("ground_energy", r.ground_energy);
  kv("gap", r.gap);
  os << "parity_resolved=" << (r.parity_resolved ? "true" : "false") << '\n';
  kv("entropy_S", r.entropy_S);
  kv("concurrence_C", r.concurrence_C);
  kv("concurrence_12", r.pair_concurrence[0]);
  kv("concurrence_13", r.pair_concurrence[1]);
  kv("concurrence_23", r.pair_concurrence[2]);
  kv("s_x", r.s_x);
  kv("s_p", r.s_p);
  kv("K_uncertainty", r.K_uncertainty);
  if (std::isfinite(r.wigner_min)) {
    kv("wigner_min", r.wigner_min);
  } else {
    os << "wigner_min=nan\n";
  }
  return os.str();
}

std::vector<DiagnosticsRow> diagnostics_sweep(const SystemParams& params_base,
                                              const std::vector<double>& lambda_grid,
                                              const SweepOptions& options) {
  if (lambda_grid.empty()) throw ParameterError("lambda grid is empty");
  int n_max = options.n_max;
  if (n_max <= 0) {
    const double top = *std::max_element(lambda_grid.begin(), lambda_grid.end());
    try {
      n_max = certify_truncation(params_base.with_lambda(top), 2, options.rel_tol);
    } catch (const TruncationError& e) {
      throw ConvergenceError(top, e.what());
    }
  }
  std::vector<DiagnosticsRow> rows(lambda_grid.size());
  ReportOptions ro;
  ro.with_grids = false;
  ro.n_max = n_max;
  parallel_for(lambda_grid.size(), options.jobs, [&](std::size_t i) {
    const auto r = build_report(params_base.with_lambda(lambda_grid[i]), ro);
    rows[i] = {lambda_grid[i], r.ground_energy, r.entropy_S, r.concurrence_C, r.s_x, r.s_p, r.K_uncertainty};
  });
  return rows;
}

CsvTable diagnostics_csv(const std::vector<DiagnosticsRow>& rows) {
  CsvTable t({"lambda", "E0", "S", "C", "s_x", "s_p", "K"});
  for (const auto& r : rows) t.add_row({r.lambda, r.energy, r.entropy, r.concurrence, r.s_x, r.s_p, r.k});
  return t;
}

}  // namespace dicke3
