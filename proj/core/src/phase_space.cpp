#include "dicke3/phase_space.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "dicke3/detail/parallel.hpp"
#include "dicke3/errors.hpp"

namespace dicke3 {

namespace {

constexpr double kQMassFloor = 0.98;
constexpr double kWignerDrift = 0.02;
constexpr int kMaxEmbedding = 3000;

std::vector<double> axis(double lo, double hi, int n) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  return v;
}

PhaseSpaceGrid empty_grid(const GridSpec& spec) {
  spec.validate();
  PhaseSpaceGrid g;
  g.x_values = axis(spec.x_min, spec.x_max, spec.nx);
  g.p_values = axis(spec.p_min, spec.p_max, spec.np);
  g.values = RealMatrix::Zero(spec.nx, spec.np);
  return g;
}

double max_radius(const GridSpec& s) {
  const double x = std::max(std::abs(s.x_min), std::abs(s.x_max));
  const double p = std::max(std::abs(s.p_min), std::abs(s.p_max));
  return std::hypot(x, p);
}

PhaseSpaceGrid q_on(const Mixture& mix, const GridSpec& spec, int jobs) {
  PhaseSpaceGrid g = empty_grid(spec);
  const Eigen::Index dim = mix.vectors.rows();
  parallel_for(g.x_values.size(), jobs, [&](std::size_t i) {
    Vector coh(dim);
    for (std::size_t j = 0; j < g.p_values.size(); ++j) {
      const Complex alpha{g.x_values[i], g.p_values[j]};
      // <alpha|n> = e^{-|alpha|^2/2} conj(alpha)^n / sqrt(n!)
      coh[0] = std::exp(-0.5 * std::norm(alpha));
      for (Eigen::Index n = 1; n < dim; ++n) {
        coh[n] = coh[n - 1] * std::conj(alpha) / std::sqrt(static_cast<double>(n));
      }
      double q = 0.0;
      for (Eigen::Index k = 0; k < mix.weights.size(); ++k) {
        q += mix.weights[k] * std::norm(coh.dot(mix.vectors.col(k).conjugate()));
      }
      g.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = q / std::numbers::pi;
    }
  });
  return g;
}

}  // namespace

GridSpec GridSpec::for_coupling(double lambda, double w0) {
  const double half = 3.0 * lambda / w0 + 4.0;
  return {-half, half, 201, -half, half, 201};
}

void GridSpec::validate() const {
  if (nx < 2 || np < 2) throw ParameterError("phase-space grid needs at least 2 points per axis");
  if (!(x_max > x_min) || !(p_max > p_min)) throw ParameterError("phase-space grid extent is empty");
}

double PhaseSpaceGrid::integral() const {
  if (x_values.size() < 2 || p_values.size() < 2) return 0.0;
  const double dx = x_values[1] - x_values[0];
  const double dp = p_values[1] - p_values[0];
  return values.sum() * dx * dp;
}

CsvTable PhaseSpaceGrid::to_csv() const {
  CsvTable t({"X", "P", "value"});
  for (std::size_t i = 0; i < x_values.size(); ++i) {
    for (std::size_t j = 0; j < p_values.size(); ++j) {
      t.add_row({x_values[i], p_values[j], values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))});
    }
  }
  return t;
}

PhaseSpaceGrid q_function(const DensityMatrix& rho_osc, const GridSpec& spec, int jobs) {
  const Mixture mix = decompose(rho_osc);
  PhaseSpaceGrid g = q_on(mix, spec, jobs);
  if (g.integral() >= kQMassFloor) return g;

  GridSpec wide = spec;
  const double cx = 0.5 * (spec.x_min + spec.x_max), hx = 0.75 * (spec.x_max - spec.x_min);
  const double cp = 0.5 * (spec.p_min + spec.p_max), hp = 0.75 * (spec.p_max - spec.p_min);
  wide.x_min = cx - hx;
  wide.x_max = cx + hx;
  wide.p_min = cp - hp;
  wide.p_max = cp + hp;
  wide.nx = static_cast<int>(std::ceil(2.0 * hx / spec.dx())) + 1;
  wide.np = static_cast<int>(std::ceil(2.0 * hp / spec.dp())) + 1;
  g = q_on(mix, wide, jobs);
  const double mass = g.integral();
  if (mass < kQMassFloor) {
    throw GridError("Q function grid holds only " + std::to_string(mass) + " of the mass after widening");
  }
  return g;
}

PhaseSpaceGrid wigner_unchecked(const DensityMatrix& rho_osc, const GridSpec& spec, int jobs) {
  PhaseSpaceGrid g = empty_grid(spec);
  const Mixture mix = decompose(rho_osc);
  const Eigen::Index dim = rho_osc.dim();
  const Eigen::Index kk = mix.weights.size();

  // Embed in a space large enough to hold every displaced copy of the state.
  const double reach = std::sqrt(static_cast<double>(dim)) + max_radius(spec) + 8.0;
  const Eigen::Index m = std::max<Eigen::Index>(
      dim, std::min<Eigen::Index>(kMaxEmbedding, static_cast<Eigen::Index>(std::ceil(reach * reach))));

  // Eigenbasis of the truncated X quadrature: X U = U diag(xi), xi ascending.
  RealVector diag = RealVector::Zero(m);
  RealVector sub(m - 1);
  for (Eigen::Index n = 1; n < m; ++n) sub[n - 1] = 0.5 * std::sqrt(static_cast<double>(n));
  Eigen::SelfAdjointEigenSolver<RealMatrix> es;
  es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  const RealVector& xi = es.eigenvalues();
  const RealMatrix& u = es.eigenvectors();

  // Parity maps xi_j to xi_{m-1-j}: s_j = U_j^T Pi U_{m-1-j}.
  RealVector s(m);
  for (Eigen::Index j = 0; j < m; ++j) {
    double acc = 0.0;
    for (Eigen::Index n = 0; n < m; ++n) acc += ((n % 2) ? -1.0 : 1.0) * u(n, j) * u(n, m - 1 - j);
    s[j] = acc;
  }

  // T = diag(i^n) turns X into -P, so T^dagger U e^{-2ix xi} U^T T = D(x)^dagger.
  Vector t(m);
  for (Eigen::Index n = 0; n < m; ++n) {
    static const Complex powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    t[n] = powers[n % 4];
  }
  Matrix v = Matrix::Zero(m, kk);
  v.topRows(dim) = mix.vectors;
  const Matrix y = u.transpose() * (t.asDiagonal() * v);

  Matrix phase_p(static_cast<Eigen::Index>(g.p_values.size()), m);
  for (std::size_t j = 0; j < g.p_values.size(); ++j) {
    for (Eigen::Index a = 0; a < m; ++a) {
      phase_p(static_cast<Eigen::Index>(j), a) = std::polar(1.0, 4.0 * g.p_values[j] * xi[a]);
    }
  }

  std::vector<double> imag_rows(g.x_values.size(), 0.0);
  parallel_for(g.x_values.size(), jobs, [&](std::size_t i) {
    const double x = g.x_values[i];
    Matrix z = y;
    for (Eigen::Index a = 0; a < m; ++a) z.row(a) *= std::polar(1.0, -2.0 * x * xi[a]);
    const Matrix shifted = t.conjugate().asDiagonal() * (u * z);
    const Matrix ut = u.transpose() * shifted;  // components on the X eigenbasis
    Vector c = Vector::Zero(m);
    for (Eigen::Index k = 0; k < kk; ++k) {
      for (Eigen::Index a = 0; a < m; ++a) {
        c[a] += mix.weights[k] * s[a] * std::conj(ut(a, k)) * ut(m - 1 - a, k);
      }
    }
    const Vector w = (2.0 / std::numbers::pi) * (phase_p * c);
    for (Eigen::Index j = 0; j < w.size(); ++j) {
      g.values(static_cast<Eigen::Index>(i), j) = w[j].real();
      imag_rows[i] = std::max(imag_rows[i], std::abs(w[j].imag()));
    }
  });
  g.max_imag = *std::max_element(imag_rows.begin(), imag_rows.end());
  return g;
}

PhaseSpaceGrid wigner_function(const DensityMatrix& rho_osc, const GridSpec& spec, int jobs) {
  PhaseSpaceGrid g = wigner_unchecked(rho_osc, spec, jobs);
  const double total = g.integral();
  if (std::abs(total - 1.0) > kWignerDrift) {
    const int n_max = static_cast<int>(rho_osc.dim()) - 1;
    throw TruncationError(TruncationError::Kind::insufficient,
                          "Wigner function integrates to " + std::to_string(total) +
                              " (n_max=" + std::to_string(n_max) + ")",
                          2 * n_max);
  }
  return g;
}

std::vector<double> x_marginal(const PhaseSpaceGrid& grid) {
  const double dp = grid.p_values.size() > 1 ? grid.p_values[1] - grid.p_values[0] : 0.0;
  std::vector<double> out(grid.x_values.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = grid.values.row(static_cast<Eigen::Index>(i)).sum() * dp;
  return out;
}

CatAnalysis detect_cat(const PhaseSpaceGrid& w) {
  CatAnalysis cat;
  const Eigen::Index nx = w.values.rows();
  cat.max_value = w.values.maxCoeff();
  // interference fringes can be as tall as the lobes, but they cancel in the
  // X marginal, so the lobes are located there
  const std::vector<double> m = x_marginal(w);
  struct Peak { Eigen::Index i; double v; };
  std::vector<Peak> peaks;
  for (Eigen::Index i = 1; i + 1 < nx; ++i) {
    const auto k = static_cast<std::size_t>(i);
    if (m[k] > m[k - 1] && m[k] > m[k + 1]) peaks.push_back({i, m[k]});
  }
  cat.peaks = static_cast<int>(peaks.size());
  if (peaks.size() < 2) return cat;
  std::partial_sort(peaks.begin(), peaks.begin() + 2, peaks.end(),
                    [](const Peak& a, const Peak& b) { return a.v > b.v; });
  Eigen::Index a = peaks[0].i, b = peaks[1].i;
  if (a > b) std::swap(a, b);
  cat.peak_x[0] = w.x_values[static_cast<std::size_t>(a)];
  cat.peak_x[1] = w.x_values[static_cast<std::size_t>(b)];
  cat.peak_value[0] = w.values.row(a).maxCoeff();
  cat.peak_value[1] = w.values.row(b).maxCoeff();
  cat.separation = cat.peak_x[1] - cat.peak_x[0];
  if (b - a < 2) return cat;
  cat.fringe_min = w.values.middleRows(a + 1, b - a - 1).minCoeff();
  cat.is_cat = cat.separation >= 2.0 && cat.fringe_min < -0.01 * cat.max_value;
  return cat;
}

}  // namespace dicke3
