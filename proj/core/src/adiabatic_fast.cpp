#include "dicke3/adiabatic_fast.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

#include "dicke3/errors.hpp"
#include "dicke3/hilbert.hpp"
#include "dicke3/laguerre.hpp"

namespace dicke3 {

DisplacedSector DisplacedSector::make(int label, const SystemParams& params) {
  if (label != -3 && label != -1 && label != 1 && label != 3) {
    throw ParameterError("sector label must be -3, -1, +1 or +3");
  }
  const double r = params.lambda / params.w0;
  return {label, label * r, -label * label * params.lambda * r};
}

double sector_energy(const DisplacedSector& sector, int n, const SystemParams& params) {
  if (n < 0) throw ParameterError("sector_energy: n must be >= 0");
  return n * params.w0 + sector.energy_shift;
}

double l_factor(int n, const SystemParams& params) {
  return displaced_overlap(n, n, 2.0 * params.lambda / params.w0);
}

RealMatrix EffectiveQubitBlock::qubit_part(const SystemParams& params) const {
  RealMatrix q = matrix;
  for (int a = 0; a < 8; ++a) q(a, a) -= sector_energy(DisplacedSector::make(labels[a], params), n, params);
  return q;
}

EffectiveQubitBlock effective_qubit_block(int n, const SystemParams& params) {
  params.validate();
  if (n < 0) throw ParameterError("effective_qubit_block: n must be >= 0");
  EffectiveQubitBlock b;
  b.n = n;
  b.l = l_factor(n, params);
  b.matrix = RealMatrix::Zero(8, 8);
  for (int a = 0; a < 8; ++a) {
    const int ca = kGammaOrder[a];
    b.labels[a] = collective_z(ca);
    const auto sector = DisplacedSector::make(b.labels[a], params);
    b.matrix(a, a) = sector_energy(sector, n, params) - 0.5 * params.epsilon * b.labels[a];
    for (int c = 0; c < 8; ++c) {
      const int cb = kGammaOrder[c];
      const int diff = ca ^ cb;
      if (diff == 1 || diff == 2 || diff == 4) {
        // <n| D(s_a r) D(-s_b r) |n> with s_a - s_b = +-2
        const double d = (collective_z(ca) - collective_z(cb)) * params.lambda / params.w0;
        b.matrix(a, c) = -0.5 * params.delta * displaced_overlap(n, n, d);
      }
    }
  }
  return b;
}

std::array<double, 8> ClosedFormEnergies::expanded() const {
  std::array<double, 8> e{minus3, minus1, minus1, minus1, plus1, plus1, plus1, plus3};
  std::sort(e.begin(), e.end());
  return e;
}

ClosedFormEnergies closed_form_qubit_energies(int n, const SystemParams& params) {
  const double l = l_factor(n, params);
  const double t = params.epsilon / params.delta;
  const double r = 0.5 * params.delta * std::sqrt(l * l + t * t);
  return {r, -r, 3.0 * r, -3.0 * r};
}

namespace {

RealVector sym_eigenvalues(const RealMatrix& m) {
  return Eigen::SelfAdjointEigenSolver<RealMatrix>(m, Eigen::EigenvaluesOnly).eigenvalues();
}

}  // namespace

BlockComparison compare_block_closed_form(int n, const SystemParams& params) {
  const auto block = effective_qubit_block(n, params);
  BlockComparison c;
  c.block = sym_eigenvalues(block.matrix);
  c.qubit_part = sym_eigenvalues(block.qubit_part(params));
  c.closed_form = closed_form_qubit_energies(n, params).expanded();
  c.max_dev_qubit_part = 0.0;
  c.max_dev_block = 0.0;
  for (int i = 0; i < 8; ++i) {
    c.max_dev_qubit_part = std::max(c.max_dev_qubit_part, std::abs(c.qubit_part[i] - c.closed_form[i]));
    c.max_dev_block = std::max(c.max_dev_block, std::abs(c.block[i] - c.closed_form[i]));
  }
  return c;
}

std::vector<ApproxLevel> approx_low_spectrum(const SystemParams& params, int k) {
  if (k < 1) throw ParameterError("k must be >= 1");
  const double r = params.lambda / params.w0;
  const int n_top = k + static_cast<int>(std::ceil(9.0 * r * r)) + 2;
  std::vector<ApproxLevel> all;
  all.reserve(8 * static_cast<std::size_t>(n_top + 1));
  for (int n = 0; n <= n_top; ++n) {
    const auto block = effective_qubit_block(n, params);
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(block.matrix);
    for (int j = 0; j < 8; ++j) {
      std::array<double, 4> weight{};  // labels -3, -1, +1, +3
      for (int a = 0; a < 8; ++a) {
        weight[(block.labels[a] + 3) / 2] += es.eigenvectors()(a, j) * es.eigenvectors()(a, j);
      }
      const int best = static_cast<int>(std::max_element(weight.begin(), weight.end()) - weight.begin());
      all.push_back({es.eigenvalues()[j], n, 2 * best - 3});
    }
  }
  std::stable_sort(all.begin(), all.end(),
                   [](const ApproxLevel& a, const ApproxLevel& b) { return a.energy < b.energy; });
  all.resize(std::min<std::size_t>(all.size(), static_cast<std::size_t>(k)));
  return all;
}

SpectrumTable approx_spectrum_sweep(const SystemParams& params_base,
                                    const std::vector<double>& lambda_grid, int k, int jobs) {
  if (lambda_grid.empty()) throw ParameterError("lambda grid is empty");
  SpectrumTable t;
  t.lambda_grid = lambda_grid;
  t.params_base = params_base;
  t.n_max_used = 0;
  t.levels.resize(static_cast<Eigen::Index>(lambda_grid.size()), k);
  parallel_for(lambda_grid.size(), jobs, [&](std::size_t i) {
    const auto lv = approx_low_spectrum(params_base.with_lambda(lambda_grid[i]), k);
    for (int j = 0; j < k; ++j) t.levels(static_cast<Eigen::Index>(i), j) = lv[j].energy;
  });
  return t;
}

CsvTable approx_spectrum_csv(const SpectrumTable& table) {
  const CsvTable plain = table.to_csv();
  auto header = plain.header();
  header.push_back("source");
  CsvTable out(header);
  for (std::size_t i = 0; i < table.lambda_grid.size(); ++i) {
    std::vector<std::string> cells{format_number(table.lambda_grid[i])};
    for (int j = 0; j < table.k(); ++j) cells.push_back(format_number(table.levels(static_cast<Eigen::Index>(i), j)));
    cells.emplace_back("adiabatic_fast");
    out.add_cells(std::move(cells));
  }
  return out;
}

double block_pair_gap(int n, const SystemParams& params) {
  const auto block = effective_qubit_block(n, params);
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(block.matrix);
  double lo = INFINITY;
  double hi = -INFINITY;
  for (int j = 0; j < 8; ++j) {
    double w1 = 0.0;
    for (int a = 0; a < 8; ++a) {
      if (std::abs(block.labels[a]) == 1) w1 += es.eigenvectors()(a, j) * es.eigenvectors()(a, j);
    }
    if (w1 > 0.5) {
      lo = std::min(lo, es.eigenvalues()[j]);
      hi = std::max(hi, es.eigenvalues()[j]);
    }
  }
  return hi - lo;
}

double gap_decay_slope(int n, const SystemParams& params_base, const std::vector<double>& lambdas) {
  if (lambdas.size() < 2) throw ParameterError("gap_decay_slope needs at least two couplings");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (double lam : lambdas) {
    const double x = lam * lam;
    const double y = std::log(block_pair_gap(n, params_base.with_lambda(lam)));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(lambdas.size());
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace dicke3
