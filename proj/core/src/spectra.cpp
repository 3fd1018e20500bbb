#include "dicke3/spectra.hpp"

#include <cmath>
#include <string>

#include "dicke3/eigensolver.hpp"
#include "dicke3/errors.hpp"
#include "dicke3/hamiltonian.hpp"

namespace dicke3 {

CsvTable SpectrumTable::to_csv() const {
  std::vector<std::string> header{"lambda"};
  for (int j = 1; j <= k(); ++j) header.push_back("E" + std::to_string(j));
  CsvTable t(std::move(header));
  for (std::size_t i = 0; i < lambda_grid.size(); ++i) {
    std::vector<double> row{lambda_grid[i]};
    for (int j = 0; j < k(); ++j) row.push_back(levels(static_cast<Eigen::Index>(i), j));
    t.add_row(row);
  }
  return t;
}

DegeneracyProfile degeneracy_profile(const RealVector& levels, double tol) {
  DegeneracyProfile p;
  p.tolerance = tol;
  double sum = 0.0;
  for (Eigen::Index i = 0; i < levels.size(); ++i) {
    if (i > 0 && levels[i] < levels[i - 1]) {
      throw ParameterError("degeneracy_profile: levels must be ascending");
    }
    if (i == 0 || levels[i] - levels[i - 1] > tol) {
      if (i > 0) p.energies.push_back(sum / p.multiplicities.back());
      p.multiplicities.push_back(1);
      sum = levels[i];
    } else {
      ++p.multiplicities.back();
      sum += levels[i];
    }
  }
  if (!p.multiplicities.empty()) p.energies.push_back(sum / p.multiplicities.back());
  return p;
}

RealVector low_spectrum(const SystemParams& params, int k) {
  if (k < 1) throw ParameterError("k must be >= 1");
  if (k > params.composite_dim()) {
    throw TruncationError(TruncationError::Kind::insufficient,
                          "k=" + std::to_string(k) + " exceeds the space dimension");
  }
  return eigenvalues(hamiltonian_matrix(params), k);
}

Certification TruncationCertifier::certify(const SystemParams& params, int k, double rel_tol) {
  if (!(rel_tol > 0.0)) throw ParameterError("rel_tol must be > 0");
  if (k < 1) throw ParameterError("k must be >= 1");
  params.with_n_max(kCertifyStart).validate();
  const Key key{params.delta, params.epsilon, params.w0, params.lambda, k, rel_tol};
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }

  std::map<int, RealVector> solved;
  auto levels_at = [&](int n) -> const RealVector& {
    auto it = solved.find(n);
    if (it == solved.end()) it = solved.emplace(n, low_spectrum(params.with_n_max(n), k)).first;
    return it->second;
  };

  Certification cert;
  for (int n = kCertifyStart;; n = std::min(2 * n, kCertifyCap)) {
    const RealVector& a = levels_at(n);
    const RealVector& b = levels_at(n + kCertifyStep);
    const double shift = (b - a).cwiseAbs().maxCoeff() / params.w0;
    cert.history.push_back({n, a, shift});
    if (shift < rel_tol) {
      cert.n_max = n;
      break;
    }
    if (n == kCertifyCap) {
      throw TruncationError(TruncationError::Kind::infeasible,
                            "no cutoff up to " + std::to_string(kCertifyCap) +
                                " converges for " + params.describe() + " (last shift " +
                                std::to_string(shift) + ")");
    }
  }

  std::lock_guard lock(mutex_);
  cache_.emplace(key, cert);
  return cert;
}

std::size_t TruncationCertifier::cache_size() const {
  std::lock_guard lock(mutex_);
  return cache_.size();
}

void TruncationCertifier::clear() {
  std::lock_guard lock(mutex_);
  cache_.clear();
}

TruncationCertifier& TruncationCertifier::shared() {
  static TruncationCertifier instance;
  return instance;
}

int certify_truncation(const SystemParams& params, int k, double rel_tol) {
  return TruncationCertifier::shared().certify(params, k, rel_tol).n_max;
}

SpectrumTable spectrum_sweep(const SystemParams& params_base, const std::vector<double>& lambda_grid,
                             int k, const SweepOptions& options) {
  if (lambda_grid.empty()) throw ParameterError("lambda grid is empty");
  for (std::size_t i = 1; i < lambda_grid.size(); ++i) {
    if (!(lambda_grid[i] >= lambda_grid[i - 1])) throw ParameterError("lambda grid must be ascending");
  }

  int n_max = options.n_max;
  if (n_max <= 0) {
    const double top = lambda_grid.back();
    try {
      n_max = certify_truncation(params_base.with_lambda(top), k, options.rel_tol);
    } catch (const TruncationError& e) {
      throw ConvergenceError(top, e.what());
    }
  }

  SpectrumTable table;
  table.lambda_grid = lambda_grid;
  table.n_max_used = n_max;
  table.params_base = params_base.with_n_max(n_max);
  table.levels.resize(static_cast<Eigen::Index>(lambda_grid.size()), k);
  parallel_for(lambda_grid.size(), options.jobs, [&](std::size_t i) {
    const RealVector e = low_spectrum(table.params_base.with_lambda(lambda_grid[i]), k);
    table.levels.row(static_cast<Eigen::Index>(i)) = e.transpose();
  });
  return table;
}

std::vector<double> linear_grid(double min, double max, int steps) {
  if (steps < 2) throw ParameterError("a sweep needs at least 2 steps");
  if (!(max >= min)) throw ParameterError("sweep max must be >= min");
  std::vector<double> g(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) g[static_cast<std::size_t>(i)] = min + (max - min) * i / (steps - 1);
  g.back() = max;
  return g;
}

}  // namespace dicke3
