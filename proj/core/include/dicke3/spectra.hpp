#pragma once

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "dicke3/csv.hpp"
#include "dicke3/operators.hpp"
#include "dicke3/params.hpp"

namespace dicke3 {

inline constexpr double kDegeneracyTolerance = 1e-6;  // in units of w0
inline constexpr double kDefaultRelTol = 1e-8;
inline constexpr int kCertifyStart = 20;
inline constexpr int kCertifyStep = 20;
inline constexpr int kCertifyCap = 400;

struct SpectrumTable {
  std::vector<double> lambda_grid;
  RealMatrix levels;  // grid point x level, each row ascending
  int n_max_used = 0;
  SystemParams params_base;

  int k() const { return static_cast<int>(levels.cols()); }
  /// Header `lambda,E1,...,Ek`.
  CsvTable to_csv() const;
};

struct DegeneracyProfile {
  std::vector<int> multiplicities;
  double tolerance = kDegeneracyTolerance;

  /// Mean energy of each cluster, same order as multiplicities.
  std::vector<double> energies;
};

/// Greedy clustering: a level joins the current group when it lies within
/// `tol` of the previous level. Input must be ascending.
DegeneracyProfile degeneracy_profile(const RealVector& levels, double tol = kDegeneracyTolerance);

/// k lowest eigenvalues of the full Hamiltonian at params.n_max.
RealVector low_spectrum(const SystemParams& params, int k);

struct CertificationStep {
  int n_max;
  RealVector levels;  // k lowest at n_max
  double max_shift;   // max |E(n_max + 20) - E(n_max)| / w0
};

struct Certification {
  int n_max = 0;
  std::vector<CertificationStep> history;
};

/// Finds the smallest n_max in the schedule 20, 40, 80, ... (capped at 400)
/// for which none of the k lowest levels moves by more than rel_tol * w0 when
/// n_max grows by 20. Results are cached per (params, k, rel_tol); params.n_max
/// is ignored. Thread-safe.
class TruncationCertifier {
 public:
  Certification certify(const SystemParams& params, int k, double rel_tol = kDefaultRelTol);

  std::size_t cache_size() const;
  void clear();

  static TruncationCertifier& shared();

 private:
  using Key = std::tuple<double, double, double, double, int, double>;
  mutable std::mutex mutex_;
  std::map<Key, Certification> cache_;
};

/// Shortcut through the shared certifier. Throws TruncationError(infeasible)
/// when the cap is reached.
int certify_truncation(const SystemParams& params, int k, double rel_tol = kDefaultRelTol);

struct SweepOptions {
  int jobs = 1;
  double rel_tol = kDefaultRelTol;
  int n_max = 0;  // > 0 skips certification and uses this cutoff
};

/// k lowest levels over an ascending coupling grid. The cutoff is certified
/// once at the largest coupling and then used for every point. Throws
/// ConvergenceError naming that coupling when certification fails.
SpectrumTable spectrum_sweep(const SystemParams& params_base, const std::vector<double>& lambda_grid,
                             int k, const SweepOptions& options = {});

/// min + (max - min) * i / (steps - 1), i = 0 .. steps-1.
std::vector<double> linear_grid(double min, double max, int steps);

/// Runs fn(i) for i in [0, count) on `jobs` threads; rethrows the first failure.
template <class Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn);

}  // namespace dicke3

#include "dicke3/detail/parallel.hpp"
