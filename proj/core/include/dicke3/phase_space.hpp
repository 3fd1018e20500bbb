#pragma once

#include <vector>

#include "dicke3/csv.hpp"
#include "dicke3/density.hpp"

namespace dicke3 {

struct GridSpec {
  double x_min = -4.0, x_max = 4.0;
  int nx = 201;
  double p_min = -4.0, p_max = 4.0;
  int np = 201;

  /// Square grid X, P in [-(3 lambda / w0 + 4), 3 lambda / w0 + 4], 201 x 201.
  static GridSpec for_coupling(double lambda, double w0);

  double dx() const { return (x_max - x_min) / (nx - 1); }
  double dp() const { return (p_max - p_min) / (np - 1); }
  void validate() const;
};

/// Phase-space samples; values(i, j) belongs to (x_values[i], p_values[j]).
struct PhaseSpaceGrid {
  std::vector<double> x_values;
  std::vector<double> p_values;
  RealMatrix values;
  double max_imag = 0.0;  // largest discarded imaginary part

  double min() const { return values.minCoeff(); }
  double max() const { return values.maxCoeff(); }
  /// Riemann sum over the grid.
  double integral() const;

  /// Long form `X,P,value`, X outer, P inner.
  CsvTable to_csv() const;
};

/// Q(X, P) = (1/pi) <alpha| rho |alpha>, alpha = X + iP.
///
/// Throws GridError when the grid holds less than 98% of the mass even after
/// one automatic widening (same step, 1.5x the extent).
PhaseSpaceGrid q_function(const DensityMatrix& rho_osc, const GridSpec& spec, int jobs = 1);

/// W(X, P) = (2/pi) Tr[rho D(alpha) Pi D(alpha)^dagger], Pi = (-1)^N.
///
/// Normalised to integrate to 1 over dX dP. Throws TruncationError
/// (insufficient) when the grid integral drifts from 1 by more than 2%.
PhaseSpaceGrid wigner_function(const DensityMatrix& rho_osc, const GridSpec& spec, int jobs = 1);

/// Same as wigner_function without the normalisation check.
PhaseSpaceGrid wigner_unchecked(const DensityMatrix& rho_osc, const GridSpec& spec, int jobs = 1);

/// Integral over P at each X of the grid.
std::vector<double> x_marginal(const PhaseSpaceGrid& grid);

struct CatAnalysis {
  bool is_cat = false;
  int peaks = 0;                 // local maxima of the X marginal
  double peak_x[2] = {0.0, 0.0};  // two strongest, ascending in X
  double peak_value[2] = {0.0, 0.0};  // max W over P at those X
  double separation = 0.0;       // |dX| of the two strongest
  double fringe_min = 0.0;       // min W strictly between them
  double max_value = 0.0;
};

/// Two strongest maxima of the X marginal at least 2 apart, with
/// W < -0.01 max(W) somewhere strictly between them.
CatAnalysis detect_cat(const PhaseSpaceGrid& wigner);

}  // namespace dicke3
