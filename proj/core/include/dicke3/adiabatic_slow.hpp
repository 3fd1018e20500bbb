#pragma once

#include <array>
#include <optional>
#include <vector>

#include "dicke3/csv.hpp"
#include "dicke3/params.hpp"

namespace dicke3 {

// Positions are the dimensionless quadrature X = (a + a^dagger)/2. In these
// units the oscillator potential is w0 X^2 and the qubit bias seen by the
// collective spin is 2 lambda X.

inline constexpr std::array<int, 4> kBranches{-3, -1, 1, 3};
inline constexpr std::array<int, 4> kBranchMultiplicity{1, 3, 3, 1};

/// Index of a branch label in kBranches. Throws ParameterError for other labels.
int branch_index(int branch);

/// Qubit energies at fixed X, ordered -3, -1, +1, +3: b sqrt(delta^2/4 + (2 lambda X - epsilon/2)^2).
std::array<double, 4> qubit_branch_energies(double x, const SystemParams& params);

/// w0 X^2 + b sqrt(delta^2/4 + (2 lambda X - epsilon/2)^2)
double effective_potential(double x, int branch, const SystemParams& params);
double effective_potential_dx(double x, int branch, const SystemParams& params);
double effective_potential_dxx(double x, int branch, const SystemParams& params);

struct EffectivePotentialProfile {
  int branch = -3;
  int multiplicity = 1;
  std::vector<double> x_grid;
  std::vector<double> v_values;
  SystemParams params;
};

EffectivePotentialProfile potential_profile(int branch, const SystemParams& params,
                                            const std::vector<double>& x_grid);

/// `X,V_minus3,V_minus1,V_plus1,V_plus3`
CsvTable potential_profile_csv(const SystemParams& params, const std::vector<double>& x_grid);

/// Quadratic expansion of a branch around X = 0.
struct HarmonicExpansion {
  double freq_sq;  // w0^2 +- 4 lambda^2 w0 / E_q (|b| = 1), w0^2 +- 12 lambda^2 w0 / E_q (|b| = 3)
  double shift;    // minimum location in X: b lambda epsilon w0 / (E_q freq_sq)
  double offset;   // b E_q / 2
};

HarmonicExpansion harmonic_expansion(int branch, const SystemParams& params);

/// offset + (freq_sq / w0) X^2 - b (2 lambda epsilon / E_q) X
double harmonic_potential(double x, int branch, const SystemParams& params);

/// Coupling at which the branch's renormalised frequency vanishes:
/// sqrt(w0 E_q / 12) for -3, sqrt(w0 E_q / 4) for -1, none for +1 and +3.
std::optional<double> critical_coupling(int branch, const SystemParams& params);

struct WellGeometry {
  int branch = -3;
  std::vector<double> minima_locations;     // ascending X
  std::vector<double> minima_values;        // V at each minimum
  std::vector<double> minima_depths;        // V(minimum) - V(0)
  std::vector<double> curvature_at_minima;  // d2V/dX2
  std::optional<double> critical_lambda;
  bool is_double_well = false;
};

/// Closed forms at epsilon = 0. Otherwise golden section on the convex outer
/// segments, finished with Newton steps on dV/dX.
WellGeometry well_geometry(int branch, const SystemParams& params);

/// X values where d2V/dX2 = 0 (empty when the branch is convex everywhere).
std::vector<double> inflection_points(int branch, const SystemParams& params);

/// Minimum of f on [a, b] for unimodal f.
template <class F>
double golden_section_min(F&& f, double a, double b, double tol = 1e-12);

struct Well {
  int branch;
  double x;
  double value;  // V(x)
  double depth;  // V(x) - V(0)
};

struct AsymmetricWellReport {
  std::vector<Well> wells;  // -3 and -1 branch minima, ascending in value
  Well favored;             // wells.front()
  int favored_sign = 0;     // sign of X at the global minimum
};

AsymmetricWellReport asymmetric_well_report(const SystemParams& params);

/// Harmonic estimate of the lowest level of a branch:
/// V_min + sqrt(w0 kappa / 2) / 2 - w0 / 2 with kappa = V'' at the deepest minimum
/// (the last term removes the zero-point energy dropped from H).
double harmonic_level_estimate(int branch, const SystemParams& params);

/// Minimum of harmonic_level_estimate over the four branches.
double slow_ground_energy_estimate(const SystemParams& params);

}  // namespace dicke3

#include <cmath>

namespace dicke3 {

template <class F>
double golden_section_min(F&& f, double a, double b, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace dicke3
