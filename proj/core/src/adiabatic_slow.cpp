#include "dicke3/adiabatic_slow.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dicke3/errors.hpp"

namespace dicke3 {

namespace {

struct Arg {
  double u;  // 2 lambda X - epsilon / 2
  double r;  // sqrt(delta^2/4 + u^2)
};

Arg arg(double x, const SystemParams& p) {
  const double u = 2.0 * p.lambda * x - 0.5 * p.epsilon;
  return {u, std::sqrt(0.25 * p.delta * p.delta + u * u)};
}

double sign_of(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace

int branch_index(int branch) {
  for (int i = 0; i < 4; ++i) {
    if (kBranches[i] == branch) return i;
  }
  throw ParameterError("branch must be -3, -1, +1 or +3");
}

std::array<double, 4> qubit_branch_energies(double x, const SystemParams& params) {
  const double r = arg(x, params).r;
  return {-3.0 * r, -r, r, 3.0 * r};
}

double effective_potential(double x, int branch, const SystemParams& params) {
  branch_index(branch);
  return params.w0 * x * x + branch * arg(x, params).r;
}

double effective_potential_dx(double x, int branch, const SystemParams& params) {
  branch_index(branch);
  const Arg a = arg(x, params);
  return 2.0 * params.w0 * x + branch * 2.0 * params.lambda * a.u / a.r;
}

double effective_potential_dxx(double x, int branch, const SystemParams& params) {
  branch_index(branch);
  const Arg a = arg(x, params);
  const double lam = params.lambda;
  return 2.0 * params.w0 + branch * lam * lam * params.delta * params.delta / (a.r * a.r * a.r);
}

EffectivePotentialProfile potential_profile(int branch, const SystemParams& params,
                                            const std::vector<double>& x_grid) {
  EffectivePotentialProfile p;
  p.branch = branch;
  p.multiplicity = kBranchMultiplicity[branch_index(branch)];
  p.x_grid = x_grid;
  p.params = params;
  p.v_values.reserve(x_grid.size());
  for (double x : x_grid) p.v_values.push_back(effective_potential(x, branch, params));
  return p;
}

CsvTable potential_profile_csv(const SystemParams& params, const std::vector<double>& x_grid) {
  CsvTable t({"X", "V_minus3", "V_minus1", "V_plus1", "V_plus3"});
  for (double x : x_grid) {
    std::vector<double> row{x};
    for (int b : kBranches) row.push_back(effective_potential(x, b, params));
    t.add_row(row);
  }
  return t;
}

HarmonicExpansion harmonic_expansion(int branch, const SystemParams& params) {
  branch_index(branch);
  const double eq = params.qubit_splitting();
  const double lam2 = params.lambda * params.lambda;
  HarmonicExpansion h;
  h.freq_sq = params.w0 * params.w0 + branch * 4.0 * lam2 * params.w0 / eq;
  h.shift = branch * params.lambda * params.epsilon * params.w0 / (eq * h.freq_sq);
  h.offset = 0.5 * branch * eq;
  return h;
}

double harmonic_potential(double x, int branch, const SystemParams& params) {
  const HarmonicExpansion h = harmonic_expansion(branch, params);
  const double eq = params.qubit_splitting();
  return h.offset + h.freq_sq / params.w0 * x * x -
         branch * 2.0 * params.lambda * params.epsilon / eq * x;
}

std::optional<double> critical_coupling(int branch, const SystemParams& params) {
  branch_index(branch);
  if (branch > 0) return std::nullopt;
  return std::sqrt(params.w0 * params.qubit_splitting() / (4.0 * -branch));
}

std::vector<double> inflection_points(int branch, const SystemParams& params) {
  branch_index(branch);
  if (branch > 0 || params.lambda == 0.0) return {};
  // (delta^2/4 + u^2)^{3/2} = |b| lambda^2 delta^2 / (2 w0)
  const double lam = params.lambda;
  const double r3 = -branch * lam * lam * params.delta * params.delta / (2.0 * params.w0);
  const double r = std::cbrt(r3);
  const double u2 = r * r - 0.25 * params.delta * params.delta;
  if (u2 <= 0.0) return {};
  const double u = std::sqrt(u2);
  return {(-u + 0.5 * params.epsilon) / (2.0 * lam), (u + 0.5 * params.epsilon) / (2.0 * lam)};
}

namespace {

// Newton on dV/dX from a golden-section estimate; golden section alone only
// resolves X to about sqrt(machine epsilon).
double polish_minimum(double x, double a, double b, int branch, const SystemParams& params) {
  for (int it = 0; it < 20; ++it) {
    const double d2 = effective_potential_dxx(x, branch, params);
    if (!(d2 > 0.0)) break;
    const double next = std::clamp(x - effective_potential_dx(x, branch, params) / d2, a, b);
    if (std::abs(next - x) <= 1e-15 * std::max(1.0, std::abs(x))) return next;
    x = next;
  }
  return x;
}

}  // namespace

WellGeometry well_geometry(int branch, const SystemParams& params) {
  params.validate();
  WellGeometry g;
  g.branch = branch;
  g.critical_lambda = critical_coupling(branch, params);
  const double v0 = effective_potential(0.0, branch, params);
  auto add = [&](double x) {
    g.minima_locations.push_back(x);
    g.minima_values.push_back(effective_potential(x, branch, params));
    g.minima_depths.push_back(g.minima_values.back() - v0);
    g.curvature_at_minima.push_back(effective_potential_dxx(x, branch, params));
  };

  const double lam = params.lambda;
  const double w0 = params.w0;
  if (params.epsilon == 0.0) {
    // X0^2 = b^2 lambda^2 / w0^2 - delta^2 / (16 lambda^2)
    const double x2 = (branch < 0 && lam > 0.0)
                          ? branch * branch * lam * lam / (w0 * w0) -
                                params.delta * params.delta / (16.0 * lam * lam)
                          : 0.0;
    if (x2 > 0.0) {
      add(-std::sqrt(x2));
      add(std::sqrt(x2));
      g.is_double_well = true;
    } else {
      add(0.0);
    }
    return g;
  }

  // |V'| > 0 beyond |X| = |b| lambda / w0 + epsilon-dependent slack, so this brackets every minimum.
  const double reach = std::abs(branch) * lam / w0 + 1.0 + params.epsilon / w0;
  auto v = [&](double x) { return effective_potential(x, branch, params); };
  const auto infl = inflection_points(branch, params);
  if (infl.empty()) {
    add(polish_minimum(golden_section_min(v, -reach, reach), -reach, reach, branch, params));
    return g;
  }
  const double lo = std::min(-reach, infl[0] - 1.0);
  const double hi = std::max(reach, infl[1] + 1.0);
  const double edge_tol = 1e-9;
  for (auto [a, b] : {std::pair{lo, infl[0]}, std::pair{infl[1], hi}}) {
    const double x = golden_section_min(v, a, b);
    if (x - a > edge_tol && b - x > edge_tol) add(polish_minimum(x, a, b, branch, params));
  }
  if (g.minima_locations.empty()) add(golden_section_min(v, lo, hi));
  g.is_double_well = g.minima_locations.size() == 2;
  return g;
}

AsymmetricWellReport asymmetric_well_report(const SystemParams& params) {
  params.validate();
  AsymmetricWellReport rep;
  for (int b : {-3, -1}) {
    // Numerical minimisation even at epsilon = 0 so both cases share one path.
    const double reach = 3.0 * params.lambda / params.w0 + 1.0 + params.epsilon / params.w0;
    auto v = [&](double x) { return effective_potential(x, b, params); };
    const double v0 = v(0.0);
    const auto infl = inflection_points(b, params);
    std::vector<std::pair<double, double>> segments;
    if (infl.empty()) {
      segments.push_back({-reach, reach});
    } else {
      segments.push_back({std::min(-reach, infl[0] - 1.0), infl[0]});
      segments.push_back({infl[1], std::max(reach, infl[1] + 1.0)});
    }
    for (auto [lo, hi] : segments) {
      double x = golden_section_min(v, lo, hi);
      if (infl.empty() || (x - lo > 1e-9 && hi - x > 1e-9)) {
        x = polish_minimum(x, lo, hi, b, params);
        rep.wells.push_back({b, x, v(x), v(x) - v0});
      }
    }
  }
  std::stable_sort(rep.wells.begin(), rep.wells.end(),
                   [](const Well& a, const Well& b) { return a.value < b.value; });
  if (rep.wells.empty()) throw std::logic_error("asymmetric_well_report: no minimum found");
  rep.favored = rep.wells.front();
  rep.favored_sign = static_cast<int>(sign_of(rep.favored.x));
  return rep;
}

double harmonic_level_estimate(int branch, const SystemParams& params) {
  const WellGeometry g = well_geometry(branch, params);
  std::size_t best = 0;
  for (std::size_t i = 1; i < g.minima_values.size(); ++i) {
    if (g.minima_values[i] < g.minima_values[best]) best = i;
  }
  const double kappa = g.curvature_at_minima[best];
  if (!(kappa > 0.0)) return std::numeric_limits<double>::quiet_NaN();
  return g.minima_values[best] + 0.5 * std::sqrt(params.w0 * kappa / 2.0) - 0.5 * params.w0;
}

double slow_ground_energy_estimate(const SystemParams& params) {
  double best = std::numeric_limits<double>::infinity();
  for (int b : kBranches) {
    const double e = harmonic_level_estimate(b, params);
    if (std::isfinite(e)) best = std::min(best, e);
  }
  return best;
}

}  // namespace dicke3
