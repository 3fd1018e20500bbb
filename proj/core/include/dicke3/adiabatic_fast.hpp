#pragma once

#include <array>
#include <vector>

#include "dicke3/csv.hpp"
#include "dicke3/operators.hpp"
#include "dicke3/params.hpp"
#include "dicke3/spectra.hpp"

namespace dicke3 {

/// Oscillator displaced by the collective qubit state.
struct DisplacedSector {
  int label;            // eigenvalue of sz1 + sz2 + sz3: -3, -1, +1, +3
  double displacement;  // label * lambda / w0
  double energy_shift;  // -label^2 lambda^2 / w0

  static DisplacedSector make(int label, const SystemParams& params);
};

/// n w0 + sector.energy_shift
double sector_energy(const DisplacedSector& sector, int n, const SystemParams& params);

/// e^{-2 lambda^2 / w0^2} L_n(4 lambda^2 / w0^2): overlap of level n between
/// oscillators whose collective labels differ by 2.
double l_factor(int n, const SystemParams& params);

/// Qubit configurations in the order |eee>, |eeg>, |ege>, |gee>, |egg>, |geg>, |gge>, |ggg>.
inline constexpr std::array<int, 8> kGammaOrder{0, 1, 2, 4, 3, 5, 6, 7};

/// Projection of H onto span{|c> (x) D(-s_c lambda / w0)|n>} for one level n.
///
/// The eight basis states belong to distinct qubit configurations and are
/// therefore orthonormal. Diagonal: sector energy - (epsilon/2) s_c.
/// Single flips: -(delta/2) l. Everything else vanishes.
struct EffectiveQubitBlock {
  int n = 0;
  RealMatrix matrix;  // 8x8, basis kGammaOrder
  double l = 1.0;
  std::array<int, 8> labels{};  // collective label of each basis state

  /// matrix minus the sector energies on the diagonal.
  RealMatrix qubit_part(const SystemParams& params) const;
};

EffectiveQubitBlock effective_qubit_block(int n, const SystemParams& params);

struct ClosedFormEnergies {
  double plus1, minus1, plus3, minus3;

  /// All eight values ascending, the +-1 entries repeated three times.
  std::array<double, 8> expanded() const;
};

/// +-(delta/2) sqrt(l^2 + tan^2 theta) and +-(3 delta/2) sqrt(l^2 + tan^2 theta).
ClosedFormEnergies closed_form_qubit_energies(int n, const SystemParams& params);

struct BlockComparison {
  RealVector block;        // eigenvalues of the full block
  RealVector qubit_part;   // eigenvalues without the sector energies
  std::array<double, 8> closed_form;
  double max_dev_qubit_part;  // max |qubit_part - closed_form|
  double max_dev_block;       // max |block - closed_form|
};

/// Quantifies how the literal closed forms relate to the projected block.
BlockComparison compare_block_closed_form(int n, const SystemParams& params);

struct ApproxLevel {
  double energy;
  int n;                // oscillator level of the block it came from
  int dominant_label;   // collective label carrying the largest weight
};

/// k lowest eigenvalues over all blocks n = 0, 1, ..., merged and sorted.
std::vector<ApproxLevel> approx_low_spectrum(const SystemParams& params, int k);

/// Same grid layout as spectrum_sweep, computed from the blocks.
SpectrumTable approx_spectrum_sweep(const SystemParams& params_base,
                                    const std::vector<double>& lambda_grid, int k, int jobs = 1);

/// `lambda,E1,...,Ek,source` with source = adiabatic_fast.
CsvTable approx_spectrum_csv(const SpectrumTable& table);

/// Spread of the six block eigenvalues dominated by the +-1 sectors.
double block_pair_gap(int n, const SystemParams& params);

/// Least-squares slope of log(block_pair_gap) against lambda^2.
double gap_decay_slope(int n, const SystemParams& params_base, const std::vector<double>& lambdas);

}  // namespace dicke3
