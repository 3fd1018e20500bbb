#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "dicke3/dicke3.hpp"

namespace dicke3::tools {

enum class Format { csv, json };

struct Sweep {
  double min = 0.0;
  double max = 1.0;
  int steps = 2;

  /// Parses "min:max:steps". Throws ParameterError.
  static Sweep parse(const std::string& text);
  std::vector<double> grid() const { return linear_grid(min, max, steps); }
};

enum class PresetKind { spectrum, fast_spectrum, slow_spectrum, q_grid, w_grid, scalar_sweep, entropy_jump, custom };

struct Preset {
  std::string name;
  PresetKind kind;
  std::string quantity;        // file suffix: spectrum, q, wigner, squeezing, ...
  SystemParams params;         // theta folded into epsilon
  std::vector<double> thetas;  // scalar sweeps run one curve per angle
  Sweep sweep;
  int k = 8;
};

/// Every named preset, in a fixed order.
const std::vector<Preset>& presets();
/// Throws ParameterError for unknown names.
const Preset& find_preset(const std::string& name);

struct ExperimentConfig {
  std::string preset = "custom";
  std::optional<double> delta, epsilon, w0, lambda, theta;
  std::optional<int> n_max;
  std::optional<Sweep> sweep;
  std::optional<int> k;
  std::filesystem::path out = ".";
  Format format = Format::csv;
  int jobs = 1;
  double rel_tol = kDefaultRelTol;

  /// Preset parameters with the explicit overrides applied.
  SystemParams resolved_params() const;
};

struct RunResult {
  std::vector<std::filesystem::path> files;  // data files, manifest last
  std::vector<std::pair<std::string, int>> certified;  // curve label -> n_max
  double wall_seconds = 0.0;
};

/// Writes `<preset>_<quantity>.csv` (or .json) files and `manifest.json` into
/// config.out. Throws ParameterError, TruncationError or IoError.
RunResult run(const ExperimentConfig& config);

struct DiscrepancyRow {
  std::string regime;  // fast or slow
  double lambda;
  int level;
  double exact;
  double adiabatic;
  double abs_diff;  // |exact - adiabatic| / w0
};

struct DiscrepancyTable {
  std::vector<DiscrepancyRow> rows;
  double max_fast = 0.0;
  double max_slow = 0.0;
  int n_max = 0;

  CsvTable to_csv() const;
};

/// Per-level |E_exact - E_adiabatic| / w0 for both approximations over the
/// configured coupling grid (default: the single coupling in the config).
DiscrepancyTable compare_adiabatic(const ExperimentConfig& config);

/// Writes a table as CSV or as JSON {"columns": [...], "rows": [[...], ...]}.
std::filesystem::path write_table(const CsvTable& table, const std::filesystem::path& dir,
                                  const std::string& stem, Format format);

/// Default output directory: $DICKE3_OUT or the working directory.
std::filesystem::path default_output_dir();

}  // namespace dicke3::tools
