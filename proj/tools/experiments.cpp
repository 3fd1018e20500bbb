#include "experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

#include "json.hpp"

#ifndef DICKE3_VERSION
#define DICKE3_VERSION "unknown"
#endif

namespace dicke3::tools {

namespace {

using std::numbers::pi;

SystemParams from_eq(double eq, double theta, double w0 = 1.0) {
  return SystemParams::from_theta(eq * std::cos(theta), theta, w0, 0.0);
}

SystemParams from_delta(double delta, double w0 = 1.0) { return {delta, 0.0, w0, 0.0, 60}; }

std::vector<Preset> make_presets() {
  const double thetas[3] = {0.0, pi / 6, pi / 3};
  const char letters[3] = {'a', 'b', 'c'};
  std::vector<Preset> out;
  for (int i = 0; i < 3; ++i) {
    const std::string s(1, letters[i]);
    out.push_back({"fig3" + s, PresetKind::spectrum, "spectrum", from_eq(1.0, thetas[i]), {}, {0.0, 2.0, 41}, 13});
  }
  for (int i = 0; i < 3; ++i) {
    const std::string s(1, letters[i]);
    out.push_back({"fig4" + s, PresetKind::fast_spectrum, "spectrum", from_eq(0.1, thetas[i]), {}, {0.0, 1.5, 31}, 8});
  }
  for (int i = 0; i < 3; ++i) {
    const std::string s(1, letters[i]);
    out.push_back({"fig5" + s, PresetKind::slow_spectrum, "spectrum", from_eq(100.0, thetas[i]), {}, {0.0, 4.0, 21}, 8});
  }
  const double cat_lambdas[3] = {0.5, 1.0, 1.25};
  for (int i = 0; i < 3; ++i) {
    SystemParams p = from_delta(10.0);
    p.lambda = cat_lambdas[i];
    out.push_back({"fig6" + std::string(1, letters[i]), PresetKind::q_grid, "q", p, {}, {}, 2});
  }
  const char wletters[3] = {'d', 'e', 'f'};
  for (int i = 0; i < 3; ++i) {
    SystemParams p = from_delta(10.0);
    p.lambda = cat_lambdas[i];
    out.push_back({"fig6" + std::string(1, wletters[i]), PresetKind::w_grid, "wigner", p, {}, {}, 2});
  }
  // w0 / delta = 0.1, 1, 10
  const double deltas[3] = {10.0, 1.0, 0.1};
  const Sweep ranges[3] = {{0.0, 2.5, 26}, {0.0, 3.0, 31}, {0.0, 1.5, 31}};
  const std::pair<int, const char*> scalars[3] = {{7, "squeezing"}, {8, "entropy"}, {9, "concurrence"}};
  for (auto [fig, quantity] : scalars) {
    for (int i = 0; i < 3; ++i) {
      out.push_back({"fig" + std::to_string(fig) + letters[i], PresetKind::scalar_sweep, quantity,
                     from_delta(deltas[i]), {0.0, pi / 6, pi / 3}, ranges[i], 2});
    }
  }
  // sweep bounds are in units of the critical coupling here
  out.push_back({"fig8d", PresetKind::entropy_jump, "entropy", from_delta(10.0), {}, {0.0, 1.6, 33}, 2});
  SystemParams custom;
  out.push_back({"custom", PresetKind::custom, "report", custom, {}, {0.0, 1.0, 11}, 8});
  return out;
}

double wall_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

CsvTable scalar_table(const std::vector<std::string>& lead, const std::vector<std::vector<double>>& lead_values,
                      const std::vector<DiagnosticsRow>& rows) {
  std::vector<std::string> header = lead;
  for (const char* h : {"lambda", "E0", "S", "C", "s_x", "s_p", "K"}) header.emplace_back(h);
  CsvTable t(header);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<double> v = lead_values[i];
    const auto& r = rows[i];
    v.insert(v.end(), {r.lambda, r.energy, r.entropy, r.concurrence, r.s_x, r.s_p, r.k});
    t.add_row(v);
  }
  return t;
}

void append(CsvTable& dst, const CsvTable& src) {
  std::istringstream is(src.str());
  std::string line;
  std::getline(is, line);  // header
  while (std::getline(is, line)) dst.add_cells(split_csv_line(line));
}

nlohmann::json params_json(const SystemParams& p) {
  return {{"delta", p.delta}, {"epsilon", p.epsilon}, {"w0", p.w0}, {"lambda", p.lambda},
          {"theta", p.theta()}, {"E_q", p.qubit_splitting()}};
}

}  // namespace

Sweep Sweep::parse(const std::string& text) {
  Sweep s;
  const auto parts = split_csv_line([&] {
    std::string t = text;
    std::replace(t.begin(), t.end(), ':', ',');
    return t;
  }());
  if (parts.size() != 3) throw ParameterError("sweep must look like min:max:steps (got '" + text + "')");
  try {
    std::size_t used = 0;
    s.min = std::stod(parts[0], &used);
    if (used != parts[0].size()) throw std::invalid_argument("min");
    s.max = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument("max");
    s.steps = std::stoi(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument("steps");
  } catch (const std::logic_error&) {
    throw ParameterError("sweep must look like min:max:steps (got '" + text + "')");
  }
  if (s.steps < 2) throw ParameterError("sweep steps must be >= 2");
  if (!(s.max >= s.min) || s.min < 0.0) throw ParameterError("sweep needs 0 <= min <= max");
  return s;
}

const std::vector<Preset>& presets() {
  static const std::vector<Preset> all = make_presets();
  return all;
}

const Preset& find_preset(const std::string& name) {
  for (const auto& p : presets()) {
    if (p.name == name) return p;
  }
  throw ParameterError("unknown preset '" + name + "'");
}

SystemParams ExperimentConfig::resolved_params() const {
  SystemParams p = find_preset(preset).params;
  if (delta) p.delta = *delta;
  if (w0) p.w0 = *w0;
  if (lambda) p.lambda = *lambda;
  if (n_max) p.n_max = *n_max;
  if (epsilon && theta) throw ParameterError("--epsilon and --theta are mutually exclusive");
  if (epsilon) p.epsilon = *epsilon;
  if (theta) {
    if (!(*theta >= 0.0) || *theta >= pi / 2) throw ParameterError("theta must lie in [0, pi/2)");
    p.epsilon = p.delta * std::tan(*theta);
  }
  p.validate();
  return p;
}

std::filesystem::path default_output_dir() {
  if (const char* env = std::getenv("DICKE3_OUT"); env && *env) return env;
  return ".";
}

std::filesystem::path write_table(const CsvTable& table, const std::filesystem::path& dir,
                                  const std::string& stem, Format format) {
  if (format == Format::csv) {
    const auto path = dir / (stem + ".csv");
    table.save(path);
    return path;
  }
  nlohmann::json j;
  j["columns"] = table.header();
  j["rows"] = nlohmann::json::array();
  std::istringstream is(table.str());
  std::string line;
  std::getline(is, line);
  while (std::getline(is, line)) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& cell : split_csv_line(line)) {
      char* end = nullptr;
      const double v = std::strtod(cell.c_str(), &end);
      if (end && *end == '\0' && !cell.empty()) {
        row.push_back(v);
      } else {
        row.push_back(cell);
      }
    }
    j["rows"].push_back(row);
  }
  const auto path = dir / (stem + ".json");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << j.dump(1) << '\n';
  if (!out) throw IoError("write failed: " + path.string());
  return path;
}

RunResult run(const ExperimentConfig& config) {
  const auto t0 = std::chrono::steady_clock::now();
  const Preset& preset = find_preset(config.preset);
  const SystemParams params = config.resolved_params();
  const Sweep sweep = config.sweep.value_or(preset.sweep);
  const int k = config.k.value_or(preset.k);
  const bool fixed_cutoff = config.n_max.has_value();
  if (config.jobs < 1) throw ParameterError("--jobs must be >= 1");

  std::error_code ec;
  std::filesystem::create_directories(config.out, ec);
  if (ec || !std::filesystem::is_directory(config.out)) {
    throw IoError("cannot create output directory " + config.out.string());
  }

  RunResult result;
  SweepOptions so;
  so.jobs = config.jobs;
  so.rel_tol = config.rel_tol;
  if (fixed_cutoff) so.n_max = params.n_max;
  auto emit = [&](const CsvTable& t, const std::string& quantity) {
    result.files.push_back(write_table(t, config.out, preset.name + "_" + quantity, config.format));
  };

  nlohmann::json curves = nlohmann::json::array();
  switch (preset.kind) {
    case PresetKind::spectrum:
    case PresetKind::fast_spectrum:
    case PresetKind::slow_spectrum: {
      const auto table = spectrum_sweep(params, sweep.grid(), k, so);
      result.certified.push_back({"spectrum", table.n_max_used});
      emit(table.to_csv(), "spectrum");
      if (preset.kind == PresetKind::fast_spectrum) {
        emit(approx_spectrum_csv(approx_spectrum_sweep(params, sweep.grid(), k, config.jobs)), "adiabatic_fast");
      }
      if (preset.kind == PresetKind::slow_spectrum) {
        const SystemParams top = params.with_lambda(sweep.max);
        const double half = 3.0 * sweep.max / params.w0 + 3.0;
        emit(potential_profile_csv(top, linear_grid(-half, half, 241)), "potential");
        CsvTable est({"lambda", "E0_exact", "E0_slow"});
        for (Eigen::Index i = 0; i < table.levels.rows(); ++i) {
          const double lam = table.lambda_grid[static_cast<std::size_t>(i)];
          est.add_row({lam, table.levels(i, 0), slow_ground_energy_estimate(params.with_lambda(lam))});
        }
        emit(est, "slow_estimate");
      }
      break;
    }
    case PresetKind::q_grid:
    case PresetKind::w_grid: {
      ReportOptions ro;
      ro.rel_tol = config.rel_tol;
      ro.jobs = config.jobs;
      if (fixed_cutoff) ro.n_max = params.n_max;
      const auto report = build_report(params, ro);
      result.certified.push_back({"ground_state", report.params.n_max});
      emit(preset.kind == PresetKind::q_grid ? report.q_grid->to_csv() : report.w_grid->to_csv(), preset.quantity);
      const auto path = config.out / (preset.name + "_report.txt");
      std::ofstream out(path, std::ios::binary);
      out << report_text(report);
      if (!out) throw IoError("write failed: " + path.string());
      result.files.push_back(path);
      break;
    }
    case PresetKind::scalar_sweep: {
      std::optional<CsvTable> all;
      for (double theta : preset.thetas) {
        SystemParams p = params;
        p.epsilon = p.delta * std::tan(theta);
        const auto rows = diagnostics_sweep(p, sweep.grid(), so);
        std::vector<std::vector<double>> lead(rows.size(), std::vector<double>{theta});
        const CsvTable t = scalar_table({"theta"}, lead, rows);
        if (!all) all.emplace(t.header());
        append(*all, t);
        const int n = fixed_cutoff ? params.n_max : certify_truncation(p.with_lambda(sweep.max), 2, config.rel_tol);
        result.certified.push_back({"theta=" + format_number(theta), n});
      }
      emit(*all, preset.quantity);
      break;
    }
    case PresetKind::entropy_jump: {
      std::optional<CsvTable> all;
      for (double ratio : {0.1, 0.01}) {
        SystemParams p = params;
        p.delta = p.w0 / ratio;
        p.epsilon = 0.0;
        const double lc = *critical_coupling(-3, p);
        std::vector<double> grid;
        for (double f : sweep.grid()) grid.push_back(f * lc);
        const auto rows = diagnostics_sweep(p, grid, so);
        std::vector<std::vector<double>> lead;
        for (const auto& r : rows) lead.push_back({ratio, r.lambda / lc});
        const CsvTable t = scalar_table({"w0_over_delta", "lambda_over_lc"}, lead, rows);
        if (!all) all.emplace(t.header());
        append(*all, t);
        const int n = fixed_cutoff ? params.n_max : certify_truncation(p.with_lambda(grid.back()), 2, config.rel_tol);
        result.certified.push_back({"w0/delta=" + format_number(ratio), n});
      }
      emit(*all, preset.quantity);
      break;
    }
    case PresetKind::custom: {
      if (config.sweep) {
        const auto table = spectrum_sweep(params, sweep.grid(), k, so);
        result.certified.push_back({"spectrum", table.n_max_used});
        emit(table.to_csv(), "spectrum");
        SweepOptions dso = so;
        dso.n_max = table.n_max_used;
        emit(diagnostics_csv(diagnostics_sweep(params, sweep.grid(), dso)), "diagnostics");
      } else {
        ReportOptions ro;
        ro.rel_tol = config.rel_tol;
        ro.jobs = config.jobs;
        if (fixed_cutoff) ro.n_max = params.n_max;
        const auto report = build_report(params, ro);
        result.certified.push_back({"ground_state", report.params.n_max});
        const auto path = config.out / "custom_report.txt";
        std::ofstream out(path, std::ios::binary);
        out << report_text(report);
        if (!out) throw IoError("write failed: " + path.string());
        result.files.push_back(path);
        emit(report.q_grid->to_csv(), "q");
        emit(report.w_grid->to_csv(), "wigner");
      }
      break;
    }
  }

  result.wall_seconds = wall_since(t0);
  nlohmann::json m;
  m["preset"] = preset.name;
  m["inputs"] = params_json(params);
  if (preset.kind != PresetKind::q_grid && preset.kind != PresetKind::w_grid &&
      !(preset.kind == PresetKind::custom && !config.sweep)) {
    m["inputs"]["sweep"] = {{"min", sweep.min}, {"max", sweep.max}, {"steps", sweep.steps}};
    if (preset.kind == PresetKind::entropy_jump) m["inputs"]["sweep"]["units"] = "lambda_c";
  }
  if (!preset.thetas.empty()) m["inputs"]["thetas"] = preset.thetas;
  m["inputs"]["k"] = k;
  m["inputs"]["rel_tol"] = config.rel_tol;
  m["inputs"]["n_max_fixed"] = fixed_cutoff;
  nlohmann::json cert = nlohmann::json::object();
  for (const auto& [label, n] : result.certified) cert[label] = n;
  m["certified_n_max"] = cert;
  m["degeneracy_tolerance"] = kDegeneracyTolerance;
  m["version"] = DICKE3_VERSION;
  m["wall_time_s"] = result.wall_seconds;
  m["files"] = nlohmann::json::array();
  for (const auto& f : result.files) m["files"].push_back(f.filename().string());

  const auto manifest = config.out / "manifest.json";
  std::ofstream out(manifest, std::ios::binary);
  out << m.dump(2) << '\n';
  if (!out) throw IoError("write failed: " + manifest.string());
  result.files.push_back(manifest);
  return result;
}

CsvTable DiscrepancyTable::to_csv() const {
  CsvTable t({"regime", "lambda", "level", "exact", "adiabatic", "abs_diff"});
  for (const auto& r : rows) {
    t.add_cells({r.regime, format_number(r.lambda), std::to_string(r.level), format_number(r.exact),
                 format_number(r.adiabatic), format_number(r.abs_diff)});
  }
  return t;
}

DiscrepancyTable compare_adiabatic(const ExperimentConfig& config) {
  const SystemParams params = config.resolved_params();
  const int k = config.k.value_or(8);
  const std::vector<double> grid = config.sweep ? config.sweep->grid() : std::vector<double>{params.lambda};
  const double top = *std::max_element(grid.begin(), grid.end());
  const int n_max = config.n_max ? params.n_max : certify_truncation(params.with_lambda(top), k, config.rel_tol);

  DiscrepancyTable table;
  table.n_max = n_max;
  for (double lam : grid) {
    const SystemParams p = params.with_lambda(lam).with_n_max(n_max);
    const RealVector exact = low_spectrum(p, k);
    const auto approx = approx_low_spectrum(p, k);
    for (int i = 0; i < k; ++i) {
      const double d = std::abs(exact[i] - approx[i].energy) / p.w0;
      table.rows.push_back({"fast", lam, i + 1, exact[i], approx[i].energy, d});
      table.max_fast = std::max(table.max_fast, d);
    }
    const double slow = slow_ground_energy_estimate(p);
    const double d = std::abs(exact[0] - slow) / p.w0;
    table.rows.push_back({"slow", lam, 1, exact[0], slow, d});
    table.max_slow = std::max(table.max_slow, d);
  }
  return table;
}

}  // namespace dicke3::tools
