// dicke3: command-line driver for the three-qubit Dicke model lab.

#include <cmath>
#include <iostream>

#include "CLI11.hpp"
#include "experiments.hpp"

namespace {

enum Exit { kOk = 0, kBadArgs = 2, kTruncation = 3, kIo = 4 };

void add_physics_flags(CLI::App* cmd, dicke3::tools::ExperimentConfig& cfg, std::string& sweep) {
  cmd->add_option("--delta", cfg.delta, "qubit gap (units of w0)");
  auto* eps = cmd->add_option("--epsilon", cfg.epsilon, "qubit bias");
  auto* theta = cmd->add_option("--theta", cfg.theta, "mixing angle in radians; sets epsilon = delta tan(theta)");
  eps->excludes(theta);
  cmd->add_option("--w0", cfg.w0, "oscillator quantum");
  cmd->add_option("--lambda", cfg.lambda, "qubit-oscillator coupling");
  cmd->add_option("--nmax", cfg.n_max, "fixed Fock cutoff (skips certification)")->check(CLI::PositiveNumber);
  cmd->add_option("--sweep", sweep, "coupling sweep min:max:steps");
  cmd->add_option("-k,--levels", cfg.k, "number of levels")->check(CLI::PositiveNumber);
  cmd->add_option("--rel-tol", cfg.rel_tol, "certification tolerance in units of w0")->check(CLI::PositiveNumber);
  cmd->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  namespace t = dicke3::tools;
  CLI::App app{"Three-qubit Dicke model: spectra, adiabatic approximations and ground-state diagnostics"};
  app.set_version_flag("--version", DICKE3_VERSION);
  app.require_subcommand(1);

  t::ExperimentConfig cfg;
  cfg.out = t::default_output_dir();
  std::string sweep;
  std::string out_dir;
  std::string format = "csv";

  auto* run = app.add_subcommand("run", "run a preset (fig3a ... fig9c, fig8d) or a custom point");
  std::string positional;
  run->add_option("preset_name", positional, "preset name");
  run->add_option("--preset", cfg.preset, "preset name");
  add_physics_flags(run, cfg, sweep);
  run->add_option("--out", out_dir, "output directory (default $DICKE3_OUT or .)");
  run->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* compare = app.add_subcommand("compare", "exact vs adiabatic discrepancy table");
  add_physics_flags(compare, cfg, sweep);
  compare->add_option("--out", out_dir, "output directory");
  compare->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* certify = app.add_subcommand("certify", "print the certified Fock cutoff");
  add_physics_flags(certify, cfg, sweep);

  auto* list = app.add_subcommand("presets", "list preset names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadArgs;
  }

  try {
    if (!positional.empty()) cfg.preset = positional;
    if (!out_dir.empty()) cfg.out = out_dir;
    cfg.format = format == "json" ? t::Format::json : t::Format::csv;
    if (!sweep.empty()) cfg.sweep = t::Sweep::parse(sweep);

    if (*list) {
      for (const auto& p : t::presets()) std::cout << p.name << '\n';
      return kOk;
    }
    if (*run) {
      const auto r = t::run(cfg);
      for (const auto& [label, n] : r.certified) std::cout << "n_max[" << label << "] = " << n << '\n';
      for (const auto& f : r.files) std::cout << "wrote " << f.string() << '\n';
      return kOk;
    }
    if (*compare) {
      const auto table = t::compare_adiabatic(cfg);
      std::cout << "n_max = " << table.n_max << '\n'
                << "max fast discrepancy = " << dicke3::format_number(table.max_fast) << " w0\n"
                << "max slow discrepancy = " << dicke3::format_number(table.max_slow) << " w0\n";
      if (!out_dir.empty()) {
        std::filesystem::create_directories(cfg.out);
        std::cout << "wrote " << t::write_table(table.to_csv(), cfg.out, "compare_discrepancy", cfg.format).string()
                  << '\n';
      }
      return kOk;
    }
    if (*certify) {
      const auto p = cfg.resolved_params();
      const int k = cfg.k.value_or(8);
      const auto c = dicke3::TruncationCertifier::shared().certify(p, k, cfg.rel_tol);
      for (const auto& step : c.history) {
        std::cout << "n_max=" << step.n_max << " shift=" << dicke3::format_number(step.max_shift) << '\n';
      }
      std::cout << "certified n_max = " << c.n_max << '\n';
      return kOk;
    }
  } catch (const dicke3::ParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadArgs;
  } catch (const dicke3::TruncationError& e) {
    std::cerr << "truncation: " << e.what() << '\n';
    return kTruncation;
  } catch (const dicke3::IoError& e) {
    std::cerr << "io: " << e.what() << '\n';
    return kIo;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "io: " << e.what() << '\n';
    return kIo;
  }
  return kOk;
}
