#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "experiments.hpp"
#include "json.hpp"

using namespace dicke3;
using namespace dicke3::tools;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("dicke3_test_" + name);
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::map<std::string, std::string> key_values(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    const auto eq = line.find('=');
    if (eq != std::string::npos) out[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return out;
}

}  // namespace

TEST(Sweep, Parse) {
  const Sweep s = Sweep::parse("0:2.5:26");
  EXPECT_DOUBLE_EQ(s.min, 0.0);
  EXPECT_DOUBLE_EQ(s.max, 2.5);
  EXPECT_EQ(s.steps, 26);
  EXPECT_EQ(s.grid().size(), 26u);
  EXPECT_DOUBLE_EQ(s.grid()[1], 0.1);
}

TEST(Sweep, RejectsMalformed) {
  for (const char* bad : {"", "1:2", "1:2:3:4", "a:1:3", "0:1:1", "2:1:5", "-1:1:5", "0:1:3x"}) {
    EXPECT_THROW(Sweep::parse(bad), ParameterError) << bad;
  }
}

TEST(Presets, NamesAndRegimes) {
  for (const char* name : {"fig3a", "fig3b", "fig3c", "fig4a", "fig5c", "fig6a", "fig6f", "fig7a", "fig8b",
                           "fig9c", "fig8d", "custom"}) {
    EXPECT_NO_THROW(find_preset(name)) << name;
  }
  EXPECT_THROW(find_preset("fig10a"), ParameterError);
  EXPECT_NEAR(find_preset("fig3b").params.qubit_splitting(), 1.0, 1e-14);
  EXPECT_NEAR(find_preset("fig3b").params.theta(), std::numbers::pi / 6, 1e-14);
  EXPECT_NEAR(find_preset("fig4a").params.qubit_splitting() / find_preset("fig4a").params.w0, 0.1, 1e-14);
  EXPECT_NEAR(find_preset("fig7a").params.w0 / find_preset("fig7a").params.delta, 0.1, 1e-14);
  EXPECT_NEAR(find_preset("fig9c").params.w0 / find_preset("fig9c").params.delta, 10.0, 1e-12);
  EXPECT_EQ(find_preset("fig3a").k, 13);
}

TEST(Config, EpsilonAndThetaExclusive) {
  ExperimentConfig c;
  c.delta = 1.0;
  c.epsilon = 0.2;
  c.theta = 0.3;
  EXPECT_THROW(c.resolved_params(), ParameterError);
  c.epsilon.reset();
  EXPECT_NEAR(c.resolved_params().epsilon, std::tan(0.3), 1e-14);
  c.theta = 2.0;
  EXPECT_THROW(c.resolved_params(), ParameterError);
}

TEST(Run, CustomPointAtZeroCoupling) {
  ExperimentConfig c;
  c.delta = 1.0;
  c.lambda = 0.0;
  c.out = scratch("custom0");
  const auto r = run(c);
  const auto kv = key_values(slurp(c.out / "custom_report.txt"));
  EXPECT_NEAR(std::stod(kv.at("entropy_S")), 0.0, 1e-10);
  EXPECT_NEAR(std::stod(kv.at("concurrence_C")), 0.0, 1e-10);
  EXPECT_NEAR(std::stod(kv.at("ground_energy")), -1.5, 1e-12);
  EXPECT_NEAR(std::stod(kv.at("K_uncertainty")), 0.25, 1e-12);

  const auto m = nlohmann::json::parse(slurp(c.out / "manifest.json"));
  EXPECT_EQ(m["preset"], "custom");
  EXPECT_EQ(m["degeneracy_tolerance"].get<double>(), kDegeneracyTolerance);
  EXPECT_GE(m["certified_n_max"]["ground_state"].get<int>(), kCertifyStart);
  EXPECT_TRUE(m.contains("version"));
  EXPECT_TRUE(m.contains("wall_time_s"));
  EXPECT_EQ(m["files"].size(), 3u);
  for (const auto& f : m["files"]) EXPECT_TRUE(fs::exists(c.out / f.get<std::string>()));
  EXPECT_EQ(r.files.size(), 4u);
}

TEST(Run, CsvIsByteReproducible) {
  ExperimentConfig c;
  c.delta = 1.0;
  c.sweep = Sweep::parse("0:0.6:4");
  c.k = 4;
  c.out = scratch("repro1");
  run(c);
  ExperimentConfig d = c;
  d.out = scratch("repro2");
  d.jobs = 3;
  run(d);
  for (const char* f : {"custom_spectrum.csv", "custom_diagnostics.csv"}) {
    const std::string a = slurp(c.out / f);
    EXPECT_FALSE(a.empty());
    EXPECT_EQ(a, slurp(d.out / f)) << f;
    EXPECT_EQ(a.find('\r'), std::string::npos);
  }
}

TEST(Run, JsonFormat) {
  ExperimentConfig c;
  c.delta = 1.0;
  c.sweep = Sweep::parse("0:0.4:3");
  c.k = 3;
  c.format = Format::json;
  c.out = scratch("json");
  run(c);
  const auto j = nlohmann::json::parse(slurp(c.out / "custom_spectrum.json"));
  EXPECT_EQ(j["columns"], (std::vector<std::string>{"lambda", "E1", "E2", "E3"}));
  ASSERT_EQ(j["rows"].size(), 3u);
  EXPECT_NEAR(j["rows"][0][1].get<double>(), -1.5, 1e-12);
}

TEST(Run, FixedCutoffIsRecorded) {
  ExperimentConfig c;
  c.delta = 1.0;
  c.lambda = 0.3;
  c.n_max = 25;
  c.out = scratch("fixed");
  const auto r = run(c);
  ASSERT_EQ(r.certified.size(), 1u);
  EXPECT_EQ(r.certified[0].second, 25);
  const auto m = nlohmann::json::parse(slurp(c.out / "manifest.json"));
  EXPECT_TRUE(m["inputs"]["n_max_fixed"].get<bool>());
}

TEST(Run, UnwritableOutputIsIoError) {
  const fs::path file = scratch("blocker");
  std::ofstream(file) << "x";
  ExperimentConfig c;
  c.delta = 1.0;
  c.out = file / "sub";
  EXPECT_THROW(run(c), IoError);
}

TEST(Compare, ZeroCouplingIsExact) {
  ExperimentConfig c;
  c.delta = 0.05;
  c.lambda = 0.0;
  c.k = 8;
  const auto t = compare_adiabatic(c);
  EXPECT_LT(t.max_fast, 1e-12);
  EXPECT_EQ(t.rows.size(), 9u);
  EXPECT_EQ(t.to_csv().header(),
            (std::vector<std::string>{"regime", "lambda", "level", "exact", "adiabatic", "abs_diff"}));
}

TEST(Compare, SlowEstimateAtLargeGap) {
  ExperimentConfig c;
  c.delta = 100.0;
  c.lambda = 0.5;
  c.k = 2;
  const auto t = compare_adiabatic(c);
  // the harmonic ground estimate is second order in lambda / E_q
  EXPECT_LT(t.max_slow, 0.05);
}
