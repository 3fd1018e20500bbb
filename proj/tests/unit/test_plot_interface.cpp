// Column layouts consumed by the plotting scripts.

#include <gtest/gtest.h>

#include <sstream>

#include "dicke3/dicke3.hpp"

using namespace dicke3;

namespace {

std::vector<std::string> header_of(const CsvTable& t) {
  std::istringstream is(t.str());
  std::string line;
  std::getline(is, line);
  return split_csv_line(line);
}

std::size_t data_lines(const CsvTable& t) {
  std::istringstream is(t.str());
  std::string line;
  std::size_t n = 0;
  std::getline(is, line);
  const std::size_t width = split_csv_line(line).size();
  while (std::getline(is, line)) {
    EXPECT_EQ(split_csv_line(line).size(), width);
    ++n;
  }
  return n;
}

}  // namespace

TEST(PlotInterface, Spectrum) {
  const SystemParams p{1.0, 0.0, 1.0, 0.0, 20};
  SweepOptions o;
  o.n_max = 20;
  const auto t = spectrum_sweep(p, linear_grid(0.0, 0.2, 3), 3, o).to_csv();
  EXPECT_EQ(header_of(t), (std::vector<std::string>{"lambda", "E1", "E2", "E3"}));
  EXPECT_EQ(data_lines(t), 3u);
}

TEST(PlotInterface, AdiabaticSpectrumHasSource) {
  const SystemParams p{0.1, 0.0, 1.0, 0.0, 20};
  const auto t = approx_spectrum_csv(approx_spectrum_sweep(p, linear_grid(0.0, 0.2, 3), 2));
  EXPECT_EQ(header_of(t), (std::vector<std::string>{"lambda", "E1", "E2", "source"}));
  EXPECT_NE(t.str().find(",adiabatic_fast\n"), std::string::npos);
}

TEST(PlotInterface, PhaseSpaceGrid) {
  const SystemParams p{1.0, 0.0, 1.0, 0.0, 20};
  GridSpec g;
  g.nx = 41;
  g.np = 21;
  const auto rho = partial_trace(ground_state(p).state, Keep::oscillator);
  for (const auto& grid : {q_function(rho, g), wigner_function(rho, g)}) {
    const auto t = grid.to_csv();
    EXPECT_EQ(header_of(t), (std::vector<std::string>{"X", "P", "value"}));
    EXPECT_EQ(data_lines(t), 41u * 21u);
  }
}

TEST(PlotInterface, Potential) {
  const SystemParams p{100.0, 0.0, 1.0, 5.0, 20};
  const auto t = potential_profile_csv(p, linear_grid(-3.0, 3.0, 7));
  EXPECT_EQ(header_of(t), (std::vector<std::string>{"X", "V_minus3", "V_minus1", "V_plus1", "V_plus3"}));
  EXPECT_EQ(data_lines(t), 7u);
}

TEST(PlotInterface, Diagnostics) {
  const SystemParams p{1.0, 0.0, 1.0, 0.0, 20};
  SweepOptions o;
  o.n_max = 20;
  const auto t = diagnostics_csv(diagnostics_sweep(p, linear_grid(0.0, 0.2, 3), o));
  EXPECT_EQ(header_of(t), (std::vector<std::string>{"lambda", "E0", "S", "C", "s_x", "s_p", "K"}));
  EXPECT_EQ(data_lines(t), 3u);
}
