#include "dicke3/params.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "dicke3/errors.hpp"

namespace dicke3 {

double SystemParams::qubit_splitting() const { return std::hypot(delta, epsilon); }

double SystemParams::theta() const { return std::atan2(epsilon, delta); }

void SystemParams::validate() const {
  auto bad = [](const std::string& msg) { throw ParameterError("SystemParams: " + msg); };
  if (!std::isfinite(delta) || !(delta > 0.0)) bad("delta must be > 0");
  if (!std::isfinite(w0) || !(w0 > 0.0)) bad("w0 must be > 0");
  if (!std::isfinite(lambda) || lambda < 0.0) bad("lambda must be >= 0");
  if (!std::isfinite(epsilon) || epsilon < 0.0) bad("epsilon must be >= 0");
  if (n_max < 1) bad("n_max must be >= 1");
}

SystemParams SystemParams::with_lambda(double l) const {
  SystemParams p = *this;
  p.lambda = l;
  return p;
}

SystemParams SystemParams::with_n_max(int n) const {
  SystemParams p = *this;
  p.n_max = n;
  return p;
}

SystemParams SystemParams::from_theta(double delta, double theta, double w0, double lambda,
                                      int n_max) {
  if (!(theta >= 0.0) || theta >= std::numbers::pi / 2) {
    throw ParameterError("theta must lie in [0, pi/2)");
  }
  SystemParams p{delta, delta * std::tan(theta), w0, lambda, n_max};
  p.validate();
  return p;
}

std::string SystemParams::describe() const {
  std::ostringstream os;
  os.precision(12);
  os << "delta=" << delta << " epsilon=" << epsilon << " w0=" << w0 << " lambda=" << lambda
     << " n_max=" << n_max;
  return os.str();
}

}  // namespace dicke3
