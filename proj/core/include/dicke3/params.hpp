#pragma once

#include <string>

namespace dicke3 {

/// Physical parameters of the three-qubit/oscillator system.
///
/// Units: hbar = 1 and every energy is expressed in the same unit as `w0`
/// (normally w0 = 1). The raw coupling g and oscillator mass never appear:
/// `lambda` is the fundamental qubit-oscillator coupling.
struct SystemParams {
  double delta = 1.0;    // qubit gap
  double epsilon = 0.0;  // qubit bias
  double w0 = 1.0;       // oscillator quantum
  double lambda = 0.0;   // qubit-oscillator coupling
  int n_max = 60;        // Fock states |0> ... |n_max>

  /// Bare qubit splitting sqrt(delta^2 + epsilon^2).
  double qubit_splitting() const;
  /// Mixing angle atan(epsilon / delta), in [0, pi/2).
  double theta() const;

  int oscillator_dim() const { return n_max + 1; }
  int composite_dim() const { return 8 * (n_max + 1); }

  /// Throws ParameterError if any invariant is violated.
  void validate() const;

  SystemParams with_lambda(double l) const;
  SystemParams with_n_max(int n) const;

  /// epsilon = delta * tan(theta).
  static SystemParams from_theta(double delta, double theta, double w0, double lambda,
                                 int n_max = 60);

  std::string describe() const;

  friend bool operator==(const SystemParams&, const SystemParams&) = default;
};

}  // namespace dicke3
