#pragma once

#include <stdexcept>
#include <string>

namespace dicke3 {

/// Invalid physical parameters or malformed arguments.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A matrix handed to a Hermitian-only routine failed the Hermiticity check.
class NotHermitianError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The Fock-space cutoff is too small for the requested accuracy.
class TruncationError : public std::runtime_error {
 public:
  enum class Kind {
    insufficient,  // a specific cutoff failed a quality check; a larger one may work
    infeasible,    // the certification schedule hit its cap
  };

  TruncationError(Kind kind, const std::string& what, int suggested_n_max = -1)
      : std::runtime_error(what), kind_(kind), suggested_n_max_(suggested_n_max) {}

  Kind kind() const noexcept { return kind_; }
  int suggested_n_max() const noexcept { return suggested_n_max_; }

 private:
  Kind kind_;
  int suggested_n_max_;
};

/// A sweep grid point could not be certified; carries the offending coupling.
class ConvergenceError : public TruncationError {
 public:
  ConvergenceError(double lambda, const std::string& what)
      : TruncationError(Kind::infeasible, what), lambda_(lambda) {}
  double lambda() const noexcept { return lambda_; }

 private:
  double lambda_;
};

/// Phase-space grid did not capture enough of the distribution.
class GridError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Output could not be written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dicke3
