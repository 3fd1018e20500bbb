#include "dicke3/hamiltonian.hpp"

#include <algorithm>
#include <cmath>

#include "dicke3/errors.hpp"
#include "dicke3/hilbert.hpp"

namespace dicke3 {

RealMatrix hamiltonian_matrix(const SystemParams& params) {
  params.validate();
  const int n_max = params.n_max;
  const Eigen::Index dim = params.composite_dim();
  RealMatrix h = RealMatrix::Zero(dim, dim);

  for (int c = 0; c < kQubitDim; ++c) {
    const int s = collective_z(c);
    for (int n = 0; n <= n_max; ++n) {
      const Eigen::Index i = composite_index(c, n, n_max);
      h(i, i) = params.w0 * n - 0.5 * params.epsilon * s;
      if (n < n_max) {
        const Eigen::Index j = composite_index(c, n + 1, n_max);
        const double v = params.lambda * s * std::sqrt(static_cast<double>(n + 1));
        h(i, j) = v;
        h(j, i) = v;
      }
    }
    // -(delta/2) sx_j flips one qubit and leaves n alone
    for (int q = 0; q < kQubits; ++q) {
      const int flipped = c ^ (1 << q);
      for (int n = 0; n <= n_max; ++n) {
        h(composite_index(c, n, n_max), composite_index(flipped, n, n_max)) = -0.5 * params.delta;
      }
    }
  }
  return h;
}

HamiltonianBundle build_full_hamiltonian(const SystemParams& params) {
  const RealMatrix h = hamiltonian_matrix(params);
  return {DenseHermitianOperator(h.cast<Complex>()), params, parity_operator(params.n_max)};
}

RealMatrix parity_matrix(int n_max) {
  if (n_max < 1) throw ParameterError("n_max must be >= 1");
  const Eigen::Index dim = static_cast<Eigen::Index>(kQubitDim) * (n_max + 1);
  RealMatrix p = RealMatrix::Zero(dim, dim);
  for (int c = 0; c < kQubitDim; ++c) {
    for (int n = 0; n <= n_max; ++n) {
      p(composite_index(c ^ 7, n, n_max), composite_index(c, n, n_max)) = (n % 2 == 0) ? 1.0 : -1.0;
    }
  }
  return p;
}

DenseHermitianOperator parity_operator(int n_max) {
  return DenseHermitianOperator(parity_matrix(n_max).cast<Complex>());
}

int permute_config(int config, const std::array<int, 3>& perm) {
  int out = 0;
  for (int j = 1; j <= kQubits; ++j) {
    const int bit = (config >> (kQubits - j)) & 1;
    out |= bit << (kQubits - perm[j - 1]);
  }
  return out;
}

RealMatrix permutation_operator(const std::array<int, 3>& perm, int n_max) {
  if (n_max < 1) throw ParameterError("n_max must be >= 1");
  std::array<int, 3> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 3>{1, 2, 3}) {
    throw ParameterError("permutation must reorder {1, 2, 3}");
  }
  const Eigen::Index dim = static_cast<Eigen::Index>(kQubitDim) * (n_max + 1);
  RealMatrix p = RealMatrix::Zero(dim, dim);
  for (int c = 0; c < kQubitDim; ++c) {
    const int to = permute_config(c, perm);
    for (int n = 0; n <= n_max; ++n) p(composite_index(to, n, n_max), composite_index(c, n, n_max)) = 1.0;
  }
  return p;
}

std::array<std::array<int, 3>, 6> all_permutations() {
  return {{{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}}};
}

}  // namespace dicke3
