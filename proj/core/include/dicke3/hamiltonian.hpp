#pragma once

#include <array>

#include "dicke3/operators.hpp"
#include "dicke3/params.hpp"

namespace dicke3 {

struct HamiltonianBundle {
  DenseHermitianOperator h_total;
  SystemParams params;
  DenseHermitianOperator parity_op;
};

/// H = sum_j [-(delta/2) sx_j - (epsilon/2) sz_j] + w0 a^dagger a + lambda (a + a^dagger)(sz1 + sz2 + sz3)
///
/// Zero-point energy omitted. The matrix is real symmetric; the real form is
/// what the eigensolver consumes.
RealMatrix hamiltonian_matrix(const SystemParams& params);

HamiltonianBundle build_full_hamiltonian(const SystemParams& params);

/// sx1 sx2 sx3 (x) (-1)^N
RealMatrix parity_matrix(int n_max);
DenseHermitianOperator parity_operator(int n_max);

/// Qubit configuration after relabelling: the state of qubit j moves to slot perm[j-1].
int permute_config(int config, const std::array<int, 3>& perm);

/// Unitary that reorders the qubit tensor factors. Throws ParameterError unless
/// `perm` is a permutation of {1, 2, 3}.
RealMatrix permutation_operator(const std::array<int, 3>& perm, int n_max);

/// All six permutations of {1, 2, 3}, identity first.
std::array<std::array<int, 3>, 6> all_permutations();

}  // namespace dicke3
