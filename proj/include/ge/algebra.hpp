#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ge/linalg.hpp"

namespace ge {

enum class AlgebraFamily { Su, Local, Pauli, Spin, Custom };

/// Ordered list of Hermitian, traceless operators {x_i} with
/// trace(x_i x_j) = norm_const * delta_ij. All built-in constructors emit
/// norm_const = 1; purity normalization constants are derived from it.
struct ObservableBasis {
  int dim = 0;
  std::vector<Matrix> ops;
  double norm_const = 1.0;
  std::string label;
  std::optional<SubsystemPartition> partition;
  AlgebraFamily family = AlgebraFamily::Custom;

  int size() const { return static_cast<int>(ops.size()); }
};

/// Generalized Gell-Mann basis of su(d), orthonormal under the trace inner
/// product. Ordering: symmetric pairs (j<k) first, then antisymmetric, then
/// diagonal, each lexicographic.
ObservableBasis su_basis(int d);

/// Direct sum of su(d_l) algebras, each element acting on one factor with
/// identities elsewhere, rescaled so the embedded set is orthonormal.
ObservableBasis local_algebra(const SubsystemPartition& partition);

/// n-qubit local Pauli basis sigma_alpha^l / 2^(n/2), ordered per qubit as
/// (x, y, z). Coincides with local_algebra((2,...,2)).
ObservableBasis pauli_local(int n, int max_qubits = 12);

/// Spin-j irreducible su(2) representation (j = two_j/2), dimension 2j+1,
/// built from the standard ladder operators and uniformly rescaled so
/// trace(J_a J_b) = delta_ab. Ordering (Jx, Jy, Jz), Jz eigenvalues
/// descending from the top-left entry.
ObservableBasis spin_generators(int two_j);

/// Maximum Frobenius residual of i(x_i x_j - x_j x_i) outside span{x_k}
/// over all pairs. < 1e-9 means the set is closed under the modified
/// Lie bracket.
double check_closure(const ObservableBasis& basis);

/// Gram-Schmidt under the trace inner product; inputs must be Hermitian,
/// traceless and linearly independent (pivot >= 1e-9).
ObservableBasis orthonormalize(const std::vector<Matrix>& ops);

/// Standard unnormalized spin ladder operators J+ and J- for j = two_j/2,
/// <m±1|J±|m> = sqrt(j(j+1) - m(m±1)), basis ordered with m descending.
Matrix spin_ladder_plus(int two_j);
Matrix spin_ladder_minus(int two_j);

}  // namespace ge
