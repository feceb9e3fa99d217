#pragma once

#include "ge/purity.hpp"

namespace ge {

/// Group element exp(i sum_a t_a x_a) over a bracket-closed basis.
struct Displacement {
  std::string basis_label;
  std::vector<double> coefficients;
  Matrix unitary;
};

struct GcsVerdict {
  double purity = 0.0;        // normalized h-purity
  bool is_gcs = false;        // purity >= 1 - tol
  double witness_gap = 0.0;   // lambda_1 - lambda_0 of the witness Hamiltonian
  double ground_overlap = 0.0;
  bool witness_degenerate = false;  // coherence vector ~ 0, no usable witness
};

Displacement displacement(const ObservableBasis& basis,
                          const std::vector<double>& t);

/// D |reference>: the group orbit of the reference state.
Vector coherent_state(const ObservableBasis& basis, const Vector& reference,
                      const std::vector<double>& t);

/// Spin-1 coherent state exp(xi J+ - xi* J-)|1,-1> with the unnormalized
/// standard ladder operators.
Vector spin_coherent(cx xi);

/// Purity verdict plus the witness-Hamiltonian check H = -sum <x_i> x_i:
/// a maximal-purity state with non-vanishing coherence vector is the unique
/// ground state of its own witness.
GcsVerdict gcs_verdict(const Vector& psi, const ObservableBasis& basis,
                       double tolerance = 1e-8);

/// Isometry from the spin-1 space onto the two-qubit triplet sector:
/// |1,+1> -> |00>, |1,0> -> (|01>+|10>)/sqrt(2), |1,-1> -> |11>.
Vector triplet_embedding(const Vector& psi3);

}  // namespace ge
