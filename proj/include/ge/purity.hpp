#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ge/algebra.hpp"
#include "ge/states.hpp"

namespace ge {

/// Expectations <psi|x_i|psi> over a distinguished basis: the reduced state
/// of |psi> in coordinates.
struct CoherenceVector {
  std::vector<double> values;
  std::string basis_label;
  double raw_sq_len = 0.0;  // sum of values^2
};

struct PurityReport {
  double raw = 0.0;         // sum <x_i>^2
  double normalized = 0.0;  // k_const * raw, in [0, 1]
  double k_const = 0.0;
  std::string basis_label;
};

CoherenceVector expectations(const Vector& psi, const ObservableBasis& basis);

/// Normalization constant K making the maximum purity 1 over pure states.
/// Closed forms: su(d) -> d/(c(d-1)); local algebras -> d/(c*sum(d_l - 1))
/// (equals the familiar 2/n for qubits at the sigma/sqrt(2) scaling c =
/// 2^(n-1)); spin(j) -> 1/raw(|j,-j>). Custom algebras need a reference
/// state claimed extremal.
double normalization_k(const ObservableBasis& basis);
double normalization_k(const ObservableBasis& basis, const Vector& reference);

PurityReport h_purity(const Vector& psi, const ObservableBasis& basis);

/// Trace-inner-product projection of |psi><psi| onto span{x_i}:
/// sum_i (<x_i>/c) x_i.
Matrix project_onto_algebra(const Vector& psi, const ObservableBasis& basis);

/// (d_l/(d_l-1)) (tr rho_l^2 - 1/d_l) from the partial trace; in [0, 1].
double subsystem_purity(const Vector& psi, const SubsystemPartition& partition,
                        int l);

/// Local-algebra purity from reduced density operators alone:
/// sum_l d_l (tr rho_l^2 - 1/d_l) / sum_l (d_l - 1). Independent of the
/// expectation-value route through h_purity; for equal local dimensions it
/// is the familiar average-subsystem-purity form, and for qubits it reduces
/// to (2/n) sum_l tr rho_l^2 - 1.
double local_purity_via_reductions(const Vector& psi,
                                   const SubsystemPartition& partition);

}  // namespace ge
