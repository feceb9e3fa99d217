#pragma once

#include "ge/states.hpp"

namespace ge {

/// Number of qubits if d = 2^n (n >= 1), otherwise throws.
int qubit_count(Eigen::Index dim);

/// Qubit-deletion map: keeps amplitudes whose jth bit equals b and removes
/// that bit from the index. Output is unnormalized;
/// |l_j(0)psi|^2 + |l_j(1)psi|^2 = 1. Qubit 0 is the most significant bit.
Vector lj_map(const Vector& psi, int j, int b);

/// Wedge distance D(u,v) = (1/2) sum_{ij} |u_i v_j - u_j v_i|^2, evaluated
/// via the closed form |u|^2 |v|^2 - |<u,v>|^2.
double mw_distance(const Vector& u, const Vector& v);

/// Meyer-Wallach global entanglement Q = (4/n) sum_j D(l_j(0)psi, l_j(1)psi).
/// For n = 1 this degenerates to 0 for any pure qubit and is accepted.
double meyer_wallach_q(const Vector& psi);

/// |P_loc(psi) + Q(psi) - 1| from the two independent code paths
/// (purity via expectations, Q via the deletion maps).
double verify_theorem_4_5(const Vector& psi);

/// Q = 2 (1 - (1/n) sum_l tr rho_l^2) via partial traces.
double q_via_subsystem_purity(const Vector& psi);

}  // namespace ge
