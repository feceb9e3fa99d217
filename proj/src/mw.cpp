#include "ge/mw.hpp"

#include <cmath>
#include <stdexcept>

#include "ge/purity.hpp"

namespace ge {

int qubit_count(Eigen::Index dim) {
  int n = 0;
  Eigen::Index d = 1;
  while (d < dim) {
    d <<= 1;
    ++n;
  }
  if (d != dim || n < 1)
    throw DimensionMismatch("state dimension is not a power of two");
  return n;
}

Vector lj_map(const Vector& psi, int j, int b) {
  const int n = qubit_count(psi.size());
  if (j < 0 || j >= n) throw std::out_of_range("lj_map: qubit index out of range");
  if (b != 0 && b != 1) throw std::invalid_argument("lj_map: bit must be 0 or 1");

  const int shift = n - 1 - j;  // qubit 0 is the most significant bit
  const Eigen::Index low_mask = (Eigen::Index{1} << shift) - 1;
  Vector out(psi.size() / 2);
  for (Eigen::Index k = 0; k < out.size(); ++k) {
    const Eigen::Index idx =
        ((k & ~low_mask) << 1) | (Eigen::Index{b} << shift) | (k & low_mask);
    out(k) = psi(idx);
  }
  return out;
}

double mw_distance(const Vector& u, const Vector& v) {
  if (u.size() != v.size())
    throw DimensionMismatch("mw_distance: length mismatch");
  return u.squaredNorm() * v.squaredNorm() - std::norm(u.dot(v));
}

double meyer_wallach_q(const Vector& psi) {
  const int n = qubit_count(psi.size());
  if (n == 1) {
    // Degenerate case: the deletion maps produce scalars and Q vanishes
    // for any pure qubit.
    return 0.0;
  }
  double sum = 0.0;
  for (int j = 0; j < n; ++j) sum += mw_distance(lj_map(psi, j, 0), lj_map(psi, j, 1));
  return 4.0 / n * sum;
}

double verify_theorem_4_5(const Vector& psi) {
  const int n = qubit_count(psi.size());
  const double p = h_purity(psi, pauli_local(n)).normalized;
  return std::abs(p + meyer_wallach_q(psi) - 1.0);
}

double q_via_subsystem_purity(const Vector& psi) {
  const int n = qubit_count(psi.size());
  const SubsystemPartition partition{std::vector<int>(n, 2)};
  const Matrix rho = psi * psi.adjoint();
  double sum = 0.0;
  for (int l = 0; l < n; ++l)
    sum += partial_trace(rho, partition, l).squaredNorm();
  return 2.0 * (1.0 - sum / n);
}

}  // namespace ge
