#include "ge/purity.hpp"

#include <cmath>
#include <stdexcept>

namespace ge {

CoherenceVector expectations(const Vector& psi, const ObservableBasis& basis) {
  if (psi.size() != basis.dim)
    throw DimensionMismatch("expectations: state/basis dimension mismatch");

  CoherenceVector cv;
  cv.basis_label = basis.label;
  cv.values.reserve(basis.ops.size());
  for (const Matrix& x : basis.ops) {
    const cx e = psi.dot(x * psi);
    if (std::abs(e.imag()) > tol::hermiticity)
      throw std::runtime_error(
          "expectations: non-real expectation value, basis is not Hermitian");
    cv.values.push_back(e.real());
    cv.raw_sq_len += e.real() * e.real();
  }
  return cv;
}

double normalization_k(const ObservableBasis& basis) {
  const double c = basis.norm_const;
  const double d = basis.dim;
  switch (basis.family) {
    case AlgebraFamily::Su:
      return d / (c * (d - 1.0));
    case AlgebraFamily::Local:
    case AlgebraFamily::Pauli: {
      double sum = 0.0;
      for (int dl : basis.partition->dims) sum += dl - 1.0;
      return d / (c * sum);
    }
    case AlgebraFamily::Spin:
      // Lowest-weight reference |j,-j> is extremal (maximal-purity GCS).
      return normalization_k(basis, spin_state(basis.dim - 1, -(basis.dim - 1)));
    case AlgebraFamily::Custom:
      throw std::invalid_argument(
          "normalization_k: no closed form for a custom algebra; supply a "
          "reference state claimed extremal");
  }
  throw std::logic_error("normalization_k: unknown algebra family");
}

double normalization_k(const ObservableBasis& basis, const Vector& reference) {
  const double raw = expectations(reference, basis).raw_sq_len;
  if (raw <= 0.0)
    throw std::invalid_argument(
        "normalization_k: reference state has vanishing coherence vector");
  return 1.0 / raw;
}

PurityReport h_purity(const Vector& psi, const ObservableBasis& basis) {
  PurityReport report;
  report.basis_label = basis.label;
  report.raw = expectations(psi, basis).raw_sq_len;
  report.k_const = normalization_k(basis);
  report.normalized = report.k_const * report.raw;
  return report;
}

Matrix project_onto_algebra(const Vector& psi, const ObservableBasis& basis) {
  const CoherenceVector cv = expectations(psi, basis);
  Matrix out = Matrix::Zero(basis.dim, basis.dim);
  for (int i = 0; i < basis.size(); ++i)
    out += (cv.values[i] / basis.norm_const) * basis.ops[i];
  return out;
}

double subsystem_purity(const Vector& psi, const SubsystemPartition& partition,
                        int l) {
  const int d = partition.total();
  if (psi.size() != d)
    throw DimensionMismatch("subsystem_purity: state/partition mismatch");
  const Matrix rho = psi * psi.adjoint();
  const Matrix rho_l = partial_trace(rho, partition, l);
  const double dl = partition.dims[l];
  return dl / (dl - 1.0) * (rho_l.squaredNorm() - 1.0 / dl);
}

double local_purity_via_reductions(const Vector& psi,
                                   const SubsystemPartition& partition) {
  const int d = partition.total();
  if (psi.size() != d)
    throw DimensionMismatch("local_purity_via_reductions: state/partition mismatch");
  const Matrix rho = psi * psi.adjoint();
  double num = 0.0, den = 0.0;
  for (int l = 0; l < partition.size(); ++l) {
    const double dl = partition.dims[l];
    const Matrix rho_l = partial_trace(rho, partition, l);
    // tr rho_l^2 as the squared Frobenius norm, no eigensolver involved.
    num += dl * (rho_l.squaredNorm() - 1.0 / dl);
    den += dl - 1.0;
  }
  return num / den;
}

}  // namespace ge
