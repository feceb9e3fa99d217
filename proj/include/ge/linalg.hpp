#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace ge {

using cx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Thrown when operator/state dimensions are incompatible.
struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

namespace tol {
inline constexpr double hermiticity = 1e-10;
inline constexpr double unitarity = 1e-10;
}  // namespace tol

/// Ordered local dimensions (d_1,...,d_n); their product is the ambient
/// Hilbert-space dimension.
struct SubsystemPartition {
  std::vector<int> dims;

  int total() const;
  int size() const { return static_cast<int>(dims.size()); }
};

/// Spectral decomposition of a Hermitian matrix. Eigenvalues ascend and
/// column k of `eigenvectors` pairs with eigenvalue k. Each column is scaled
/// so its first component of magnitude > 1e-8 is real positive.
struct HermitianEig {
  Eigen::VectorXd eigenvalues;
  Matrix eigenvectors;
};

bool is_hermitian(const Matrix& a, double tolerance = tol::hermiticity);

/// Kronecker product: (a ⊗ b)[(i*rb+k),(j*cb+l)] = a(i,j) b(k,l).
Matrix kron(const Matrix& a, const Matrix& b);

/// Trace out all subsystems except `keep`; returns the d_keep x d_keep
/// reduced operator. Implemented by multi-index arithmetic, O(d^2).
Matrix partial_trace(const Matrix& rho, const SubsystemPartition& partition,
                     int keep);

HermitianEig herm_eig(const Matrix& a);

/// exp(i*scale*h) for Hermitian h, via eigendecomposition. Output is
/// unitary within tol::unitarity.
Matrix expm_i_hermitian(const Matrix& h, double scale);

/// Hilbert-Schmidt inner product trace(a† b).
cx trace_inner(const Matrix& a, const Matrix& b);

}  // namespace ge
