#include "ge/linalg.hpp"

#include <stdexcept>

namespace ge {

int SubsystemPartition::total() const {
  long long d = 1;
  for (int dl : dims) {
    if (dl < 2) throw std::invalid_argument("subsystem dimension must be >= 2");
    d *= dl;
    if (d > (1 << 24)) throw std::invalid_argument("partition dimension overflow");
  }
  return static_cast<int>(d);
}

bool is_hermitian(const Matrix& a, double tolerance) {
  if (a.rows() != a.cols()) return false;
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tolerance;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix partial_trace(const Matrix& rho, const SubsystemPartition& partition,
                     int keep) {
  const int d = partition.total();
  if (rho.rows() != d || rho.cols() != d)
    throw DimensionMismatch("partial_trace: operator does not match partition");
  if (keep < 0 || keep >= partition.size())
    throw std::out_of_range("partial_trace: subsystem index out of range");

  const int dk = partition.dims[keep];
  int right = 1;
  for (int m = keep + 1; m < partition.size(); ++m) right *= partition.dims[m];
  const int left = d / (dk * right);

  Matrix out = Matrix::Zero(dk, dk);
  for (int i = 0; i < dk; ++i)
    for (int j = 0; j < dk; ++j) {
      cx sum = 0.0;
      for (int a = 0; a < left; ++a)
        for (int b = 0; b < right; ++b) {
          const int row = (a * dk + i) * right + b;
          const int col = (a * dk + j) * right + b;
          sum += rho(row, col);
        }
      out(i, j) = sum;
    }
  return out;
}

HermitianEig herm_eig(const Matrix& a) {
  if (a.rows() != a.cols())
    throw DimensionMismatch("herm_eig: matrix must be square");
  if (!is_hermitian(a))
    throw std::invalid_argument("herm_eig: matrix is not Hermitian");

  Eigen::SelfAdjointEigenSolver<Matrix> solver(a);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("herm_eig: eigensolver failed to converge");

  HermitianEig out{solver.eigenvalues(), solver.eigenvectors()};
  // Phase convention: first component of magnitude > 1e-8 made real positive.
  for (Eigen::Index k = 0; k < out.eigenvectors.cols(); ++k) {
    for (Eigen::Index i = 0; i < out.eigenvectors.rows(); ++i) {
      const cx v = out.eigenvectors(i, k);
      if (std::abs(v) > 1e-8) {
        out.eigenvectors.col(k) *= std::conj(v) / std::abs(v);
        break;
      }
    }
  }
  return out;
}

Matrix expm_i_hermitian(const Matrix& h, double scale) {
  const HermitianEig eig = herm_eig(h);
  Vector phases(eig.eigenvalues.size());
  for (Eigen::Index k = 0; k < phases.size(); ++k)
    phases(k) = std::exp(cx(0.0, scale * eig.eigenvalues(k)));
  return eig.eigenvectors * phases.asDiagonal() * eig.eigenvectors.adjoint();
}

cx trace_inner(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("trace_inner: dimension mismatch");
  // trace(a† b) = sum_ij conj(a_ij) b_ij, no matrix product needed.
  return (a.conjugate().cwiseProduct(b)).sum();
}

}  // namespace ge
