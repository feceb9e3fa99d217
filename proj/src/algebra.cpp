#include "ge/algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace ge {

namespace {

void check_basis_input(const Matrix& op, int d, const char* who) {
  if (op.rows() != d || op.cols() != d)
    throw DimensionMismatch(std::string(who) + ": operator dimension mismatch");
  if (!is_hermitian(op))
    throw std::invalid_argument(std::string(who) + ": operator is not Hermitian");
  if (std::abs(op.trace()) > tol::hermiticity)
    throw std::invalid_argument(std::string(who) + ": operator is not traceless");
}

}  // namespace

ObservableBasis su_basis(int d) {
  if (d < 2) throw std::invalid_argument("su_basis: d must be >= 2");
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  ObservableBasis basis;
  basis.dim = d;
  basis.label = "su(" + std::to_string(d) + ")";
  basis.family = AlgebraFamily::Su;
  basis.ops.reserve(static_cast<std::size_t>(d) * d - 1);

  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      Matrix s = Matrix::Zero(d, d);
      s(j, k) = inv_sqrt2;
      s(k, j) = inv_sqrt2;
      basis.ops.push_back(std::move(s));
    }
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      Matrix a = Matrix::Zero(d, d);
      a(j, k) = cx(0.0, -inv_sqrt2);
      a(k, j) = cx(0.0, inv_sqrt2);
      basis.ops.push_back(std::move(a));
    }
  for (int l = 1; l < d; ++l) {
    Matrix h = Matrix::Zero(d, d);
    const double scale = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
    for (int m = 0; m < l; ++m) h(m, m) = scale;
    h(l, l) = -static_cast<double>(l) * scale;
    basis.ops.push_back(std::move(h));
  }
  return basis;
}

ObservableBasis local_algebra(const SubsystemPartition& partition) {
  if (partition.dims.empty())
    throw std::invalid_argument("local_algebra: need at least one subsystem");
  const int d = partition.total();

  ObservableBasis basis;
  basis.dim = d;
  basis.family = AlgebraFamily::Local;
  basis.partition = partition;
  basis.label = "local(";
  for (int l = 0; l < partition.size(); ++l) {
    if (l) basis.label += "x";
    basis.label += std::to_string(partition.dims[l]);
  }
  basis.label += ")";

  for (int l = 0; l < partition.size(); ++l) {
    const int dl = partition.dims[l];
    int left = 1, right = 1;
    for (int m = 0; m < l; ++m) left *= partition.dims[m];
    for (int m = l + 1; m < partition.size(); ++m) right *= partition.dims[m];
    // Plain-identity embedding has norm d/dl; rescale to keep the set
    // orthonormal (same as the 1/sqrt(d_l') identity-slot convention).
    const double scale = std::sqrt(static_cast<double>(dl) / d);
    const Matrix il = Matrix::Identity(left, left);
    const Matrix ir = Matrix::Identity(right, right);
    for (const Matrix& x : su_basis(dl).ops)
      basis.ops.push_back(scale * kron(kron(il, x), ir));
  }
  return basis;
}

ObservableBasis pauli_local(int n, int max_qubits) {
  if (n < 1) throw std::invalid_argument("pauli_local: n must be >= 1");
  if (n > max_qubits)
    throw std::invalid_argument("pauli_local: n exceeds configured maximum");

  SubsystemPartition partition{std::vector<int>(n, 2)};
  ObservableBasis basis = local_algebra(partition);
  basis.family = AlgebraFamily::Pauli;
  basis.label = "pauli_local(" + std::to_string(n) + ")";
  return basis;
}

Matrix spin_ladder_plus(int two_j) {
  if (two_j < 1) throw std::invalid_argument("spin_ladder: two_j must be >= 1");
  const int dim = two_j + 1;
  const double j = two_j / 2.0;
  Matrix jp = Matrix::Zero(dim, dim);
  // Index k holds m = j - k (m descending); J+ maps m -> m+1, i.e. k -> k-1.
  for (int k = 1; k < dim; ++k) {
    const double m = j - k;
    jp(k - 1, k) = std::sqrt(j * (j + 1) - m * (m + 1));
  }
  return jp;
}

Matrix spin_ladder_minus(int two_j) {
  return spin_ladder_plus(two_j).adjoint();
}

ObservableBasis spin_generators(int two_j) {
  const int dim = two_j + 1;
  const double j = two_j / 2.0;
  const Matrix jp = spin_ladder_plus(two_j);
  const Matrix jm = jp.adjoint();

  Matrix jx = 0.5 * (jp + jm);
  Matrix jy = (jp - jm) / cx(0.0, 2.0);
  Matrix jz = Matrix::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) jz(k, k) = j - k;

  const double scale = 1.0 / std::sqrt(std::real(trace_inner(jz, jz)));

  ObservableBasis basis;
  basis.dim = dim;
  basis.family = AlgebraFamily::Spin;
  basis.label = "spin(" + std::to_string(two_j) + "/2)";
  if (two_j % 2 == 0) basis.label = "spin(" + std::to_string(two_j / 2) + ")";
  basis.ops = {scale * jx, scale * jy, scale * jz};
  return basis;
}

double check_closure(const ObservableBasis& basis) {
  double worst = 0.0;
  for (int i = 0; i < basis.size(); ++i)
    for (int j = i + 1; j < basis.size(); ++j) {
      const Matrix& x = basis.ops[i];
      const Matrix& y = basis.ops[j];
      Matrix bracket = cx(0.0, 1.0) * (x * y - y * x);
      Matrix residual = bracket;
      for (const Matrix& xk : basis.ops)
        residual -= (trace_inner(xk, bracket) / basis.norm_const) * xk;
      worst = std::max(worst, residual.norm());
    }
  return worst;
}

ObservableBasis orthonormalize(const std::vector<Matrix>& ops) {
  if (ops.empty()) throw std::invalid_argument("orthonormalize: empty input");
  const int d = static_cast<int>(ops.front().rows());

  ObservableBasis basis;
  basis.dim = d;
  basis.label = "custom(" + std::to_string(d) + ")";
  basis.family = AlgebraFamily::Custom;

  for (const Matrix& op : ops) {
    check_basis_input(op, d, "orthonormalize");
    Matrix v = op;
    // trace(uv) is real for Hermitian u, v.
    for (const Matrix& u : basis.ops) v -= std::real(trace_inner(u, v)) * u;
    const double pivot = v.norm();
    if (pivot < 1e-9)
      throw std::invalid_argument("orthonormalize: operators are linearly dependent");
    basis.ops.push_back(v / pivot);
  }
  return basis;
}

}  // namespace ge
