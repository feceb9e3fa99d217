#include "ge/gcs.hpp"

#include <cmath>
#include <stdexcept>

namespace ge {

namespace {
constexpr double kClosureTol = 1e-6;

void require_closed(const ObservableBasis& basis, const char* who) {
  if (check_closure(basis) > kClosureTol)
    throw std::invalid_argument(std::string(who) +
                                ": basis is not Lie-bracket closed");
}
}  // namespace

Displacement displacement(const ObservableBasis& basis,
                          const std::vector<double>& t) {
  if (static_cast<int>(t.size()) != basis.size())
    throw DimensionMismatch("displacement: coefficient count mismatch");
  require_closed(basis, "displacement");

  Matrix x = Matrix::Zero(basis.dim, basis.dim);
  for (int a = 0; a < basis.size(); ++a) x += t[a] * basis.ops[a];
  return Displacement{basis.label, t, expm_i_hermitian(x, 1.0)};
}

Vector coherent_state(const ObservableBasis& basis, const Vector& reference,
                      const std::vector<double>& t) {
  if (reference.size() != basis.dim)
    throw DimensionMismatch("coherent_state: reference dimension mismatch");
  return displacement(basis, t).unitary * reference;
}

Vector spin_coherent(cx xi) {
  const Matrix jp = spin_ladder_plus(2);
  // xi J+ - xi* J- is anti-Hermitian, so H = -i(xi J+ - xi* J-) is Hermitian
  // and exp(iH) realizes the displacement unitarily.
  const Matrix h = cx(0.0, -1.0) * (xi * jp - std::conj(xi) * jp.adjoint());
  return expm_i_hermitian(h, 1.0) * spin_state(2, -2);
}

GcsVerdict gcs_verdict(const Vector& psi, const ObservableBasis& basis,
                       double tolerance) {
  require_closed(basis, "gcs_verdict");

  const CoherenceVector cv = expectations(psi, basis);
  GcsVerdict verdict;
  verdict.purity = normalization_k(basis) * cv.raw_sq_len;
  verdict.is_gcs = verdict.purity >= 1.0 - tolerance;

  if (cv.raw_sq_len < 1e-12) {
    // H = 0 has no unique ground state; only the purity verdict stands.
    verdict.witness_degenerate = true;
    return verdict;
  }

  Matrix witness = Matrix::Zero(basis.dim, basis.dim);
  for (int i = 0; i < basis.size(); ++i)
    witness -= cv.values[i] * basis.ops[i];

  const HermitianEig eig = herm_eig(witness);
  const double ground = eig.eigenvalues(0);
  double gap = 0.0;
  double overlap = 0.0;
  for (Eigen::Index k = 0; k < eig.eigenvalues.size(); ++k) {
    if (eig.eigenvalues(k) - ground < 1e-10) {
      overlap += std::norm(eig.eigenvectors.col(k).dot(psi));
    } else if (gap == 0.0) {
      gap = eig.eigenvalues(k) - ground;
    }
  }
  verdict.witness_gap = gap;
  verdict.ground_overlap = overlap;
  verdict.witness_degenerate = gap == 0.0;
  return verdict;
}

Vector triplet_embedding(const Vector& psi3) {
  if (psi3.size() != 3)
    throw DimensionMismatch("triplet_embedding: expected a spin-1 state");
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Vector out(4);
  out(0) = psi3(0);                 // |1,+1> -> |00>
  out(1) = psi3(1) * inv_sqrt2;     // |1,0>  -> (|01>+|10>)/sqrt(2)
  out(2) = psi3(1) * inv_sqrt2;
  out(3) = psi3(2);                 // |1,-1> -> |11>
  return out;
}

}  // namespace ge
