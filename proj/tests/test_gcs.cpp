#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ge/gcs.hpp"
#include "test_util.hpp"

using namespace ge;
using namespace ge::testutil;

TEST_CASE("displacement basics") {
  const ObservableBasis su2 = su_basis(2);
  const Displacement id = displacement(su2, {0.0, 0.0, 0.0});
  CHECK(max_abs(id.unitary - Matrix::Identity(2, 2)) < 1e-14);

  // t_x = pi/sqrt(2) makes the exponent (pi/2) sigma_x.
  const Displacement dx = displacement(su2, {std::numbers::pi / std::numbers::sqrt2, 0.0, 0.0});
  CHECK(max_abs(dx.unitary - cx(0, 1) * pauli_x()) < 1e-13);

  Rng rng(73);
  std::vector<double> t(su2.size());
  for (double& v : t) v = 3.0 * (2.0 * rng.uniform() - 1.0);
  const Displacement d = displacement(su2, t);
  CHECK(max_abs(Matrix(d.unitary.adjoint() * d.unitary) -
                Matrix::Identity(2, 2)) < 1e-10);

  CHECK_THROWS_AS(displacement(su2, {1.0}), DimensionMismatch);

  const ObservableBasis open_set =
      orthonormalize({kron(pauli_z(), Matrix::Identity(2, 2)),
                      kron(pauli_x(), pauli_x())});
  CHECK_THROWS_AS(displacement(open_set, {1.0, 1.0}), std::invalid_argument);
}

TEST_CASE("coherent_state preserves purity along the orbit") {
  Rng rng(79);
  const ObservableBasis basis = pauli_local(3);
  const Vector reference = basis_state(8, 0);
  CHECK(max_abs(coherent_state(basis, reference, std::vector<double>(9, 0.0)) -
                reference) < 1e-14);

  for (int rep = 0; rep < 20; ++rep) {
    std::vector<double> t(basis.size());
    for (double& v : t) v = std::numbers::pi * (2.0 * rng.uniform() - 1.0);
    const Vector psi = coherent_state(basis, reference, t);
    CHECK(std::abs(h_purity(psi, basis).normalized - 1.0) < 1e-9);
  }

  // The su(d) orbit keeps full-algebra purity at 1 for any start state.
  const ObservableBasis su4 = su_basis(4);
  const Vector start = random_state(4, rng);
  std::vector<double> t(su4.size());
  for (double& v : t) v = 2.0 * rng.uniform() - 1.0;
  CHECK(std::abs(h_purity(coherent_state(su4, start, t), su4).normalized - 1.0) <
        1e-9);
}

TEST_CASE("spin coherent states") {
  CHECK(max_abs(spin_coherent(0.0) - spin_state(2, -2)) < 1e-15);

  const ObservableBasis basis = spin_generators(2);
  const double k = normalization_k(basis);
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) {
      const cx xi(-1.0 + 0.5 * a, -1.0 + 0.5 * b);
      const Vector psi = spin_coherent(xi);
      CHECK(std::abs(psi.norm() - 1.0) < 1e-12);
      const CoherenceVector cv = expectations(psi, basis);
      CHECK(std::abs(k * cv.raw_sq_len - 1.0) < 1e-9);
      // In the standard-generator normalization the Bloch-like vector
      // <J> sits on the unit sphere: sum (sqrt(2) <x_a>)^2 = 1.
      CHECK(std::abs(2.0 * cv.raw_sq_len - 1.0) < 1e-9);
    }
}

TEST_CASE("random spin-1 states stay inside the coherence ball") {
  Rng rng(83);
  const ObservableBasis basis = spin_generators(2);
  const double k = normalization_k(basis);
  for (int s = 0; s < 500; ++s) {
    const double raw = expectations(random_state(3, rng), basis).raw_sq_len;
    CHECK(raw <= 1.0 / k + 1e-12);
  }
}

TEST_CASE("gcs_verdict on reference, GHZ and |1,0>") {
  const ObservableBasis p3 = pauli_local(3);
  const GcsVerdict good = gcs_verdict(basis_state(8, 0), p3);
  CHECK(good.is_gcs);
  CHECK(good.ground_overlap == doctest::Approx(1.0));
  CHECK(good.witness_gap > 1e-8);
  CHECK_FALSE(good.witness_degenerate);

  const GcsVerdict bad = gcs_verdict(ghz(3), p3);
  CHECK_FALSE(bad.is_gcs);
  CHECK(bad.purity < 1e-12);
  CHECK(bad.witness_degenerate);

  const GcsVerdict mid = gcs_verdict(spin_state(2, 0), spin_generators(2));
  CHECK_FALSE(mid.is_gcs);
  CHECK(mid.purity < 1e-12);
}

TEST_CASE("witness separates non-extremal states") {
  Rng rng(89);
  const ObservableBasis p2 = pauli_local(2);
  int separated = 0;
  for (int s = 0; s < 20; ++s) {
    const Vector psi = random_state(4, rng);
    const GcsVerdict verdict = gcs_verdict(psi, p2);
    if (verdict.purity < 0.9) {
      ++separated;
      CHECK((verdict.witness_degenerate || verdict.ground_overlap < 1.0 - 1e-3));
    }
  }
  CHECK(separated > 0);
}

TEST_CASE("triplet embedding assignments and singlet exclusion") {
  CHECK(max_abs(triplet_embedding(spin_state(2, -2)) - basis_state(4, 3)) == 0.0);
  CHECK(max_abs(triplet_embedding(spin_state(2, 2)) - basis_state(4, 0)) == 0.0);

  Vector sym(4);
  sym << 0.0, 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0), 0.0;
  CHECK(max_abs(triplet_embedding(spin_state(2, 0)) - sym) == 0.0);

  // Linearity: (|1,+1> + |1,-1>)/sqrt(2) maps to the Bell state.
  Vector mix(3);
  mix << 1.0 / std::sqrt(2.0), 0.0, 1.0 / std::sqrt(2.0);
  CHECK(max_abs(triplet_embedding(mix) - ghz(2)) < 1e-15);

  Vector singlet(4);
  singlet << 0.0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0.0;
  Rng rng(97);
  for (int s = 0; s < 50; ++s)
    CHECK(std::abs(singlet.dot(triplet_embedding(random_state(3, rng)))) < 1e-15);
}

TEST_CASE("embedding maps GCS to product states and back") {
  Rng rng(101);
  const ObservableBasis basis = spin_generators(2);
  for (int s = 0; s < 100; ++s) {
    const Vector psi = random_state(3, rng);
    const Vector e = triplet_embedding(psi);
    const bool product = std::abs(e(0) * e(3) - e(1) * e(2)) < 1e-8;
    CHECK(gcs_verdict(psi, basis).is_gcs == product);
  }
  for (int s = 0; s < 50; ++s) {
    const cx xi(2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0);
    const Vector e = triplet_embedding(spin_coherent(xi));
    CHECK(std::abs(e(0) * e(3) - e(1) * e(2)) < 1e-9);
  }
}
