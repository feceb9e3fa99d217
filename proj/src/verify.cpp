#include "ge/verify.hpp"

#include <cmath>
#include <numbers>

#include "ge/gcs.hpp"
#include "ge/mw.hpp"
#include "ge/purity.hpp"

namespace ge {

namespace {

std::vector<double> random_coefficients(Rng& rng, int count, double scale) {
  std::vector<double> t(count);
  for (double& v : t) v = scale * (2.0 * rng.uniform() - 1.0);
  return t;
}

Vector random_product_state(Rng& rng, const SubsystemPartition& partition) {
  std::vector<Vector> locals;
  for (int dl : partition.dims) locals.push_back(random_state(dl, rng));
  return product_state(locals);
}

double check_theorem_4_5(Rng& rng, int samples) {
  double worst = 0.0;
  for (int n = 2; n <= 5; ++n)
    for (int s = 0; s < samples; ++s)
      worst = std::max(worst, verify_theorem_4_5(random_state(1 << n, rng)));
  return worst;
}

double check_theorem_4_1(Rng& rng, int samples) {
  const std::vector<SubsystemPartition> partitions = {
      {{2, 2}}, {{2, 3}}, {{3, 3}}, {{2, 2, 2}}, {{2, 4}}};
  double worst = 0.0;
  for (const auto& partition : partitions) {
    const ObservableBasis basis = local_algebra(partition);
    const double k = normalization_k(basis);
    for (int s = 0; s < samples; ++s) {
      const Vector psi = random_state(partition.total(), rng);
      const double via_exp = k * expectations(psi, basis).raw_sq_len;
      const double via_red = local_purity_via_reductions(psi, partition);
      worst = std::max(worst, std::abs(via_exp - via_red));

      // Per-subsystem form: each block of the coherence vector, normalized
      // on its own, must reproduce the reduced-state purity.
      const CoherenceVector cv = expectations(psi, basis);
      int offset = 0;
      for (int l = 0; l < partition.size(); ++l) {
        const double dl = partition.dims[l];
        const int block = static_cast<int>(dl * dl) - 1;
        double block_raw = 0.0;
        for (int i = 0; i < block; ++i)
          block_raw += cv.values[offset + i] * cv.values[offset + i];
        offset += block;
        const double k_block = partition.total() / (basis.norm_const * (dl - 1.0));
        const double via_block = k_block * block_raw;
        worst = std::max(worst,
                         std::abs(via_block - subsystem_purity(psi, partition, l)));
      }
    }
  }
  return worst;
}

double check_brennen(Rng& rng, int samples) {
  double worst = 0.0;
  for (int n = 2; n <= 5; ++n)
    for (int s = 0; s < samples; ++s) {
      const Vector psi = random_state(1 << n, rng);
      const double q_maps = meyer_wallach_q(psi);
      const double q_red = q_via_subsystem_purity(psi);
      const double q_pur = 1.0 - h_purity(psi, pauli_local(n)).normalized;
      worst = std::max({worst, std::abs(q_maps - q_red), std::abs(q_maps - q_pur),
                        std::abs(q_red - q_pur)});
    }
  return worst;
}

double check_full_algebra(Rng& rng, int samples) {
  double worst = 0.0;
  for (int d = 2; d <= 8; ++d) {
    const ObservableBasis basis = su_basis(d);
    for (int s = 0; s < samples; ++s)
      worst = std::max(worst,
                       std::abs(h_purity(random_state(d, rng), basis).normalized - 1.0));
  }
  return worst;
}

double check_example_4_4(Rng& rng, int samples) {
  double worst = 0.0;
  for (int n = 2; n <= 8; ++n)
    worst = std::max(worst, h_purity(ghz(n), pauli_local(n)).normalized);
  for (int n : {2, 4, 6})
    worst = std::max(worst, h_purity(singlet_pairs(n), pauli_local(n)).normalized);
  for (int n = 2; n <= 6; ++n) {
    const SubsystemPartition partition{std::vector<int>(n, 2)};
    for (int s = 0; s < samples; ++s) {
      const Vector psi = random_product_state(rng, partition);
      worst = std::max(worst,
                       std::abs(h_purity(psi, pauli_local(n)).normalized - 1.0));
    }
  }
  return worst;
}

double check_group_invariance(Rng& rng, int samples) {
  std::vector<ObservableBasis> families;
  families.push_back(su_basis(4));
  families.push_back(local_algebra({{2, 3}}));
  families.push_back(pauli_local(3));
  families.push_back(spin_generators(4));
  double worst = 0.0;
  for (const ObservableBasis& basis : families) {
    for (int s = 0; s < samples; ++s) {
      const Vector psi = random_state(basis.dim, rng);
      const auto t = random_coefficients(rng, basis.size(), std::numbers::pi);
      const Vector rotated = coherent_state(basis, psi, t);
      worst = std::max(worst, std::abs(h_purity(rotated, basis).normalized -
                                       h_purity(psi, basis).normalized));
    }
  }
  return worst;
}

double check_spin1(Rng& rng, int samples) {
  const ObservableBasis basis = spin_generators(2);
  const double k = normalization_k(basis);
  double worst = h_purity(spin_state(2, 0), basis).normalized;
  worst = std::max(worst, std::abs(h_purity(spin_state(2, 2), basis).normalized - 1.0));
  worst = std::max(worst, std::abs(h_purity(spin_state(2, -2), basis).normalized - 1.0));
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) {
      const cx xi(-1.0 + a * 0.5, -1.0 + b * 0.5);
      worst = std::max(worst,
                       std::abs(h_purity(spin_coherent(xi), basis).normalized - 1.0));
    }
  for (int s = 0; s < samples; ++s) {
    const double raw = expectations(random_state(3, rng), basis).raw_sq_len;
    worst = std::max(worst, std::max(0.0, raw - 1.0 / k));
  }
  return worst;
}

double check_witness(Rng& rng, int samples) {
  double worst = 0.0;
  for (int n = 2; n <= 5; ++n) {
    const ObservableBasis basis = pauli_local(n);
    const Vector reference = basis_state(1 << n, 0);
    for (int s = 0; s < samples; ++s) {
      const auto t = random_coefficients(rng, basis.size(), std::numbers::pi);
      const Vector psi = coherent_state(basis, reference, t);
      const GcsVerdict verdict = gcs_verdict(psi, basis);
      worst = std::max(worst, 1.0 - verdict.ground_overlap);
      if (!verdict.is_gcs || verdict.witness_degenerate ||
          verdict.witness_gap <= 1e-8)
        worst = std::max(worst, 1.0);
    }
    if (!gcs_verdict(ghz(n), basis).witness_degenerate)
      worst = std::max(worst, 1.0);
  }
  return worst;
}

double check_triplet(Rng& rng, int samples) {
  double worst = (triplet_embedding(spin_state(2, -2)) - Vector(basis_state(4, 3)))
                     .cwiseAbs().maxCoeff();
  Vector sym(4);
  sym << 0.0, std::numbers::sqrt2 / 2.0, std::numbers::sqrt2 / 2.0, 0.0;
  worst = std::max(worst,
                   (triplet_embedding(spin_state(2, 0)) - sym).cwiseAbs().maxCoeff());
  worst = std::max(worst, (triplet_embedding(spin_state(2, 2)) -
                           Vector(basis_state(4, 0))).cwiseAbs().maxCoeff());

  const ObservableBasis basis = spin_generators(2);
  for (int s = 0; s < samples; ++s) {
    const Vector psi = random_state(3, rng);
    const Vector embedded = triplet_embedding(psi);
    const double det = std::abs(embedded(0) * embedded(3) - embedded(1) * embedded(2));
    const bool product = det < 1e-8;
    if (gcs_verdict(psi, basis).is_gcs != product) worst = std::max(worst, 1.0);
  }
  // Coherent states must land on product states.
  for (int s = 0; s < samples; ++s) {
    const cx xi(2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0);
    const Vector embedded = triplet_embedding(spin_coherent(xi));
    worst = std::max(worst,
                     std::abs(embedded(0) * embedded(3) - embedded(1) * embedded(2)));
  }
  return worst;
}

double check_proof_chain(Rng& rng, int samples) {
  // Per-qubit identity 4 D(l_j(0)psi, l_j(1)psi) = 1 - <sx>^2 - <sy>^2 - <sz>^2.
  double worst = 0.0;
  for (int n = 2; n <= 4; ++n) {
    const ObservableBasis basis = pauli_local(n);
    const double block_scale = std::pow(2.0, n);  // <sigma>^2 = 2^n <x>^2
    for (int s = 0; s < samples; ++s) {
      const Vector psi = random_state(1 << n, rng);
      const CoherenceVector cv = expectations(psi, basis);
      for (int j = 0; j < n; ++j) {
        double sigma_sq = 0.0;
        for (int a = 0; a < 3; ++a)
          sigma_sq += block_scale * cv.values[3 * j + a] * cv.values[3 * j + a];
        const double d4 = 4.0 * mw_distance(lj_map(psi, j, 0), lj_map(psi, j, 1));
        worst = std::max(worst, std::abs(d4 - (1.0 - sigma_sq)));
      }
    }
  }
  return worst;
}

}  // namespace

std::vector<CheckResult> run_verify_suite(const VerifyConfig& config) {
  Rng rng(config.seed);
  std::vector<CheckResult> results;
  const auto add = [&](const std::string& name, double residual) {
    results.push_back({name, residual, residual < config.tolerance});
  };
  add("theorem_4_5_purity_plus_q", check_theorem_4_5(rng, config.samples));
  add("theorem_4_1_local_vs_reductions", check_theorem_4_1(rng, config.samples));
  add("brennen_triple_agreement", check_brennen(rng, config.samples));
  add("full_algebra_triviality", check_full_algebra(rng, config.samples));
  add("example_4_4_extremes", check_example_4_4(rng, config.samples));
  add("group_invariance", check_group_invariance(rng, config.samples));
  add("spin1_case_study", check_spin1(rng, config.samples));
  add("witness_ground_state", check_witness(rng, config.samples));
  add("triplet_embedding", check_triplet(rng, config.samples));
  add("per_qubit_proof_chain", check_proof_chain(rng, config.samples));
  return results;
}

bool all_pass(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace ge
