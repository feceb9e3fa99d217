#pragma once

#include <cstdint>
#include <vector>

#include "ge/linalg.hpp"

namespace ge {

struct RandomSeed {
  std::uint64_t seed = 0;
};

/// Deterministic counter-based generator (splitmix64 stream) with
/// Box-Muller Gaussians. Fixed here so test vectors are portable across
/// implementations; no ambient entropy anywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  explicit Rng(RandomSeed seed) : Rng(seed.seed) {}

  std::uint64_t next_u64();
  double uniform();   // [0, 1)
  double gaussian();  // standard normal

 private:
  std::uint64_t state_;
  bool has_cached_ = false;
  double cached_ = 0.0;
};

Vector basis_state(int d, int k);
Vector product_state(const std::vector<Vector>& locals);

/// (|0...0> + |1...1>)/sqrt(2) on n qubits.
Vector ghz(int n);

/// Tensor power of the two-qubit singlet, n even.
Vector singlet_pairs(int n);

/// Equal superposition over the n single-excitation basis states.
Vector w_state(int n);

/// Haar-random pure state: 2d independent standard Gaussians, normalized.
Vector random_state(int d, Rng& rng);
Vector random_state(int d, RandomSeed seed);

/// |j, m> with j = two_j/2, m = two_m/2; basis index j - m (m descending).
Vector spin_state(int two_j, int two_m);

}  // namespace ge
