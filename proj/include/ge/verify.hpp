#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ge {

struct VerifyConfig {
  std::uint64_t seed = 7;
  double tolerance = 1e-9;
  int samples = 50;  // random states per case
};

struct CheckResult {
  std::string name;
  double max_residual = 0.0;
  bool pass = false;
};

/// Runs the numerical identity suites (purity vs reductions, purity + Q,
/// Brennen form, full-algebra triviality, group invariance, extremal
/// examples, spin-1 case study, witness Hamiltonian, triplet embedding,
/// per-qubit proof chain). Deterministic given the seed.
std::vector<CheckResult> run_verify_suite(const VerifyConfig& config);

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace ge
