#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ge/algebra.hpp"
#include "ge/states.hpp"

namespace ge {

/// Thrown on malformed state/basis specifications (CLI exit code 2).
struct SpecParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NamedState {
  std::string id;  // human-readable tag, e.g. "ghz:3"
  Vector psi;
};

/// Parses a state specification: {"named": "ghz", "n": 3},
/// {"named": "w"|"singlet_pairs"|"basis"|"spin", ...},
/// {"random": {"d": 8, "seed": 42}}, {"amplitudes": [[re, im], ...]},
/// or a JSON array of such specs. An argument starting with '@' is read
/// from the named file.
std::vector<NamedState> parse_state_spec(const std::string& arg);

/// Parses a basis specification: "su:d", "local:d1xd2x...", "pauli:n",
/// "spin:2j", or "@file" with a JSON array of row-major [re, im] matrices
/// (orthonormalized under the trace inner product).
ObservableBasis parse_basis_spec(const std::string& arg);

/// Amplitudes as a JSON array of [re, im] pairs.
nlohmann::json state_to_json(const Vector& psi);
Vector state_from_json(const nlohmann::json& amplitudes);

/// 17-significant-digit formatting (round-trippable doubles).
std::string fmt17(double value);

}  // namespace ge
