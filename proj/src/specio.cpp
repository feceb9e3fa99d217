#include "ge/specio.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace ge {

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecParseError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string resolve_arg(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') return slurp(arg.substr(1));
  return arg;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw SpecParseError(std::string("invalid JSON: ") + e.what());
  }
}

int require_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw SpecParseError(std::string("spec missing integer field '") + key + "'");
  return j[key].get<int>();
}

NamedState parse_one_state(const json& spec) {
  if (!spec.is_object()) throw SpecParseError("state spec must be a JSON object");
  try {
    if (spec.contains("named")) {
      const std::string name = spec["named"].get<std::string>();
      if (name == "ghz") {
        const int n = require_int(spec, "n");
        return {"ghz:" + std::to_string(n), ghz(n)};
      }
      if (name == "w") {
        const int n = require_int(spec, "n");
        return {"w:" + std::to_string(n), w_state(n)};
      }
      if (name == "singlet_pairs") {
        const int n = require_int(spec, "n");
        return {"singlet_pairs:" + std::to_string(n), singlet_pairs(n)};
      }
      if (name == "spin") {
        const int two_j = require_int(spec, "two_j");
        const int two_m = require_int(spec, "two_m");
        return {"spin:" + std::to_string(two_j) + ":" + std::to_string(two_m),
                spin_state(two_j, two_m)};
      }
      if (name == "basis") {
        const int d = require_int(spec, "d");
        const int k = require_int(spec, "k");
        return {"basis:" + std::to_string(d) + "," + std::to_string(k),
                basis_state(d, k)};
      }
      throw SpecParseError("unknown named state: " + name);
    }
    if (spec.contains("random")) {
      const json& r = spec["random"];
      const int d = require_int(r, "d");
      const auto seed = r.contains("seed") ? r["seed"].get<std::uint64_t>() : 0;
      return {"random:d=" + std::to_string(d) + ",seed=" + std::to_string(seed),
              random_state(d, RandomSeed{seed})};
    }
    if (spec.contains("amplitudes")) {
      Vector psi = state_from_json(spec["amplitudes"]);
      return {"amplitudes[" + std::to_string(psi.size()) + "]", std::move(psi)};
    }
  } catch (const json::exception& e) {
    throw SpecParseError(std::string("bad state spec: ") + e.what());
  }
  throw SpecParseError("state spec needs 'named', 'random' or 'amplitudes'");
}

int parse_int(const std::string& text, const char* what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw SpecParseError(std::string("invalid ") + what + ": " + text);
  return value;
}

}  // namespace

std::vector<NamedState> parse_state_spec(const std::string& arg) {
  const json spec = parse_json(resolve_arg(arg));
  std::vector<NamedState> states;
  if (spec.is_array()) {
    for (const json& one : spec) states.push_back(parse_one_state(one));
  } else {
    states.push_back(parse_one_state(spec));
  }
  return states;
}

ObservableBasis parse_basis_spec(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') {
    const json ops_json = parse_json(slurp(arg.substr(1)));
    if (!ops_json.is_array() || ops_json.empty())
      throw SpecParseError("operator file must hold a non-empty JSON array");
    std::vector<Matrix> ops;
    for (const json& m : ops_json) {
      const int rows = static_cast<int>(m.size());
      Matrix op(rows, rows);
      for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(m[i].size()) != rows)
          throw SpecParseError("operator matrices must be square");
        for (int j = 0; j < rows; ++j)
          op(i, j) = cx(m[i][j][0].get<double>(), m[i][j][1].get<double>());
      }
      ops.push_back(std::move(op));
    }
    return orthonormalize(ops);
  }

  const auto colon = arg.find(':');
  if (colon == std::string::npos)
    throw SpecParseError("basis spec must look like family:params");
  const std::string family = arg.substr(0, colon);
  const std::string params = arg.substr(colon + 1);

  if (family == "su") return su_basis(parse_int(params, "su dimension"));
  if (family == "pauli") return pauli_local(parse_int(params, "qubit count"));
  if (family == "spin") return spin_generators(parse_int(params, "2j"));
  if (family == "local") {
    SubsystemPartition partition;
    std::stringstream ss(params);
    std::string piece;
    while (std::getline(ss, piece, 'x'))
      partition.dims.push_back(parse_int(piece, "local dimension"));
    if (partition.dims.empty()) throw SpecParseError("empty partition");
    return local_algebra(partition);
  }
  throw SpecParseError("unknown basis family: " + family);
}

nlohmann::json state_to_json(const Vector& psi) {
  json out = json::array();
  for (Eigen::Index k = 0; k < psi.size(); ++k)
    out.push_back({psi(k).real(), psi(k).imag()});
  return out;
}

Vector state_from_json(const nlohmann::json& amplitudes) {
  if (!amplitudes.is_array() || amplitudes.empty())
    throw SpecParseError("amplitudes must be a non-empty array of [re, im] pairs");
  Vector psi(amplitudes.size());
  for (std::size_t k = 0; k < amplitudes.size(); ++k) {
    const json& pair = amplitudes[k];
    if (!pair.is_array() || pair.size() != 2)
      throw SpecParseError("each amplitude must be an [re, im] pair");
    psi(static_cast<Eigen::Index>(k)) = cx(pair[0].get<double>(), pair[1].get<double>());
  }
  const double norm = psi.norm();
  if (std::abs(norm - 1.0) > 1e-9) {
    if (norm < 1e-12) throw SpecParseError("amplitudes have zero norm");
    psi /= norm;
  }
  return psi;
}

std::string fmt17(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

}  // namespace ge
