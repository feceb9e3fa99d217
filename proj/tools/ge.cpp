// Command-line front end for the generalized-entanglement library.
//
// Exit codes: 0 success, 1 verification failure, 2 parse error,
// 3 dimension/spec mismatch.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ge/gcs.hpp"
#include "ge/mw.hpp"
#include "ge/purity.hpp"
#include "ge/specio.hpp"
#include "ge/verify.hpp"

namespace {

using nlohmann::json;

struct Output {
  std::string format = "csv";  // csv | json
  std::string path;            // empty -> stdout

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write output file: " + path);
    out << text;
  }
};

// Rows of (column -> preformatted value); column order fixed by `columns`.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  std::string render(const std::string& format) const {
    std::ostringstream out;
    if (format == "json") {
      json arr = json::array();
      for (const auto& row : rows) {
        json obj = json::object();
        for (std::size_t c = 0; c < columns.size(); ++c) obj[columns[c]] = row[c];
        arr.push_back(obj);
      }
      out << arr.dump(2) << "\n";
    } else {
      for (std::size_t c = 0; c < columns.size(); ++c)
        out << (c ? "," : "") << columns[c];
      out << "\n";
      for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
        out << "\n";
      }
    }
    return out.str();
  }
};

int cmd_purity(const std::string& state_spec, const std::string& basis_spec,
               const std::optional<std::string>& reference_spec,
               const Output& output) {
  const ge::ObservableBasis basis = ge::parse_basis_spec(basis_spec);
  double k = 0.0;
  if (basis.family == ge::AlgebraFamily::Custom) {
    if (!reference_spec)
      throw ge::SpecParseError(
          "custom basis has no closed-form normalization; pass --reference");
    const auto refs = ge::parse_state_spec(*reference_spec);
    k = ge::normalization_k(basis, refs.front().psi);
    std::cerr << "warning: normalized purity is only as trustworthy as the "
                 "supplied reference state\n";
  } else {
    k = ge::normalization_k(basis);
  }

  Table table{{"state", "basis", "raw", "k", "normalized"}, {}};
  for (const ge::NamedState& state : ge::parse_state_spec(state_spec)) {
    const double raw = ge::expectations(state.psi, basis).raw_sq_len;
    table.rows.push_back({state.id, basis.label, ge::fmt17(raw), ge::fmt17(k),
                          ge::fmt17(k * raw)});
  }
  output.write(table.render(output.format));
  return 0;
}

int cmd_mw(const std::string& state_spec, const Output& output) {
  Table table{{"state", "q_maps", "q_purity", "q_reductions", "max_residual"}, {}};
  for (const ge::NamedState& state : ge::parse_state_spec(state_spec)) {
    const int n = ge::qubit_count(state.psi.size());
    const double q_maps = ge::meyer_wallach_q(state.psi);
    const double q_purity =
        1.0 - ge::h_purity(state.psi, ge::pauli_local(n)).normalized;
    const double q_red = ge::q_via_subsystem_purity(state.psi);
    const double residual =
        std::max({std::abs(q_maps - q_purity), std::abs(q_maps - q_red),
                  std::abs(q_purity - q_red)});
    table.rows.push_back({state.id, ge::fmt17(q_maps), ge::fmt17(q_purity),
                          ge::fmt17(q_red), ge::fmt17(residual)});
  }
  output.write(table.render(output.format));
  return 0;
}

int cmd_verify(const ge::VerifyConfig& config, const Output& output) {
  const auto results = ge::run_verify_suite(config);
  if (output.format == "json") {
    json report;
    report["seed"] = config.seed;
    report["tolerance"] = config.tolerance;
    report["samples"] = config.samples;
    report["checks"] = json::array();
    for (const ge::CheckResult& r : results)
      report["checks"].push_back({{"name", r.name},
                                  {"max_residual", ge::fmt17(r.max_residual)},
                                  {"pass", r.pass}});
    report["all_pass"] = ge::all_pass(results);
    output.write(report.dump(2) + "\n");
  } else {
    Table table{{"check", "max_residual", "pass"}, {}};
    for (const ge::CheckResult& r : results)
      table.rows.push_back({r.name, ge::fmt17(r.max_residual),
                            r.pass ? "pass" : "fail"});
    output.write(table.render("csv"));
  }
  return ge::all_pass(results) ? 0 : 1;
}

int cmd_scan(const std::string& family, int grid, int nmin, int nmax, int d,
             int count, std::uint64_t seed, const Output& output) {
  Table table;
  if (family == "spin_coherent_grid") {
    const ge::ObservableBasis basis = ge::spin_generators(2);
    const double k = ge::normalization_k(basis);
    table.columns = {"re_xi", "im_xi", "purity"};
    for (int a = 0; a < grid; ++a)
      for (int b = 0; b < grid; ++b) {
        const double re = grid == 1 ? 0.0 : -1.0 + 2.0 * a / (grid - 1);
        const double im = grid == 1 ? 0.0 : -1.0 + 2.0 * b / (grid - 1);
        const double raw =
            ge::expectations(ge::spin_coherent({re, im}), basis).raw_sq_len;
        table.rows.push_back({ge::fmt17(re), ge::fmt17(im), ge::fmt17(k * raw)});
      }
  } else if (family == "ghz_family") {
    table.columns = {"n", "purity", "q"};
    for (int n = nmin; n <= nmax; ++n) {
      const ge::Vector psi = ge::ghz(n);
      table.rows.push_back({std::to_string(n),
                            ge::fmt17(ge::h_purity(psi, ge::pauli_local(n)).normalized),
                            ge::fmt17(ge::meyer_wallach_q(psi))});
    }
  } else if (family == "random_batch") {
    const bool qubits = (d & (d - 1)) == 0 && d >= 2;
    const ge::ObservableBasis basis =
        qubits ? ge::pauli_local(ge::qubit_count(d)) : ge::su_basis(d);
    table.columns = qubits ? std::vector<std::string>{"index", "purity", "q"}
                           : std::vector<std::string>{"index", "purity"};
    ge::Rng rng(seed);
    for (int i = 0; i < count; ++i) {
      const ge::Vector psi = ge::random_state(d, rng);
      std::vector<std::string> row{std::to_string(i),
                                   ge::fmt17(ge::h_purity(psi, basis).normalized)};
      if (qubits) row.push_back(ge::fmt17(ge::meyer_wallach_q(psi)));
      table.rows.push_back(std::move(row));
    }
  } else {
    throw ge::SpecParseError("unknown scan family: " + family);
  }
  output.write(table.render(output.format));
  return 0;
}

int cmd_state(const std::string& state_spec, const Output& output) {
  const auto states = ge::parse_state_spec(state_spec);
  json out;
  if (states.size() == 1) {
    out = json{{"id", states.front().id},
               {"amplitudes", ge::state_to_json(states.front().psi)}};
  } else {
    out = json::array();
    for (const ge::NamedState& s : states)
      out.push_back({{"id", s.id}, {"amplitudes", ge::state_to_json(s.psi)}});
  }
  output.write(out.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized entanglement of pure states relative to a "
               "distinguished observable algebra"};
  app.require_subcommand(1);

  std::string state_spec, basis_spec, family = "spin_coherent_grid";
  std::optional<std::string> reference_spec;
  Output output;
  ge::VerifyConfig verify_config;
  int grid = 5, nmin = 2, nmax = 8, d = 8, count = 100;
  std::uint64_t seed = 0;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", output.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", output.path, "write output to a file");
  };

  CLI::App* purity = app.add_subcommand("purity", "h-purity of states");
  purity->add_option("--state", state_spec, "state spec (JSON or @file)")->required();
  purity->add_option("--basis", basis_spec, "basis spec")->required();
  purity->add_option("--reference", reference_spec,
                     "extremal reference state for custom bases");
  add_common(purity);

  CLI::App* mw = app.add_subcommand("mw", "Meyer-Wallach Q via three routes");
  mw->add_option("--state", state_spec, "state spec (JSON or @file)")->required();
  add_common(mw);

  CLI::App* verify = app.add_subcommand("verify", "run the identity suites");
  verify->add_option("--seed", verify_config.seed, "RNG seed");
  verify->add_option("--tol", verify_config.tolerance, "pass tolerance");
  verify->add_option("--samples", verify_config.samples, "random states per case");
  add_common(verify);

  CLI::App* scan = app.add_subcommand("scan", "parameter sweeps");
  scan->add_option("--family", family,
                   "spin_coherent_grid | ghz_family | random_batch");
  scan->add_option("--grid", grid, "grid points per axis");
  scan->add_option("--nmin", nmin, "smallest qubit count");
  scan->add_option("--nmax", nmax, "largest qubit count");
  scan->add_option("--d", d, "state dimension for random_batch");
  scan->add_option("--count", count, "number of random states");
  scan->add_option("--seed", seed, "RNG seed");
  add_common(scan);

  CLI::App* state = app.add_subcommand("state", "emit state amplitudes as JSON");
  state->add_option("--state", state_spec, "state spec (JSON or @file)")->required();
  add_common(state);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (purity->parsed()) return cmd_purity(state_spec, basis_spec, reference_spec, output);
    if (mw->parsed()) return cmd_mw(state_spec, output);
    if (verify->parsed()) {
      // The verify report defaults to machine-readable JSON.
      if (verify->count("--format") == 0) output.format = "json";
      return cmd_verify(verify_config, output);
    }
    if (scan->parsed()) return cmd_scan(family, grid, nmin, nmax, d, count, seed, output);
    if (state->parsed()) return cmd_state(state_spec, output);
  } catch (const ge::SpecParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ge::DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
