#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code;
  std::string out;
};

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "ge_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RunResult run(const std::string& args) {
  static int counter = 0;
  const fs::path out = scratch_dir() / ("out" + std::to_string(counter++) + ".txt");
  const std::string cmd =
      std::string(GE_CLI_PATH) + " " + args + " > " + out.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  const int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {exit_code, slurp(out)};
}

}  // namespace

TEST_CASE("purity command on landmark states") {
  const RunResult ghz = run("purity --state '{\"named\":\"ghz\",\"n\":3}' --basis pauli:3");
  CHECK(ghz.exit_code == 0);
  CHECK(ghz.out.find("state,basis,raw,k,normalized") == 0);
  CHECK(ghz.out.find("ghz:3,pauli_local(3),0,") != std::string::npos);

  const RunResult spin =
      run("purity --state '{\"named\":\"spin\",\"two_j\":2,\"two_m\":0}' --basis spin:2");
  CHECK(spin.exit_code == 0);
  CHECK(spin.out.find("spin:2:0,spin(1),0,2") != std::string::npos);

  const RunResult rand =
      run("purity --state '{\"random\":{\"d\":4,\"seed\":5}}' --basis su:4");
  CHECK(rand.exit_code == 0);
  CHECK(rand.out.find(",1\n") != std::string::npos);
}

TEST_CASE("mw command three-path agreement") {
  const RunResult w3 = run("mw --state '{\"named\":\"w\",\"n\":3}' --format json");
  CHECK(w3.exit_code == 0);
  const auto rows = nlohmann::json::parse(w3.out);
  REQUIRE(rows.size() == 1);
  CHECK(std::stod(rows[0]["q_maps"].get<std::string>()) ==
        doctest::Approx(8.0 / 9.0));
  CHECK(std::stod(rows[0]["max_residual"].get<std::string>()) < 1e-10);
}

TEST_CASE("state command round-trips through purity") {
  const RunResult emitted = run("state --state '{\"named\":\"ghz\",\"n\":2}'");
  CHECK(emitted.exit_code == 0);
  const auto parsed = nlohmann::json::parse(emitted.out);
  CHECK(parsed["amplitudes"].size() == 4);
  CHECK(std::abs(parsed["amplitudes"][0][0].get<double>() - 0.7071067811865476) <
        1e-15);

  const fs::path spec = scratch_dir() / "roundtrip.json";
  std::ofstream(spec) << nlohmann::json{{"amplitudes", parsed["amplitudes"]}};
  const RunResult direct = run("purity --state '{\"named\":\"ghz\",\"n\":2}' --basis pauli:2");
  const RunResult via_file = run("purity --state @" + spec.string() + " --basis pauli:2");
  CHECK(via_file.exit_code == 0);
  // Same numbers modulo the state id column.
  const auto data_tail = [](const std::string& csv) {
    const std::size_t row = csv.find('\n') + 1;
    return csv.substr(csv.find(',', row));
  };
  CHECK(data_tail(direct.out) == data_tail(via_file.out));
}

TEST_CASE("verify is deterministic and honors tolerance") {
  const std::string args = "verify --seed 7 --samples 5";
  const RunResult a = run(args);
  const RunResult b = run(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(nlohmann::json::parse(a.out)["all_pass"].get<bool>());

  const RunResult strict = run("verify --seed 7 --samples 5 --tol 1e-15");
  CHECK(strict.exit_code == 1);
  CHECK_FALSE(nlohmann::json::parse(strict.out)["all_pass"].get<bool>());
}

TEST_CASE("scan families") {
  const RunResult grid = run("scan --family spin_coherent_grid --grid 3");
  CHECK(grid.exit_code == 0);
  int ones = 0;
  std::istringstream lines(grid.out);
  std::string line;
  std::getline(lines, line);  // header
  while (std::getline(lines, line)) {
    const double purity = std::stod(line.substr(line.rfind(',') + 1));
    CHECK(purity == doctest::Approx(1.0).epsilon(1e-9));
    ++ones;
  }
  CHECK(ones == 9);

  const RunResult batch1 = run("scan --family random_batch --d 8 --count 10 --seed 7");
  const RunResult batch2 = run("scan --family random_batch --d 8 --count 10 --seed 7");
  CHECK(batch1.exit_code == 0);
  CHECK(batch1.out == batch2.out);

  const RunResult ghz = run("scan --family ghz_family --nmin 2 --nmax 5");
  CHECK(ghz.exit_code == 0);
  CHECK(ghz.out.find("2,0,1") != std::string::npos);

  CHECK(run("scan --family nonsense").exit_code == 2);
}

TEST_CASE("exit codes for bad input") {
  CHECK(run("purity --state 'not json' --basis pauli:2").exit_code == 2);
  CHECK(run("purity --state '{\"named\":\"ghz\",\"n\":3}' --basis su:4").exit_code == 3);
  CHECK(run("mw --state '{\"named\":\"spin\",\"two_j\":2,\"two_m\":0}'").exit_code == 3);
  CHECK(run("purity --state '{}' --basis pauli:2").exit_code == 2);
}
