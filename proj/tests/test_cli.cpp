// Integration tests that drive the installed binary through a shell, checking
// the exit-code contract (0 success, 1 runtime/verification failure, 2
// configuration error) and the stability of the report files.

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

using nlohmann::json;

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

const char* cli_path() {
  const char* path = std::getenv("QGAFORGE_CLI");
  REQUIRE_MESSAGE(path != nullptr,
                  "QGAFORGE_CLI must point at the built binary (set by ctest)");
  return path;
}

CliResult run_cli(const std::string& args) {
  const std::string command = std::string(cli_path()) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  char buffer[4096];
  while (std::size_t n = std::fread(buffer, 1, sizeof(buffer), pipe)) {
    result.output.append(buffer, n);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string masked(const std::string& report_text) {
  json report = json::parse(report_text);
  report["timing"] = nullptr;
  return report.dump(2) + "\n";
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("cli: rqga run reports the benchmark winner") {
  const CliResult result =
      run_cli("run --algorithm rqga --problem f1-paper --seed 1 --shots 10000");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("\"bitstring\": \"1011\"") != std::string::npos);
}

TEST_CASE("cli: invalid shot count exits 2 and names the constraint") {
  const CliResult result = run_cli("run --algorithm rqga --shots 0");
  CHECK(result.exit_code == 2);
  CHECK(result.output.find("shots") != std::string::npos);
}

TEST_CASE("cli: grover trace prints the amplified amplitudes") {
  const CliResult result = run_cli(
      "run --algorithm grover --marked 11 --qubits 4 --iterations 1 --trace");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("0.6875") != std::string::npos);
  CHECK(result.output.find("0.1875") != std::string::npos);
}

TEST_CASE("cli: unknown problem exits 2 for run and sweep") {
  CHECK(run_cli("run --algorithm rqga --problem mystery").exit_code == 2);
  const CliResult sweep =
      run_cli("sweep --algorithm rqga --problem mystery --seeds 1..3");
  CHECK(sweep.exit_code == 2);
}

TEST_CASE("cli: verify-paper passes clean and fails perturbed") {
  const CliResult clean = run_cli("verify-paper");
  CHECK(clean.exit_code == 0);
  CHECK(clean.output.find("PASS fitness-words") != std::string::npos);
  CHECK(clean.output.find("PASS diffusion-amplitudes") != std::string::npos);
  CHECK(clean.output.find("FAIL") == std::string::npos);

  const CliResult broken = run_cli("verify-paper --scale 99");
  CHECK(broken.exit_code == 1);
  CHECK(broken.output.find("FAIL fitness-words") != std::string::npos);
}

TEST_CASE("cli: list-problems shows the registry") {
  const CliResult result = run_cli("list-problems");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("f1-paper") != std::string::npos);
}

TEST_CASE("cli: help documents the bit-order convention") {
  const CliResult result = run_cli("--help");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("most-significant-bit first") != std::string::npos);
}

TEST_CASE("cli: unknown flags exit 2") {
  CHECK(run_cli("run --frobnicate").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);  // missing subcommand
}

TEST_CASE("cli: identical runs produce byte-identical masked reports") {
  const auto path_a = temp_path("qgaforge_det_a.json");
  const auto path_b = temp_path("qgaforge_det_b.json");
  const std::string args =
      "run --algorithm rqga --problem f1-paper --seed 9 --shots 4096 --output ";
  CHECK(run_cli(args + path_a.string()).exit_code == 0);
  CHECK(run_cli(args + path_b.string()).exit_code == 0);
  CHECK(masked(read_file(path_a)) == masked(read_file(path_b)));
  std::filesystem::remove(path_a);
  std::filesystem::remove(path_b);
}

TEST_CASE("cli: report matches the golden schema") {
  const auto path = temp_path("qgaforge_golden_probe.json");
  const CliResult result = run_cli(
      "run --algorithm rqga --problem f1-paper --seed 1 --shots 1000 --output " +
      path.string());
  CHECK(result.exit_code == 0);
  const std::string golden =
      read_file(std::filesystem::path(QGAFORGE_TEST_DATA_DIR) /
                "golden_report.json");
  CHECK(masked(read_file(path)) == golden);
  std::filesystem::remove(path);
}

TEST_CASE("cli: config files load and flags override them") {
  const auto config_path = temp_path("qgaforge_config.json");
  {
    std::ofstream out(config_path);
    out << R"({"algorithm":"rqga","problem":"f1-paper","seed":1,
               "params":{"shots":512}})";
  }
  const auto report_path = temp_path("qgaforge_config_report.json");
  const CliResult result = run_cli(config_path.string() + " --seed 5 --output " +
                                   report_path.string());
  // A bare config path is only valid after the subcommand name.
  CHECK(result.exit_code == 2);

  const CliResult run = run_cli("run " + config_path.string() +
                                " --seed 5 --output " + report_path.string());
  CHECK(run.exit_code == 0);
  const json report = json::parse(read_file(report_path));
  CHECK(report.at("config").at("seed") == 5);
  CHECK(report.at("config").at("params").at("shots") == 512);
  std::filesystem::remove(config_path);
  std::filesystem::remove(report_path);
}

TEST_CASE("cli: qga runs emit a convergence CSV next to the report") {
  const auto report_path = temp_path("qgaforge_qga_report.json");
  const CliResult result = run_cli(
      "run --algorithm qga --problem f1-paper --seed 42 --generations 10 "
      "--output " + report_path.string());
  CHECK(result.exit_code == 0);
  const auto csv_path = temp_path("qgaforge_qga_report.trace.csv");
  const std::string csv = read_file(csv_path);
  CHECK(csv.rfind("generation,best_fitness,mean_fitness,best_bitstring\n", 0) ==
        0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') >= 2);
  std::filesystem::remove(report_path);
  std::filesystem::remove(csv_path);
}

TEST_CASE("cli: QGAFORGE_LOG=info enables per-generation log lines") {
  const CliResult quiet =
      run_cli("run --algorithm sga --problem f1-paper --seed 3 --generations 3");
  CHECK(quiet.output.find("[info]") == std::string::npos);

  const std::string command = std::string("QGAFORGE_LOG=info ") + cli_path() +
                              " run --algorithm sga --problem f1-paper"
                              " --seed 3 --generations 3 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buffer[4096];
  while (std::size_t n = std::fread(buffer, 1, sizeof(buffer), pipe)) {
    output.append(buffer, n);
  }
  pclose(pipe);
  CHECK(output.find("[info] sga gen") != std::string::npos);
}

TEST_CASE("cli: sweep aggregates and reports success rate") {
  const CliResult result =
      run_cli("sweep --algorithm sga --problem f1-paper --seeds 1..5");
  CHECK(result.exit_code == 0);
  const json doc = json::parse(result.output);
  CHECK(doc.at("sweep").at("runs") == 5);
  CHECK(doc.at("sweep").at("per_seed").size() == 5);
  CHECK(!doc.at("sweep").at("success_rate").is_null());
}
