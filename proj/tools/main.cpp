// qgaforge command-line harness: run, sweep, verify-paper, list-problems.
//
// Exit codes: 0 success, 1 runtime or verification failure, 2 configuration
// error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qgaforge/bitstring.hpp"
#include "qgaforge/errors.hpp"
#include "qgaforge/experiment.hpp"
#include "qgaforge/log.hpp"
#include "qgaforge/version.hpp"

namespace {

using namespace qgaforge;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("cannot read config file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::filesystem::path target(path);
  const std::filesystem::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot write output file '" + path + "'");
    }
    out << content;
  }
  std::filesystem::rename(tmp, target);
}

std::vector<std::uint64_t> parse_marked_list(const std::string& text) {
  std::vector<std::uint64_t> marked;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    if (token.empty()) {
      continue;
    }
    try {
      marked.push_back(std::stoull(token));
    } catch (const std::exception&) {
      throw ConfigError("config field 'marked': cannot parse index '" + token +
                        "'");
    }
  }
  return marked;
}

std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& text) {
  const std::size_t split = text.find("..");
  try {
    if (split == std::string::npos) {
      const std::uint64_t seed = std::stoull(text);
      return {seed, seed};
    }
    const std::uint64_t first = std::stoull(text.substr(0, split));
    const std::uint64_t last = std::stoull(text.substr(split + 2));
    return {first, last};
  } catch (const std::exception&) {
    throw ConfigError("config field 'seeds': expected FIRST..LAST or a single "
                      "seed, got '" + text + "'");
  }
}

struct CommonFlags {
  std::string config_path;
  std::string algorithm;
  std::string problem;
  std::uint64_t seed = 0;
  std::uint64_t shots = 0;
  std::string policy;
  std::uint64_t iterations = 0;
  int generations = 0;
  int population = 0;
  double rotation_delta = 0.0;
  double mutation_prob = 0.0;
  double crossover_prob = 0.0;
  bool elitism = true;
  double target_fitness = 0.0;
  int qubits = 0;
  std::string marked;
  std::string output;
  bool trace = false;
};

void add_experiment_flags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("config", flags.config_path,
                  "JSON config file; flags override file values");
  cmd->add_option("--algorithm", flags.algorithm,
                  "Algorithm: sga, qga, rqga, grover");
  cmd->add_option("--problem", flags.problem, "Registered problem name");
  cmd->add_option("--seed", flags.seed, "RNG seed");
  cmd->add_option("--shots", flags.shots,
                  "Measurement shots (rqga, grover)");
  cmd->add_option("--policy", flags.policy,
                  "Grover iteration policy: standard, paper-compat, explicit");
  cmd->add_option("--iterations", flags.iterations,
                  "Grover iteration count (implies explicit policy)");
  cmd->add_option("--generations", flags.generations,
                  "Max generations (sga, qga)");
  cmd->add_option("--population", flags.population,
                  "Population size (sga, qga)");
  cmd->add_option("--rotation-delta", flags.rotation_delta,
                  "Rotation angle in radians (qga)");
  cmd->add_option("--mutation-prob", flags.mutation_prob,
                  "Mutation probability (sga per bit, qga per gene)");
  cmd->add_option("--crossover-prob", flags.crossover_prob,
                  "Crossover probability (sga)");
  cmd->add_flag("--elitism,!--no-elitism", flags.elitism,
                "Keep the best individual (sga, qga)");
  cmd->add_option("--target-fitness", flags.target_fitness,
                  "Stop once best fitness reaches this value (sga, qga)");
  cmd->add_option("--qubits", flags.qubits, "Register width (grover)");
  cmd->add_option("--marked", flags.marked,
                  "Comma-separated marked basis indices (grover)");
  cmd->add_option("--output", flags.output, "Report file path");
  cmd->add_flag("--trace", flags.trace, "Print the run trace to stdout");
}

ExperimentConfig build_config(const CLI::App* cmd, const CommonFlags& flags) {
  ExperimentConfig config;
  if (!flags.config_path.empty()) {
    config = config_from_json(read_file(flags.config_path));
  }
  if (cmd->count("--algorithm")) {
    config.algorithm = algorithm_from_string(flags.algorithm);
  }
  if (cmd->count("--problem")) {
    config.problem = flags.problem;
    config.custom_problem.reset();
  }
  if (cmd->count("--seed")) {
    config.seed = flags.seed;
  }
  if (cmd->count("--shots")) {
    config.shots = flags.shots;
  }
  if (cmd->count("--policy")) {
    if (flags.policy == "standard") {
      config.policy = IterationPolicy::standard();
    } else if (flags.policy == "paper-compat") {
      config.policy = IterationPolicy::paper_compat();
    } else if (flags.policy == "explicit") {
      if (!cmd->count("--iterations")) {
        throw ConfigError("config field 'policy': explicit policy requires "
                          "--iterations");
      }
      config.policy = IterationPolicy::fixed(flags.iterations);
    } else {
      throw ConfigError("config field 'policy': must be one of standard, "
                        "paper-compat, explicit; got '" + flags.policy + "'");
    }
  }
  if (cmd->count("--iterations") && !cmd->count("--policy")) {
    config.policy = IterationPolicy::fixed(flags.iterations);
  }
  if (cmd->count("--generations")) {
    config.generations = flags.generations;
  }
  if (cmd->count("--population")) {
    config.population = flags.population;
  }
  if (cmd->count("--rotation-delta")) {
    config.rotation_delta = flags.rotation_delta;
  }
  if (cmd->count("--mutation-prob")) {
    config.mutation_prob = flags.mutation_prob;
  }
  if (cmd->count("--crossover-prob")) {
    config.crossover_prob = flags.crossover_prob;
  }
  if (cmd->count("--elitism") || cmd->count("--no-elitism")) {
    config.elitism = flags.elitism;
  }
  if (cmd->count("--target-fitness")) {
    config.target_fitness = flags.target_fitness;
  }
  if (cmd->count("--qubits")) {
    config.qubits = flags.qubits;
  }
  if (cmd->count("--marked")) {
    config.marked = parse_marked_list(flags.marked);
  }
  return config;
}

void print_grover_trace(const GroverTrace& trace, int n_qubits) {
  for (const GroverIterationRecord& rec : trace.records) {
    std::printf("iter %llu: marked_probability=%.10g",
                static_cast<unsigned long long>(rec.iteration),
                rec.marked_probability);
    for (std::size_t i = 0; i < trace.marked.size(); ++i) {
      const Complex a = rec.marked_amplitudes[i];
      std::printf("  amp[%s]=%.10g%+.10gi",
                  index_to_bitstring(trace.marked[i], n_qubits).c_str(),
                  a.real(), a.imag());
    }
    std::printf("  others=%.10g%+.10gi\n", rec.unmarked_amplitude.real(),
                rec.unmarked_amplitude.imag());
  }
}

void print_generation_trace(const std::vector<GenerationRecord>& records) {
  for (const GenerationRecord& rec : records) {
    std::printf("gen %d: best=%s fitness=%.10g mean=%.10g\n", rec.generation,
                rec.best_bitstring.c_str(), rec.best_fitness,
                rec.mean_fitness);
  }
}

int do_run(const CLI::App* cmd, const CommonFlags& flags) {
  const ExperimentConfig config = build_config(cmd, flags);
  const RunOutcome outcome = run_experiment(config);
  const std::string report = report_to_json(config, outcome);

  if (flags.trace) {
    if (outcome.trace && outcome.histogram) {
      print_grover_trace(*outcome.trace, outcome.histogram->n_qubits);
    }
    if (!outcome.generations.empty()) {
      print_generation_trace(outcome.generations);
    }
  }

  if (!flags.output.empty()) {
    write_file_atomic(flags.output, report);
    if (!outcome.generations.empty()) {
      const std::string csv_path =
          std::filesystem::path(flags.output).replace_extension(".trace.csv")
              .string();
      write_file_atomic(csv_path, generations_to_csv(outcome.generations));
    }
    std::printf("winner %s (%llu)\n", outcome.winner_bitstring.c_str(),
                static_cast<unsigned long long>(outcome.winner_index));
  } else {
    std::fputs(report.c_str(), stdout);
  }
  return 0;
}

int do_sweep(const CLI::App* cmd, const CommonFlags& flags,
             const std::string& seeds) {
  const ExperimentConfig base = build_config(cmd, flags);
  const auto [first, last] = parse_seed_range(seeds);
  const SweepResult result = run_sweep(base, first, last);
  const std::string report = sweep_to_json(base, result);
  if (!flags.output.empty()) {
    write_file_atomic(flags.output, report);
    std::printf("sweep of %zu seeds written to %s\n", result.per_seed.size(),
                flags.output.c_str());
  } else {
    std::fputs(report.c_str(), stdout);
  }
  return 0;
}

int do_verify_paper(double scale) {
  const std::vector<PaperCheck> checks = verify_paper(scale);
  bool all_pass = true;
  for (const PaperCheck& check : checks) {
    if (check.pass) {
      std::printf("PASS %s\n", check.name.c_str());
    } else {
      all_pass = false;
      std::printf("FAIL %s: %s\n", check.name.c_str(), check.detail.c_str());
    }
  }
  return all_pass ? 0 : 1;
}

int do_list_problems() {
  for (const auto& [name, problem] : builtin_problems()) {
    std::printf("%s  domain_bits=%d", name.c_str(), problem.domain_bits);
    if (problem.known_optimum) {
      std::printf("  optimum=%s (%llu)",
                  index_to_bitstring(*problem.known_optimum,
                                     problem.domain_bits)
                      .c_str(),
                  static_cast<unsigned long long>(*problem.known_optimum));
    }
    std::printf("\n");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(kArtifactName) +
               " — seeded quantum-evolutionary optimization runs.\n"
               "Bitstrings are most-significant-bit first: \"1011\" denotes "
               "11.\nSet QGAFORGE_LOG=info|debug for progress logging."};
  app.require_subcommand(1);

  CommonFlags run_flags;
  CLI::App* run_cmd = app.add_subcommand(
      "run", "Run one seeded experiment and emit a JSON report");
  add_experiment_flags(run_cmd, run_flags);

  CommonFlags sweep_flags;
  std::string seeds;
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "Run an experiment over a seed range and aggregate");
  add_experiment_flags(sweep_cmd, sweep_flags);
  sweep_cmd->add_option("--seeds", seeds, "Seed range FIRST..LAST")->required();

  double scale = 100.0;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify-paper", "Recompute the golden reference numbers and report "
                      "pass/fail per check");
  verify_cmd->add_option("--scale", scale,
                         "Quantization scale (perturb for negative-control "
                         "testing)");

  CLI::App* list_cmd =
      app.add_subcommand("list-problems", "List registered fitness problems");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*run_cmd) {
      return do_run(run_cmd, run_flags);
    }
    if (*sweep_cmd) {
      return do_sweep(sweep_cmd, sweep_flags, seeds);
    }
    if (*verify_cmd) {
      return do_verify_paper(scale);
    }
    if (*list_cmd) {
      return do_list_problems();
    }
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "configuration error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
