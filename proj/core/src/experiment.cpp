#include "qgaforge/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "qgaforge/bitstring.hpp"
#include "qgaforge/errors.hpp"
#include "qgaforge/rqga.hpp"
#include "qgaforge/version.hpp"

namespace qgaforge {

namespace {

using nlohmann::json;

[[noreturn]] void bad_field(const std::string& field, const std::string& why) {
  throw ConfigError("config field '" + field + "': " + why);
}

void expect_keys(const json& obj, const std::string& scope,
                 std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    const std::string& key = item.key();
    if (std::find_if(allowed.begin(), allowed.end(), [&](const char* k) {
          return key == k;
        }) == allowed.end()) {
      throw ConfigError("unknown config field '" + scope + key + "'");
    }
  }
}

std::uint64_t get_u64(const json& obj, const std::string& scope,
                      const std::string& field, std::uint64_t fallback) {
  if (!obj.contains(field)) {
    return fallback;
  }
  const json& v = obj.at(field);
  if (!v.is_number_unsigned()) {
    bad_field(scope + field, "must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

int get_int(const json& obj, const std::string& scope, const std::string& field,
            int fallback) {
  if (!obj.contains(field)) {
    return fallback;
  }
  const json& v = obj.at(field);
  if (!v.is_number_integer()) {
    bad_field(scope + field, "must be an integer");
  }
  return v.get<int>();
}

double get_double(const json& obj, const std::string& scope,
                  const std::string& field, double fallback) {
  if (!obj.contains(field)) {
    return fallback;
  }
  const json& v = obj.at(field);
  if (!v.is_number()) {
    bad_field(scope + field, "must be a number");
  }
  return v.get<double>();
}

bool get_bool(const json& obj, const std::string& scope,
              const std::string& field, bool fallback) {
  if (!obj.contains(field)) {
    return fallback;
  }
  const json& v = obj.at(field);
  if (!v.is_boolean()) {
    bad_field(scope + field, "must be a boolean");
  }
  return v.get<bool>();
}

IterationPolicy parse_policy(const json& params, const std::string& scope) {
  const bool has_policy = params.contains("policy");
  const bool has_iterations = params.contains("iterations");

  IterationPolicy policy = IterationPolicy::standard();
  if (has_policy) {
    const json& v = params.at("policy");
    if (!v.is_string()) {
      bad_field(scope + "policy", "must be a string");
    }
    const std::string name = v.get<std::string>();
    if (name == "standard") {
      policy = IterationPolicy::standard();
    } else if (name == "paper-compat") {
      policy = IterationPolicy::paper_compat();
    } else if (name == "explicit") {
      policy.mode = IterationMode::kExplicit;
    } else {
      bad_field(scope + "policy",
                "must be one of standard, paper-compat, explicit; got '" +
                    name + "'");
    }
  }
  if (has_iterations) {
    if (has_policy && policy.mode != IterationMode::kExplicit) {
      bad_field(scope + "iterations",
                "only valid with the explicit policy");
    }
    policy.mode = IterationMode::kExplicit;
    policy.explicit_count = get_u64(params, scope, "iterations", 0);
  } else if (policy.mode == IterationMode::kExplicit) {
    bad_field(scope + "policy", "explicit policy requires 'iterations'");
  }
  return policy;
}

CustomProblem parse_custom_problem(const json& entry) {
  expect_keys(entry, "problem.", {"name", "domain_bits", "values", "known_optimum"});
  CustomProblem problem;
  if (entry.contains("name")) {
    if (!entry.at("name").is_string()) {
      bad_field("problem.name", "must be a string");
    }
    problem.name = entry.at("name").get<std::string>();
  }
  if (!entry.contains("domain_bits")) {
    bad_field("problem.domain_bits", "is required for a custom problem");
  }
  problem.domain_bits = get_int(entry, "problem.", "domain_bits", 0);
  if (!entry.contains("values") || !entry.at("values").is_array()) {
    bad_field("problem.values", "must be an array of fitness values");
  }
  for (const json& v : entry.at("values")) {
    if (!v.is_number()) {
      bad_field("problem.values", "entries must be numbers");
    }
    problem.values.push_back(v.get<double>());
  }
  if (entry.contains("known_optimum")) {
    problem.known_optimum = get_u64(entry, "problem.", "known_optimum", 0);
  }
  return problem;
}

void policy_to_json_fields(const IterationPolicy& policy, json& params) {
  params["policy"] = to_string(policy.mode);
  if (policy.mode == IterationMode::kExplicit) {
    params["iterations"] = policy.explicit_count;
  }
}

json histogram_to_json(const Histogram& hist) {
  json out = json::object();
  for (const auto& [index, count] : hist.counts) {
    out[index_to_bitstring(index, hist.n_qubits)] = count;
  }
  return out;
}

json trace_to_json(const GroverTrace& trace, int n_qubits) {
  json out;
  out["iterations"] = trace.oracle_applications();
  json marked = json::array();
  for (std::uint64_t index : trace.marked) {
    marked.push_back(index_to_bitstring(index, n_qubits));
  }
  out["marked"] = marked;
  json records = json::array();
  for (const GroverIterationRecord& rec : trace.records) {
    json r;
    r["iteration"] = rec.iteration;
    r["marked_probability"] = rec.marked_probability;
    json amps = json::array();
    for (const Complex& a : rec.marked_amplitudes) {
      amps.push_back(json::array({a.real(), a.imag()}));
    }
    r["amplitudes"] = amps;
    r["unmarked_amplitude"] = json::array(
        {rec.unmarked_amplitude.real(), rec.unmarked_amplitude.imag()});
    records.push_back(r);
  }
  out["records"] = records;
  return out;
}

json generations_to_json(const std::vector<GenerationRecord>& records) {
  json out = json::array();
  for (const GenerationRecord& rec : records) {
    json r;
    r["generation"] = rec.generation;
    r["best_bitstring"] = rec.best_bitstring;
    r["best_fitness"] = rec.best_fitness;
    r["mean_fitness"] = rec.mean_fitness;
    out.push_back(r);
  }
  return out;
}

json winner_to_json(const RunOutcome& outcome) {
  json winner;
  winner["bitstring"] = outcome.winner_bitstring;
  winner["index"] = outcome.winner_index;
  if (outcome.winner_fitness) {
    winner["fitness"] = *outcome.winner_fitness;
  }
  return winner;
}

}  // namespace

const char* to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kSga:
      return "sga";
    case Algorithm::kQga:
      return "qga";
    case Algorithm::kRqga:
      return "rqga";
    case Algorithm::kGrover:
      return "grover";
  }
  return "unknown";
}

Algorithm algorithm_from_string(const std::string& name) {
  if (name == "sga") return Algorithm::kSga;
  if (name == "qga") return Algorithm::kQga;
  if (name == "rqga") return Algorithm::kRqga;
  if (name == "grover") return Algorithm::kGrover;
  throw ConfigError("config field 'algorithm': must be one of sga, qga, rqga, "
                    "grover; got '" + name + "'");
}

FitnessFunction resolve_problem(const ExperimentConfig& config) {
  if (config.custom_problem) {
    const CustomProblem& p = *config.custom_problem;
    return make_table_problem(p.name, p.domain_bits, p.values, p.known_optimum);
  }
  return find_problem(config.problem);
}

RunOutcome run_experiment(const ExperimentConfig& config) {
  RunOutcome outcome;
  outcome.algorithm = config.algorithm;
  switch (config.algorithm) {
    case Algorithm::kRqga: {
      RqgaConfig rc{resolve_problem(config), config.quantization, config.policy,
                    config.shots, config.seed};
      RqgaReport report = run_rqga(rc);
      outcome.winner_bitstring = report.winner_bitstring;
      outcome.winner_index = report.winner_index;
      outcome.winner_fitness = report.winner_fitness;
      outcome.histogram = std::move(report.histogram);
      outcome.trace = std::move(report.trace);
      outcome.wall_ms = report.wall_ms;
      return outcome;
    }
    case Algorithm::kGrover: {
      if (config.marked.empty()) {
        throw ConfigError("config field 'marked': grover needs at least one "
                          "marked basis index");
      }
      if (config.shots < 1) {
        throw ConfigError("config field 'shots': must be >= 1, got " +
                          std::to_string(config.shots));
      }
      const auto start = std::chrono::steady_clock::now();
      const std::set<std::uint64_t> marked(config.marked.begin(),
                                           config.marked.end());
      const DiagonalOperator oracle = oracle_from_marked(config.qubits, marked);
      GroverResult result = run_grover(config.qubits, oracle, config.policy);
      Rng rng(config.seed);
      Histogram hist = measure_shots(result.state, config.shots, rng);
      std::tie(outcome.winner_index, outcome.winner_bitstring) =
          decode_winner(hist);
      outcome.histogram = std::move(hist);
      outcome.trace = std::move(result.trace);
      outcome.wall_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
      return outcome;
    }
    case Algorithm::kQga: {
      const FitnessFunction problem = resolve_problem(config);
      QgaConfig qc;
      qc.population_size = config.population;
      qc.n_genes = problem.domain_bits;
      qc.max_generations = config.generations;
      qc.rotation_delta = config.rotation_delta;
      qc.mutation_prob = config.mutation_prob;
      qc.elitism = config.elitism;
      qc.target_fitness = config.target_fitness;
      qc.seed = config.seed;
      QgaReport report = run_qga(qc, problem);
      outcome.winner_bitstring = report.best_bitstring;
      outcome.winner_index = report.best_index;
      outcome.winner_fitness = report.best_fitness;
      outcome.generations = std::move(report.records);
      outcome.norm_drift = report.max_gene_norm_error;
      outcome.wall_ms = report.wall_ms;
      return outcome;
    }
    case Algorithm::kSga: {
      const FitnessFunction problem = resolve_problem(config);
      SgaConfig sc;
      sc.population_size = config.population;
      sc.n_genes = problem.domain_bits;
      sc.max_generations = config.generations;
      sc.crossover_prob = config.crossover_prob;
      sc.mutation_prob = config.mutation_prob;
      sc.elitism = config.elitism;
      sc.target_fitness = config.target_fitness;
      sc.seed = config.seed;
      SgaReport report = run_sga(sc, problem);
      outcome.winner_bitstring = report.best_bitstring;
      outcome.winner_index = report.best_index;
      outcome.winner_fitness = report.best_fitness;
      outcome.generations = std::move(report.records);
      outcome.wall_ms = report.wall_ms;
      return outcome;
    }
  }
  throw std::logic_error("unreachable algorithm");
}

ExperimentConfig config_from_json(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) {
    throw ConfigError("config root must be a JSON object");
  }
  expect_keys(root, "", {"algorithm", "problem", "seed", "params"});
  if (!root.contains("algorithm") || !root.at("algorithm").is_string()) {
    throw ConfigError("config field 'algorithm' is required and must be a string");
  }

  ExperimentConfig config;
  config.algorithm = algorithm_from_string(root.at("algorithm").get<std::string>());
  config.seed = get_u64(root, "", "seed", config.seed);

  if (root.contains("problem")) {
    const json& problem = root.at("problem");
    if (problem.is_string()) {
      config.problem = problem.get<std::string>();
    } else if (problem.is_object()) {
      config.custom_problem = parse_custom_problem(problem);
      config.problem = config.custom_problem->name;
    } else {
      bad_field("problem", "must be a registry name or a custom-problem object");
    }
  }

  const json params =
      root.contains("params") ? root.at("params") : json::object();
  if (!params.is_object()) {
    bad_field("params", "must be an object");
  }
  const std::string scope = "params.";
  switch (config.algorithm) {
    case Algorithm::kRqga: {
      expect_keys(params, scope, {"shots", "policy", "iterations", "quantization"});
      config.shots = get_u64(params, scope, "shots", config.shots);
      config.policy = parse_policy(params, scope);
      if (params.contains("quantization")) {
        const json& q = params.at("quantization");
        if (!q.is_object()) {
          bad_field(scope + "quantization", "must be an object");
        }
        expect_keys(q, scope + "quantization.", {"scale", "word_bits"});
        config.quantization.scale =
            get_double(q, scope + "quantization.", "scale", config.quantization.scale);
        config.quantization.word_bits =
            get_int(q, scope + "quantization.", "word_bits",
                    config.quantization.word_bits);
      }
      break;
    }
    case Algorithm::kGrover: {
      expect_keys(params, scope, {"qubits", "marked", "policy", "iterations", "shots"});
      config.qubits = get_int(params, scope, "qubits", config.qubits);
      config.shots = get_u64(params, scope, "shots", config.shots);
      config.policy = parse_policy(params, scope);
      if (params.contains("marked")) {
        const json& marked = params.at("marked");
        if (!marked.is_array()) {
          bad_field(scope + "marked", "must be an array of basis indices");
        }
        config.marked.clear();
        for (const json& v : marked) {
          if (!v.is_number_unsigned()) {
            bad_field(scope + "marked", "entries must be non-negative integers");
          }
          config.marked.push_back(v.get<std::uint64_t>());
        }
      }
      break;
    }
    case Algorithm::kQga: {
      expect_keys(params, scope,
                  {"population", "generations", "rotation_delta",
                   "mutation_prob", "elitism", "target_fitness"});
      config.population = get_int(params, scope, "population", config.population);
      config.generations = get_int(params, scope, "generations", config.generations);
      config.rotation_delta =
          get_double(params, scope, "rotation_delta", config.rotation_delta);
      config.mutation_prob =
          get_double(params, scope, "mutation_prob", config.mutation_prob);
      config.elitism = get_bool(params, scope, "elitism", config.elitism);
      if (params.contains("target_fitness")) {
        config.target_fitness =
            get_double(params, scope, "target_fitness", 0.0);
      }
      break;
    }
    case Algorithm::kSga: {
      expect_keys(params, scope,
                  {"population", "generations", "crossover_prob",
                   "mutation_prob", "elitism", "target_fitness"});
      config.population = get_int(params, scope, "population", config.population);
      config.generations = get_int(params, scope, "generations", config.generations);
      config.crossover_prob =
          get_double(params, scope, "crossover_prob", config.crossover_prob);
      config.mutation_prob =
          get_double(params, scope, "mutation_prob", config.mutation_prob);
      config.elitism = get_bool(params, scope, "elitism", config.elitism);
      if (params.contains("target_fitness")) {
        config.target_fitness =
            get_double(params, scope, "target_fitness", 0.0);
      }
      break;
    }
  }
  return config;
}

std::string config_to_json(const ExperimentConfig& config) {
  json root;
  root["algorithm"] = to_string(config.algorithm);
  if (config.algorithm != Algorithm::kGrover) {
    if (config.custom_problem) {
      const CustomProblem& p = *config.custom_problem;
      json problem;
      problem["name"] = p.name;
      problem["domain_bits"] = p.domain_bits;
      problem["values"] = p.values;
      if (p.known_optimum) {
        problem["known_optimum"] = *p.known_optimum;
      }
      root["problem"] = problem;
    } else {
      root["problem"] = config.problem;
    }
  }
  root["seed"] = config.seed;

  json params;
  switch (config.algorithm) {
    case Algorithm::kRqga: {
      params["shots"] = config.shots;
      policy_to_json_fields(config.policy, params);
      params["quantization"] = {{"scale", config.quantization.scale},
                                {"word_bits", config.quantization.word_bits}};
      break;
    }
    case Algorithm::kGrover: {
      params["qubits"] = config.qubits;
      params["marked"] = config.marked;
      params["shots"] = config.shots;
      policy_to_json_fields(config.policy, params);
      break;
    }
    case Algorithm::kQga: {
      params["population"] = config.population;
      params["generations"] = config.generations;
      params["rotation_delta"] = config.rotation_delta;
      params["mutation_prob"] = config.mutation_prob;
      params["elitism"] = config.elitism;
      if (config.target_fitness) {
        params["target_fitness"] = *config.target_fitness;
      }
      break;
    }
    case Algorithm::kSga: {
      params["population"] = config.population;
      params["generations"] = config.generations;
      params["crossover_prob"] = config.crossover_prob;
      params["mutation_prob"] = config.mutation_prob;
      params["elitism"] = config.elitism;
      if (config.target_fitness) {
        params["target_fitness"] = *config.target_fitness;
      }
      break;
    }
  }
  root["params"] = params;
  return root.dump(2);
}

std::string report_to_json(const ExperimentConfig& config,
                           const RunOutcome& outcome) {
  json root;
  root["artifact"] = {{"name", kArtifactName}, {"version", kArtifactVersion}};
  root["algorithm"] = to_string(outcome.algorithm);
  root["config"] = json::parse(config_to_json(config));

  json result;
  result["winner"] = winner_to_json(outcome);
  if (outcome.histogram) {
    result["histogram"] = histogram_to_json(*outcome.histogram);
  }
  if (outcome.trace && outcome.histogram) {
    result["grover"] = trace_to_json(*outcome.trace, outcome.histogram->n_qubits);
  }
  if (!outcome.generations.empty()) {
    result["generations"] = generations_to_json(outcome.generations);
  }
  if (outcome.norm_drift) {
    result["norm_drift"] = *outcome.norm_drift;
  }
  root["result"] = result;
  root["timing"] = {{"wall_ms", outcome.wall_ms}};
  return root.dump(2) + "\n";
}

std::string generations_to_csv(const std::vector<GenerationRecord>& records) {
  std::string out = "generation,best_fitness,mean_fitness,best_bitstring\n";
  char line[160];
  for (const GenerationRecord& rec : records) {
    std::snprintf(line, sizeof(line), "%d,%.17g,%.17g,%s\n", rec.generation,
                  rec.best_fitness, rec.mean_fitness,
                  rec.best_bitstring.c_str());
    out += line;
  }
  return out;
}

std::vector<PaperCheck> verify_paper(double quantization_scale) {
  // Golden constants: the quantized fitness words of the 16-chromosome
  // benchmark (both decoded and as 10-bit strings), the uniform amplitude,
  // the oracle-marked vector, the post-diffusion vector, and the two
  // iteration counts for N=16, M=1.
  static constexpr std::uint64_t kGoldenWords[16] = {
      250, 140, 103, 93, 80, 0, 58, 75, 100, 165, 343, 599, 478, 330, 300, 377};
  static const char* const kGoldenBits[16] = {
      "0011111010", "0010001100", "0001100111", "0001011101",
      "0001010000", "0000000000", "0000111010", "0001001011",
      "0001100100", "0010100101", "0101010111", "1001010111",
      "0111011110", "0101001010", "0100101100", "0101111001"};
  constexpr double kTolerance = 1e-12;

  std::vector<PaperCheck> checks;

  {
    PaperCheck check{"fitness-words", true, ""};
    try {
      const FitnessTable table = build_fitness_table(
          find_problem("f1-paper"), QuantizationRule{quantization_scale, 10});
      for (std::uint64_t x = 0; x < 16; ++x) {
        const std::uint64_t word = table.rows[x].word;
        if (word != kGoldenWords[x] ||
            index_to_bitstring(word, 10) != kGoldenBits[x]) {
          check.pass = false;
          check.detail = "x=" + std::to_string(x) + ": expected " +
                         std::to_string(kGoldenWords[x]) + " (" +
                         kGoldenBits[x] + "), got " + std::to_string(word) +
                         " (" + index_to_bitstring(word, 10) + ")";
          break;
        }
      }
    } catch (const std::exception& e) {
      check.pass = false;
      check.detail = e.what();
    }
    checks.push_back(check);
  }

  const Statevector uniform = uniform_superposition(4);
  {
    PaperCheck check{"uniform-superposition", true, ""};
    for (std::size_t i = 0; i < uniform.dim(); ++i) {
      if (std::abs(uniform.amplitudes[i] - Complex{0.25, 0.0}) > kTolerance) {
        check.pass = false;
        check.detail = "amplitude " + std::to_string(i) +
                       " expected 0.25, got " +
                       std::to_string(uniform.amplitudes[i].real());
        break;
      }
    }
    checks.push_back(check);
  }

  const DiagonalOperator oracle = oracle_from_marked(4, {11});
  const Statevector marked_state = apply_diagonal(uniform, oracle);
  {
    PaperCheck check{"oracle-marked-state", true, ""};
    for (std::size_t i = 0; i < marked_state.dim(); ++i) {
      const double expected = i == 11 ? -0.25 : 0.25;
      if (std::abs(marked_state.amplitudes[i] - Complex{expected, 0.0}) >
          kTolerance) {
        check.pass = false;
        check.detail = "amplitude " + std::to_string(i) + " expected " +
                       std::to_string(expected) + ", got " +
                       std::to_string(marked_state.amplitudes[i].real());
        break;
      }
    }
    checks.push_back(check);
  }

  {
    PaperCheck check{"diffusion-amplitudes", true, ""};
    const Statevector diffused = apply_inversion_about_mean(marked_state);
    for (std::size_t i = 0; i < diffused.dim(); ++i) {
      const double expected = i == 11 ? 0.6875 : 0.1875;
      if (std::abs(diffused.amplitudes[i] - Complex{expected, 0.0}) >
          kTolerance) {
        check.pass = false;
        check.detail = "amplitude " + std::to_string(i) + " expected " +
                       std::to_string(expected) + ", got " +
                       std::to_string(diffused.amplitudes[i].real());
        break;
      }
    }
    checks.push_back(check);
  }

  {
    PaperCheck check{"iteration-counts", true, ""};
    const std::uint64_t standard =
        grover_iteration_count(16, 1, IterationPolicy::standard());
    const std::uint64_t compat =
        grover_iteration_count(16, 1, IterationPolicy::paper_compat());
    if (standard != 3 || compat != 2) {
      check.pass = false;
      check.detail = "expected standard=3 paper-compat=2, got standard=" +
                     std::to_string(standard) + " paper-compat=" +
                     std::to_string(compat);
    }
    checks.push_back(check);
  }

  return checks;
}

SweepResult run_sweep(const ExperimentConfig& base, std::uint64_t seed_first,
                      std::uint64_t seed_last) {
  if (seed_last < seed_first) {
    throw ConfigError("seed range is empty: first " +
                      std::to_string(seed_first) + " > last " +
                      std::to_string(seed_last));
  }
  // Fail fast on configuration problems that would fail every seed.
  std::optional<std::uint64_t> known_optimum;
  if (base.algorithm != Algorithm::kGrover) {
    known_optimum = resolve_problem(base).known_optimum;
  }

  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t runs = seed_last - seed_first + 1;
  std::vector<SeedOutcome> outcomes(runs);

  std::atomic<std::uint64_t> cursor{0};
  auto worker = [&]() {
    for (;;) {
      const std::uint64_t i = cursor.fetch_add(1);
      if (i >= runs) {
        return;
      }
      ExperimentConfig config = base;
      config.seed = seed_first + i;
      SeedOutcome& out = outcomes[i];
      out.seed = config.seed;
      try {
        const RunOutcome run = run_experiment(config);
        out.ok = true;
        out.winner_bitstring = run.winner_bitstring;
        out.winner_index = run.winner_index;
        out.winner_fitness = run.winner_fitness;
        if (known_optimum) {
          out.success = run.winner_index == *known_optimum;
          if (*out.success && !run.generations.empty()) {
            for (const GenerationRecord& rec : run.generations) {
              if (bitstring_to_index(rec.best_bitstring) == *known_optimum) {
                out.generations_to_optimum = rec.generation;
                break;
              }
            }
          }
        }
      } catch (const std::exception& e) {
        out.ok = false;
        out.error = e.what();
      }
    }
  };

  const unsigned hardware = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = static_cast<unsigned>(
      std::min<std::uint64_t>(runs, hardware));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back(worker);
  }
  for (std::thread& t : pool) {
    t.join();
  }

  SweepResult result;
  result.seed_first = seed_first;
  result.seed_last = seed_last;
  result.per_seed = std::move(outcomes);
  double generation_sum = 0.0;
  std::uint64_t generation_count = 0;
  for (const SeedOutcome& out : result.per_seed) {
    if (!out.ok) {
      ++result.failures;
      continue;
    }
    if (out.success && *out.success) {
      ++result.successes;
    }
    if (out.generations_to_optimum) {
      generation_sum += *out.generations_to_optimum;
      ++generation_count;
    }
  }
  if (known_optimum) {
    result.success_rate =
        static_cast<double>(result.successes) / static_cast<double>(runs);
  }
  if (generation_count > 0) {
    result.mean_generations_to_optimum =
        generation_sum / static_cast<double>(generation_count);
  }
  result.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return result;
}

std::string sweep_to_json(const ExperimentConfig& base,
                          const SweepResult& result) {
  json root;
  root["artifact"] = {{"name", kArtifactName}, {"version", kArtifactVersion}};
  root["algorithm"] = to_string(base.algorithm);
  root["config"] = json::parse(config_to_json(base));

  json sweep;
  sweep["seed_first"] = result.seed_first;
  sweep["seed_last"] = result.seed_last;
  sweep["runs"] = result.per_seed.size();
  sweep["successes"] = result.successes;
  sweep["failures"] = result.failures;
  sweep["success_rate"] =
      result.success_rate ? json(*result.success_rate) : json(nullptr);
  sweep["mean_generations_to_optimum"] =
      result.mean_generations_to_optimum
          ? json(*result.mean_generations_to_optimum)
          : json(nullptr);

  json per_seed = json::array();
  for (const SeedOutcome& out : result.per_seed) {
    json entry;
    entry["seed"] = out.seed;
    if (!out.ok) {
      entry["error"] = out.error;
    } else {
      json winner;
      winner["bitstring"] = out.winner_bitstring;
      winner["index"] = out.winner_index;
      if (out.winner_fitness) {
        winner["fitness"] = *out.winner_fitness;
      }
      entry["winner"] = winner;
      if (out.success) {
        entry["success"] = *out.success;
      }
      if (out.generations_to_optimum) {
        entry["generations_to_optimum"] = *out.generations_to_optimum;
      }
    }
    per_seed.push_back(entry);
  }
  sweep["per_seed"] = per_seed;
  root["sweep"] = sweep;
  root["timing"] = {{"wall_ms", result.wall_ms}};
  return root.dump(2) + "\n";
}

}  // namespace qgaforge
