#include "qgaforge/sga.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

#include "qgaforge/errors.hpp"
#include "qgaforge/log.hpp"

namespace qgaforge {

namespace {

// Crossover must only rearrange bits between the two children: at every
// position the child pair carries the same bit multiset as the parent pair.
void check_crossover_conservation(const Chromosome& a, const Chromosome& b,
                                  const Chromosome& c1, const Chromosome& c2) {
  for (std::size_t j = 0; j < a.bits.size(); ++j) {
    const int parents = a.bits[j] + b.bits[j];
    const int children = c1.bits[j] + c2.bits[j];
    if (parents != children) {
      throw std::logic_error("crossover lost a bit at position " +
                             std::to_string(j));
    }
  }
}

}  // namespace

void validate(const SgaConfig& config) {
  if (config.population_size < 2) {
    throw ConfigError("population_size must be >= 2, got " +
                      std::to_string(config.population_size));
  }
  if (config.population_size % 2 != 0) {
    throw ConfigError("population_size must be even for crossover pairing, got " +
                      std::to_string(config.population_size));
  }
  if (config.n_genes < 1) {
    throw ConfigError("n_genes must be >= 1, got " +
                      std::to_string(config.n_genes));
  }
  if (config.max_generations < 0) {
    throw ConfigError("max_generations must be >= 0, got " +
                      std::to_string(config.max_generations));
  }
  if (config.crossover_prob < 0.0 || config.crossover_prob > 1.0) {
    throw ConfigError("crossover_prob must be in [0, 1], got " +
                      std::to_string(config.crossover_prob));
  }
  if (config.mutation_prob < 0.0 || config.mutation_prob > 1.0) {
    throw ConfigError("mutation_prob must be in [0, 1], got " +
                      std::to_string(config.mutation_prob));
  }
}

std::size_t roulette_select(const std::vector<double>& fitness, Rng& rng) {
  if (fitness.empty()) {
    throw std::invalid_argument("roulette_select on empty fitness vector");
  }
  double total = 0.0;
  for (double f : fitness) {
    if (f < 0.0) {
      throw std::domain_error("roulette_select requires non-negative fitness");
    }
    total += f;
  }
  if (total <= 0.0) {
    // Degenerate all-zero landscape: uniform draw.
    return rng.next_index(fitness.size());
  }
  const double u = rng.next_double() * total;
  double acc = 0.0;
  for (std::size_t i = 0; i < fitness.size(); ++i) {
    acc += fitness[i];
    if (u < acc) {
      return i;
    }
  }
  return fitness.size() - 1;  // rounding tail
}

std::pair<Chromosome, Chromosome> one_point_crossover(const Chromosome& a,
                                                      const Chromosome& b,
                                                      int point) {
  if (a.width() != b.width()) {
    throw ShapeError("crossover width mismatch: " + std::to_string(a.width()) +
                     " vs " + std::to_string(b.width()));
  }
  if (point < 1 || point >= a.width()) {
    throw ShapeError("crossover point must be in [1, " +
                     std::to_string(a.width() - 1) + "], got " +
                     std::to_string(point));
  }
  Chromosome c1 = a;
  Chromosome c2 = b;
  for (int j = point; j < a.width(); ++j) {
    std::swap(c1.bits[static_cast<std::size_t>(j)],
              c2.bits[static_cast<std::size_t>(j)]);
  }
  return {std::move(c1), std::move(c2)};
}

Chromosome bit_flip_mutation(const Chromosome& c, double mutation_prob,
                             Rng& rng) {
  if (mutation_prob < 0.0 || mutation_prob > 1.0) {
    throw ConfigError("mutation_prob must be in [0, 1], got " +
                      std::to_string(mutation_prob));
  }
  Chromosome out = c;
  for (std::uint8_t& bit : out.bits) {
    if (rng.next_bernoulli(mutation_prob)) {
      bit = static_cast<std::uint8_t>(1 - bit);
    }
  }
  return out;
}

SgaReport run_sga(const SgaConfig& config, const FitnessFunction& problem) {
  validate(config);
  if (config.n_genes != problem.domain_bits) {
    throw ShapeError("n_genes " + std::to_string(config.n_genes) +
                     " does not match problem domain_bits " +
                     std::to_string(problem.domain_bits));
  }
  const auto start = std::chrono::steady_clock::now();

  Rng rng(config.seed);
  SgaReport report;
  report.config = config;

  const std::size_t pop_size = static_cast<std::size_t>(config.population_size);
  std::vector<Chromosome> pop(pop_size);
  for (Chromosome& c : pop) {
    c.bits.resize(static_cast<std::size_t>(config.n_genes));
    for (std::uint8_t& bit : c.bits) {
      bit = static_cast<std::uint8_t>(rng.next_bernoulli(0.5));
    }
  }
  std::vector<double> fitness = evaluate_population(pop, problem);

  auto best_of = [&]() {
    std::size_t best = 0;
    for (std::size_t i = 1; i < fitness.size(); ++i) {
      if (fitness[i] > fitness[best]) {
        best = i;
      }
    }
    return best;
  };
  auto mean_of = [&]() {
    double sum = 0.0;
    for (double f : fitness) {
      sum += f;
    }
    return sum / static_cast<double>(fitness.size());
  };

  std::size_t best = best_of();
  Chromosome elite = pop[best];
  double elite_fitness = fitness[best];

  auto push_record = [&](int generation, const Chromosome& bits, double fit) {
    report.records.push_back(
        GenerationRecord{generation, to_bitstring(bits), fit, mean_of()});
    if (log_enabled(LogLevel::kInfo)) {
      std::ostringstream line;
      line << "sga gen " << generation << " best=" << to_bitstring(bits)
           << " fitness=" << fit << " mean=" << mean_of();
      log_line(LogLevel::kInfo, line.str());
    }
  };

  push_record(0, elite, elite_fitness);

  const bool target_met_at_init =
      config.target_fitness && elite_fitness >= *config.target_fitness;
  if (!target_met_at_init) {
    for (int t = 1; t <= config.max_generations; ++t) {
      std::vector<Chromosome> children;
      children.reserve(pop_size);
      for (std::size_t pair = 0; pair < pop_size / 2; ++pair) {
        const Chromosome& parent_a = pop[roulette_select(fitness, rng)];
        const Chromosome& parent_b = pop[roulette_select(fitness, rng)];
        Chromosome child_a = parent_a;
        Chromosome child_b = parent_b;
        if (config.n_genes >= 2 && rng.next_bernoulli(config.crossover_prob)) {
          const int point =
              1 + static_cast<int>(rng.next_index(
                      static_cast<std::uint64_t>(config.n_genes - 1)));
          std::tie(child_a, child_b) =
              one_point_crossover(parent_a, parent_b, point);
          check_crossover_conservation(parent_a, parent_b, child_a, child_b);
        }
        children.push_back(bit_flip_mutation(child_a, config.mutation_prob, rng));
        children.push_back(bit_flip_mutation(child_b, config.mutation_prob, rng));
      }
      if (children.size() != pop_size) {
        throw std::logic_error("population size changed across a generation");
      }

      pop = std::move(children);
      fitness = evaluate_population(pop, problem);

      if (config.elitism) {
        // Elitism of one: the previous best replaces the worst child.
        std::size_t worst = 0;
        for (std::size_t i = 1; i < fitness.size(); ++i) {
          if (fitness[i] < fitness[worst]) {
            worst = i;
          }
        }
        pop[worst] = elite;
        fitness[worst] = elite_fitness;
      }

      best = best_of();
      if (fitness[best] > elite_fitness || !config.elitism) {
        elite = pop[best];
        elite_fitness = fitness[best];
      }
      push_record(t, pop[best], fitness[best]);
      if (config.target_fitness && fitness[best] >= *config.target_fitness) {
        break;
      }
    }
  }

  report.best_bitstring = to_bitstring(elite);
  report.best_index = to_index(elite);
  report.best_fitness = elite_fitness;
  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

}  // namespace qgaforge
