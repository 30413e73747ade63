#include "qgaforge/qga.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "qgaforge/errors.hpp"
#include "qgaforge/log.hpp"

namespace qgaforge {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865476;

QubitGene rotate_gene(const QubitGene& gene, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return QubitGene{c * gene.alpha - s * gene.beta,
                   s * gene.alpha + c * gene.beta};
}

// Signed angular step of magnitude <= delta that moves the gene toward the
// nearest pole where the target bit's probability is 1. Capping at the pole
// keeps the probability strictly increasing; a fixed-size step could
// overshoot the pole and lower it again.
double rotation_step(const QubitGene& gene, std::uint8_t target_bit,
                     double delta) {
  const double phi = std::atan2(gene.beta, gene.alpha);
  constexpr double pi = std::numbers::pi;
  const double pole_a = target_bit ? pi / 2.0 : 0.0;
  const double pole_b = target_bit ? -pi / 2.0 : pi;
  const double da = std::remainder(pole_a - phi, 2.0 * pi);
  const double db = std::remainder(pole_b - phi, 2.0 * pi);
  double dist = std::abs(da) <= std::abs(db) ? da : db;
  if (std::abs(da) == std::abs(db)) {
    dist = std::abs(da);  // equidistant: take the positive direction
  }
  if (dist == 0.0) {
    return 0.0;  // already at the pole; nothing can increase
  }
  const double magnitude = std::min(delta, std::abs(dist));
  return std::copysign(magnitude, dist);
}

double gene_norm_error(const QubitGene& g) {
  return std::abs(g.alpha * g.alpha + g.beta * g.beta - 1.0);
}

double max_norm_error(const std::vector<QuantumChromosome>& qpop) {
  double worst = 0.0;
  for (const QuantumChromosome& chrom : qpop) {
    for (const QubitGene& gene : chrom.genes) {
      worst = std::max(worst, gene_norm_error(gene));
    }
  }
  return worst;
}

}  // namespace

void validate(const QgaConfig& config) {
  if (config.population_size < 2) {
    throw ConfigError("population_size must be >= 2, got " +
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
  if (config.rotation_delta <= 0.0) {
    throw ConfigError("rotation_delta must be > 0, got " +
                      std::to_string(config.rotation_delta));
  }
  if (config.mutation_prob < 0.0 || config.mutation_prob > 1.0) {
    throw ConfigError("mutation_prob must be in [0, 1], got " +
                      std::to_string(config.mutation_prob));
  }
}

std::vector<QuantumChromosome> init_quantum_population(const QgaConfig& config,
                                                       Rng& rng) {
  std::vector<QuantumChromosome> qpop(config.population_size);
  for (QuantumChromosome& chrom : qpop) {
    chrom.genes.reserve(config.n_genes);
    for (int j = 0; j < config.n_genes; ++j) {
      const double theta = rng.next_double(0.0, std::numbers::pi / 2.0);
      chrom.genes.push_back(
          rotate_gene(QubitGene{kInvSqrt2, kInvSqrt2}, theta));
    }
  }
  return qpop;
}

std::vector<Chromosome> observe_population(
    const std::vector<QuantumChromosome>& qpop, Rng& rng) {
  std::vector<Chromosome> pop;
  pop.reserve(qpop.size());
  for (const QuantumChromosome& chrom : qpop) {
    Chromosome bits;
    bits.bits.reserve(chrom.genes.size());
    for (const QubitGene& gene : chrom.genes) {
      const double p_one = gene.beta * gene.beta;
      bits.bits.push_back(static_cast<std::uint8_t>(rng.next_bernoulli(p_one)));
    }
    pop.push_back(std::move(bits));
  }
  return pop;
}

void rotation_update(std::vector<QuantumChromosome>& qpop,
                     const std::vector<Chromosome>& observed,
                     const std::vector<double>& fitness,
                     const Chromosome& elite_bits, double elite_fitness,
                     double delta) {
  if (qpop.size() != observed.size() || qpop.size() != fitness.size()) {
    throw ShapeError("rotation_update: population sizes disagree (" +
                     std::to_string(qpop.size()) + " quantum, " +
                     std::to_string(observed.size()) + " observed, " +
                     std::to_string(fitness.size()) + " fitness)");
  }
  for (std::size_t i = 0; i < qpop.size(); ++i) {
    if (!(fitness[i] < elite_fitness)) {
      continue;  // the elite and its ties are left untouched
    }
    QuantumChromosome& chrom = qpop[i];
    for (std::size_t j = 0; j < chrom.genes.size(); ++j) {
      const std::uint8_t target = elite_bits.bits[j];
      if (observed[i].bits[j] == target) {
        continue;
      }
      const double step = rotation_step(chrom.genes[j], target, delta);
      if (step != 0.0) {
        chrom.genes[j] = rotate_gene(chrom.genes[j], step);
      }
    }
  }
}

void mutation_update(std::vector<QuantumChromosome>& qpop,
                     double mutation_prob, Rng& rng,
                     std::optional<std::size_t> exempt) {
  if (mutation_prob < 0.0 || mutation_prob > 1.0) {
    throw ConfigError("mutation_prob must be in [0, 1], got " +
                      std::to_string(mutation_prob));
  }
  for (std::size_t i = 0; i < qpop.size(); ++i) {
    if (exempt && *exempt == i) {
      continue;
    }
    for (QubitGene& gene : qpop[i].genes) {
      if (rng.next_bernoulli(mutation_prob)) {
        std::swap(gene.alpha, gene.beta);
      }
    }
  }
}

QgaReport run_qga(const QgaConfig& config, const FitnessFunction& problem) {
  validate(config);
  if (config.n_genes != problem.domain_bits) {
    throw ShapeError("n_genes " + std::to_string(config.n_genes) +
                     " does not match problem domain_bits " +
                     std::to_string(problem.domain_bits));
  }
  const auto start = std::chrono::steady_clock::now();

  Rng rng(config.seed);
  QgaReport report;
  report.config = config;

  std::vector<QuantumChromosome> qpop = init_quantum_population(config, rng);
  std::vector<Chromosome> observed = observe_population(qpop, rng);
  std::vector<double> fitness = evaluate_population(observed, problem);
  report.max_gene_norm_error = max_norm_error(qpop);

  auto best_of_generation = [&]() {
    std::size_t best = 0;
    for (std::size_t i = 1; i < fitness.size(); ++i) {
      if (fitness[i] > fitness[best]) {
        best = i;
      }
    }
    return best;
  };

  std::size_t elite_slot = best_of_generation();
  Chromosome elite_bits = observed[elite_slot];
  double elite_fitness = fitness[elite_slot];

  auto mean_fitness = [&]() {
    double sum = 0.0;
    for (double f : fitness) {
      sum += f;
    }
    return sum / static_cast<double>(fitness.size());
  };

  auto push_record = [&](int generation) {
    report.records.push_back(GenerationRecord{
        generation, to_bitstring(elite_bits), elite_fitness, mean_fitness()});
    if (log_enabled(LogLevel::kInfo)) {
      std::ostringstream line;
      line << "qga gen " << generation << " best=" << to_bitstring(elite_bits)
           << " fitness=" << elite_fitness << " mean=" << mean_fitness();
      log_line(LogLevel::kInfo, line.str());
    }
  };

  push_record(0);

  const bool target_met_at_init =
      config.target_fitness && elite_fitness >= *config.target_fitness;
  if (!target_met_at_init) {
    for (int t = 1; t <= config.max_generations; ++t) {
      rotation_update(qpop, observed, fitness, elite_bits, elite_fitness,
                      config.rotation_delta);
      mutation_update(qpop, config.mutation_prob, rng,
                      config.elitism ? std::optional<std::size_t>(elite_slot)
                                     : std::nullopt);
      observed = observe_population(qpop, rng);
      fitness = evaluate_population(observed, problem);
      report.max_gene_norm_error =
          std::max(report.max_gene_norm_error, max_norm_error(qpop));

      const std::size_t gen_best = best_of_generation();
      if (!config.elitism || fitness[gen_best] > elite_fitness) {
        elite_slot = gen_best;
        elite_bits = observed[gen_best];
        elite_fitness = fitness[gen_best];
      }
      push_record(t);
      if (config.target_fitness && elite_fitness >= *config.target_fitness) {
        break;
      }
    }
  }

  report.best_bitstring = to_bitstring(elite_bits);
  report.best_index = to_index(elite_bits);
  report.best_fitness = elite_fitness;
  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

}  // namespace qgaforge
