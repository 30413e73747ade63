#include "qgaforge/population.hpp"

#include <stdexcept>

#include "qgaforge/bitstring.hpp"
#include "qgaforge/errors.hpp"

namespace qgaforge {

std::string to_bitstring(const Chromosome& c) {
  std::string s(c.bits.size(), '0');
  for (std::size_t j = 0; j < c.bits.size(); ++j) {
    if (c.bits[j]) {
      s[j] = '1';
    }
  }
  return s;
}

std::uint64_t to_index(const Chromosome& c) {
  std::uint64_t index = 0;
  for (std::uint8_t bit : c.bits) {
    index = (index << 1) | static_cast<std::uint64_t>(bit != 0);
  }
  return index;
}

Chromosome chromosome_from_index(std::uint64_t index, int width) {
  const std::string s = index_to_bitstring(index, width);
  return chromosome_from_string(s);
}

Chromosome chromosome_from_string(std::string_view bits) {
  Chromosome c;
  c.bits.reserve(bits.size());
  for (char ch : bits) {
    if (ch != '0' && ch != '1') {
      throw std::invalid_argument("chromosome string may contain only '0' and '1'");
    }
    c.bits.push_back(static_cast<std::uint8_t>(ch == '1'));
  }
  return c;
}

std::vector<double> evaluate_population(const std::vector<Chromosome>& pop,
                                        const FitnessFunction& problem) {
  std::vector<double> fitness;
  fitness.reserve(pop.size());
  for (const Chromosome& c : pop) {
    if (c.width() != problem.domain_bits) {
      throw ShapeError("chromosome width " + std::to_string(c.width()) +
                       " does not match problem domain_bits " +
                       std::to_string(problem.domain_bits));
    }
    fitness.push_back(problem.evaluator(to_index(c)));
  }
  return fitness;
}

}  // namespace qgaforge
