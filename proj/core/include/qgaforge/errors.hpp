#pragma once

#include <stdexcept>

namespace qgaforge {

/// Invalid run configuration (bad qubit count, shot count, parameter block,
/// unknown problem name...). The CLI maps this to exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operand dimensions do not match; the message reports both sizes.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Oracle construction rejected: the marked set must be a non-empty proper
/// subset of the basis states, otherwise the phase flip is a global phase
/// and the search is meaningless.
class OracleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A quantized fitness word does not fit the configured word width.
class QuantizationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace qgaforge
