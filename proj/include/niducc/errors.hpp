#pragma once

#include <stdexcept>
#include <string>

namespace niducc {

// Error categories map 1:1 onto CLI exit codes (see tools/).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// mismatched qubit counts between operands
struct DimensionError : Error {
  using Error::Error;
};

// malformed input text (FCIDUMP, Pauli strings, config files)
struct ParseError : Error {
  using Error::Error;
};

// invalid run configuration (thresholds, electron counts, flags)
struct ConfigError : Error {
  using Error::Error;
};

// operation called on an object in the wrong state
struct StateError : Error {
  using Error::Error;
};

// memory budget exceeded while growing a group/set
struct ResourceError : Error {
  ResourceError(const std::string& what, std::uint64_t attempted)
      : Error(what), attempted_cardinality(attempted) {}
  std::uint64_t attempted_cardinality = 0;
};

// operand violates a documented precondition (phases, hermiticity)
struct ContractError : Error {
  using Error::Error;
};

// file system failures
struct IoError : Error {
  using Error::Error;
};

// optimizer produced non-finite values or exhausted its budget
struct OptimizerError : Error {
  using Error::Error;
};

}  // namespace niducc
