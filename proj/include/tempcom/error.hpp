#pragma once

#include <stdexcept>
#include <string>

namespace tempcom {

// Precondition or argument violation (bad probability, node id out of range, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Graph is empty or complete, so a density-standardized statistic is undefined.
class DegenerateInput : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// Malformed or unreadable input data (files, tables, configs).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tempcom
