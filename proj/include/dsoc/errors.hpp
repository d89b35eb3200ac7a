#pragma once

#include <stdexcept>
#include <string>

namespace dsoc {

/// Input violates a documented precondition (maps to CLI exit code 2).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A design target cannot be met with the given parameters (CLI exit code 1).
class Infeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw InvalidInput(message);
}

}  // namespace dsoc
