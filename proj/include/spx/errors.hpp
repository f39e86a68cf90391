#pragma once

#include <stdexcept>
#include <string>

namespace spx {

/// Infeasible or out-of-range parameters (theorem preconditions, capacity, bad vertex ids).
class ParamError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed serialized input or unreadable/unwritable files.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numerical routine failed to reach its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace spx
