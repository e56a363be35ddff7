#pragma once

#include <stdexcept>
#include <string>

namespace modvit {

/// Bad user input: malformed files, out-of-range ids, inconsistent flags.
/// The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure (e.g. eigensolver non-convergence). Exit code 3.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace modvit
