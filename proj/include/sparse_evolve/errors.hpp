#pragma once

#include <stdexcept>
#include <string>

namespace sparse_evolve {

// Bad input: malformed values, violated preconditions, unparsable files.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A predimension that must carry a strict sign is exactly zero. Only
// possible because alpha is rational.
class DegeneracyError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The brute-force expectation oracle would exceed its work budget.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sparse_evolve
