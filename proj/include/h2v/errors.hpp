#pragma once

#include <stdexcept>
#include <string>

namespace h2v {

// Argument outside the mathematical domain of an operation
// (e.g. the diagonal-slice evaluator called off the diagonal).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Size or count parameter outside the supported range.
class RangeError : public std::runtime_error {
 public:
  explicit RangeError(const std::string& what) : std::runtime_error(what) {}
};

// Integrand produced a non-finite value on the grid / sample set.
class IntegrationError : public std::runtime_error {
 public:
  explicit IntegrationError(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace h2v
