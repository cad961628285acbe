#pragma once

#include <stdexcept>
#include <string>

namespace conics {

// Argument outside the mathematical domain of an operation (even modulus for
// a Jacobi symbol, zero coefficient, violated family hypotheses, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Input larger than a table or search box that was sized for it.
class OutOfRangeError : public std::out_of_range {
 public:
  explicit OutOfRangeError(const std::string& what) : std::out_of_range(what) {}
};

// Request would exceed a configured memory or enumeration budget.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace conics
