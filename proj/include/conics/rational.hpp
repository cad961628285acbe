#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace conics {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator.
using ExactRational = boost::multiprecision::cpp_rational;

inline ExactRational rational(std::int64_t num, std::int64_t den = 1) {
  return ExactRational(num, den);
}

// "num/den", or "num" when the denominator is 1.
std::string to_string(const ExactRational& q);

long double to_real(const ExactRational& q);

}  // namespace conics
