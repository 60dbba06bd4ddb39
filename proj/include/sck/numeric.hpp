#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sck {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

/// Canonical `p/q` rendering used by the circuit text format.
inline std::string to_fraction_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

/// Ceiling of a nonnegative rational.
inline BigInt ceil_nonneg(const Rational& q) {
  BigInt num = numerator(q);
  BigInt den = denominator(q);
  return (num + den - 1) / den;
}

}  // namespace sck
