#pragma once

#include <optional>
#include <string_view>

#include "sck/numeric.hpp"

namespace sck {

/// The three commutative semirings a circuit can be interpreted over.
///   Boolean:    (or, and),  neutral 1, domain {0,1}
///   Arithmetic: (+, *),     neutral 1, domain nonnegative rationals
///   Tropical:   (min, +),   neutral 0, domain nonnegative rationals
enum class Semiring { Boolean, Arithmetic, Tropical };

std::string_view to_string(Semiring s);
std::optional<Semiring> parse_semiring(std::string_view text);

/// Multiplicative neutral element.
Rational semiring_one(Semiring s);
Rational semiring_add(Semiring s, const Rational& a, const Rational& b);
Rational semiring_mul(Semiring s, const Rational& a, const Rational& b);

}  // namespace sck
