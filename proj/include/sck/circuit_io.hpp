#pragma once

#include <string>
#include <string_view>

#include "sck/circuit.hpp"

namespace sck {

/// Text format, one node per line:
///
///   vars <n>
///   semiring <boolean|arithmetic|tropical>     (optional, default boolean)
///   <i> input <v>
///   <i> const <p>/<q>
///   <i> lit <v> [neg]
///   <i> add <l> <r>
///   <i> mul <l> <r>
///   output <i> [<i> ...]
///
/// Variables are 0-based indices. `#` starts a comment. Node ids must be
/// dense and in order. Syntax errors throw ParseError; structural problems
/// (forward references, bad variables) are left to `validate`.
Circuit parse_circuit(std::string_view text);

/// Canonical rendering; parse_circuit(print_circuit(c)) == c.
std::string print_circuit(const Circuit& c);

Circuit read_circuit_file(const std::string& path);
void write_circuit_file(const std::string& path, const Circuit& c);

}  // namespace sck
