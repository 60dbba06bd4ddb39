#pragma once

#include <cstddef>
#include <set>

#include "sck/boolfun.hpp"
#include "sck/circuit.hpp"

namespace sck {

/// Produced term set T(F); identical literal sets are merged.
using TermSet = std::set<Term>;

/// Every AND gate combines functions depending on disjoint variable sets.
/// Tabulates each gate, so the arity is limited by `cap`.
bool is_semantically_multilinear(const Circuit& c, std::uint32_t cap = kDefaultTableCap);

/// Every AND gate combines subcircuits with disjoint sets of input variables.
bool is_syntactically_multilinear(const Circuit& c);

/// Literal -> {literal}, OR -> union, AND -> pairwise conjunctions; the
/// constant 1 produces the empty term and 0 nothing. CapExceeded beyond
/// `cap` terms at any node.
TermSet produced_terms(const Circuit& c, std::size_t cap = 1'000'000);

/// Positive factor of every produced zero term implies the upward closure
/// of f. Requires that c computes f and f(0) = 0.
bool impedes_zero_terms(const Circuit& c, const BooleanFunction& f, std::size_t cap = 1'000'000);

}  // namespace sck
