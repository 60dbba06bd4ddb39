#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sck/boolfun.hpp"
#include "sck/circuit.hpp"
#include "sck/formal_poly.hpp"

namespace sck {

/// Boolean constant folding with 1&x=x, 0&x=0, 1|x=1, 0|x=x. When the first
/// output folds to a constant, `circuit` is that single constant node.
struct ConstantFolding {
  Circuit circuit;
  std::optional<bool> constant;
};
ConstantFolding fold_constants(const Circuit& c);

/// Constant-free Boolean circuit computing the same function(s), never
/// larger. ConstantFunction if an output folds to a constant.
Circuit eliminate_constants(const Circuit& c);

/// Circuit whose outputs produce the homogeneous parts of degrees 0..r of
/// the polynomial produced at the first output of `c`. Parts that are
/// identically zero have no output; `output_of_degree[i]` locates part i.
struct HomogeneousParts {
  Circuit circuit;
  std::vector<std::optional<std::size_t>> output_of_degree;
};
HomogeneousParts homogeneous_parts(const Circuit& c, std::uint32_t r);

/// Single-output arithmetic circuit producing the sum of all parts.
Circuit sum_of_parts(const HomogeneousParts& parts);

/// Read-k circuit for f whose formal polynomial has degree at most k*m,
/// m the largest prime implicant width. NotReadK if c is not read-k.
Circuit degree_reduce_read_k(const Circuit& c, std::uint32_t k, const BooleanFunction& f,
                             const ProductionCaps& caps = {});

/// Keeps only the minimum-degree slice of every produced polynomial: at an
/// add gate whose children differ in minimum degree the gate is replaced by
/// the lower child.
Circuit lower_envelope_circuit(const Circuit& c);

/// Replaces negated literals by 1 and folds constants.
Circuit positive_version(const Circuit& c);

/// OR over the prime implicants, each an AND of its variables.
Circuit or_of_prime_implicants(const BooleanFunction& f);

/// Boolean reading of an arithmetic circuit whose produced exponent set is
/// exactly Low(f). ExponentSetNotLowF otherwise.
Circuit arithmetic_to_read1(const Circuit& c, const BooleanFunction& f, const ProductionCaps& caps = {});

struct ProductPair {
  FormalPolynomial g;
  FormalPolynomial h;
  NodeId split_node = 0;
};

/// Writes the homogeneous degree-m polynomial produced by c as a sum of at
/// most size(c) products g_i * h_i with m/3 <= deg g_i <= 2m/3.
std::vector<ProductPair> decompose(const Circuit& c, const ProductionCaps& caps = {});

struct MatchingBoundReport {
  std::uint32_t n = 0;
  std::size_t circuit_size = 0;
  std::size_t pairs = 0;
  std::size_t target_monomials = 0;
  std::size_t max_product_monomials = 0;
  /// ceil(target_monomials / max_product_monomials).
  std::uint64_t implied_gates = 0;
  /// C(n, ceil(n/3)).
  std::uint64_t analytic_bound = 0;
  /// Exponent set equals the perfect matchings of K_{n,n}.
  bool similar_to_permanent = false;
  /// Every product's monomials occur in the target.
  bool products_inside_target = false;
};

/// Decomposes a circuit for a polynomial similar to perm_n and reports the
/// implied gate count; n at most 5.
MatchingBoundReport matching_lower_bound_report(const Circuit& c, std::uint32_t n, const ProductionCaps& caps = {});

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace sck
