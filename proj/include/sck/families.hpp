#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sck/boolfun.hpp"
#include "sck/circuit.hpp"
#include "sck/expvec.hpp"

namespace sck {

/// Lines over points 0..point_count-1. Valid families are m-uniform (every
/// line has m points) and k-regular (every point lies on k lines).
struct LineFamily {
  std::uint32_t point_count = 0;
  std::vector<VarSet> lines;
  std::uint32_t uniformity = 0;
  std::uint32_t regularity = 0;
};

/// Throws InvalidFamily unless the family is uniform and regular as stated.
void validate_family(const LineFamily& family);

/// The point set {p : x_p = 1} meets every line.
bool is_blocking(const LineFamily& family, std::span<const std::uint8_t> x);
bool is_blocking(const LineFamily& family, std::uint64_t mask);

BooleanFunction blocking_function(const LineFamily& family, std::uint32_t cap = kDefaultTableCap);

/// AND over lines of the OR over the line's points: m|L| - 1 gates.
Circuit blocking_circuit(const LineFamily& family);

/// Points [m]^k (point index = mixed radix, first coordinate most
/// significant); lines are the axis-parallel lines, k*m^(k-1) of them.
LineFamily lines_family(std::uint32_t m, std::uint32_t k);

/// Points are the k-subsets of [m] in lexicographic order; line i holds the
/// subsets containing i.
LineFamily cov_family(std::uint32_t m, std::uint32_t k);

/// Has a perfect matching, over the n*n variables x_{i,j} at index i*n+j.
BooleanFunction matching_function(std::uint32_t n, std::uint32_t cap = kDefaultTableCap);

/// Arithmetic circuit for the permanent by expansion along rows over column
/// subsets: P(k,S) = sum_{j in S} x_{k-1,j} P(k-1, S - j). Uses exactly
/// n(2^(n-1) - 1) multiplications.
Circuit permanent_circuit(std::uint32_t n);

/// AND of all row ORs and all column ORs of an m x m matrix (2m^2 - 1 gates).
Circuit read2_lines_circuit(std::uint32_t m);

/// OR of all row ANDs and all column ANDs: computes the dual of the above.
Circuit dual_lines_read1_circuit(std::uint32_t m);

/// Seeded greedy sample of `count` 0-1 vectors of arity n with m ones each,
/// pairwise sharing fewer than floor(m/2) ones. InfeasibleParameters when
/// the greedy search stalls.
std::vector<ExpVec> cover_free_sample(std::uint32_t n, std::uint32_t m, std::uint32_t count, std::uint64_t seed);

}  // namespace sck
