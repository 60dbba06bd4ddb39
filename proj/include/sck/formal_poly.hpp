#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sck/circuit.hpp"
#include "sck/expvec.hpp"
#include "sck/numeric.hpp"

namespace sck {

/// Limits for syntactic production. Produced sets grow exponentially, so
/// every producer takes caps; `max_degree` gives the exact low-degree slice.
struct ProductionCaps {
  std::size_t max_set_size = 1'000'000;
  std::optional<std::uint64_t> max_degree;

  /// Default caps with `max_set_size` overridden by SCK_MAX_SET_SIZE.
  static ProductionCaps from_environment();
};

/// Polynomial with nonnegative big-integer coefficients; zero terms are
/// never stored.
class FormalPolynomial {
 public:
  using TermMap = std::map<ExpVec, BigInt>;

  explicit FormalPolynomial(std::uint32_t arity = 0) : arity_(arity) {}

  static FormalPolynomial monomial(std::uint32_t arity, const ExpVec& v, const BigInt& coeff = 1);

  std::uint32_t arity() const { return arity_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  void add_term(const ExpVec& v, const BigInt& coeff);
  BigInt coefficient(const ExpVec& v) const;
  ExpVecSet exponents() const;
  std::uint64_t degree() const;
  std::uint64_t min_degree() const;
  bool is_homogeneous() const;

  FormalPolynomial& operator+=(const FormalPolynomial& other);
  friend FormalPolynomial operator+(FormalPolynomial a, const FormalPolynomial& b) { return a += b; }
  friend bool operator==(const FormalPolynomial&, const FormalPolynomial&) = default;

 private:
  std::uint32_t arity_;
  TermMap terms_;
};

/// Product with optional degree truncation; CapExceeded past `max_terms`.
FormalPolynomial multiply(const FormalPolynomial& a, const FormalPolynomial& b, std::size_t max_terms,
                          std::optional<std::uint64_t> max_degree = std::nullopt);

FormalPolynomial truncate_to_degree(const FormalPolynomial& p, std::uint64_t d);
FormalPolynomial homogeneous_part(const FormalPolynomial& p, std::uint64_t d);

/// Set of exponent vectors produced at the first output (union at add,
/// Minkowski sum at mul, {0} at constants, {e_i} at inputs).
ExpVecSet produced_exponent_set(const Circuit& c, const ProductionCaps& caps = {});
std::vector<ExpVecSet> produced_exponent_sets(const Circuit& c, const ProductionCaps& caps = {});

/// Per-node replacement used by proofs that zero out or relabel gates:
/// nullopt makes the node produce the zero polynomial.
using ProductionOverrides = std::unordered_map<NodeId, std::optional<FormalPolynomial>>;

/// Polynomial produced with integer arithmetic; constants must be
/// nonnegative integers. A zero constant produces the zero polynomial.
FormalPolynomial produced_polynomial(const Circuit& c, const ProductionCaps& caps = {});
std::vector<FormalPolynomial> produced_polynomials(const Circuit& c, const ProductionCaps& caps = {},
                                                   const ProductionOverrides& overrides = {});
/// Polynomials at every node (empty for unreachable ones).
std::vector<FormalPolynomial> produced_polynomials_at_nodes(const Circuit& c, const ProductionCaps& caps = {},
                                                            const ProductionOverrides& overrides = {});

/// Independent oracle: dense-keyed recursive expansion. Must agree with
/// produced_polynomial whenever both finish.
struct ExpansionBudget {
  std::size_t max_terms = 200'000;
  std::optional<std::uint64_t> max_degree;
};
FormalPolynomial brute_force_expand(const Circuit& c, const ExpansionBudget& budget = {});

/// Upper bound on the degree of each variable in the produced polynomial
/// (max at add, sum at mul).
std::vector<std::uint64_t> individual_degree_bounds(const Circuit& c);
std::uint64_t certified_degree_bound(const Circuit& c);

/// Decides whether two monotone arithmetic circuits produce the same
/// polynomial by comparing values on the grid {0..d_i}^n; valid whenever
/// d_i bounds the degree of x_i in both polynomials.
bool polynomial_identity_by_grid(const Circuit& c1, const Circuit& c2, std::uint64_t degree_bound,
                                 std::uint64_t budget = 10'000'000);
/// Same check with per-variable certified bounds computed from both circuits.
bool polynomial_identity_by_grid(const Circuit& c1, const Circuit& c2);
std::uint64_t grid_point_count(const std::vector<std::uint64_t>& per_var_bounds);

/// One term per line, `coeff monomial`, in lexicographic order of dense
/// exponent vectors (higher powers of x1 first).
std::string print_polynomial(const FormalPolynomial& p);

}  // namespace sck
