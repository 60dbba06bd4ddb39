#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "sck/boolfun.hpp"
#include "sck/circuit.hpp"
#include "sck/formal_poly.hpp"

namespace sck {

/// Minimization over a nonempty antichain A of 0-1 vectors:
/// f_A(x) = min_{a in A} <a, x> for nonnegative weights x.
class MinProblem {
 public:
  explicit MinProblem(ExpVecSet feasible);
  static MinProblem lowest_ones_of(const BooleanFunction& f);

  std::uint32_t arity() const { return feasible_.arity(); }
  const ExpVecSet& solutions() const { return feasible_; }
  /// Largest support size m.
  std::uint32_t max_support() const;

 private:
  ExpVecSet feasible_;
};

Rational solve_brute_force(const MinProblem& p, std::span<const Rational> x);
std::int64_t solve_brute_force_int(const MinProblem& p, std::span<const std::int64_t> x);

/// Every constant replaced by 0 (the tropical one), then folded away:
/// x + 0 = x and min(x, 0) = 0 on nonnegative weights. The result has no
/// constants unless the whole circuit is the constant 0.
Circuit constant_free_version(const Circuit& c);

enum class GridMode { Auto, Exhaustive, Sampled };

struct GridSpec {
  GridMode mode = GridMode::Auto;
  /// Largest grid coordinate; defaults to ceil(k)*n + 1.
  std::optional<std::uint64_t> max_value;
  std::uint64_t budget = 10'000'000;
  std::uint64_t samples = 200'000;
  std::uint64_t seed = 0;
};

struct ApproximationCheck {
  /// B_F within the upward closure of A, and every a in A has a shadow b
  /// in B_F with <a,b> <= k<a,a>. Necessary; also sufficient when k = 1.
  bool structural = false;
  bool upward = false;
  bool shadows = false;
  /// f_A(x) <= F(x) <= k f_A(x) at every checked grid point.
  bool grid = false;
  bool exhaustive = false;
  std::uint64_t max_value = 0;
  std::uint64_t points = 0;
  std::uint64_t seed = 0;
  /// Largest F(x)/f_A(x) over checked points with f_A(x) > 0.
  Rational worst_ratio{0};
  /// Some point had F(x) < f_A(x), or F(x) > 0 where f_A(x) = 0.
  bool lower_violation = false;
  bool exact_by_structure() const { return structural; }
};

/// Both verdicts of "c approximates p within factor k". Structural check
/// uses the produced set, the grid check evaluates c as a (min,+) circuit.
ApproximationCheck check_approximation(const Circuit& c, const MinProblem& p, const Rational& k,
                                       const GridSpec& grid = {}, const ProductionCaps& caps = {});

/// Tropical reading of a read-k Boolean circuit for monotone f; it
/// approximates the minimization over Low(f) within factor k.
Circuit boolean_read_k_to_tropical(const Circuit& c, const BooleanFunction& f, std::uint32_t k,
                                   const ProductionCaps& caps = {});

/// Boolean reading of the constant-free version of a tropical circuit
/// approximating p within factor k; it computes OR_{a in A} AND_{supp a}
/// and is read-r with r = (k-1)m + 1. NotApproximating when the checks fail.
Circuit tropical_to_boolean_read_r(const Circuit& c, const MinProblem& p, std::uint32_t k,
                                   const GridSpec& grid = {}, const ProductionCaps& caps = {});

std::uint32_t read_bound(std::uint32_t k, std::uint32_t m);

/// Problem files: `vars <n>` then one feasible solution per line as a
/// list of 1-based variable numbers. `#` starts a comment.
MinProblem parse_min_problem(std::string_view text);
std::string print_min_problem(const MinProblem& p);
MinProblem read_min_problem_file(const std::string& path);
void write_min_problem_file(const std::string& path, const MinProblem& p);

}  // namespace sck
