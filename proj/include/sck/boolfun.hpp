#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sck/circuit.hpp"
#include "sck/expvec.hpp"
#include "sck/formal_poly.hpp"

namespace sck {

inline constexpr std::uint32_t kDefaultTableCap = 20;

/// Explicit truth table over n variables. Bit x of the table is f(x), where
/// bit i of the index x is the value of variable i. Tables are packed into
/// 64-bit words; unused high bits of a short table stay zero.
class BooleanFunction {
 public:
  explicit BooleanFunction(std::uint32_t arity = 0, std::uint32_t cap = kDefaultTableCap);

  static BooleanFunction constant(std::uint32_t arity, bool value, std::uint32_t cap = kDefaultTableCap);
  static BooleanFunction variable(std::uint32_t arity, std::uint32_t var, std::uint32_t cap = kDefaultTableCap);
  static BooleanFunction from_words(std::uint32_t arity, std::vector<std::uint64_t> words,
                                    std::uint32_t cap = kDefaultTableCap);
  static BooleanFunction from_predicate(std::uint32_t arity, const std::function<bool(std::uint64_t)>& pred,
                                        std::uint32_t cap = kDefaultTableCap);

  std::uint32_t arity() const { return arity_; }
  std::uint64_t table_size() const { return std::uint64_t{1} << arity_; }
  const std::vector<std::uint64_t>& words() const { return words_; }

  bool operator()(std::uint64_t x) const { return (words_[x >> 6] >> (x & 63)) & 1; }
  bool at(std::span<const std::uint8_t> bits) const;

  bool is_monotone() const { return monotone_; }
  bool is_constant() const;
  bool is_zero() const;
  std::uint64_t count_ones() const;

  BooleanFunction operator~() const;
  friend BooleanFunction operator&(const BooleanFunction& a, const BooleanFunction& b);
  friend BooleanFunction operator|(const BooleanFunction& a, const BooleanFunction& b);
  friend BooleanFunction operator^(const BooleanFunction& a, const BooleanFunction& b);
  /// Pointwise f <= g.
  bool implies(const BooleanFunction& other) const;

  friend bool operator==(const BooleanFunction& a, const BooleanFunction& b) {
    return a.arity_ == b.arity_ && a.words_ == b.words_;
  }

 private:
  void finish();

  std::uint32_t arity_;
  std::vector<std::uint64_t> words_;
  bool monotone_ = true;
};

/// AND of literals. Sets are sorted variable lists.
struct Term {
  VarSet positives;
  VarSet negatives;

  /// Contains some variable together with its negation.
  bool is_zero_term() const;
  /// The term with every negated literal replaced by 1.
  Term positive_factor() const { return Term{positives, {}}; }
  Term conjoin(const Term& other) const;
  std::string to_string() const;

  friend bool operator==(const Term&, const Term&) = default;
  friend auto operator<=>(const Term&, const Term&) = default;
};

/// Antichains of 0-1 vectors share the exponent-set representation.
using Antichain = ExpVecSet;

/// Throws InvalidAntichain unless every vector is 0-1 and the set is an antichain.
void require_antichain(const ExpVecSet& a);

/// The function x -> OR_{a in A} AND_{i in supp a} x_i.
BooleanFunction function_of_antichain(const ExpVecSet& a, std::uint32_t cap = kDefaultTableCap);

/// Truth table of the first output, evaluated over the Boolean semiring.
BooleanFunction compute_function(const Circuit& c, std::uint32_t cap = kDefaultTableCap);
/// Functions computed at every node (unreachable nodes get constant 0).
std::vector<BooleanFunction> compute_node_functions(const Circuit& c, std::uint32_t cap = kDefaultTableCap);

/// Minimal accepted inputs: f(a)=1 and f(b)=0 for every b < a.
Antichain lowest_ones(const BooleanFunction& f);
/// x -> OR_{z <= x} f(z).
BooleanFunction upward_closure(const BooleanFunction& f);
/// x -> not f(not x).
BooleanFunction dual(const BooleanFunction& f);
/// Variables i such that flipping x_i changes f for some x.
VarSet depends_on(const BooleanFunction& f);
/// All prime implicants (including negated literals), by exhaustive search
/// over the 3^n terms; arity at most 13.
std::vector<Term> prime_implicants(const BooleanFunction& f);
/// Largest number of variables in a prime implicant of a monotone function.
std::uint32_t max_prime_implicant_width(const BooleanFunction& f);

struct StructureCheck {
  bool supports_covered = false;  // Supp(Low f) within Supp(B_F)
  bool inside_upward = false;     // B_F within the upward closure of Low f
  bool holds() const { return supports_covered && inside_upward; }
};

/// Structural test for "c computes f" on monotone c and f.
StructureCheck verify_structure(const Circuit& c, const BooleanFunction& f, const ProductionCaps& caps = {});

struct ReadKClassification {
  /// nullopt means some lowest one has no shadow in the (possibly
  /// truncated) produced set.
  std::optional<std::uint32_t> semantic_k;
  std::uint32_t syntactic_k = 0;
  /// Produced set was degree-truncated: semantic_k is then only an upper
  /// bound achieved within the slice, and syntactic_k a lower bound.
  bool truncated = false;
};

/// Read parameters of a monotone circuit computing f. NotComputingF if it
/// does not.
ReadKClassification classify_read_k(const Circuit& c, const BooleanFunction& f, const ProductionCaps& caps = {});

/// a + b >= c with a, b, c in A forces c in {a, b}.
bool is_cover_free(const std::vector<ExpVec>& a);

/// Supp(B_F) == Supp(Low f). NotComputingF if c does not compute f.
bool is_tight(const Circuit& c, const BooleanFunction& f, const ProductionCaps& caps = {});

/// Function literals:
///   table <n> <hex>   hex of the whole table, most significant digit first
///   dnf <expr>        e.g. `x1&x2 | !x3`, or with letters x,y,z,u,v,w
/// A `dnf` literal takes its arity from `arity` when given, else from the
/// largest variable used. The forms `table:...` and `dnf:...` are accepted.
BooleanFunction parse_function(std::string_view text, std::optional<std::uint32_t> arity = std::nullopt,
                               std::uint32_t cap = kDefaultTableCap);
std::string format_function(const BooleanFunction& f);

}  // namespace sck
