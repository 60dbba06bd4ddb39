#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sck {

using VarIndex = std::uint32_t;

/// Sorted variable set; the support of a vector.
using VarSet = std::vector<VarIndex>;

/// Family of supports Supp(A) = {supp(a) : a in A}.
using SupportFamily = std::set<VarSet>;

/// Exponent vector in N^n, stored sparsely as (variable, degree) pairs with
/// degree > 0, sorted by variable. The arity lives in the owning set.
class ExpVec {
 public:
  using Entry = std::pair<VarIndex, std::uint32_t>;

  ExpVec() = default;

  static ExpVec unit(VarIndex var) { return ExpVec({{var, 1}}); }
  static ExpVec from_dense(std::span<const std::uint32_t> degrees);
  /// Characteristic 0-1 vector of a variable set.
  static ExpVec from_support(std::span<const VarIndex> vars);
  static ExpVec from_mask(std::uint64_t mask);
  /// Entries need not be sorted; zero degrees are dropped, repeats summed.
  static ExpVec from_entries(std::vector<Entry> entries);

  std::uint32_t operator[](VarIndex var) const;
  std::span<const Entry> entries() const { return entries_; }

  bool is_zero() const { return entries_.empty(); }
  std::uint64_t degree() const;
  std::uint32_t max_entry() const;
  VarSet support() const;
  std::size_t support_size() const { return entries_.size(); }
  /// Requires every variable < 64.
  std::uint64_t support_mask() const;
  bool is_zero_one() const { return max_entry() <= 1; }
  bool k_bounded(std::uint32_t k) const { return max_entry() <= k; }
  bool same_support(const ExpVec& other) const;
  /// Componentwise >= ("contains").
  bool dominates(const ExpVec& other) const;
  std::uint64_t dot(const ExpVec& other) const;
  std::vector<std::uint32_t> to_dense(std::uint32_t arity) const;

  friend ExpVec operator+(const ExpVec& a, const ExpVec& b);
  friend bool operator==(const ExpVec&, const ExpVec&) = default;
  friend auto operator<=>(const ExpVec&, const ExpVec&) = default;

 private:
  explicit ExpVec(std::vector<Entry> entries) : entries_(std::move(entries)) {}
  std::vector<Entry> entries_;
};

/// Finite set of exponent vectors of one arity, kept sorted and unique.
class ExpVecSet {
 public:
  explicit ExpVecSet(std::uint32_t arity = 0) : arity_(arity) {}
  ExpVecSet(std::uint32_t arity, std::vector<ExpVec> vectors);

  std::uint32_t arity() const { return arity_; }
  std::size_t size() const { return vectors_.size(); }
  bool empty() const { return vectors_.empty(); }
  const std::vector<ExpVec>& vectors() const { return vectors_; }
  auto begin() const { return vectors_.begin(); }
  auto end() const { return vectors_.end(); }

  bool contains(const ExpVec& v) const;
  void insert(const ExpVec& v);

  SupportFamily supports() const;
  std::uint64_t min_degree() const;
  std::uint64_t max_degree() const;
  std::uint32_t max_entry() const;
  bool is_homogeneous() const;
  bool is_zero_one() const;
  bool is_antichain() const;
  /// True iff some member is <= v (v lies in the upward closure).
  bool upward_contains(const ExpVec& v) const;
  bool subset_of(const ExpVecSet& other) const;

  friend bool operator==(const ExpVecSet&, const ExpVecSet&) = default;

 private:
  std::uint32_t arity_;
  std::vector<ExpVec> vectors_;
};

ExpVecSet set_union(const ExpVecSet& a, const ExpVecSet& b);

/// {a + b : a in A, b in B}; throws CapExceeded beyond `max_size` results.
ExpVecSet minkowski_sum(const ExpVecSet& a, const ExpVecSet& b, std::size_t max_size);

/// Minimum-degree vectors of a nonempty set (EmptySet otherwise).
ExpVecSet lower_envelope(const ExpVecSet& a);

/// Monomial rendering `x1^2*x3` with 1-based variable names; "1" for zero.
std::string format_monomial(const ExpVec& v);

}  // namespace sck
