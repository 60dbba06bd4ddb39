#include "sck/expvec.hpp"

#include <algorithm>
#include <bit>

#include "sck/error.hpp"

namespace sck {

ExpVec ExpVec::from_dense(std::span<const std::uint32_t> degrees) {
  std::vector<Entry> e;
  for (VarIndex i = 0; i < degrees.size(); ++i) {
    if (degrees[i] != 0) e.emplace_back(i, degrees[i]);
  }
  return ExpVec(std::move(e));
}

ExpVec ExpVec::from_support(std::span<const VarIndex> vars) {
  std::vector<Entry> e;
  e.reserve(vars.size());
  for (VarIndex v : vars) e.emplace_back(v, 1);
  return from_entries(std::move(e));
}

ExpVec ExpVec::from_mask(std::uint64_t mask) {
  std::vector<Entry> e;
  while (mask != 0) {
    const auto bit = static_cast<VarIndex>(std::countr_zero(mask));
    e.emplace_back(bit, 1);
    mask &= mask - 1;
  }
  return ExpVec(std::move(e));
}

ExpVec ExpVec::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end());
  std::vector<Entry> merged;
  for (const auto& [var, deg] : entries) {
    if (deg == 0) continue;
    if (!merged.empty() && merged.back().first == var) {
      merged.back().second += deg;
    } else {
      merged.emplace_back(var, deg);
    }
  }
  return ExpVec(std::move(merged));
}

std::uint32_t ExpVec::operator[](VarIndex var) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), var,
                             [](const Entry& e, VarIndex v) { return e.first < v; });
  return (it != entries_.end() && it->first == var) ? it->second : 0;
}

std::uint64_t ExpVec::degree() const {
  std::uint64_t d = 0;
  for (const auto& e : entries_) d += e.second;
  return d;
}

std::uint32_t ExpVec::max_entry() const {
  std::uint32_t m = 0;
  for (const auto& e : entries_) m = std::max(m, e.second);
  return m;
}

VarSet ExpVec::support() const {
  VarSet s;
  s.reserve(entries_.size());
  for (const auto& e : entries_) s.push_back(e.first);
  return s;
}

std::uint64_t ExpVec::support_mask() const {
  std::uint64_t m = 0;
  for (const auto& e : entries_) {
    if (e.first >= 64) throw Error(ErrorKind::ArityTooLarge, "support mask needs variables < 64");
    m |= std::uint64_t{1} << e.first;
  }
  return m;
}

bool ExpVec::same_support(const ExpVec& other) const {
  if (entries_.size() != other.entries_.size()) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].first != other.entries_[i].first) return false;
  }
  return true;
}

bool ExpVec::dominates(const ExpVec& other) const {
  // Every entry of `other` must be matched by a larger-or-equal entry here.
  std::size_t i = 0;
  for (const auto& [var, deg] : other.entries_) {
    while (i < entries_.size() && entries_[i].first < var) ++i;
    if (i == entries_.size() || entries_[i].first != var || entries_[i].second < deg) return false;
  }
  return true;
}

std::uint64_t ExpVec::dot(const ExpVec& other) const {
  std::uint64_t s = 0;
  std::size_t i = 0, j = 0;
  while (i < entries_.size() && j < other.entries_.size()) {
    if (entries_[i].first < other.entries_[j].first) {
      ++i;
    } else if (entries_[i].first > other.entries_[j].first) {
      ++j;
    } else {
      s += std::uint64_t{entries_[i].second} * other.entries_[j].second;
      ++i;
      ++j;
    }
  }
  return s;
}

std::vector<std::uint32_t> ExpVec::to_dense(std::uint32_t arity) const {
  std::vector<std::uint32_t> d(arity, 0);
  for (const auto& [var, deg] : entries_) {
    if (var >= arity) throw Error(ErrorKind::ArityMismatch, "exponent vector exceeds arity");
    d[var] = deg;
  }
  return d;
}

ExpVec operator+(const ExpVec& a, const ExpVec& b) {
  std::vector<ExpVec::Entry> out;
  out.reserve(a.entries_.size() + b.entries_.size());
  std::size_t i = 0, j = 0;
  while (i < a.entries_.size() || j < b.entries_.size()) {
    if (j == b.entries_.size() || (i < a.entries_.size() && a.entries_[i].first < b.entries_[j].first)) {
      out.push_back(a.entries_[i++]);
    } else if (i == a.entries_.size() || b.entries_[j].first < a.entries_[i].first) {
      out.push_back(b.entries_[j++]);
    } else {
      out.emplace_back(a.entries_[i].first, a.entries_[i].second + b.entries_[j].second);
      ++i;
      ++j;
    }
  }
  return ExpVec(std::move(out));
}

// ---------------------------------------------------------------------------

ExpVecSet::ExpVecSet(std::uint32_t arity, std::vector<ExpVec> vectors)
    : arity_(arity), vectors_(std::move(vectors)) {
  std::sort(vectors_.begin(), vectors_.end());
  vectors_.erase(std::unique(vectors_.begin(), vectors_.end()), vectors_.end());
  for (const auto& v : vectors_) {
    if (!v.is_zero() && v.entries().back().first >= arity_) {
      throw Error(ErrorKind::ArityMismatch, "vector exceeds set arity");
    }
  }
}

bool ExpVecSet::contains(const ExpVec& v) const { return std::binary_search(vectors_.begin(), vectors_.end(), v); }

void ExpVecSet::insert(const ExpVec& v) {
  auto it = std::lower_bound(vectors_.begin(), vectors_.end(), v);
  if (it == vectors_.end() || *it != v) vectors_.insert(it, v);
}

SupportFamily ExpVecSet::supports() const {
  SupportFamily s;
  for (const auto& v : vectors_) s.insert(v.support());
  return s;
}

std::uint64_t ExpVecSet::min_degree() const {
  if (vectors_.empty()) throw Error(ErrorKind::EmptySet, "min degree of an empty set");
  std::uint64_t m = UINT64_MAX;
  for (const auto& v : vectors_) m = std::min(m, v.degree());
  return m;
}

std::uint64_t ExpVecSet::max_degree() const {
  std::uint64_t m = 0;
  for (const auto& v : vectors_) m = std::max(m, v.degree());
  return m;
}

std::uint32_t ExpVecSet::max_entry() const {
  std::uint32_t m = 0;
  for (const auto& v : vectors_) m = std::max(m, v.max_entry());
  return m;
}

bool ExpVecSet::is_homogeneous() const {
  return vectors_.empty() || min_degree() == max_degree();
}

bool ExpVecSet::is_zero_one() const {
  return std::all_of(vectors_.begin(), vectors_.end(), [](const ExpVec& v) { return v.is_zero_one(); });
}

bool ExpVecSet::is_antichain() const {
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    for (std::size_t j = 0; j < vectors_.size(); ++j) {
      if (i != j && vectors_[i].dominates(vectors_[j])) return false;
    }
  }
  return true;
}

bool ExpVecSet::upward_contains(const ExpVec& v) const {
  return std::any_of(vectors_.begin(), vectors_.end(), [&](const ExpVec& a) { return v.dominates(a); });
}

bool ExpVecSet::subset_of(const ExpVecSet& other) const {
  return std::includes(other.vectors_.begin(), other.vectors_.end(), vectors_.begin(), vectors_.end());
}

ExpVecSet set_union(const ExpVecSet& a, const ExpVecSet& b) {
  if (a.arity() != b.arity()) throw Error(ErrorKind::ArityMismatch, "union of sets with different arity");
  std::vector<ExpVec> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return ExpVecSet(a.arity(), std::move(out));
}

ExpVecSet minkowski_sum(const ExpVecSet& a, const ExpVecSet& b, std::size_t max_size) {
  if (a.arity() != b.arity()) throw Error(ErrorKind::ArityMismatch, "Minkowski sum of sets with different arity");
  std::vector<ExpVec> out;
  out.reserve(std::min(a.size() * b.size(), max_size + 1));
  for (const auto& u : a) {
    for (const auto& v : b) {
      out.push_back(u + v);
    }
    if (out.size() > 4 * max_size + 16) {
      // Deduplicate early before deciding the cap is really exceeded.
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      if (out.size() > max_size) {
        throw Error(ErrorKind::CapExceeded, "Minkowski sum exceeds " + std::to_string(max_size) + " vectors");
      }
    }
  }
  ExpVecSet result(a.arity(), std::move(out));
  if (result.size() > max_size) {
    throw Error(ErrorKind::CapExceeded, "Minkowski sum exceeds " + std::to_string(max_size) + " vectors");
  }
  return result;
}

ExpVecSet lower_envelope(const ExpVecSet& a) {
  if (a.empty()) throw Error(ErrorKind::EmptySet, "lower envelope of an empty set");
  const auto d = a.min_degree();
  std::vector<ExpVec> out;
  for (const auto& v : a) {
    if (v.degree() == d) out.push_back(v);
  }
  return ExpVecSet(a.arity(), std::move(out));
}

std::string format_monomial(const ExpVec& v) {
  if (v.is_zero()) return "1";
  std::string s;
  for (const auto& [var, deg] : v.entries()) {
    if (!s.empty()) s += '*';
    s += 'x';
    s += std::to_string(var + 1);
    if (deg > 1) {
      s += '^';
      s += std::to_string(deg);
    }
  }
  return s;
}

}  // namespace sck
