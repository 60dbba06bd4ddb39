#include "sck/families.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <random>

#include "sck/transforms.hpp"

namespace sck {

namespace {

constexpr std::uint64_t kMaxPoints = std::uint64_t{1} << 24;

}  // namespace

void validate_family(const LineFamily& family) {
  if (family.lines.empty()) throw Error(ErrorKind::InvalidFamily, "family has no lines");
  std::vector<std::uint32_t> degree(family.point_count, 0);
  for (const auto& line : family.lines) {
    if (line.size() != family.uniformity) {
      throw Error(ErrorKind::InvalidFamily, "line with " + std::to_string(line.size()) + " points, expected " +
                                                std::to_string(family.uniformity));
    }
    if (!std::is_sorted(line.begin(), line.end()) || std::adjacent_find(line.begin(), line.end()) != line.end()) {
      throw Error(ErrorKind::InvalidFamily, "line points must be sorted and distinct");
    }
    for (auto p : line) {
      if (p >= family.point_count) throw Error(ErrorKind::InvalidFamily, "point out of range");
      ++degree[p];
    }
  }
  for (auto d : degree) {
    if (d != family.regularity) {
      throw Error(ErrorKind::InvalidFamily, "point on " + std::to_string(d) + " lines, expected " +
                                                std::to_string(family.regularity));
    }
  }
}

bool is_blocking(const LineFamily& family, std::span<const std::uint8_t> x) {
  if (x.size() != family.point_count) throw Error(ErrorKind::ArityMismatch, "assignment length differs from points");
  return std::all_of(family.lines.begin(), family.lines.end(), [&](const VarSet& line) {
    return std::any_of(line.begin(), line.end(), [&](VarIndex p) { return x[p] != 0; });
  });
}

bool is_blocking(const LineFamily& family, std::uint64_t mask) {
  return std::all_of(family.lines.begin(), family.lines.end(), [&](const VarSet& line) {
    return std::any_of(line.begin(), line.end(), [&](VarIndex p) { return (mask >> p) & 1; });
  });
}

BooleanFunction blocking_function(const LineFamily& family, std::uint32_t cap) {
  validate_family(family);
  std::vector<std::uint64_t> masks;
  for (const auto& line : family.lines) {
    std::uint64_t m = 0;
    for (auto p : line) m |= std::uint64_t{1} << p;
    masks.push_back(m);
  }
  return BooleanFunction::from_predicate(
      family.point_count,
      [&](std::uint64_t x) {
        return std::all_of(masks.begin(), masks.end(), [x](std::uint64_t m) { return (x & m) != 0; });
      },
      cap);
}

Circuit blocking_circuit(const LineFamily& family) {
  validate_family(family);
  Circuit out(family.point_count, Semiring::Boolean);
  std::vector<std::optional<NodeId>> inputs(family.point_count);
  auto input = [&](VarIndex p) {
    if (!inputs[p]) inputs[p] = out.input(p);
    return *inputs[p];
  };
  std::optional<NodeId> all;
  for (const auto& line : family.lines) {
    NodeId any = input(line.front());
    for (std::size_t i = 1; i < line.size(); ++i) any = out.add(any, input(line[i]));
    all = all ? out.mul(*all, any) : any;
  }
  out.set_outputs({*all});
  return out;
}

LineFamily lines_family(std::uint32_t m, std::uint32_t k) {
  if (m < 2 || k < 2) throw Error(ErrorKind::Precondition, "lines family needs m >= 2 and k >= 2");
  std::uint64_t points = 1;
  for (std::uint32_t d = 0; d < k; ++d) {
    points *= m;
    if (points > kMaxPoints) throw Error(ErrorKind::SizeOverflow, "m^k exceeds the point budget");
  }
  LineFamily family;
  family.point_count = static_cast<std::uint32_t>(points);
  family.uniformity = m;
  family.regularity = k;
  // stride of coordinate d is m^(k-1-d)
  for (std::uint32_t d = 0; d < k; ++d) {
    std::uint64_t stride = 1;
    for (std::uint32_t e = d + 1; e < k; ++e) stride *= m;
    for (std::uint64_t p = 0; p < points; ++p) {
      if ((p / stride) % m != 0) continue;
      VarSet line;
      for (std::uint32_t t = 0; t < m; ++t) line.push_back(static_cast<VarIndex>(p + t * stride));
      family.lines.push_back(std::move(line));
    }
  }
  return family;
}

LineFamily cov_family(std::uint32_t m, std::uint32_t k) {
  if (k < 1 || k > m) throw Error(ErrorKind::Precondition, "cov family needs 1 <= k <= m");
  if (m % k != 0) throw Error(ErrorKind::Divisibility, "k must divide m");
  if (m > 63 || binomial(m, k) > kMaxPoints) throw Error(ErrorKind::SizeOverflow, "C(m,k) exceeds the point budget");
  // k-subsets of [m] in lexicographic order of their sorted element lists
  std::vector<std::uint64_t> subsets;
  std::vector<std::uint32_t> comb(k);
  for (std::uint32_t i = 0; i < k; ++i) comb[i] = i;
  while (true) {
    std::uint64_t mask = 0;
    for (auto e : comb) mask |= std::uint64_t{1} << e;
    subsets.push_back(mask);
    std::int64_t i = static_cast<std::int64_t>(k) - 1;
    while (i >= 0 && comb[i] == m - k + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (std::uint32_t j = static_cast<std::uint32_t>(i) + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
  }
  LineFamily family;
  family.point_count = static_cast<std::uint32_t>(subsets.size());
  family.uniformity = static_cast<std::uint32_t>(binomial(m - 1, k - 1));
  family.regularity = k;
  for (std::uint32_t i = 0; i < m; ++i) {
    VarSet line;
    for (std::size_t p = 0; p < subsets.size(); ++p) {
      if ((subsets[p] >> i) & 1) line.push_back(static_cast<VarIndex>(p));
    }
    family.lines.push_back(std::move(line));
  }
  return family;
}

BooleanFunction matching_function(std::uint32_t n, std::uint32_t cap) {
  if (n < 1) throw Error(ErrorKind::Precondition, "n must be positive");
  if (n > 8 || n * n > cap) throw Error(ErrorKind::ArityTooLarge, "n*n exceeds the truth-table cap");
  return BooleanFunction::from_predicate(
      n * n,
      [n](std::uint64_t x) {
        // sets of columns usable by a matching of the first rows
        std::vector<bool> reach(std::size_t{1} << n, false);
        reach[0] = true;
        for (std::uint32_t row = 0; row < n; ++row) {
          std::vector<bool> next(reach.size(), false);
          for (std::size_t used = 0; used < reach.size(); ++used) {
            if (!reach[used]) continue;
            for (std::uint32_t col = 0; col < n; ++col) {
              if (!((used >> col) & 1) && ((x >> (row * n + col)) & 1)) next[used | (std::size_t{1} << col)] = true;
            }
          }
          reach = std::move(next);
        }
        return static_cast<bool>(reach.back());
      },
      cap);
}

Circuit permanent_circuit(std::uint32_t n) {
  if (n < 2) throw Error(ErrorKind::Precondition, "permanent circuit needs n >= 2");
  if (n > 20) throw Error(ErrorKind::SizeOverflow, "permanent circuit limited to n <= 20");
  Circuit out(n * n, Semiring::Arithmetic);
  std::vector<NodeId> x(n * n);
  for (std::uint32_t v = 0; v < n * n; ++v) x[v] = out.input(v);
  const std::size_t full = (std::size_t{1} << n) - 1;
  // value[S] is the permanent of rows 0..|S|-1 restricted to columns S
  std::vector<NodeId> value(full + 1, 0);
  for (std::uint32_t j = 0; j < n; ++j) value[std::size_t{1} << j] = x[j];
  for (std::uint32_t k = 2; k <= n; ++k) {
    for (std::size_t s = 1; s <= full; ++s) {
      if (static_cast<std::uint32_t>(std::popcount(s)) != k) continue;
      std::optional<NodeId> acc;
      for (std::uint32_t j = 0; j < n; ++j) {
        if (!((s >> j) & 1)) continue;
        const NodeId term = out.mul(x[(k - 1) * n + j], value[s ^ (std::size_t{1} << j)]);
        acc = acc ? out.add(*acc, term) : term;
      }
      value[s] = *acc;
    }
  }
  out.set_outputs({value[full]});
  return out;
}

namespace {

Circuit lines_circuit(std::uint32_t m, NodeKind inner, NodeKind outer) {
  if (m < 2) throw Error(ErrorKind::Precondition, "lines circuit needs m >= 2");
  Circuit out(m * m, Semiring::Boolean);
  std::vector<NodeId> x(m * m);
  for (std::uint32_t v = 0; v < m * m; ++v) x[v] = out.input(v);
  std::vector<NodeId> parts;
  for (std::uint32_t i = 0; i < m; ++i) {
    NodeId acc = x[i * m];
    for (std::uint32_t j = 1; j < m; ++j) acc = out.gate(inner, acc, x[i * m + j]);
    parts.push_back(acc);
  }
  for (std::uint32_t j = 0; j < m; ++j) {
    NodeId acc = x[j];
    for (std::uint32_t i = 1; i < m; ++i) acc = out.gate(inner, acc, x[i * m + j]);
    parts.push_back(acc);
  }
  NodeId acc = parts.front();
  for (std::size_t p = 1; p < parts.size(); ++p) acc = out.gate(outer, acc, parts[p]);
  out.set_outputs({acc});
  return out;
}

}  // namespace

Circuit read2_lines_circuit(std::uint32_t m) { return lines_circuit(m, NodeKind::Add, NodeKind::Mul); }

Circuit dual_lines_read1_circuit(std::uint32_t m) { return lines_circuit(m, NodeKind::Mul, NodeKind::Add); }

std::vector<ExpVec> cover_free_sample(std::uint32_t n, std::uint32_t m, std::uint32_t count, std::uint64_t seed) {
  if (m < 1 || m > n) throw Error(ErrorKind::InfeasibleParameters, "need 1 <= m <= n");
  constexpr int kMaxMisses = 10'000;
  std::mt19937_64 rng(seed);
  std::vector<VarSet> chosen;
  int misses = 0;
  while (chosen.size() < count) {
    // Floyd's sampling of an m-subset of [n]
    VarSet pick;
    for (std::uint32_t j = n - m; j < n; ++j) {
      const auto t = static_cast<VarIndex>(rng() % (std::uint64_t{j} + 1));
      if (std::find(pick.begin(), pick.end(), t) == pick.end()) pick.push_back(t);
      else pick.push_back(j);
    }
    std::sort(pick.begin(), pick.end());
    const bool fits = std::all_of(chosen.begin(), chosen.end(), [&](const VarSet& other) {
      VarSet common;
      std::set_intersection(pick.begin(), pick.end(), other.begin(), other.end(), std::back_inserter(common));
      return common.size() < m / 2;
    });
    if (fits) {
      chosen.push_back(std::move(pick));
      misses = 0;
    } else if (++misses >= kMaxMisses) {
      throw Error(ErrorKind::InfeasibleParameters, "greedy sampling stalled after " + std::to_string(chosen.size()) +
                                                       " vectors");
    }
  }
  std::vector<ExpVec> out;
  for (const auto& s : chosen) out.push_back(ExpVec::from_support(s));
  return out;
}

}  // namespace sck
