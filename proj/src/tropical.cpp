#include "sck/tropical.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "sck/transforms.hpp"

namespace sck {

MinProblem::MinProblem(ExpVecSet feasible) : feasible_(std::move(feasible)) {
  if (feasible_.empty()) throw Error(ErrorKind::EmptySet, "a minimization problem needs a feasible solution");
  require_antichain(feasible_);
  if (feasible_.contains(ExpVec())) {
    throw Error(ErrorKind::InvalidAntichain, "feasible solutions must be nonzero");
  }
}

MinProblem MinProblem::lowest_ones_of(const BooleanFunction& f) {
  if (!f.is_monotone()) throw Error(ErrorKind::NonMonotone, "function is not monotone");
  return MinProblem(lowest_ones(f));
}

std::uint32_t MinProblem::max_support() const {
  std::uint32_t m = 0;
  for (const auto& a : feasible_) m = std::max<std::uint32_t>(m, static_cast<std::uint32_t>(a.support_size()));
  return m;
}

Rational solve_brute_force(const MinProblem& p, std::span<const Rational> x) {
  if (x.size() != p.arity()) throw Error(ErrorKind::ArityMismatch, "weight vector length does not match arity");
  std::optional<Rational> best;
  for (const auto& a : p.solutions()) {
    Rational s = 0;
    for (const auto& [v, d] : a.entries()) s += x[v];
    if (!best || s < *best) best = s;
  }
  return *best;
}

std::int64_t solve_brute_force_int(const MinProblem& p, std::span<const std::int64_t> x) {
  if (x.size() != p.arity()) throw Error(ErrorKind::ArityMismatch, "weight vector length does not match arity");
  std::int64_t best = INT64_MAX;
  for (const auto& a : p.solutions()) {
    std::int64_t s = 0;
    for (const auto& [v, d] : a.entries()) s += x[v];
    best = std::min(best, s);
  }
  return best;
}

// ---------------------------------------------------------------------------

Circuit constant_free_version(const Circuit& c) {
  require_valid(c);
  const auto& nodes = c.nodes();
  const auto mark = c.reachable();
  Circuit out(c.num_vars(), Semiring::Tropical);
  // nullopt marks the constant 0.
  std::vector<std::optional<NodeId>> val(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!mark[i]) continue;
    const Node& node = nodes[i];
    switch (node.kind) {
      case NodeKind::Input:
      case NodeKind::Literal: val[i] = out.push_unchecked(node); break;
      case NodeKind::Const: val[i] = std::nullopt; break;
      case NodeKind::Mul: {
        const auto& l = val[node.lhs];
        const auto& r = val[node.rhs];
        val[i] = !l ? r : !r ? l : std::optional<NodeId>(out.mul(*l, *r));
        break;
      }
      case NodeKind::Add: {
        const auto& l = val[node.lhs];
        const auto& r = val[node.rhs];
        val[i] = (l && r) ? std::optional<NodeId>(out.add(*l, *r)) : std::nullopt;
        break;
      }
    }
  }
  std::vector<NodeId> outs;
  for (NodeId o : c.outputs()) outs.push_back(val[o] ? *val[o] : out.constant(0));
  out.set_outputs(std::move(outs));
  return compact(out);
}

// ---------------------------------------------------------------------------
// Approximation checks

namespace {

using i128 = __int128;

struct Factor {
  bool small = false;
  std::int64_t num = 0;
  std::int64_t den = 1;
  Rational exact;
};

Factor make_factor(const Rational& k) {
  Factor f;
  f.exact = k;
  const BigInt& p = numerator(k);
  const BigInt& q = denominator(k);
  if (p <= INT64_MAX && q <= INT64_MAX) {
    f.small = true;
    f.num = static_cast<std::int64_t>(p);
    f.den = static_cast<std::int64_t>(q);
  }
  return f;
}

class GridChecker {
 public:
  GridChecker(const Circuit& c, const MinProblem& p, const Factor& k, ApproximationCheck& out)
      : c_(c), p_(p), k_(k), out_(out) {}

  void visit(const std::vector<std::int64_t>& x) {
    ++out_.points;
    const std::int64_t fa = solve_brute_force_int(p_, x);
    BigInt value;
    if (auto v = evaluate_int(c_, Semiring::Tropical, x)) {
      value = *v;
    } else {
      std::vector<Rational> xr(x.begin(), x.end());
      value = numerator(evaluate(c_, Semiring::Tropical, xr));
    }
    if (value < fa) out_.lower_violation = true;
    bool within;
    if (k_.small && value <= INT64_MAX) {
      within = i128(k_.den) * i128(static_cast<std::int64_t>(value)) <= i128(k_.num) * i128(fa);
    } else {
      within = Rational(value) <= k_.exact * fa;
    }
    if (!within) upper_violation_ = true;
    if (fa > 0) {
      // worst ratio kept as a fraction to avoid rational arithmetic per point
      if (!have_worst_ || value * worst_den_ > worst_num_ * fa) {
        worst_num_ = value;
        worst_den_ = fa;
        have_worst_ = true;
      }
    } else if (value > 0) {
      out_.lower_violation = true;
    }
  }

  void finish() {
    out_.grid = !out_.lower_violation && !upper_violation_;
    out_.worst_ratio = have_worst_ ? Rational(worst_num_, worst_den_) : Rational(0);
  }

 private:
  const Circuit& c_;
  const MinProblem& p_;
  const Factor& k_;
  ApproximationCheck& out_;
  bool upper_violation_ = false;
  bool have_worst_ = false;
  BigInt worst_num_ = 0;
  BigInt worst_den_ = 1;
};

std::uint64_t saturating_power(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t out = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (out > UINT64_MAX / base) return UINT64_MAX;
    out *= base;
  }
  return out;
}

}  // namespace

ApproximationCheck check_approximation(const Circuit& c, const MinProblem& p, const Rational& k,
                                       const GridSpec& grid, const ProductionCaps& caps) {
  require_valid(c);
  if (c.num_vars() != p.arity()) throw Error(ErrorKind::ArityMismatch, "circuit and problem differ in arity");
  if (!c.is_constant_free()) throw Error(ErrorKind::HasConstants, "approximation check needs a constant-free circuit");
  if (!c.is_monotone()) throw Error(ErrorKind::NonMonotone, "negated literal");
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "approximation factor must be at least 1");
  Circuit single = c;
  single.set_outputs({c.output()});

  ApproximationCheck out;
  const auto& a_set = p.solutions();
  const auto produced = produced_exponent_set(single, caps);
  out.upward = std::all_of(produced.begin(), produced.end(), [&](const ExpVec& b) { return a_set.upward_contains(b); });
  out.shadows = std::all_of(a_set.begin(), a_set.end(), [&](const ExpVec& a) {
    const Rational bound = k * a.dot(a);
    return std::any_of(produced.begin(), produced.end(),
                       [&](const ExpVec& b) { return b.same_support(a) && Rational(a.dot(b)) <= bound; });
  });
  out.structural = out.upward && out.shadows;

  const auto n = c.num_vars();
  const std::uint64_t ceil_k = static_cast<std::uint64_t>(ceil_nonneg(k));
  out.max_value = grid.max_value ? *grid.max_value : ceil_k * n + 1;
  out.seed = grid.seed;
  const std::uint64_t side = out.max_value + 1;
  const std::uint64_t total = saturating_power(side, n);
  switch (grid.mode) {
    case GridMode::Exhaustive:
      if (total > grid.budget) {
        throw Error(ErrorKind::BudgetExceeded, "exhaustive grid exceeds " + std::to_string(grid.budget) + " points");
      }
      out.exhaustive = true;
      break;
    case GridMode::Sampled: out.exhaustive = false; break;
    case GridMode::Auto: out.exhaustive = total <= grid.budget; break;
  }

  const Factor factor = make_factor(k);
  GridChecker checker(single, p, factor, out);
  std::vector<std::int64_t> x(n, 0);
  if (out.exhaustive) {
    for (std::uint64_t i = 0; i < total; ++i) {
      checker.visit(x);
      for (std::uint32_t v = 0; v < n; ++v) {
        if (static_cast<std::uint64_t>(x[v]) < out.max_value) {
          ++x[v];
          break;
        }
        x[v] = 0;
      }
    }
  } else {
    // Corners {0,1}^n and {1,max}^n carry the discriminating weightings;
    // the rest is uniform.
    std::mt19937_64 rng(grid.seed);
    std::uint64_t budget = grid.samples;
    if (n < 63 && (std::uint64_t{2} << n) <= grid.samples / 2) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        for (std::uint32_t v = 0; v < n; ++v) x[v] = (mask >> v) & 1;
        checker.visit(x);
        for (std::uint32_t v = 0; v < n; ++v) x[v] = ((mask >> v) & 1) ? static_cast<std::int64_t>(out.max_value) : 1;
        checker.visit(x);
      }
      budget -= std::uint64_t{2} << n;
    }
    for (std::uint64_t i = 0; i < budget; ++i) {
      for (std::uint32_t v = 0; v < n; ++v) x[v] = static_cast<std::int64_t>(rng() % side);
      checker.visit(x);
    }
  }
  checker.finish();
  return out;
}

Circuit boolean_read_k_to_tropical(const Circuit& c, const BooleanFunction& f, std::uint32_t k,
                                   const ProductionCaps& caps) {
  Circuit single = c;
  single.set_outputs({c.output()});
  const Circuit base = single.is_constant_free() ? compact(single) : eliminate_constants(single);
  const auto cls = classify_read_k(base, f, caps);
  if (!cls.semantic_k || *cls.semantic_k > k) {
    throw Error(ErrorKind::NotReadK, "circuit is not read-" + std::to_string(k));
  }
  return retarget(base, Semiring::Tropical);
}

std::uint32_t read_bound(std::uint32_t k, std::uint32_t m) { return (k - 1) * m + 1; }

Circuit tropical_to_boolean_read_r(const Circuit& c, const MinProblem& p, std::uint32_t k, const GridSpec& grid,
                                   const ProductionCaps& caps) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "approximation factor must be at least 1");
  const Circuit cf = constant_free_version(c);
  if (!cf.is_constant_free()) throw Error(ErrorKind::NotApproximating, "circuit is the constant 0");
  const auto check = check_approximation(cf, p, Rational(k), grid, caps);
  if (!check.structural || !check.grid) {
    throw Error(ErrorKind::NotApproximating, "circuit does not approximate the problem within factor " +
                                                 std::to_string(k));
  }
  return retarget(cf, Semiring::Boolean);
}

// ---------------------------------------------------------------------------
// Problem files

MinProblem parse_min_problem(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<std::uint32_t> arity;
  std::vector<ExpVec> solutions;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& msg) {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::vector<std::string> tokens;
    for (std::string w; words >> w;) tokens.push_back(w);
    if (tokens.empty()) continue;
    if (!arity) {
      if (tokens.size() != 2 || tokens[0] != "vars") fail("expected 'vars <n>'");
      try {
        arity = static_cast<std::uint32_t>(std::stoul(tokens[1]));
      } catch (const std::exception&) {
        fail("bad arity");
      }
      continue;
    }
    VarSet vars;
    for (const auto& t : tokens) {
      std::size_t used = 0;
      unsigned long v = 0;
      try {
        v = std::stoul(t, &used);
      } catch (const std::exception&) {
        fail("bad variable '" + t + "'");
      }
      if (used != t.size() || v == 0 || v > *arity) fail("variable '" + t + "' out of range");
      vars.push_back(static_cast<VarIndex>(v - 1));
    }
    std::sort(vars.begin(), vars.end());
    if (std::adjacent_find(vars.begin(), vars.end()) != vars.end()) fail("repeated variable");
    solutions.push_back(ExpVec::from_support(vars));
  }
  if (!arity) throw Error(ErrorKind::ParseError, "missing 'vars' header");
  return MinProblem(ExpVecSet(*arity, std::move(solutions)));
}

std::string print_min_problem(const MinProblem& p) {
  std::ostringstream out;
  out << "vars " << p.arity() << '\n';
  for (const auto& a : p.solutions()) {
    bool first = true;
    for (const auto& [v, d] : a.entries()) {
      out << (first ? "" : " ") << v + 1;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

MinProblem read_min_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_min_problem(buf.str());
}

void write_min_problem_file(const std::string& path, const MinProblem& p) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  out << print_min_problem(p);
}

}  // namespace sck
