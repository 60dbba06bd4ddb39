#include "sck/formal_poly.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>

namespace sck {

ProductionCaps ProductionCaps::from_environment() {
  ProductionCaps caps;
  if (const char* env = std::getenv("SCK_MAX_SET_SIZE")) {
    char* end = nullptr;
    const auto value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) caps.max_set_size = static_cast<std::size_t>(value);
  }
  return caps;
}

// ---------------------------------------------------------------------------
// FormalPolynomial

FormalPolynomial FormalPolynomial::monomial(std::uint32_t arity, const ExpVec& v, const BigInt& coeff) {
  FormalPolynomial p(arity);
  p.add_term(v, coeff);
  return p;
}

void FormalPolynomial::add_term(const ExpVec& v, const BigInt& coeff) {
  if (coeff < 0) throw Error(ErrorKind::DomainError, "negative coefficient");
  if (coeff == 0) return;
  if (!v.is_zero() && v.entries().back().first >= arity_) {
    throw Error(ErrorKind::ArityMismatch, "monomial exceeds polynomial arity");
  }
  terms_[v] += coeff;
}

BigInt FormalPolynomial::coefficient(const ExpVec& v) const {
  auto it = terms_.find(v);
  return it == terms_.end() ? BigInt(0) : it->second;
}

ExpVecSet FormalPolynomial::exponents() const {
  std::vector<ExpVec> keys;
  keys.reserve(terms_.size());
  for (const auto& [v, c] : terms_) keys.push_back(v);
  return ExpVecSet(arity_, std::move(keys));
}

std::uint64_t FormalPolynomial::degree() const {
  std::uint64_t d = 0;
  for (const auto& [v, c] : terms_) d = std::max(d, v.degree());
  return d;
}

std::uint64_t FormalPolynomial::min_degree() const {
  if (terms_.empty()) throw Error(ErrorKind::EmptySet, "min degree of the zero polynomial");
  std::uint64_t d = UINT64_MAX;
  for (const auto& [v, c] : terms_) d = std::min(d, v.degree());
  return d;
}

bool FormalPolynomial::is_homogeneous() const { return terms_.empty() || degree() == min_degree(); }

FormalPolynomial& FormalPolynomial::operator+=(const FormalPolynomial& other) {
  if (other.arity_ != arity_) throw Error(ErrorKind::ArityMismatch, "sum of polynomials with different arity");
  for (const auto& [v, c] : other.terms_) terms_[v] += c;
  return *this;
}

FormalPolynomial multiply(const FormalPolynomial& a, const FormalPolynomial& b, std::size_t max_terms,
                          std::optional<std::uint64_t> max_degree) {
  if (a.arity() != b.arity()) throw Error(ErrorKind::ArityMismatch, "product of polynomials with different arity");
  FormalPolynomial out(a.arity());
  for (const auto& [u, cu] : a.terms()) {
    const auto du = u.degree();
    for (const auto& [v, cv] : b.terms()) {
      if (max_degree && du + v.degree() > *max_degree) continue;
      out.add_term(u + v, cu * cv);
    }
    if (out.size() > max_terms) {
      throw Error(ErrorKind::CapExceeded, "product exceeds " + std::to_string(max_terms) + " terms");
    }
  }
  return out;
}

FormalPolynomial truncate_to_degree(const FormalPolynomial& p, std::uint64_t d) {
  FormalPolynomial out(p.arity());
  for (const auto& [v, c] : p.terms()) {
    if (v.degree() <= d) out.add_term(v, c);
  }
  return out;
}

FormalPolynomial homogeneous_part(const FormalPolynomial& p, std::uint64_t d) {
  FormalPolynomial out(p.arity());
  for (const auto& [v, c] : p.terms()) {
    if (v.degree() == d) out.add_term(v, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Production

namespace {

/// Index of the last gate reading each node; outputs are never released.
std::vector<std::size_t> last_uses(const Circuit& c) {
  const auto& nodes = c.nodes();
  std::vector<std::size_t> last(nodes.size(), 0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].is_gate()) {
      last[nodes[i].lhs] = std::max(last[nodes[i].lhs], i);
      last[nodes[i].rhs] = std::max(last[nodes[i].rhs], i);
    }
  }
  for (NodeId o : c.outputs()) last[o] = SIZE_MAX;
  return last;
}

ExpVecSet drop_above(ExpVecSet s, std::optional<std::uint64_t> max_degree) {
  if (!max_degree) return s;
  std::vector<ExpVec> keep;
  for (const auto& v : s) {
    if (v.degree() <= *max_degree) keep.push_back(v);
  }
  return ExpVecSet(s.arity(), std::move(keep));
}

void require_positive_literals(const Node& n) {
  if (n.kind == NodeKind::Literal && n.negated) {
    throw Error(ErrorKind::NonMonotone, "negated literal has no exponent vector");
  }
}

}  // namespace

std::vector<ExpVecSet> produced_exponent_sets(const Circuit& c, const ProductionCaps& caps) {
  require_valid(c);
  const auto& nodes = c.nodes();
  const auto mark = c.reachable();
  const auto last = last_uses(c);
  const auto n = c.num_vars();
  std::vector<std::optional<ExpVecSet>> sets(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!mark[i]) continue;
    const Node& node = nodes[i];
    require_positive_literals(node);
    ExpVecSet s(n);
    switch (node.kind) {
      case NodeKind::Input:
      case NodeKind::Literal: s = ExpVecSet(n, {ExpVec::unit(node.var)}); break;
      case NodeKind::Const: s = ExpVecSet(n, {ExpVec()}); break;
      case NodeKind::Add: s = set_union(*sets[node.lhs], *sets[node.rhs]); break;
      case NodeKind::Mul: s = minkowski_sum(*sets[node.lhs], *sets[node.rhs], SIZE_MAX / 8); break;
    }
    s = drop_above(std::move(s), caps.max_degree);
    if (s.size() > caps.max_set_size) {
      throw Error(ErrorKind::CapExceeded, "produced set at node " + std::to_string(i) + " exceeds " +
                                              std::to_string(caps.max_set_size) + " vectors");
    }
    sets[i] = std::move(s);
    if (node.is_gate()) {
      if (last[node.lhs] == i) sets[node.lhs].reset();
      if (last[node.rhs] == i) sets[node.rhs].reset();
    }
  }
  std::vector<ExpVecSet> out;
  for (NodeId o : c.outputs()) out.push_back(*sets[o]);
  return out;
}

ExpVecSet produced_exponent_set(const Circuit& c, const ProductionCaps& caps) {
  Circuit single = c;
  single.set_outputs({c.output()});
  return produced_exponent_sets(single, caps).front();
}

namespace {

std::vector<std::optional<FormalPolynomial>> produce_all(const Circuit& c, const ProductionCaps& caps,
                                                         const ProductionOverrides& overrides, bool release) {
  require_valid(c);
  const auto& nodes = c.nodes();
  const auto mark = c.reachable();
  const auto last = last_uses(c);
  const auto n = c.num_vars();
  std::vector<std::optional<FormalPolynomial>> polys(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!mark[i]) continue;
    const Node& node = nodes[i];
    FormalPolynomial p(n);
    if (auto it = overrides.find(static_cast<NodeId>(i)); it != overrides.end()) {
      if (it->second) p = *it->second;
    } else {
      require_positive_literals(node);
      switch (node.kind) {
        case NodeKind::Input:
        case NodeKind::Literal: p.add_term(ExpVec::unit(node.var), 1); break;
        case NodeKind::Const:
          if (!is_integral(node.value) || node.value < 0) {
            throw Error(ErrorKind::DomainError, "produced coefficients need nonnegative integer constants");
          }
          p.add_term(ExpVec(), numerator(node.value));
          break;
        case NodeKind::Add: p = *polys[node.lhs] + *polys[node.rhs]; break;
        case NodeKind::Mul: p = multiply(*polys[node.lhs], *polys[node.rhs], SIZE_MAX / 8, caps.max_degree); break;
      }
    }
    if (caps.max_degree) p = truncate_to_degree(p, *caps.max_degree);
    if (p.size() > caps.max_set_size) {
      throw Error(ErrorKind::CapExceeded, "produced polynomial at node " + std::to_string(i) + " exceeds " +
                                              std::to_string(caps.max_set_size) + " terms");
    }
    polys[i] = std::move(p);
    if (release && node.is_gate()) {
      if (last[node.lhs] == i) polys[node.lhs].reset();
      if (last[node.rhs] == i) polys[node.rhs].reset();
    }
  }
  return polys;
}

}  // namespace

std::vector<FormalPolynomial> produced_polynomials(const Circuit& c, const ProductionCaps& caps,
                                                   const ProductionOverrides& overrides) {
  auto polys = produce_all(c, caps, overrides, true);
  std::vector<FormalPolynomial> out;
  for (NodeId o : c.outputs()) out.push_back(*polys[o]);
  return out;
}

std::vector<FormalPolynomial> produced_polynomials_at_nodes(const Circuit& c, const ProductionCaps& caps,
                                                            const ProductionOverrides& overrides) {
  auto polys = produce_all(c, caps, overrides, false);
  std::vector<FormalPolynomial> out;
  out.reserve(polys.size());
  for (auto& p : polys) out.push_back(p ? std::move(*p) : FormalPolynomial(c.num_vars()));
  return out;
}

FormalPolynomial produced_polynomial(const Circuit& c, const ProductionCaps& caps) {
  Circuit single = c;
  single.set_outputs({c.output()});
  return produced_polynomials(single, caps).front();
}

// ---------------------------------------------------------------------------
// Brute-force expansion (test oracle)

FormalPolynomial brute_force_expand(const Circuit& c, const ExpansionBudget& budget) {
  require_valid(c);
  using Dense = std::vector<std::uint32_t>;
  using Expansion = std::map<Dense, BigInt>;
  const auto n = c.num_vars();
  const auto& nodes = c.nodes();
  std::vector<std::optional<Expansion>> memo(nodes.size());

  auto total_degree = [](const Dense& d) {
    std::uint64_t s = 0;
    for (auto e : d) s += e;
    return s;
  };

  std::function<const Expansion&(NodeId)> expand = [&](NodeId id) -> const Expansion& {
    if (memo[id]) return *memo[id];
    const Node& node = nodes[id];
    Expansion e;
    switch (node.kind) {
      case NodeKind::Literal:
        if (node.negated) throw Error(ErrorKind::NonMonotone, "cannot expand a negated literal");
        [[fallthrough]];
      case NodeKind::Input: {
        Dense d(n, 0);
        d[node.var] = 1;
        if (!budget.max_degree || *budget.max_degree >= 1) e[d] = 1;
        break;
      }
      case NodeKind::Const: {
        if (!is_integral(node.value)) throw Error(ErrorKind::DomainError, "non-integral constant");
        if (node.value != 0) e[Dense(n, 0)] = numerator(node.value);
        break;
      }
      case NodeKind::Add: {
        e = expand(node.lhs);
        for (const auto& [mono, coeff] : expand(node.rhs)) e[mono] += coeff;
        break;
      }
      case NodeKind::Mul: {
        const Expansion& left = expand(node.lhs);
        const Expansion& right = expand(node.rhs);
        for (const auto& [m1, c1] : left) {
          for (const auto& [m2, c2] : right) {
            Dense prod(n);
            for (std::uint32_t i = 0; i < n; ++i) prod[i] = m1[i] + m2[i];
            if (budget.max_degree && total_degree(prod) > *budget.max_degree) continue;
            e[prod] += c1 * c2;
          }
          if (e.size() > budget.max_terms) {
            throw Error(ErrorKind::BudgetExceeded, "expansion exceeds " + std::to_string(budget.max_terms) + " terms");
          }
        }
        break;
      }
    }
    if (e.size() > budget.max_terms) {
      throw Error(ErrorKind::BudgetExceeded, "expansion exceeds " + std::to_string(budget.max_terms) + " terms");
    }
    memo[id] = std::move(e);
    return *memo[id];
  };

  FormalPolynomial out(n);
  for (const auto& [mono, coeff] : expand(c.output())) out.add_term(ExpVec::from_dense(mono), coeff);
  return out;
}

// ---------------------------------------------------------------------------
// Grid identity testing

std::vector<std::uint64_t> individual_degree_bounds(const Circuit& c) {
  require_valid(c);
  const auto& nodes = c.nodes();
  const auto n = c.num_vars();
  std::vector<std::vector<std::uint64_t>> deg(nodes.size());
  auto sat_add = [](std::uint64_t a, std::uint64_t b) { return a > UINT64_MAX - b ? UINT64_MAX : a + b; };
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Node& node = nodes[i];
    deg[i].assign(n, 0);
    switch (node.kind) {
      case NodeKind::Input:
      case NodeKind::Literal: deg[i][node.var] = 1; break;
      case NodeKind::Const: break;
      case NodeKind::Add:
        for (std::uint32_t v = 0; v < n; ++v) deg[i][v] = std::max(deg[node.lhs][v], deg[node.rhs][v]);
        break;
      case NodeKind::Mul:
        for (std::uint32_t v = 0; v < n; ++v) deg[i][v] = sat_add(deg[node.lhs][v], deg[node.rhs][v]);
        break;
    }
  }
  std::vector<std::uint64_t> out(n, 0);
  for (NodeId o : c.outputs()) {
    for (std::uint32_t v = 0; v < n; ++v) out[v] = std::max(out[v], deg[o][v]);
  }
  return out;
}

std::uint64_t certified_degree_bound(const Circuit& c) {
  const auto b = individual_degree_bounds(c);
  return b.empty() ? 0 : *std::max_element(b.begin(), b.end());
}

std::uint64_t grid_point_count(const std::vector<std::uint64_t>& per_var_bounds) {
  std::uint64_t total = 1;
  for (auto d : per_var_bounds) {
    const auto side = d == UINT64_MAX ? UINT64_MAX : d + 1;
    if (total > UINT64_MAX / side) return UINT64_MAX;
    total *= side;
  }
  return total;
}

namespace {

void require_monotone_arithmetic(const Circuit& c) {
  require_valid(c);
  if (!c.is_monotone()) throw Error(ErrorKind::NonMonotone, "grid identity test needs monotone circuits");
  for (const auto& node : c.nodes()) {
    if (node.kind == NodeKind::Const && node.value < 0) {
      throw Error(ErrorKind::DomainError, "negative constant");
    }
  }
}

bool grid_agree(const Circuit& c1, const Circuit& c2, const std::vector<std::uint64_t>& bounds,
                std::uint64_t budget) {
  const auto points = grid_point_count(bounds);
  if (points > budget) {
    throw Error(ErrorKind::BudgetExceeded,
                "grid has " + (points == UINT64_MAX ? std::string("too many") : std::to_string(points)) +
                    " points, budget " + std::to_string(budget));
  }
  const auto n = c1.num_vars();
  std::vector<std::int64_t> x(n, 0);
  std::vector<Rational> xr(n);
  for (std::uint64_t p = 0; p < points; ++p) {
    auto a = evaluate_int(c1, Semiring::Arithmetic, x);
    auto b = evaluate_int(c2, Semiring::Arithmetic, x);
    if (a && b) {
      if (*a != *b) return false;
    } else {
      for (std::uint32_t i = 0; i < n; ++i) xr[i] = x[i];
      if (evaluate(c1, Semiring::Arithmetic, xr) != evaluate(c2, Semiring::Arithmetic, xr)) return false;
    }
    for (std::uint32_t i = 0; i < n; ++i) {
      if (static_cast<std::uint64_t>(x[i]) < bounds[i]) {
        ++x[i];
        break;
      }
      x[i] = 0;
    }
  }
  return true;
}

}  // namespace

bool polynomial_identity_by_grid(const Circuit& c1, const Circuit& c2, std::uint64_t degree_bound,
                                 std::uint64_t budget) {
  require_monotone_arithmetic(c1);
  require_monotone_arithmetic(c2);
  if (c1.num_vars() != c2.num_vars()) throw Error(ErrorKind::ArityMismatch, "circuits differ in arity");
  return grid_agree(c1, c2, std::vector<std::uint64_t>(c1.num_vars(), degree_bound), budget);
}

bool polynomial_identity_by_grid(const Circuit& c1, const Circuit& c2) {
  require_monotone_arithmetic(c1);
  require_monotone_arithmetic(c2);
  if (c1.num_vars() != c2.num_vars()) throw Error(ErrorKind::ArityMismatch, "circuits differ in arity");
  auto b1 = individual_degree_bounds(c1);
  const auto b2 = individual_degree_bounds(c2);
  for (std::size_t i = 0; i < b1.size(); ++i) b1[i] = std::max(b1[i], b2[i]);
  return grid_agree(c1, c2, b1, 10'000'000);
}

// ---------------------------------------------------------------------------

std::string print_polynomial(const FormalPolynomial& p) {
  std::vector<std::pair<ExpVec, BigInt>> terms(p.terms().begin(), p.terms().end());
  // Lexicographic on dense vectors: the first differing variable decides,
  // larger exponent first.
  auto lex_greater = [](const ExpVec& a, const ExpVec& b) {
    const auto ea = a.entries();
    const auto eb = b.entries();
    std::size_t i = 0;
    while (i < ea.size() && i < eb.size()) {
      if (ea[i].first != eb[i].first) return ea[i].first < eb[i].first;
      if (ea[i].second != eb[i].second) return ea[i].second > eb[i].second;
      ++i;
    }
    return i < ea.size() && i == eb.size();
  };
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) { return lex_greater(a.first, b.first); });
  std::ostringstream out;
  for (const auto& [v, c] : terms) out << c << ' ' << format_monomial(v) << '\n';
  return out.str();
}

}  // namespace sck
