#include "sck/transforms.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace sck {

// ---------------------------------------------------------------------------
// Constant folding

namespace {

struct Folded {
  bool is_const = false;
  bool value = false;
  NodeId id = 0;
};

}  // namespace

ConstantFolding fold_constants(const Circuit& c) {
  require_valid(c);
  const auto& nodes = c.nodes();
  const auto mark = c.reachable();
  Circuit out(c.num_vars(), Semiring::Boolean);
  std::vector<Folded> val(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!mark[i]) continue;
    const Node& node = nodes[i];
    Folded& v = val[i];
    switch (node.kind) {
      case NodeKind::Input:
      case NodeKind::Literal: v.id = out.push_unchecked(node); break;
      case NodeKind::Const:
        if (node.value != 0 && node.value != 1) {
          throw Error(ErrorKind::DomainError, "Boolean constants must be 0 or 1");
        }
        v.is_const = true;
        v.value = node.value == 1;
        break;
      case NodeKind::Add:
      case NodeKind::Mul: {
        const Folded& l = val[node.lhs];
        const Folded& r = val[node.rhs];
        // absorbing element: 1 for OR, 0 for AND
        const bool absorbing = node.kind == NodeKind::Add;
        if ((l.is_const && l.value == absorbing) || (r.is_const && r.value == absorbing)) {
          v.is_const = true;
          v.value = absorbing;
        } else if (l.is_const) {
          v = r;
        } else if (r.is_const) {
          v = l;
        } else {
          v.id = out.gate(node.kind, l.id, r.id);
        }
        break;
      }
    }
  }
  ConstantFolding result{Circuit(c.num_vars(), Semiring::Boolean), std::nullopt};
  const Folded& first = val[c.output()];
  if (first.is_const) {
    result.constant = first.value;
    result.circuit.add_output(result.circuit.constant(first.value ? 1 : 0));
    return result;
  }
  std::vector<NodeId> outs;
  for (NodeId o : c.outputs()) {
    outs.push_back(val[o].is_const ? out.constant(val[o].value ? 1 : 0) : val[o].id);
  }
  out.set_outputs(std::move(outs));
  result.circuit = compact(out);
  return result;
}

Circuit eliminate_constants(const Circuit& c) {
  auto folded = fold_constants(c);
  if (folded.constant || !folded.circuit.is_constant_free()) {
    throw Error(ErrorKind::ConstantFunction, "circuit folds to a constant");
  }
  return std::move(folded.circuit);
}

// ---------------------------------------------------------------------------
// Homogenization

HomogeneousParts homogeneous_parts(const Circuit& c, std::uint32_t r) {
  require_valid(c);
  const auto& nodes = c.nodes();
  const auto mark = c.reachable();
  Circuit out(c.num_vars(), Semiring::Arithmetic);
  using Copies = std::vector<std::optional<NodeId>>;
  std::vector<Copies> copies(nodes.size());

  auto sum = [&](std::optional<NodeId> a, std::optional<NodeId> b) -> std::optional<NodeId> {
    if (!a) return b;
    if (!b) return a;
    return out.add(*a, *b);
  };

  for (std::size_t v = 0; v < nodes.size(); ++v) {
    if (!mark[v]) continue;
    const Node& node = nodes[v];
    Copies& cp = copies[v];
    cp.assign(r + 1, std::nullopt);
    switch (node.kind) {
      case NodeKind::Literal:
        if (node.negated) throw Error(ErrorKind::NonMonotone, "negated literal");
        [[fallthrough]];
      case NodeKind::Input:
        if (r >= 1) cp[1] = out.input(node.var);
        break;
      case NodeKind::Const:
        if (node.value != 0) cp[0] = out.constant(node.value);
        break;
      case NodeKind::Add:
        for (std::uint32_t i = 0; i <= r; ++i) cp[i] = sum(copies[node.lhs][i], copies[node.rhs][i]);
        break;
      case NodeKind::Mul:
        for (std::uint32_t i = 0; i <= r; ++i) {
          std::optional<NodeId> acc;
          for (std::uint32_t j = 0; j <= i; ++j) {
            const auto& q = copies[node.lhs][j];
            const auto& s = copies[node.rhs][i - j];
            if (q && s) acc = sum(acc, out.mul(*q, *s));
          }
          cp[i] = acc;
        }
        break;
    }
  }

  HomogeneousParts result{Circuit(c.num_vars(), Semiring::Arithmetic), {}};
  result.output_of_degree.assign(r + 1, std::nullopt);
  std::vector<NodeId> outs;
  for (std::uint32_t i = 0; i <= r; ++i) {
    if (const auto& id = copies[c.output()][i]) {
      result.output_of_degree[i] = outs.size();
      outs.push_back(*id);
    }
  }
  out.set_outputs(std::move(outs));
  result.circuit = compact(out);
  return result;
}

Circuit sum_of_parts(const HomogeneousParts& parts) {
  Circuit out = parts.circuit;
  const auto& outs = parts.circuit.outputs();
  if (outs.empty()) {
    out.set_outputs({out.constant(0)});
    return out;
  }
  NodeId acc = outs.front();
  for (std::size_t i = 1; i < outs.size(); ++i) acc = out.add(acc, outs[i]);
  out.set_outputs({acc});
  return compact(out);
}

Circuit degree_reduce_read_k(const Circuit& c, std::uint32_t k, const BooleanFunction& f,
                             const ProductionCaps& caps) {
  if (!f.is_monotone()) throw Error(ErrorKind::NonMonotone, "function is not monotone");
  if (f.is_constant()) throw Error(ErrorKind::ConstantFunction, "function is constant");
  Circuit single = c;
  single.set_outputs({c.output()});
  const Circuit base = single.is_constant_free() ? compact(single) : eliminate_constants(single);
  const auto cls = classify_read_k(base, f, caps);
  if (!cls.semantic_k || *cls.semantic_k > k) {
    throw Error(ErrorKind::NotReadK, "circuit is not read-" + std::to_string(k));
  }
  const auto degree = k * max_prime_implicant_width(f);
  const auto parts = homogeneous_parts(retarget(base, Semiring::Arithmetic), degree);
  return retarget(sum_of_parts(parts), Semiring::Boolean);
}

// ---------------------------------------------------------------------------
// Envelope

Circuit lower_envelope_circuit(const Circuit& c) {
  require_valid(c);
  if (!c.is_constant_free()) throw Error(ErrorKind::HasConstants, "envelope extraction needs a constant-free circuit");
  if (!c.is_monotone()) throw Error(ErrorKind::NonMonotone, "negated literal");
  const auto& nodes = c.nodes();
  const auto mark = c.reachable();
  Circuit out(c.num_vars(), c.semiring());
  std::vector<std::uint64_t> mdeg(nodes.size(), 0);
  std::vector<NodeId> rep(nodes.size(), 0);
  for (std::size_t v = 0; v < nodes.size(); ++v) {
    if (!mark[v]) continue;
    const Node& node = nodes[v];
    if (node.is_leaf()) {
      mdeg[v] = 1;
      rep[v] = out.push_unchecked(node);
      continue;
    }
    const auto dl = mdeg[node.lhs];
    const auto dr = mdeg[node.rhs];
    if (node.kind == NodeKind::Mul) {
      mdeg[v] = dl + dr;
      rep[v] = out.mul(rep[node.lhs], rep[node.rhs]);
    } else if (dl == dr) {
      mdeg[v] = dl;
      rep[v] = out.add(rep[node.lhs], rep[node.rhs]);
    } else {
      const NodeId low = dl < dr ? node.lhs : node.rhs;
      mdeg[v] = mdeg[low];
      rep[v] = rep[low];
    }
  }
  std::vector<NodeId> outs;
  for (NodeId o : c.outputs()) outs.push_back(rep[o]);
  out.set_outputs(std::move(outs));
  return compact(out);
}

// ---------------------------------------------------------------------------
// Boolean constructions

Circuit positive_version(const Circuit& c) {
  require_valid(c);
  Circuit replaced(c.num_vars(), Semiring::Boolean);
  for (const Node& node : c.nodes()) {
    if (node.kind == NodeKind::Literal && node.negated) {
      Node one;
      one.kind = NodeKind::Const;
      one.value = 1;
      replaced.push_unchecked(one);
    } else {
      replaced.push_unchecked(node);
    }
  }
  replaced.set_outputs(c.outputs());
  return fold_constants(replaced).circuit;
}

Circuit or_of_prime_implicants(const BooleanFunction& f) {
  if (!f.is_monotone()) throw Error(ErrorKind::NonMonotone, "function is not monotone");
  if (f.is_constant()) throw Error(ErrorKind::ConstantFunction, "function is constant");
  Circuit out(f.arity(), Semiring::Boolean);
  std::vector<std::optional<NodeId>> inputs(f.arity());
  auto input = [&](VarIndex v) {
    if (!inputs[v]) inputs[v] = out.input(v);
    return *inputs[v];
  };
  std::optional<NodeId> disjunction;
  for (const auto& a : lowest_ones(f)) {
    std::optional<NodeId> term;
    for (const auto& [v, d] : a.entries()) term = term ? out.mul(*term, input(v)) : input(v);
    disjunction = disjunction ? out.add(*disjunction, *term) : *term;
  }
  out.set_outputs({*disjunction});
  return out;
}

Circuit arithmetic_to_read1(const Circuit& c, const BooleanFunction& f, const ProductionCaps& caps) {
  require_valid(c);
  if (c.num_vars() != f.arity()) throw Error(ErrorKind::ArityMismatch, "circuit and function differ in arity");
  if (!c.is_constant_free()) throw Error(ErrorKind::HasConstants, "circuit has constants");
  if (!(produced_exponent_set(c, caps) == lowest_ones(f))) {
    throw Error(ErrorKind::ExponentSetNotLowF, "produced exponent set differs from the lowest ones of f");
  }
  Circuit single = c;
  single.set_outputs({c.output()});
  return retarget(single, Semiring::Boolean);
}

// ---------------------------------------------------------------------------
// Decomposition

namespace {

FormalPolynomial with_arity(const FormalPolynomial& p, std::uint32_t arity) {
  FormalPolynomial out(arity);
  for (const auto& [v, c] : p.terms()) out.add_term(v, c);
  return out;
}

std::int64_t degree_or_minus_one(const FormalPolynomial& p) {
  return p.empty() ? -1 : static_cast<std::int64_t>(p.degree());
}

}  // namespace

std::vector<ProductPair> decompose(const Circuit& c, const ProductionCaps& caps) {
  require_valid(c);
  const auto n = c.num_vars();
  const auto target = produced_polynomial(c, caps);
  if (target.empty()) throw Error(ErrorKind::DegreeTooSmall, "circuit produces the zero polynomial");
  if (!target.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, "produced polynomial is not homogeneous");
  const auto m = static_cast<std::int64_t>(target.degree());
  if (m < 3) throw Error(ErrorKind::DegreeTooSmall, "degree must be at least 3");

  // Same nodes over one extra variable Y = x_n, used to mark the split gate.
  Circuit wide(n + 1, Semiring::Arithmetic);
  for (const Node& node : c.nodes()) wide.push_unchecked(node);
  wide.set_outputs({c.output()});
  const NodeId out = c.output();
  const VarIndex y = n;

  ProductionOverrides zeroed;
  std::vector<ProductPair> pairs;
  while (true) {
    const auto polys = produced_polynomials_at_nodes(wide, caps, zeroed);
    if (polys[out].empty()) break;
    NodeId v = out;
    while (3 * degree_or_minus_one(polys[v]) > 2 * m) {
      const Node& node = wide.node(v);
      if (!node.is_gate()) throw Error(ErrorKind::Precondition, "degree walk reached a leaf");
      v = degree_or_minus_one(polys[node.rhs]) > degree_or_minus_one(polys[node.lhs]) ? node.rhs : node.lhs;
    }
    if (3 * degree_or_minus_one(polys[v]) < m) throw Error(ErrorKind::Precondition, "degree walk overshot");

    const FormalPolynomial& g = polys[v];
    auto marked = zeroed;
    marked[v] = FormalPolynomial::monomial(n + 1, ExpVec::unit(y));
    const auto q = produced_polynomials(wide, caps, marked).front();

    // q(x, Y) = q_0(x) + sum_d q_d(x) Y^d, so the target equals
    // q_0 + g * sum_d q_d g^(d-1).
    std::vector<FormalPolynomial> powers{FormalPolynomial::monomial(n + 1, ExpVec())};
    FormalPolynomial h(n + 1);
    for (const auto& [mono, coeff] : q.terms()) {
      const auto d = mono[y];
      if (d == 0) continue;
      while (powers.size() < d) powers.push_back(multiply(powers.back(), g, caps.max_set_size));
      std::vector<ExpVec::Entry> rest;
      for (const auto& e : mono.entries()) {
        if (e.first != y) rest.push_back(e);
      }
      const auto term = FormalPolynomial::monomial(n + 1, ExpVec::from_entries(std::move(rest)), coeff);
      h += multiply(term, powers[d - 1], caps.max_set_size);
    }
    pairs.push_back({with_arity(g, n), with_arity(h, n), v});
    zeroed[v] = std::nullopt;
    if (pairs.size() > c.size()) throw Error(ErrorKind::Precondition, "decomposition did not terminate");
  }
  return pairs;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

MatchingBoundReport matching_lower_bound_report(const Circuit& c, std::uint32_t n, const ProductionCaps& caps) {
  if (n < 1) throw Error(ErrorKind::Precondition, "n must be positive");
  if (n > 5) throw Error(ErrorKind::BudgetExceeded, "matching report is limited to n <= 5");
  MatchingBoundReport report;
  report.n = n;
  report.circuit_size = c.size();
  const auto target = produced_polynomial(c, caps);
  report.target_monomials = target.size();

  std::vector<ExpVec> matchings;
  std::vector<VarIndex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    VarSet cells;
    for (std::uint32_t i = 0; i < n; ++i) cells.push_back(i * n + perm[i]);
    std::sort(cells.begin(), cells.end());
    matchings.push_back(ExpVec::from_support(cells));
  } while (std::next_permutation(perm.begin(), perm.end()));
  report.similar_to_permanent =
      c.num_vars() == n * n && target.exponents() == ExpVecSet(n * n, std::move(matchings));

  const auto pairs = decompose(c, caps);
  report.pairs = pairs.size();
  const auto exps = target.exponents();
  report.products_inside_target = true;
  for (const auto& p : pairs) {
    const auto prod = multiply(p.g, p.h, caps.max_set_size);
    report.max_product_monomials = std::max(report.max_product_monomials, prod.size());
    for (const auto& [v, coeff] : prod.terms()) {
      if (!exps.contains(v)) report.products_inside_target = false;
    }
  }
  if (report.max_product_monomials > 0) {
    report.implied_gates = (report.target_monomials + report.max_product_monomials - 1) / report.max_product_monomials;
  }
  report.analytic_bound = binomial(n, (n + 2) / 3);
  return report;
}

}  // namespace sck
