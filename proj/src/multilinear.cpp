#include "sck/multilinear.hpp"

#include <algorithm>

#include <boost/dynamic_bitset.hpp>

namespace sck {

bool is_semantically_multilinear(const Circuit& c, std::uint32_t cap) {
  const auto functions = compute_node_functions(c, cap);
  const auto mark = c.reachable();
  const auto& nodes = c.nodes();
  std::vector<std::optional<VarSet>> deps(nodes.size());
  auto dep = [&](NodeId id) -> const VarSet& {
    if (!deps[id]) deps[id] = depends_on(functions[id]);
    return *deps[id];
  };
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!mark[i] || nodes[i].kind != NodeKind::Mul) continue;
    const VarSet& l = dep(nodes[i].lhs);
    const VarSet& r = dep(nodes[i].rhs);
    VarSet common;
    std::set_intersection(l.begin(), l.end(), r.begin(), r.end(), std::back_inserter(common));
    if (!common.empty()) return false;
  }
  return true;
}

bool is_syntactically_multilinear(const Circuit& c) {
  require_valid(c);
  const auto& nodes = c.nodes();
  const auto mark = c.reachable();
  std::vector<boost::dynamic_bitset<>> vars(nodes.size(), boost::dynamic_bitset<>(c.num_vars()));
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!mark[i]) continue;
    const Node& node = nodes[i];
    switch (node.kind) {
      case NodeKind::Input:
      case NodeKind::Literal: vars[i].set(node.var); break;
      case NodeKind::Const: break;
      case NodeKind::Add:
      case NodeKind::Mul:
        if (node.kind == NodeKind::Mul && vars[node.lhs].intersects(vars[node.rhs])) return false;
        vars[i] = vars[node.lhs] | vars[node.rhs];
        break;
    }
  }
  return true;
}

TermSet produced_terms(const Circuit& c, std::size_t cap) {
  require_valid(c);
  const auto& nodes = c.nodes();
  const auto mark = c.reachable();
  std::vector<std::optional<TermSet>> terms(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!mark[i]) continue;
    const Node& node = nodes[i];
    TermSet t;
    switch (node.kind) {
      case NodeKind::Input: t.insert(Term{{node.var}, {}}); break;
      case NodeKind::Literal:
        t.insert(node.negated ? Term{{}, {node.var}} : Term{{node.var}, {}});
        break;
      case NodeKind::Const:
        if (node.value != 0 && node.value != 1) {
          throw Error(ErrorKind::DomainError, "Boolean constants must be 0 or 1");
        }
        if (node.value == 1) t.insert(Term{});
        break;
      case NodeKind::Add:
        t = *terms[node.lhs];
        t.insert(terms[node.rhs]->begin(), terms[node.rhs]->end());
        break;
      case NodeKind::Mul:
        for (const auto& a : *terms[node.lhs]) {
          for (const auto& b : *terms[node.rhs]) t.insert(a.conjoin(b));
          if (t.size() > cap) break;
        }
        break;
    }
    if (t.size() > cap) {
      throw Error(ErrorKind::CapExceeded, "term set at node " + std::to_string(i) + " exceeds " + std::to_string(cap));
    }
    terms[i] = std::move(t);
  }
  return *terms[c.output()];
}

bool impedes_zero_terms(const Circuit& c, const BooleanFunction& f, std::size_t cap) {
  if (c.num_vars() != f.arity()) throw Error(ErrorKind::ArityMismatch, "circuit and function differ in arity");
  if (!(compute_function(c) == f)) throw Error(ErrorKind::NotComputingF, "circuit does not compute the function");
  if (f(0)) throw Error(ErrorKind::Precondition, "the zero-term criterion needs f(0) = 0");
  const auto up = upward_closure(f);
  for (const auto& t : produced_terms(c, cap)) {
    if (!t.is_zero_term()) continue;
    std::uint64_t mask = 0;
    for (auto v : t.positives) mask |= std::uint64_t{1} << v;
    if (!up(mask)) return false;
  }
  return true;
}

}  // namespace sck
