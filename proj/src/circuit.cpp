#include "sck/circuit.hpp"

#include <algorithm>
#include <string>

namespace sck {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::ArityTooLarge: return "ArityTooLarge";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::ConstantFunction: return "ConstantFunction";
    case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorKind::Divisibility: return "Divisibility";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::ExponentSetNotLowF: return "ExponentSetNotLowF";
    case ErrorKind::HasConstants: return "HasConstants";
    case ErrorKind::InfeasibleParameters: return "InfeasibleParameters";
    case ErrorKind::InvalidAntichain: return "InvalidAntichain";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvalidCircuit: return "InvalidCircuit";
    case ErrorKind::InvalidFamily: return "InvalidFamily";
    case ErrorKind::NonMonotone: return "NonMonotone";
    case ErrorKind::NotApproximating: return "NotApproximating";
    case ErrorKind::NotComputingF: return "NotComputingF";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::NotReadK: return "NotReadK";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Precondition: return "Precondition";
    case ErrorKind::SizeOverflow: return "SizeOverflow";
  }
  return "Unknown";
}

std::string_view to_string(Semiring s) {
  switch (s) {
    case Semiring::Boolean: return "boolean";
    case Semiring::Arithmetic: return "arithmetic";
    case Semiring::Tropical: return "tropical";
  }
  return "unknown";
}

std::optional<Semiring> parse_semiring(std::string_view text) {
  if (text == "boolean") return Semiring::Boolean;
  if (text == "arithmetic") return Semiring::Arithmetic;
  if (text == "tropical") return Semiring::Tropical;
  return std::nullopt;
}

Rational semiring_one(Semiring s) { return s == Semiring::Tropical ? Rational(0) : Rational(1); }

Rational semiring_add(Semiring s, const Rational& a, const Rational& b) {
  switch (s) {
    case Semiring::Boolean: return (a != 0 || b != 0) ? Rational(1) : Rational(0);
    case Semiring::Arithmetic: return a + b;
    case Semiring::Tropical: return std::min(a, b);
  }
  return a;
}

Rational semiring_mul(Semiring s, const Rational& a, const Rational& b) {
  switch (s) {
    case Semiring::Boolean: return (a != 0 && b != 0) ? Rational(1) : Rational(0);
    case Semiring::Arithmetic: return a * b;
    case Semiring::Tropical: return a + b;
  }
  return a;
}

// ---------------------------------------------------------------------------
// Circuit construction

NodeId Circuit::push_unchecked(const Node& node) {
  nodes_.push_back(node);
  return static_cast<NodeId>(nodes_.size() - 1);
}

NodeId Circuit::input(std::uint32_t var) {
  if (var >= num_vars_) {
    throw Error(ErrorKind::InvalidArgument,
                "variable " + std::to_string(var) + " out of range for arity " + std::to_string(num_vars_));
  }
  Node n;
  n.kind = NodeKind::Input;
  n.var = var;
  return push_unchecked(n);
}

NodeId Circuit::constant(const Rational& value) {
  if (value < 0) throw Error(ErrorKind::DomainError, "constants must be nonnegative");
  Node n;
  n.kind = NodeKind::Const;
  n.value = value;
  return push_unchecked(n);
}

NodeId Circuit::literal(std::uint32_t var, bool negated) {
  if (var >= num_vars_) {
    throw Error(ErrorKind::InvalidArgument,
                "variable " + std::to_string(var) + " out of range for arity " + std::to_string(num_vars_));
  }
  Node n;
  n.kind = NodeKind::Literal;
  n.var = var;
  n.negated = negated;
  return push_unchecked(n);
}

void Circuit::check_operand(NodeId id) const {
  if (id >= nodes_.size()) {
    throw Error(ErrorKind::InvalidArgument, "operand " + std::to_string(id) + " does not exist yet");
  }
}

NodeId Circuit::gate(NodeKind op, NodeId lhs, NodeId rhs) {
  if (op != NodeKind::Add && op != NodeKind::Mul) {
    throw Error(ErrorKind::InvalidArgument, "gate kind must be add or mul");
  }
  check_operand(lhs);
  check_operand(rhs);
  Node n;
  n.kind = op;
  n.lhs = lhs;
  n.rhs = rhs;
  return push_unchecked(n);
}

NodeId Circuit::add(NodeId lhs, NodeId rhs) { return gate(NodeKind::Add, lhs, rhs); }
NodeId Circuit::mul(NodeId lhs, NodeId rhs) { return gate(NodeKind::Mul, lhs, rhs); }

NodeId Circuit::output() const {
  if (outputs_.empty()) throw Error(ErrorKind::InvalidCircuit, "circuit has no outputs");
  return outputs_.front();
}

std::size_t Circuit::size() const {
  return static_cast<std::size_t>(
      std::count_if(nodes_.begin(), nodes_.end(), [](const Node& n) { return n.is_gate(); }));
}

std::size_t Circuit::count(NodeKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(nodes_.begin(), nodes_.end(), [kind](const Node& n) { return n.kind == kind; }));
}

bool Circuit::is_monotone() const {
  return std::none_of(nodes_.begin(), nodes_.end(),
                      [](const Node& n) { return n.kind == NodeKind::Literal && n.negated; });
}

bool Circuit::is_constant_free() const {
  return std::none_of(nodes_.begin(), nodes_.end(), [](const Node& n) { return n.kind == NodeKind::Const; });
}

Circuit Circuit::with_semiring(Semiring target) const {
  Circuit out = *this;
  out.semiring_ = target;
  return out;
}

std::vector<bool> Circuit::reachable() const {
  std::vector<bool> mark(nodes_.size(), false);
  for (NodeId o : outputs_) {
    if (o < nodes_.size()) mark[o] = true;
  }
  for (std::size_t i = nodes_.size(); i-- > 0;) {
    if (!mark[i] || !nodes_[i].is_gate()) continue;
    if (nodes_[i].lhs < i) mark[nodes_[i].lhs] = true;
    if (nodes_[i].rhs < i) mark[nodes_[i].rhs] = true;
  }
  return mark;
}

// ---------------------------------------------------------------------------
// Validation

std::string_view to_string(DiagnosticKind kind) {
  switch (kind) {
    case DiagnosticKind::CycleOrForwardRef: return "CycleOrForwardRef";
    case DiagnosticKind::VariableOutOfRange: return "VariableOutOfRange";
    case DiagnosticKind::NonMonotoneLiteral: return "NonMonotoneLiteral";
    case DiagnosticKind::ConstantPresent: return "ConstantPresent";
    case DiagnosticKind::NegativeConstant: return "NegativeConstant";
    case DiagnosticKind::NoOutputs: return "NoOutputs";
    case DiagnosticKind::OutputOutOfRange: return "OutputOutOfRange";
  }
  return "Unknown";
}

std::vector<Diagnostic> validate(const Circuit& c) {
  std::vector<Diagnostic> out;
  const auto& nodes = c.nodes();
  for (NodeId i = 0; i < nodes.size(); ++i) {
    const Node& n = nodes[i];
    switch (n.kind) {
      case NodeKind::Input:
      case NodeKind::Literal:
        if (n.var >= c.num_vars()) {
          out.push_back({DiagnosticKind::VariableOutOfRange, i,
                         "variable " + std::to_string(n.var) + " >= arity " + std::to_string(c.num_vars())});
        }
        if (n.kind == NodeKind::Literal && n.negated && c.claimed_monotone.value_or(false)) {
          out.push_back({DiagnosticKind::NonMonotoneLiteral, i, "negated literal in a circuit claimed monotone"});
        }
        break;
      case NodeKind::Const:
        if (n.value < 0) out.push_back({DiagnosticKind::NegativeConstant, i, "negative constant"});
        if (c.claimed_constant_free.value_or(false)) {
          out.push_back({DiagnosticKind::ConstantPresent, i, "constant in a circuit claimed constant-free"});
        }
        break;
      case NodeKind::Add:
      case NodeKind::Mul:
        if (n.lhs >= i || n.rhs >= i) {
          out.push_back({DiagnosticKind::CycleOrForwardRef, i,
                         "operand " + std::to_string(std::max(n.lhs, n.rhs)) + " does not precede gate"});
        }
        break;
    }
  }
  if (c.outputs().empty()) out.push_back({DiagnosticKind::NoOutputs, 0, "no output declared"});
  for (NodeId o : c.outputs()) {
    if (o >= nodes.size()) out.push_back({DiagnosticKind::OutputOutOfRange, o, "output refers to a missing node"});
  }
  return out;
}

void require_valid(const Circuit& c) {
  auto diags = validate(c);
  if (!diags.empty()) {
    const auto& d = diags.front();
    throw Error(ErrorKind::InvalidCircuit,
                std::string(to_string(d.kind)) + " at node " + std::to_string(d.node) + ": " + d.message);
  }
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

void check_assignment(const Circuit& c, Semiring s, std::size_t size) {
  if (size != c.num_vars()) {
    throw Error(ErrorKind::ArityMismatch, "assignment has " + std::to_string(size) + " values, circuit has " +
                                              std::to_string(c.num_vars()) + " variables");
  }
  (void)s;
}

std::vector<Rational> evaluate_all(const Circuit& c, Semiring s, std::span<const Rational> x) {
  require_valid(c);
  check_assignment(c, s, x.size());
  for (const auto& v : x) {
    if (v < 0) throw Error(ErrorKind::DomainError, "assignment values must be nonnegative");
    if (s == Semiring::Boolean && v != 0 && v != 1) {
      throw Error(ErrorKind::DomainError, "Boolean evaluation needs 0/1 inputs");
    }
  }
  const auto mark = c.reachable();
  const auto& nodes = c.nodes();
  std::vector<Rational> val(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!mark[i]) continue;
    const Node& n = nodes[i];
    switch (n.kind) {
      case NodeKind::Input: val[i] = x[n.var]; break;
      case NodeKind::Const:
        if (s == Semiring::Boolean && n.value != 0 && n.value != 1) {
          throw Error(ErrorKind::DomainError, "Boolean evaluation with non-0/1 constant");
        }
        val[i] = n.value;
        break;
      case NodeKind::Literal:
        if (!n.negated) {
          val[i] = x[n.var];
        } else if (s == Semiring::Boolean) {
          val[i] = 1 - x[n.var];
        } else {
          throw Error(ErrorKind::DomainError, "negated literal outside the Boolean semiring");
        }
        break;
      case NodeKind::Add: val[i] = semiring_add(s, val[n.lhs], val[n.rhs]); break;
      case NodeKind::Mul: val[i] = semiring_mul(s, val[n.lhs], val[n.rhs]); break;
    }
  }
  return val;
}

}  // namespace

Rational evaluate(const Circuit& c, Semiring s, std::span<const Rational> x) {
  auto val = evaluate_all(c, s, x);
  return val[c.output()];
}

std::vector<Rational> evaluate_outputs(const Circuit& c, Semiring s, std::span<const Rational> x) {
  auto val = evaluate_all(c, s, x);
  std::vector<Rational> out;
  out.reserve(c.outputs().size());
  for (NodeId o : c.outputs()) out.push_back(val[o]);
  return out;
}

std::optional<std::int64_t> evaluate_int(const Circuit& c, Semiring s, std::span<const std::int64_t> x) {
  if (x.size() != c.num_vars()) {
    throw Error(ErrorKind::ArityMismatch, "assignment arity does not match circuit");
  }
  const auto& nodes = c.nodes();
  std::vector<std::int64_t> val(nodes.size(), 0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Node& n = nodes[i];
    switch (n.kind) {
      case NodeKind::Input: val[i] = x[n.var]; break;
      case NodeKind::Const:
        if (!is_integral(n.value) || numerator(n.value) > INT64_MAX) return std::nullopt;
        val[i] = static_cast<std::int64_t>(numerator(n.value));
        break;
      case NodeKind::Literal:
        if (!n.negated) {
          val[i] = x[n.var];
        } else if (s == Semiring::Boolean) {
          val[i] = 1 - x[n.var];
        } else {
          throw Error(ErrorKind::DomainError, "negated literal outside the Boolean semiring");
        }
        break;
      case NodeKind::Add: {
        const auto a = val[n.lhs];
        const auto b = val[n.rhs];
        if (s == Semiring::Boolean) {
          val[i] = (a != 0 || b != 0) ? 1 : 0;
        } else if (s == Semiring::Tropical) {
          val[i] = std::min(a, b);
        } else if (__builtin_add_overflow(a, b, &val[i])) {
          return std::nullopt;
        }
        break;
      }
      case NodeKind::Mul: {
        const auto a = val[n.lhs];
        const auto b = val[n.rhs];
        if (s == Semiring::Boolean) {
          val[i] = (a != 0 && b != 0) ? 1 : 0;
        } else if (s == Semiring::Tropical) {
          if (__builtin_add_overflow(a, b, &val[i])) return std::nullopt;
        } else if (__builtin_mul_overflow(a, b, &val[i])) {
          return std::nullopt;
        }
        break;
      }
    }
  }
  return val[c.output()];
}

// ---------------------------------------------------------------------------
// Structural rewrites

Circuit retarget(const Circuit& c, Semiring target) {
  require_valid(c);
  if (!c.is_constant_free()) {
    throw Error(ErrorKind::HasConstants, "retarget refuses circuits with constant inputs");
  }
  if (!c.is_monotone()) throw Error(ErrorKind::NonMonotone, "retarget needs a monotone circuit");
  return c.with_semiring(target);
}

Circuit compact(const Circuit& c) {
  const auto mark = c.reachable();
  const auto& nodes = c.nodes();
  Circuit out(c.num_vars(), c.semiring());
  out.claimed_monotone = c.claimed_monotone;
  out.claimed_constant_free = c.claimed_constant_free;
  std::vector<NodeId> remap(nodes.size(), 0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!mark[i]) continue;
    Node n = nodes[i];
    if (n.is_gate()) {
      n.lhs = remap[n.lhs];
      n.rhs = remap[n.rhs];
    }
    remap[i] = out.push_unchecked(n);
  }
  std::vector<NodeId> outs;
  for (NodeId o : c.outputs()) outs.push_back(remap[o]);
  out.set_outputs(std::move(outs));
  return out;
}

std::size_t mul_depth(const Circuit& c) {
  const auto& nodes = c.nodes();
  std::vector<std::size_t> depth(nodes.size(), 0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Node& n = nodes[i];
    if (!n.is_gate()) continue;
    depth[i] = std::max(depth[n.lhs], depth[n.rhs]) + (n.kind == NodeKind::Mul ? 1 : 0);
  }
  std::size_t best = 0;
  for (NodeId o : c.outputs()) best = std::max(best, depth.at(o));
  return best;
}

}  // namespace sck
