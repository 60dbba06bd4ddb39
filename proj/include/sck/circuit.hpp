#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sck/error.hpp"
#include "sck/numeric.hpp"
#include "sck/semiring.hpp"

namespace sck {

using NodeId = std::uint32_t;

enum class NodeKind : std::uint8_t { Input, Const, Literal, Add, Mul };

/// One node of a circuit DAG. Only the fields relevant to `kind` are
/// meaningful; the rest keep their defaults so nodes compare structurally.
struct Node {
  NodeKind kind = NodeKind::Input;
  std::uint32_t var = 0;
  bool negated = false;
  Rational value{0};
  NodeId lhs = 0;
  NodeId rhs = 0;

  bool is_gate() const { return kind == NodeKind::Add || kind == NodeKind::Mul; }
  bool is_leaf() const { return !is_gate(); }

  friend bool operator==(const Node&, const Node&) = default;
};

/// Semiring-generic circuit with fan-in-2 gates. Nodes are append-only:
/// ids are dense and stable, so transformations build new circuits rather
/// than editing existing nodes.
class Circuit {
 public:
  explicit Circuit(std::uint32_t num_vars = 0, Semiring semiring = Semiring::Boolean)
      : num_vars_(num_vars), semiring_(semiring) {}

  NodeId input(std::uint32_t var);
  NodeId constant(const Rational& value);
  NodeId literal(std::uint32_t var, bool negated);
  NodeId add(NodeId lhs, NodeId rhs);
  NodeId mul(NodeId lhs, NodeId rhs);
  NodeId gate(NodeKind op, NodeId lhs, NodeId rhs);

  /// Appends a node without any checking. Used by the parser and by tests
  /// that need malformed circuits; `validate` reports what is wrong.
  NodeId push_unchecked(const Node& node);

  void set_outputs(std::vector<NodeId> outputs) { outputs_ = std::move(outputs); }
  void add_output(NodeId id) { outputs_.push_back(id); }

  std::uint32_t num_vars() const { return num_vars_; }
  Semiring semiring() const { return semiring_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& node(NodeId id) const { return nodes_.at(id); }
  std::size_t node_count() const { return nodes_.size(); }
  const std::vector<NodeId>& outputs() const { return outputs_; }
  NodeId output() const;

  /// Number of gates, i.e. the circuit size.
  std::size_t size() const;
  std::size_t count(NodeKind kind) const;

  bool is_monotone() const;
  bool is_constant_free() const;

  /// Optional structural claims checked by `validate`.
  std::optional<bool> claimed_monotone;
  std::optional<bool> claimed_constant_free;

  /// Same nodes and outputs, reinterpreted over another semiring.
  Circuit with_semiring(Semiring target) const;

  /// Nodes reachable from the outputs (marks indexed by node id).
  std::vector<bool> reachable() const;

  friend bool operator==(const Circuit& a, const Circuit& b) {
    return a.num_vars_ == b.num_vars_ && a.semiring_ == b.semiring_ && a.nodes_ == b.nodes_ &&
           a.outputs_ == b.outputs_;
  }

 private:
  void check_operand(NodeId id) const;

  std::uint32_t num_vars_;
  Semiring semiring_;
  std::vector<Node> nodes_;
  std::vector<NodeId> outputs_;
};

enum class DiagnosticKind {
  CycleOrForwardRef,
  VariableOutOfRange,
  NonMonotoneLiteral,
  ConstantPresent,
  NegativeConstant,
  NoOutputs,
  OutputOutOfRange,
};

std::string_view to_string(DiagnosticKind kind);

struct Diagnostic {
  DiagnosticKind kind;
  NodeId node;
  std::string message;
};

/// Empty iff every structural invariant holds.
std::vector<Diagnostic> validate(const Circuit& c);

/// Throws InvalidCircuit carrying the first diagnostic.
void require_valid(const Circuit& c);

/// Bottom-up evaluation of the first output.
Rational evaluate(const Circuit& c, Semiring s, std::span<const Rational> x);
inline Rational evaluate(const Circuit& c, std::span<const Rational> x) {
  return evaluate(c, c.semiring(), x);
}
std::vector<Rational> evaluate_outputs(const Circuit& c, Semiring s, std::span<const Rational> x);

/// Integer fast path for grid sweeps. Constants must be integral; returns
/// nullopt on signed overflow so callers can fall back to `evaluate`.
std::optional<std::int64_t> evaluate_int(const Circuit& c, Semiring s,
                                         std::span<const std::int64_t> x);

/// Reinterprets a monotone constant-free circuit over `target`.
Circuit retarget(const Circuit& c, Semiring target);

/// Copy keeping only nodes reachable from the outputs, preserving order.
Circuit compact(const Circuit& c);

/// Longest number of multiplication gates on an input-output path.
std::size_t mul_depth(const Circuit& c);

}  // namespace sck
