#include "sck/circuit_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace sck {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& msg) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": " + msg);
}

std::uint32_t parse_u32(std::string_view word, std::size_t line_no) {
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size()) {
    fail(line_no, "expected a nonnegative integer, got '" + std::string(word) + "'");
  }
  return value;
}

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return false;
  }
  return true;
}

Rational parse_fraction(std::string_view word, std::size_t line_no) {
  const auto slash = word.find('/');
  std::string_view num = word.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : word.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den)) fail(line_no, "malformed constant '" + std::string(word) + "'");
  BigInt p{std::string(num)};
  BigInt q{std::string(den)};
  if (q == 0) fail(line_no, "zero denominator");
  return Rational(p, q);
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
  std::optional<Circuit> circuit;
  bool have_outputs = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    std::string_view line = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto words = split_words(line);
    if (words.empty()) continue;

    if (!circuit) {
      if (words.size() != 2 || words[0] != "vars") fail(line_no, "expected 'vars <n>' header");
      circuit.emplace(parse_u32(words[1], line_no));
      continue;
    }
    if (have_outputs) fail(line_no, "content after the output line");
    if (words[0] == "semiring") {
      if (words.size() != 2 || circuit->node_count() != 0) fail(line_no, "'semiring <tag>' must precede nodes");
      auto tag = parse_semiring(words[1]);
      if (!tag) fail(line_no, "unknown semiring '" + std::string(words[1]) + "'");
      *circuit = circuit->with_semiring(*tag);
      continue;
    }
    if (words[0] == "output") {
      if (words.size() < 2) fail(line_no, "output line needs at least one node id");
      std::vector<NodeId> outs;
      for (std::size_t i = 1; i < words.size(); ++i) outs.push_back(parse_u32(words[i], line_no));
      circuit->set_outputs(std::move(outs));
      have_outputs = true;
      continue;
    }
    if (words.size() < 2) fail(line_no, "malformed node line");
    const auto id = parse_u32(words[0], line_no);
    if (id != circuit->node_count()) {
      fail(line_no, "node ids must be dense: expected " + std::to_string(circuit->node_count()));
    }
    Node n;
    const auto op = words[1];
    if (op == "input") {
      if (words.size() != 3) fail(line_no, "usage: <i> input <v>");
      n.kind = NodeKind::Input;
      n.var = parse_u32(words[2], line_no);
    } else if (op == "const") {
      if (words.size() != 3) fail(line_no, "usage: <i> const <p>/<q>");
      n.kind = NodeKind::Const;
      n.value = parse_fraction(words[2], line_no);
    } else if (op == "lit") {
      if (words.size() != 3 && words.size() != 4) fail(line_no, "usage: <i> lit <v> [neg]");
      n.kind = NodeKind::Literal;
      n.var = parse_u32(words[2], line_no);
      if (words.size() == 4) {
        if (words[3] != "neg") fail(line_no, "expected 'neg'");
        n.negated = true;
      }
    } else if (op == "add" || op == "mul") {
      if (words.size() != 4) fail(line_no, "usage: <i> add|mul <l> <r>");
      n.kind = op == "add" ? NodeKind::Add : NodeKind::Mul;
      n.lhs = parse_u32(words[2], line_no);
      n.rhs = parse_u32(words[3], line_no);
    } else {
      fail(line_no, "unknown node kind '" + std::string(op) + "'");
    }
    circuit->push_unchecked(n);
  }
  if (!circuit) throw Error(ErrorKind::ParseError, "empty circuit text");
  if (!have_outputs) throw Error(ErrorKind::ParseError, "missing output line");
  return *std::move(circuit);
}

std::string print_circuit(const Circuit& c) {
  std::ostringstream out;
  out << "vars " << c.num_vars() << '\n';
  if (c.semiring() != Semiring::Boolean) out << "semiring " << to_string(c.semiring()) << '\n';
  const auto& nodes = c.nodes();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Node& n = nodes[i];
    out << i << ' ';
    switch (n.kind) {
      case NodeKind::Input: out << "input " << n.var; break;
      case NodeKind::Const: out << "const " << to_fraction_string(n.value); break;
      case NodeKind::Literal: out << "lit " << n.var << (n.negated ? " neg" : ""); break;
      case NodeKind::Add: out << "add " << n.lhs << ' ' << n.rhs; break;
      case NodeKind::Mul: out << "mul " << n.lhs << ' ' << n.rhs; break;
    }
    out << '\n';
  }
  out << "output";
  for (NodeId o : c.outputs()) out << ' ' << o;
  out << '\n';
  return out.str();
}

Circuit read_circuit_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_circuit(buf.str());
}

void write_circuit_file(const std::string& path, const Circuit& c) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  out << print_circuit(c);
}

}  // namespace sck
