#include <doctest.h>

#include "sck/circuit.hpp"
#include "sck/circuit_io.hpp"
#include "sck/formal_poly.hpp"
#include "support/generators.hpp"

using namespace sck;
using sck::testing::Rng;

namespace {

// (x*y) + z
Circuit xy_plus_z(Semiring s = Semiring::Boolean) {
  Circuit c(3, s);
  const auto x = c.input(0), y = c.input(1), z = c.input(2);
  c.set_outputs({c.add(c.mul(x, y), z)});
  return c;
}

std::vector<Rational> point(std::initializer_list<int> values) {
  return std::vector<Rational>(values.begin(), values.end());
}

}  // namespace

TEST_CASE("one circuit, three semirings") {
  const auto c = xy_plus_z();
  CHECK(evaluate(c, Semiring::Arithmetic, point({2, 3, 5})) == 11);
  CHECK(evaluate(c, Semiring::Tropical, point({2, 3, 5})) == 5);
  CHECK(evaluate(c, Semiring::Boolean, point({1, 1, 0})) == 1);
  CHECK(evaluate(c, Semiring::Boolean, point({1, 0, 0})) == 0);
}

TEST_CASE("evaluation errors") {
  const auto c = xy_plus_z();
  CHECK_THROWS_AS(evaluate(c, Semiring::Arithmetic, point({1, 2})), Error);
  try {
    evaluate(c, Semiring::Boolean, point({2, 0, 0}));
    FAIL("expected a domain error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DomainError);
  }
  Circuit half(1, Semiring::Boolean);
  half.set_outputs({half.mul(half.input(0), half.constant(Rational(1, 2)))});
  CHECK_THROWS_AS(evaluate(half, Semiring::Boolean, point({1})), Error);
  CHECK(evaluate(half, Semiring::Arithmetic, point({4})) == 2);
}

TEST_CASE("negated literals") {
  Circuit c(2, Semiring::Boolean);
  c.set_outputs({c.mul(c.literal(0, false), c.literal(1, true))});
  CHECK(evaluate(c, point({1, 0})) == 1);
  CHECK(evaluate(c, point({1, 1})) == 0);
  CHECK_FALSE(c.is_monotone());
  CHECK_THROWS_AS(evaluate(c, Semiring::Arithmetic, point({1, 0})), Error);
}

TEST_CASE("validate reports each violated invariant") {
  Circuit good = xy_plus_z();
  CHECK(validate(good).empty());

  Circuit forward(2);
  forward.input(0);
  Node bad;
  bad.kind = NodeKind::Add;
  bad.lhs = 0;
  bad.rhs = 2;
  forward.push_unchecked(bad);
  forward.input(1);
  forward.set_outputs({1});
  auto d = validate(forward);
  REQUIRE(d.size() == 1);
  CHECK(d[0].kind == DiagnosticKind::CycleOrForwardRef);
  CHECK(d[0].node == 1);

  Circuit neg(1);
  neg.literal(0, true);
  neg.set_outputs({0});
  neg.claimed_monotone = true;
  d = validate(neg);
  REQUIRE(d.size() == 1);
  CHECK(d[0].kind == DiagnosticKind::NonMonotoneLiteral);

  Circuit cst(1);
  cst.set_outputs({cst.add(cst.input(0), cst.constant(1))});
  cst.claimed_constant_free = true;
  d = validate(cst);
  REQUIRE(d.size() == 1);
  CHECK(d[0].kind == DiagnosticKind::ConstantPresent);

  Circuit none(1);
  none.input(0);
  d = validate(none);
  REQUIRE(d.size() == 1);
  CHECK(d[0].kind == DiagnosticKind::NoOutputs);

  Circuit range(1);
  Node leaf;
  leaf.kind = NodeKind::Input;
  leaf.var = 4;
  range.push_unchecked(leaf);
  range.set_outputs({0, 7});
  d = validate(range);
  REQUIRE(d.size() == 2);
  CHECK(d[0].kind == DiagnosticKind::VariableOutOfRange);
  CHECK(d[1].kind == DiagnosticKind::OutputOutOfRange);
}

TEST_CASE("parallel edges are allowed") {
  Circuit c(1, Semiring::Arithmetic);
  const auto x = c.input(0);
  c.set_outputs({c.mul(x, x)});
  CHECK(validate(c).empty());
  CHECK(evaluate(c, point({3})) == 9);
}

TEST_CASE("size counts gates only") {
  const auto c = xy_plus_z();
  CHECK(c.size() == 2);
  CHECK(c.count(NodeKind::Input) == 3);
  CHECK(mul_depth(c) == 1);
}

TEST_CASE("retarget keeps structure and refuses constants") {
  Circuit maj(3, Semiring::Boolean);
  const auto x = maj.input(0), y = maj.input(1), z = maj.input(2);
  maj.set_outputs({maj.mul(maj.mul(maj.add(x, y), maj.add(x, z)), maj.add(y, z))});
  const auto arith = retarget(maj, Semiring::Arithmetic);
  CHECK(arith.nodes() == maj.nodes());
  CHECK(arith.semiring() == Semiring::Arithmetic);
  CHECK(evaluate(arith, point({1, 1, 1})) == 8);
  CHECK(retarget(arith, Semiring::Boolean) == maj);

  Circuit single(1);
  single.set_outputs({single.input(0)});
  for (auto s : {Semiring::Boolean, Semiring::Arithmetic, Semiring::Tropical}) {
    CHECK(retarget(single, s).nodes() == single.nodes());
  }

  Circuit cst(1);
  cst.set_outputs({cst.add(cst.input(0), cst.constant(1))});
  try {
    retarget(cst, Semiring::Tropical);
    FAIL("expected HasConstants");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::HasConstants);
  }
  Circuit neg(1);
  neg.set_outputs({neg.literal(0, true)});
  CHECK_THROWS_AS(retarget(neg, Semiring::Arithmetic), Error);
}

TEST_CASE("text format round trip") {
  const std::string text =
      "vars 3\n"
      "semiring tropical\n"
      "0 input 0\n"
      "1 const 3/2\n"
      "2 lit 2 neg\n"
      "3 add 0 1\n"
      "4 mul 3 2\n"
      "output 4 3\n";
  const auto c = parse_circuit(text);
  CHECK(c.semiring() == Semiring::Tropical);
  CHECK(c.outputs() == std::vector<NodeId>{4, 3});
  CHECK(c.node(1).value == Rational(3, 2));
  CHECK(c.node(2).negated);
  CHECK(print_circuit(c) == text);
  CHECK(parse_circuit(print_circuit(c)) == c);

  const auto comments = parse_circuit("# header\nvars 1 # one\n0 const 2\n\noutput 0\n");
  CHECK(print_circuit(comments) == "vars 1\n0 const 2/1\noutput 0\n");
}

TEST_CASE("text format errors") {
  for (const char* bad : {"", "vars x\n", "vars 1\n1 input 0\noutput 1\n", "vars 1\n0 frob 0\noutput 0\n",
                          "vars 1\n0 const 1/0\noutput 0\n", "vars 1\n0 input 0\n", "vars 1\n0 lit 0 pos\noutput 0\n",
                          "vars 1\n0 input 0\nsemiring boolean\noutput 0\n"}) {
    CAPTURE(bad);
    try {
      parse_circuit(bad);
      FAIL("expected a parse error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ParseError);
    }
  }
  // structural problems parse but do not validate
  const auto fwd = parse_circuit("vars 1\n0 add 0 1\n1 input 0\noutput 0\n");
  CHECK_FALSE(validate(fwd).empty());
}

TEST_CASE("property: random circuits round trip and evaluate deterministically") {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    testing::CircuitShape shape;
    shape.num_vars = 1 + static_cast<std::uint32_t>(rng() % 5);
    shape.gates = static_cast<std::uint32_t>(rng() % 12);
    shape.semiring = static_cast<Semiring>(rng() % 3);
    shape.const_percent = 20;
    const auto c = testing::random_circuit(rng, shape);
    CHECK(validate(c).empty());
    CHECK(parse_circuit(print_circuit(c)) == c);
    std::vector<Rational> x(shape.num_vars);
    for (auto& v : x) v = shape.semiring == Semiring::Boolean ? Rational(rng() % 2) : Rational(rng() % 7, 1 + rng() % 3);
    CHECK(evaluate(c, x) == evaluate(c, x));
    if (shape.semiring != Semiring::Boolean) {
      std::vector<std::int64_t> xi(shape.num_vars);
      std::vector<Rational> xr(shape.num_vars);
      for (std::uint32_t i = 0; i < shape.num_vars; ++i) xr[i] = xi[i] = static_cast<std::int64_t>(rng() % 9);
      if (auto fast = evaluate_int(c, c.semiring(), xi)) CHECK(Rational(*fast) == evaluate(c, xr));
    }
  }
}

TEST_CASE("property: semiring axioms on sampled triples") {
  Rng rng(5);
  for (auto s : {Semiring::Boolean, Semiring::Arithmetic, Semiring::Tropical}) {
    for (int i = 0; i < 200; ++i) {
      auto sample = [&] {
        return s == Semiring::Boolean ? Rational(rng() % 2) : Rational(rng() % 20, 1 + rng() % 4);
      };
      const auto a = sample(), b = sample(), c = sample();
      CHECK(semiring_mul(s, a, semiring_add(s, b, c)) ==
            semiring_add(s, semiring_mul(s, a, b), semiring_mul(s, a, c)));
      CHECK(semiring_mul(s, semiring_one(s), a) == a);
    }
  }
}

TEST_CASE("property: retarget there and back is the identity; exponent set is semiring independent") {
  Rng rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    testing::CircuitShape shape;
    shape.num_vars = 1 + static_cast<std::uint32_t>(rng() % 6);
    shape.gates = static_cast<std::uint32_t>(rng() % 31);
    shape.mul_percent = 35;
    const auto c = testing::random_circuit(rng, shape);
    ProductionCaps caps;
    caps.max_degree = 8;
    const auto base = produced_exponent_set(c, caps);
    for (auto s : {Semiring::Arithmetic, Semiring::Tropical}) {
      const auto t = retarget(c, s);
      CHECK(retarget(t, Semiring::Boolean) == c);
      CHECK(produced_exponent_set(t, caps) == base);
    }
  }
}

TEST_CASE("compact keeps reachable nodes in order") {
  Circuit c(2, Semiring::Arithmetic);
  const auto x = c.input(0);
  c.input(1);
  const auto s = c.add(x, x);
  c.mul(s, s);
  c.set_outputs({s});
  const auto k = compact(c);
  CHECK(k.node_count() == 2);
  CHECK(k.outputs() == std::vector<NodeId>{1});
  CHECK(evaluate(k, point({3, 0})) == 6);
}
