#include <doctest.h>

#include "sck/circuit_io.hpp"
#include "sck/families.hpp"
#include "sck/transforms.hpp"
#include "support/generators.hpp"

using namespace sck;
using sck::testing::Rng;

namespace {

Circuit maj3_cnf() {
  return parse_circuit(
      "vars 3\n0 input 0\n1 input 1\n2 input 2\n3 add 0 1\n4 add 0 2\n5 add 1 2\n6 mul 3 4\n7 mul 6 5\noutput 7\n");
}

FormalPolynomial sum_of(const std::vector<ProductPair>& pairs, std::uint32_t n) {
  FormalPolynomial total(n);
  for (const auto& p : pairs) total += multiply(p.g, p.h, 1'000'000);
  return total;
}

}  // namespace

TEST_CASE("constant folding") {
  Circuit c(2, Semiring::Boolean);
  const auto x = c.input(0), y = c.input(1);
  const auto one = c.constant(1), zero = c.constant(0);
  c.set_outputs({c.add(c.mul(x, one), c.mul(y, zero))});
  const auto folded = fold_constants(c);
  CHECK_FALSE(folded.constant.has_value());
  CHECK(folded.circuit.size() == 0);
  CHECK(compute_function(folded.circuit) == compute_function(c));
  CHECK(eliminate_constants(c).is_constant_free());

  Circuit k(1, Semiring::Boolean);
  k.set_outputs({k.add(k.input(0), k.constant(1))});
  CHECK(fold_constants(k).constant == true);
  try {
    eliminate_constants(k);
    FAIL("expected ConstantFunction");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ConstantFunction);
  }
}

TEST_CASE("homogeneous parts of (x+1)(y+x)") {
  Circuit c(2, Semiring::Arithmetic);
  const auto x = c.input(0), y = c.input(1);
  c.set_outputs({c.mul(c.add(x, c.constant(1)), c.add(y, x))});
  const auto parts = homogeneous_parts(c, 3);
  REQUIRE(parts.output_of_degree.size() == 4);
  CHECK_FALSE(parts.output_of_degree[0].has_value());
  CHECK_FALSE(parts.output_of_degree[3].has_value());
  const auto polys = produced_polynomials(parts.circuit);
  const auto full = produced_polynomial(c);
  for (std::uint32_t d = 1; d <= 2; ++d) {
    REQUIRE(parts.output_of_degree[d].has_value());
    CHECK(polys[*parts.output_of_degree[d]] == homogeneous_part(full, d));
  }
  CHECK(produced_polynomial(sum_of_parts(parts)) == full);
}

TEST_CASE("degree reduction of the CNF majority circuit") {
  const auto f = parse_function("dnf x1&x2|x1&x3|x2&x3");
  const auto c = maj3_cnf();
  const auto r = degree_reduce_read_k(c, 2, f);
  CHECK(r.semiring() == Semiring::Boolean);
  CHECK(compute_function(r) == f);
  CHECK(produced_exponent_set(r).max_degree() <= 4);
  CHECK(classify_read_k(r, f).semantic_k <= 2u);
  try {
    degree_reduce_read_k(c, 1, f);
    FAIL("expected NotReadK");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotReadK);
  }
}

TEST_CASE("lower envelope drops the higher add branch") {
  Circuit c(2, Semiring::Arithmetic);
  const auto x = c.input(0), y = c.input(1);
  c.set_outputs({c.add(c.mul(x, y), x)});
  const auto e = lower_envelope_circuit(c);
  CHECK(e.size() == 0);
  CHECK(produced_polynomial(e) == FormalPolynomial::monomial(2, ExpVec::unit(0)));
  Circuit neg(1, Semiring::Boolean);
  neg.set_outputs({neg.add(neg.literal(0, true), neg.input(0))});
  CHECK_THROWS_AS(lower_envelope_circuit(neg), Error);
}

TEST_CASE("positive version and OR of prime implicants") {
  Circuit c(2, Semiring::Boolean);
  c.set_outputs({c.mul(c.input(0), c.literal(1, true))});
  const auto p = positive_version(c);
  CHECK(p.is_monotone());
  CHECK(compute_function(p) == BooleanFunction::variable(2, 0));

  const auto f = parse_function("dnf x1&x2|x3");
  const auto dnf = or_of_prime_implicants(f);
  CHECK(compute_function(dnf) == f);
  CHECK(is_tight(dnf, f));
  CHECK(classify_read_k(dnf, f).syntactic_k == 1);
}

TEST_CASE("arithmetic reading back to read-1") {
  const auto f = parse_function("dnf x1&x2|x1&x3|x2&x3");
  const auto dnf = retarget(or_of_prime_implicants(f), Semiring::Arithmetic);
  const auto b = arithmetic_to_read1(dnf, f);
  CHECK(b.semiring() == Semiring::Boolean);
  CHECK(classify_read_k(b, f).semantic_k == 1u);
  try {
    arithmetic_to_read1(retarget(maj3_cnf(), Semiring::Arithmetic), f);
    FAIL("expected ExponentSetNotLowF");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ExponentSetNotLowF);
  }
}

TEST_CASE("decomposition of the 3x3 permanent") {
  const auto c = permanent_circuit(3);
  const auto pairs = decompose(c);
  CHECK(!pairs.empty());
  CHECK(pairs.size() <= c.size());
  for (const auto& p : pairs) {
    CHECK(p.g.is_homogeneous());
    CHECK(p.g.degree() >= 1);
    CHECK(p.g.degree() <= 2);
  }
  CHECK(sum_of(pairs, 9) == produced_polynomial(c));

  const auto report = matching_lower_bound_report(c, 3);
  CHECK(report.analytic_bound == 3);
  CHECK(report.similar_to_permanent);
  CHECK(report.products_inside_target);
  CHECK(report.target_monomials == 6);
  CHECK(report.pairs == pairs.size());

  Circuit small(2, Semiring::Arithmetic);
  small.set_outputs({small.mul(small.input(0), small.input(1))});
  CHECK_THROWS_AS(decompose(small), Error);
  Circuit mixed(2, Semiring::Arithmetic);
  mixed.set_outputs({mixed.add(mixed.mul(mixed.mul(mixed.input(0), mixed.input(1)), mixed.input(0)), mixed.input(1))});
  CHECK_THROWS_AS(decompose(mixed), Error);
}

TEST_CASE("binomials") {
  CHECK(binomial(3, 1) == 3);
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(60, 30) == 118264581564861424ULL);
}

TEST_CASE("property: homogeneous parts and size bound") {
  Rng rng(404);
  for (int trial = 0; trial < 200; ++trial) {
    testing::CircuitShape shape;
    shape.num_vars = 1 + static_cast<std::uint32_t>(rng() % 5);
    shape.gates = 1 + static_cast<std::uint32_t>(rng() % 20);
    shape.semiring = Semiring::Arithmetic;
    const auto c = testing::random_circuit(rng, shape);
    const auto r = static_cast<std::uint32_t>(rng() % 7);
    const auto parts = homogeneous_parts(c, r);
    CHECK(parts.circuit.size() <= c.size() * (r + 1) * (r + 1));
    ProductionCaps caps;
    caps.max_degree = r;
    const auto slice = produced_polynomial(c, caps);
    const auto polys = parts.circuit.outputs().empty() ? std::vector<FormalPolynomial>{}
                                                       : produced_polynomials(parts.circuit);
    for (std::uint32_t d = 0; d <= r; ++d) {
      const auto want = homogeneous_part(slice, d);
      if (parts.output_of_degree[d]) CHECK(polys[*parts.output_of_degree[d]] == want);
      else CHECK(want.empty());
    }
  }
}

TEST_CASE("property: lower envelope keeps the minimum-degree slice") {
  Rng rng(505);
  for (int trial = 0; trial < 200; ++trial) {
    testing::CircuitShape shape;
    shape.num_vars = 1 + static_cast<std::uint32_t>(rng() % 4);
    shape.gates = 1 + static_cast<std::uint32_t>(rng() % 12);
    shape.semiring = Semiring::Arithmetic;
    const auto c = testing::random_circuit(rng, shape);
    const auto full = produced_polynomial(c);
    const auto e = lower_envelope_circuit(c);
    CHECK(e.size() <= c.size());
    CHECK(produced_polynomial(e) == homogeneous_part(full, full.min_degree()));
  }
}

TEST_CASE("property: constant elimination preserves the function") {
  Rng rng(606);
  for (int trial = 0; trial < 400; ++trial) {
    testing::CircuitShape shape;
    shape.num_vars = 1 + static_cast<std::uint32_t>(rng() % 4);
    shape.gates = static_cast<std::uint32_t>(rng() % 10);
    shape.const_percent = 30;
    const auto c = testing::random_circuit(rng, shape);
    const auto f = compute_function(c);
    if (f.is_constant()) {
      CHECK_THROWS_AS(eliminate_constants(c), Error);
      continue;
    }
    const auto e = eliminate_constants(c);
    CHECK(e.is_constant_free());
    CHECK(e.size() <= c.size());
    CHECK(compute_function(e) == f);
  }
}

TEST_CASE("property: positive version computes the closure of multilinear circuits") {
  Rng rng(707);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = 1 + static_cast<std::uint32_t>(rng() % 4);
    const auto c = testing::random_multilinear_circuit(rng, n, true);
    const auto f = compute_function(c);
    const auto p = positive_version(c);
    CHECK(p.is_monotone());
    CHECK(compute_function(p) == upward_closure(f));
  }
}
