#include <doctest.h>

#include "sck/circuit_io.hpp"
#include "sck/tropical.hpp"
#include "support/generators.hpp"

using namespace sck;
using sck::testing::Rng;

namespace {

Circuit maj3(bool cnf) {
  const char* a = cnf ? "add" : "mul";
  const char* b = cnf ? "mul" : "add";
  return parse_circuit(std::string("vars 3\n0 input 0\n1 input 1\n2 input 2\n") + "3 " + a + " 0 1\n4 " + a +
                       " 0 2\n5 " + a + " 1 2\n6 " + b + " 3 4\n7 " + b + " 6 5\noutput 7\n");
}

const MinProblem& maj_problem() {
  static const MinProblem p = parse_min_problem("vars 3\n1 2\n1 3\n2 3\n");
  return p;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("minimization problems") {
  const auto& p = maj_problem();
  CHECK(p.arity() == 3);
  CHECK(p.max_support() == 2);
  const std::vector<Rational> x{5, 1, 2};
  CHECK(solve_brute_force(p, x) == 3);
  const std::vector<std::int64_t> xi{5, 1, 2};
  CHECK(solve_brute_force_int(p, xi) == 3);
  CHECK(print_min_problem(p) == "vars 3\n1 2\n1 3\n2 3\n");
  CHECK(parse_min_problem(print_min_problem(p)).solutions() == p.solutions());
  CHECK(MinProblem::lowest_ones_of(parse_function("dnf x1&x2|x1&x3|x2&x3")).solutions() == p.solutions());

  CHECK(kind_of([] { MinProblem(ExpVecSet(2)); }) == ErrorKind::EmptySet);
  CHECK(kind_of([] { parse_min_problem("vars 2\n1\n1 2\n"); }) == ErrorKind::InvalidAntichain);
  CHECK(kind_of([] { parse_min_problem("vars 2\n3\n"); }) == ErrorKind::ParseError);
  CHECK_THROWS_AS(MinProblem(ExpVecSet(2, {ExpVec()})), Error);
}

TEST_CASE("exact and factor-2 approximations of majority") {
  const auto dnf = retarget(maj3(false), Semiring::Tropical);
  const auto cnf = retarget(maj3(true), Semiring::Tropical);
  GridSpec grid;
  grid.max_value = 7;
  const auto exact = check_approximation(dnf, maj_problem(), 1, grid);
  CHECK(exact.structural);
  CHECK(exact.grid);
  CHECK(exact.exhaustive);
  CHECK(exact.points == 512);
  CHECK(exact.worst_ratio == 1);

  const auto one = check_approximation(cnf, maj_problem(), 1, grid);
  CHECK_FALSE(one.structural);
  CHECK(one.upward);
  CHECK_FALSE(one.shadows);
  CHECK_FALSE(one.grid);
  CHECK_FALSE(one.lower_violation);
  CHECK(one.worst_ratio == Rational(3, 2));

  const auto two = check_approximation(cnf, maj_problem(), 2, grid);
  CHECK(two.structural);
  CHECK(two.grid);

  // a circuit that undershoots: min(x1, x2, x3)
  Circuit low(3, Semiring::Tropical);
  low.set_outputs({low.add(low.add(low.input(0), low.input(1)), low.input(2))});
  const auto under = check_approximation(low, maj_problem(), 2, grid);
  CHECK_FALSE(under.upward);
  CHECK(under.lower_violation);
  CHECK_FALSE(under.grid);
}

TEST_CASE("sampled grid is seeded") {
  const auto cnf = retarget(maj3(true), Semiring::Tropical);
  GridSpec grid;
  grid.mode = GridMode::Sampled;
  grid.samples = 500;
  grid.seed = 42;
  const auto a = check_approximation(cnf, maj_problem(), 2, grid);
  const auto b = check_approximation(cnf, maj_problem(), 2, grid);
  CHECK_FALSE(a.exhaustive);
  CHECK(a.seed == 42);
  CHECK(a.points == b.points);
  CHECK(a.worst_ratio == b.worst_ratio);
  CHECK(a.grid);
}

TEST_CASE("round trips between Boolean and tropical readings") {
  const auto f = parse_function("dnf x1&x2|x1&x3|x2&x3");
  const auto t = boolean_read_k_to_tropical(maj3(true), f, 2);
  CHECK(t.semiring() == Semiring::Tropical);
  const auto back = tropical_to_boolean_read_r(t, maj_problem(), 2);
  CHECK(compute_function(back) == f);
  CHECK(*classify_read_k(back, f).semantic_k <= read_bound(2, 2));
  CHECK(read_bound(2, 2) == 3);
  CHECK(kind_of([&] { tropical_to_boolean_read_r(t, maj_problem(), 1); }) == ErrorKind::NotApproximating);
  CHECK(kind_of([&] { boolean_read_k_to_tropical(maj3(true), f, 1); }) == ErrorKind::NotReadK);
}

TEST_CASE("constant-free version") {
  Circuit c(2, Semiring::Tropical);
  const auto x = c.input(0), y = c.input(1);
  c.set_outputs({c.mul(c.add(x, c.constant(3)), c.mul(y, c.constant(0)))});
  const auto k = constant_free_version(c);
  CHECK(k.is_constant_free());
  // min(x, 0) + y + 0 = y
  CHECK(k.size() == 0);
  const std::vector<Rational> at{4, 6};
  CHECK(evaluate(k, at) == 6);
}

TEST_CASE("property: read-k Boolean circuits approximate within k") {
  Rng rng(88);
  int checked = 0;
  for (int trial = 0; trial < 150; ++trial) {
    testing::CircuitShape shape;
    shape.num_vars = 1 + static_cast<std::uint32_t>(rng() % 3);
    shape.gates = 1 + static_cast<std::uint32_t>(rng() % 7);
    const auto c = testing::random_circuit(rng, shape);
    const auto f = compute_function(c);
    if (f.is_zero()) continue;
    const auto k = *classify_read_k(c, f).semantic_k;
    const auto p = MinProblem::lowest_ones_of(f);
    const auto t = boolean_read_k_to_tropical(c, f, k);
    const auto check = check_approximation(t, p, k);
    CHECK(check.structural);
    CHECK(check.grid);
    CHECK(check.worst_ratio <= k);
    if (k == 1) CHECK(check.worst_ratio == 1);
    const auto back = tropical_to_boolean_read_r(t, p, k);
    CHECK(compute_function(back) == f);
    CHECK(*classify_read_k(back, f).semantic_k <= read_bound(k, p.max_support()));
    ++checked;
  }
  CHECK(checked > 100);
}
