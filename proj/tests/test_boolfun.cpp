#include <doctest.h>

#include <algorithm>

#include "sck/boolfun.hpp"
#include "sck/circuit_io.hpp"
#include "sck/families.hpp"
#include "support/generators.hpp"

using namespace sck;
using sck::testing::Rng;

namespace {

const char* kMaj = "dnf x1&x2|x1&x3|x2&x3";

Circuit maj3_cnf() {
  return parse_circuit(
      "vars 3\n0 input 0\n1 input 1\n2 input 2\n3 add 0 1\n4 add 0 2\n5 add 1 2\n6 mul 3 4\n7 mul 6 5\noutput 7\n");
}

Circuit maj3_dnf() {
  return parse_circuit(
      "vars 3\n0 input 0\n1 input 1\n2 input 2\n3 mul 0 1\n4 mul 0 2\n5 mul 1 2\n6 add 3 4\n7 add 6 5\noutput 7\n");
}

ExpVecSet masks(std::uint32_t n, std::initializer_list<std::uint64_t> ms) {
  ExpVecSet s(n);
  for (auto m : ms) s.insert(ExpVec::from_mask(m));
  return s;
}

// minimal transversals of a family of masks, by brute force
ExpVecSet minimal_transversals(std::uint32_t n, const ExpVecSet& family) {
  auto hits = [&](std::uint64_t x) {
    return std::all_of(family.begin(), family.end(), [&](const ExpVec& a) { return (a.support_mask() & x) != 0; });
  };
  ExpVecSet out(n);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    if (!hits(x)) continue;
    bool minimal = true;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (((x >> i) & 1) && hits(x & ~(std::uint64_t{1} << i))) minimal = false;
    }
    if (minimal) out.insert(ExpVec::from_mask(x));
  }
  return out;
}

}  // namespace

TEST_CASE("majority: truth table, lowest ones and read parameters") {
  const auto f = parse_function(kMaj);
  CHECK(format_function(f) == "table 3 e8");
  CHECK(compute_function(maj3_cnf()) == f);
  CHECK(compute_function(maj3_dnf()) == f);
  CHECK(lowest_ones(f) == masks(3, {3, 5, 6}));
  CHECK(max_prime_implicant_width(f) == 2);

  const auto cnf = classify_read_k(maj3_cnf(), f);
  CHECK(cnf.semantic_k == 2u);
  CHECK(cnf.syntactic_k == 2);
  CHECK_FALSE(cnf.truncated);
  const auto dnf = classify_read_k(maj3_dnf(), f);
  CHECK(dnf.semantic_k == 1u);
  CHECK(dnf.syntactic_k == 1);

  CHECK(verify_structure(maj3_cnf(), f).holds());
  CHECK(is_tight(maj3_dnf(), f));
  // xyz is produced but {x,y,z} is no prime implicant support
  CHECK_FALSE(is_tight(maj3_cnf(), f));
}

TEST_CASE("structure check catches a wrong function") {
  const auto f = parse_function("dnf x1&x2", 3);
  const auto s = verify_structure(maj3_cnf(), f);
  CHECK(s.supports_covered);
  CHECK_FALSE(s.inside_upward);
  try {
    classify_read_k(maj3_cnf(), f);
    FAIL("expected NotComputingF");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotComputingF);
  }
  CHECK_THROWS_AS(verify_structure(maj3_cnf(), parse_function("dnf x1&!x2", 3)), Error);
}

TEST_CASE("parsing function literals") {
  CHECK(parse_function("table 2 8") == parse_function("dnf x&y"));
  CHECK(parse_function("table:2:0x8") == parse_function("dnf:x1*x2"));
  CHECK(parse_function("dnf x1 | !x1", 1).is_constant());
  CHECK(parse_function("dnf 0", 2).is_zero());
  CHECK(parse_function("dnf 1", 2).count_ones() == 4);
  CHECK(parse_function("dnf x3").arity() == 3);
  CHECK(parse_function("dnf ~x1 & x2") == parse_function("table 2 4"));
  CHECK(parse_function("table 6 ffffffffffffffff").count_ones() == 64);
  for (const char* bad : {"", "table", "table 2", "table 2 1ff", "dnf x1 &", "dnf q1", "dnf x0", "cnf x1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_function(bad), Error);
  }
}

TEST_CASE("boolean operators and monotonicity") {
  const auto x = BooleanFunction::variable(2, 0);
  const auto y = BooleanFunction::variable(2, 1);
  CHECK((x & y).count_ones() == 1);
  CHECK((x | y).count_ones() == 3);
  CHECK((x ^ y).count_ones() == 2);
  CHECK_FALSE((x ^ y).is_monotone());
  CHECK((x & y).implies(x | y));
  CHECK_FALSE((~x).is_monotone());
  CHECK(depends_on(x & BooleanFunction::constant(2, true)) == VarSet{0});
  const std::uint8_t bits[] = {1, 1};
  CHECK((x & y).at(bits));
  CHECK_THROWS_AS(BooleanFunction(31), Error);
  CHECK_THROWS_AS(BooleanFunction(21), Error);
  CHECK_NOTHROW(BooleanFunction(21, 30));
}

TEST_CASE("prime implicants include negated literals") {
  const auto f = parse_function("dnf x1&!x2 | x2&x3");
  const auto pis = prime_implicants(f);
  std::vector<std::string> names;
  for (const auto& t : pis) names.push_back(t.to_string());
  std::sort(names.begin(), names.end());
  CHECK(names == std::vector<std::string>{"x1&!x2", "x1&x3", "x2&x3"});
  CHECK(prime_implicants(BooleanFunction::constant(2, true)).front().to_string() == "1");
  CHECK(prime_implicants(BooleanFunction::constant(2, false)).empty());
}

TEST_CASE("cover-free sets") {
  CHECK(is_cover_free({ExpVec::from_mask(1), ExpVec::from_mask(2)}));
  CHECK_FALSE(is_cover_free({ExpVec::from_mask(3), ExpVec::from_mask(6), ExpVec::from_mask(5)}));
  CHECK(is_cover_free({ExpVec::from_mask(0b000011), ExpVec::from_mask(0b001100), ExpVec::from_mask(0b110000)}));
}

TEST_CASE("antichain checks") {
  CHECK_NOTHROW(require_antichain(masks(3, {3, 5, 6})));
  CHECK_THROWS_AS(require_antichain(masks(3, {1, 3})), Error);
  ExpVecSet squares(2, {ExpVec::from_entries({{0, 2}})});
  CHECK_THROWS_AS(require_antichain(squares), Error);
  CHECK(function_of_antichain(masks(3, {3, 5, 6})) == parse_function(kMaj));
}

TEST_CASE("the read-2 lines circuit is not tight") {
  // Row 1 and column 1 of the 2x2 grid: {x1, x2, x3} blocks every line but
  // drops x2 or x3 and still does, so it is no prime implicant support.
  const auto c = read2_lines_circuit(2);
  const auto f = compute_function(c);
  CHECK(f == blocking_function(lines_family(2, 2)));
  const auto supports = produced_exponent_set(c).supports();
  CHECK(supports.count(VarSet{0, 1, 2}) == 1);
  CHECK(lowest_ones(f) == masks(4, {0b1001, 0b0110}));
  CHECK_FALSE(is_tight(c, f));
  CHECK(verify_structure(c, f).holds());
  const auto k = classify_read_k(c, f);
  // a shadow of x1*x4 must take x1 for row 1 and column 1
  CHECK(k.semantic_k == 2u);
  CHECK(k.syntactic_k == 2);
}

TEST_CASE("property: structure check agrees with truth-table equality") {
  Rng rng(2024);
  int agree_true = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    testing::CircuitShape shape;
    shape.num_vars = 1 + static_cast<std::uint32_t>(rng() % 4);
    shape.gates = static_cast<std::uint32_t>(rng() % 9);
    const auto c = testing::random_circuit(rng, shape);
    const auto f = trial % 3 == 0 ? compute_function(c) : testing::random_monotone_function(rng, shape.num_vars);
    const bool equal = compute_function(c) == f;
    CHECK(verify_structure(c, f).holds() == equal);
    agree_true += equal;
  }
  CHECK(agree_true > 600);
}

TEST_CASE("property: read parameters") {
  Rng rng(77);
  for (int trial = 0; trial < 500; ++trial) {
    testing::CircuitShape shape;
    shape.num_vars = 1 + static_cast<std::uint32_t>(rng() % 4);
    shape.gates = 1 + static_cast<std::uint32_t>(rng() % 10);
    const auto c = testing::random_circuit(rng, shape);
    const auto f = compute_function(c);
    if (f.is_zero()) continue;
    const auto r = classify_read_k(c, f);
    REQUIRE(r.semantic_k.has_value());
    CHECK(*r.semantic_k >= 1);
    CHECK(*r.semantic_k <= r.syntactic_k);
    // the OR of prime implicants is read-1 and tight
    Circuit dnf(shape.num_vars, Semiring::Boolean);
    std::optional<NodeId> sum;
    for (const auto& a : lowest_ones(f)) {
      std::optional<NodeId> prod;
      for (auto v : a.support()) prod = prod ? dnf.mul(*prod, dnf.input(v)) : dnf.input(v);
      sum = sum ? dnf.add(*sum, *prod) : *prod;
    }
    if (!sum) continue;
    dnf.set_outputs({*sum});
    CHECK(classify_read_k(dnf, f).semantic_k == 1u);
    CHECK(is_tight(dnf, f));
  }
}

TEST_CASE("property: closure, lowest ones and duality") {
  Rng rng(9);
  for (int trial = 0; trial < 500; ++trial) {
    const auto n = 1 + static_cast<std::uint32_t>(rng() % 5);
    const auto g = testing::random_function(rng, n);
    const auto up = upward_closure(g);
    CHECK(up.is_monotone());
    CHECK(g.implies(up));
    CHECK(lowest_ones(up) == lowest_ones(g));
    CHECK(dual(dual(g)) == g);

    const auto f = testing::random_monotone_function(rng, n);
    CHECK(upward_closure(f) == f);
    CHECK(function_of_antichain(lowest_ones(f)) == f);
    if (!f.is_constant()) CHECK(lowest_ones(dual(f)) == minimal_transversals(n, lowest_ones(f)));
    std::vector<Term> positive;
    for (const auto& a : lowest_ones(f)) positive.push_back(Term{a.support(), {}});
    std::sort(positive.begin(), positive.end());
    auto pis = prime_implicants(f);
    std::sort(pis.begin(), pis.end());
    if (!f.is_constant()) CHECK(pis == positive);
  }
}

TEST_CASE("property: depends_on matches flip comparison") {
  Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = 1 + static_cast<std::uint32_t>(rng() % 5);
    const auto f = testing::random_function(rng, n);
    VarSet expect;
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint64_t x = 0; x < f.table_size(); ++x) {
        if (f(x) != f(x ^ (std::uint64_t{1} << i))) {
          expect.push_back(i);
          break;
        }
      }
    }
    CHECK(depends_on(f) == expect);
  }
}
