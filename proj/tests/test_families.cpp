#include <doctest.h>

#include <algorithm>
#include <bit>
#include <set>

#include "sck/families.hpp"
#include "sck/transforms.hpp"

using namespace sck;

TEST_CASE("lines of the 3x3 grid") {
  const auto fam = lines_family(3, 2);
  CHECK(fam.point_count == 9);
  CHECK(fam.lines.size() == 6);
  CHECK(fam.uniformity == 3);
  CHECK(fam.regularity == 2);
  CHECK_NOTHROW(validate_family(fam));
  const std::set<VarSet> lines(fam.lines.begin(), fam.lines.end());
  CHECK(lines.count(VarSet{0, 1, 2}) == 1);  // a row
  CHECK(lines.count(VarSet{0, 3, 6}) == 1);  // a column

  const auto f = blocking_function(fam);
  const auto low = lowest_ones(f);
  CHECK(lower_envelope(low).size() == 6);
  for (const auto& a : lower_envelope(low)) {
    CHECK(a.degree() == 3);
    CHECK(matching_function(3)(a.support_mask()));
  }
  CHECK(lower_envelope(low) == lowest_ones(matching_function(3)));
  CHECK(blocking_circuit(fam).size() == 3 * 6 - 1);
  CHECK(compute_function(blocking_circuit(fam)) == f);
  const std::uint8_t diagonal[] = {1, 0, 0, 0, 1, 0, 0, 0, 1};
  const std::uint8_t row[] = {1, 1, 1, 0, 0, 0, 0, 0, 0};
  CHECK(is_blocking(fam, diagonal));
  CHECK_FALSE(is_blocking(fam, row));
  CHECK(is_blocking(fam, std::uint64_t{0b100010001}));
}

TEST_CASE("lines in three dimensions") {
  const auto fam = lines_family(2, 3);
  CHECK(fam.point_count == 8);
  CHECK(fam.lines.size() == 3 * 4);
  CHECK_NOTHROW(validate_family(fam));
  CHECK_THROWS_AS(lines_family(1, 2), Error);
  CHECK_THROWS_AS(lines_family(2, 25), Error);
}

TEST_CASE("covering family of k-subsets") {
  const auto fam = cov_family(4, 2);
  CHECK(fam.point_count == 6);
  CHECK(fam.lines.size() == 4);
  CHECK(fam.uniformity == 3);
  CHECK(fam.regularity == 2);
  CHECK_NOTHROW(validate_family(fam));
  // points: {0,1} {0,2} {0,3} {1,2} {1,3} {2,3}
  CHECK(fam.lines[0] == VarSet{0, 1, 2});
  CHECK(fam.lines[3] == VarSet{2, 4, 5});
  try {
    cov_family(5, 2);
    FAIL("expected Divisibility");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Divisibility);
  }
}

TEST_CASE("family validation") {
  LineFamily bad;
  bad.point_count = 3;
  bad.uniformity = 2;
  bad.regularity = 1;
  bad.lines = {{0, 1}, {1, 2}};
  CHECK_THROWS_AS(validate_family(bad), Error);
  bad.lines = {{0, 1}, {2}};
  CHECK_THROWS_AS(validate_family(bad), Error);
  bad.lines = {};
  CHECK_THROWS_AS(validate_family(bad), Error);
}

TEST_CASE("perfect matchings") {
  const auto pm2 = matching_function(2);
  CHECK(pm2.count_ones() == 7);  // x00 x11, x01 x10 and their supersets
  CHECK(lowest_ones(pm2).size() == 2);
  CHECK(lowest_ones(matching_function(3)).size() == 6);
  CHECK(lowest_ones(matching_function(4)).size() == 24);
  CHECK_THROWS_AS(matching_function(5), Error);
}

TEST_CASE("permanent circuits") {
  const std::uint64_t mults[] = {0, 0, 2, 9, 28, 75};
  const std::uint64_t factorial[] = {1, 1, 2, 6, 24};
  for (std::uint32_t n = 2; n <= 5; ++n) {
    const auto c = permanent_circuit(n);
    CHECK(c.count(NodeKind::Mul) == mults[n]);
    CHECK(c.count(NodeKind::Mul) == n * ((std::uint64_t{1} << (n - 1)) - 1));
    if (n > 4) continue;
    const auto p = produced_polynomial(c);
    CHECK(p.size() == factorial[n]);
    for (const auto& [m, coeff] : p.terms()) {
      CHECK(coeff == 1);
      CHECK(m.is_zero_one());
      CHECK(matching_function(n)(m.support_mask()));
    }
  }
  CHECK_THROWS_AS(permanent_circuit(1), Error);
}

TEST_CASE("gap circuits") {
  for (std::uint32_t m = 2; m <= 4; ++m) {
    const auto c = read2_lines_circuit(m);
    const auto d = dual_lines_read1_circuit(m);
    CHECK(c.size() == 2 * m * m - 1);
    CHECK(d.size() == 2 * m * m - 1);
    const auto f = compute_function(c);
    CHECK(f == blocking_function(lines_family(m, 2)));
    CHECK(compute_function(d) == dual(f));
    CHECK(classify_read_k(c, f).syntactic_k == 2);
    CHECK(classify_read_k(d, dual(f)).semantic_k == 1u);
  }
}

TEST_CASE("cover-free samples") {
  const auto a = cover_free_sample(12, 4, 5, 1);
  const auto b = cover_free_sample(12, 4, 5, 1);
  CHECK(a == b);
  REQUIRE(a.size() == 5);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].degree() == 4);
    CHECK(a[i].is_zero_one());
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      CHECK(std::popcount(a[i].support_mask() & a[j].support_mask()) < 2);
    }
  }
  CHECK(is_cover_free(a));
  CHECK_THROWS_AS(cover_free_sample(4, 4, 3, 0), Error);
  CHECK_THROWS_AS(cover_free_sample(3, 5, 1, 0), Error);
}
