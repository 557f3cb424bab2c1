#include <doctest.h>

#include <random>

#include "autorbit/errors.hpp"
#include "autorbit/permutation.hpp"

using namespace autorbit;

TEST_CASE("composition applies the right factor first") {
  Permutation p = parse_cycles("(1 2)", 3);
  Permutation q = parse_cycles("(2 3)", 3);
  // p(q(1)) = 1, p(q(2)) = 3, p(q(3)) = 1 -> images of 0-based points
  Permutation pq = compose(p, q);
  CHECK(pq(0) == 1);
  CHECK(pq(1) == 2);
  CHECK(pq(2) == 0);
  CHECK(cycle_decompose(pq).to_string() == "(1 2 3)");
}

TEST_CASE("cycle decomposition") {
  Permutation p = parse_cycles("(1 3 5)(2 4)", 6);
  CycleSet c = cycle_decompose(p);
  REQUIRE(c.cycles.size() == 3);
  CHECK(c.cycles[0] == std::vector<Point>{0, 2, 4});
  CHECK(c.cycles[1] == std::vector<Point>{1, 3});
  CHECK(c.cycles[2] == std::vector<Point>{5});
  CHECK(c.cycle_type() == std::vector<std::size_t>{3, 2, 1});
  CHECK(c.to_permutation() == p);
  CHECK(c.to_string() == "(1 3 5)(2 4)");
  CHECK(p.order() == 6);
  CHECK(cycle_decompose(Permutation(4)).to_string() == "()");
}

TEST_CASE("parse accepts commas and rejects bad input") {
  CHECK(parse_cycles("(1,2)(3,4)", 4) == parse_cycles("(1 2)(3 4)", 4));
  CHECK(parse_cycles("()", 3).is_identity());
  CHECK_THROWS_AS(parse_cycles("(1 4)", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1 2 1)", 3), UsageError);
  CHECK_THROWS_AS(parse_cycles("(1 2", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(0 1)", 3), ParseError);
}

TEST_CASE("constructor rejects non-bijections") {
  CHECK_THROWS(Permutation(std::vector<Point>{0, 0, 1}));
  CHECK_THROWS(Permutation(std::vector<Point>{0, 3, 1}));
}

TEST_CASE("group laws on random permutations") {
  std::mt19937_64 rng(7);
  auto random_perm = [&](std::size_t n) {
    std::vector<Point> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Point>(i);
    std::shuffle(v.begin(), v.end(), rng);
    return Permutation(v);
  };
  for (int t = 0; t < 200; ++t) {
    Permutation a = random_perm(9), b = random_perm(9), c = random_perm(9);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(compose(a, inverse(a)).is_identity());
    CHECK(conjugate(a, b) == compose(compose(b, a), inverse(b)));
    CHECK(cycle_decompose(conjugate(a, b)).cycle_type() == cycle_decompose(a).cycle_type());
    CHECK(parse_cycles(cycle_decompose(a).to_string(), 9) == a);
  }
}
