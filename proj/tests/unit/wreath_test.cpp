#include <doctest.h>

#include <map>
#include <random>

#include "autorbit/catalog.hpp"
#include "autorbit/errors.hpp"
#include "autorbit/wreath.hpp"
#include "oracles.hpp"

using namespace autorbit;

namespace {

ElementId el(const FiniteGroup& g, const char* cycles) {
  return g.index_of(parse_cycles(cycles, g.degree()));
}

// Class label of every element (indexed like enumerate()) from the
// permutation group of degree n*d.
std::vector<std::uint32_t> embedded_labels(const WreathGroup& h) {
  FiniteGroup big = oracle::imprimitive_group(h);
  std::vector<std::uint32_t> labels;
  for (const auto& w : h.enumerate()) labels.push_back(big.classes().class_of[big.index_of(oracle::imprimitive(h, w))]);
  return labels;
}

}  // namespace

TEST_CASE("multiplication is composition of the imprimitive action") {
  WreathGroup h(sym(3), 4);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 500; ++t) {
    WreathElement a = h.random_element(rng), b = h.random_element(rng);
    CHECK(oracle::imprimitive(h, h.mul(a, b)) == compose(oracle::imprimitive(h, a), oracle::imprimitive(h, b)));
    CHECK(oracle::imprimitive(h, h.inv(a)) == inverse(oracle::imprimitive(h, a)));
    CHECK(h.mul(h.identity(), b) == b);
    CHECK(h.inv(h.inv(a)) == a);
    CHECK(h.conj(a, b) == h.mul(h.mul(b, a), h.inv(b)));
    CHECK(h.power(a, 5) == h.mul(h.power(a, 2), h.power(a, 3)));
    CHECK(h.power(a, -2) == h.inv(h.power(a, 2)));
    CHECK(h.decode(h.encode(a)) == a);
  }
  CHECK(oracle::imprimitive_group(h).order() == *h.order());
}

TEST_CASE("conjugation formula for a swap") {
  FiniteGroup s3 = sym(3);
  WreathGroup h(s3, 2);
  Permutation swap = parse_cycles("(1 2)", 2);
  for (ElementId g1 = 0; g1 < 6; ++g1)
    for (ElementId g2 = 0; g2 < 6; ++g2)
      for (ElementId k1 = 0; k1 < 6; ++k1)
        for (ElementId k2 = 0; k2 < 6; ++k2) {
          WreathElement a = h.make({g1, g2}, swap);
          WreathElement b = h.make({k1, k2}, Permutation(2));
          WreathElement expected = h.make({s3.mul(s3.mul(k1, g1), s3.inv(k2)), s3.mul(s3.mul(k2, g2), s3.inv(k1))}, swap);
          CHECK(h.conj(a, b) == expected);
        }
}

TEST_CASE("shape checks") {
  WreathGroup h(sym(3), 2);
  CHECK_THROWS_AS(h.make({0, 1, 2}, Permutation(2)), ShapeMismatch);
  CHECK_THROWS_AS(h.make({0, 9}, Permutation(2)), ShapeMismatch);
  CHECK_THROWS_AS(h.make({0, 1}, Permutation(3)), ShapeMismatch);
  WreathGroup other(sym(3), 3);
  CHECK_THROWS_AS(h.mul(h.identity(), other.identity()), ShapeMismatch);
  WreathGroup cyc(sym(3), cyclic(3));
  CHECK_THROWS_AS(cyc.make({0, 0, 0}, parse_cycles("(1 2)", 3)), ShapeMismatch);
  CHECK(*cyc.order() == 6 * 6 * 6 * 3);
}

TEST_CASE("enumeration and codes") {
  WreathGroup h(cyclic(3), 3);
  auto all = h.enumerate();
  CHECK(all.size() == 27 * 6);
  for (std::size_t i = 0; i < all.size(); ++i) CHECK(h.decode(h.encode(all[i])) == all[i]);
  CHECK_THROWS_AS(h.enumerate(100), TooLarge);
  for (std::uint64_t r = 0; r < 120; ++r) CHECK(permutation_rank(permutation_unrank(5, r)) == r);
}

TEST_CASE("bcpc examples") {
  FiniteGroup s3 = sym(3);
  WreathGroup h(s3, 3);
  WreathElement w = h.make({el(s3, "(1 2)"), 0, el(s3, "(1 3)")}, parse_cycles("(1 2 3)", 3));
  std::vector<Point> cycle{0, 1, 2};
  CHECK(bcpc_element(h, w, cycle) == el(s3, "(1 2 3)"));
  CHECK(bcpc(h, w, cycle) == s3.classes().class_of[el(s3, "(1 2 3)")]);
  BcpcProfile p = profile(h, w);
  REQUIRE(p.by_length.size() == 1);
  CHECK(p.by_length.at(3) == ClassMultiset{{s3.classes().class_of[el(s3, "(1 2 3)")], 1}});

  std::vector<Point> backwards{0, 2, 1};
  CHECK_THROWS_AS(bcpc(h, w, backwards), NotACycleOfTop);
  std::vector<Point> fixed{1};
  CHECK_THROWS_AS(bcpc(h, w, fixed), NotACycleOfTop);

  WreathElement id_top = h.make({el(s3, "(1 2)"), 0, el(s3, "(1 2 3)")}, Permutation(3));
  BcpcProfile q = profile(h, id_top);
  REQUIRE(q.by_length.size() == 1);
  CHECK(q.by_length.at(1).size() == 3);
  CHECK(bcpc(h, id_top, fixed) == 0);
  CHECK(bcpc(h, h.identity(), fixed) == s3.classes().class_of[0]);
}

TEST_CASE("bcpc is invariant under rotation and relabelling") {
  FiniteGroup s4 = sym(4);
  WreathGroup h(s4, 5);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    WreathElement w = h.random_element(rng);
    for (const auto& c : cycle_decompose(w.top).cycles) {
      std::vector<Point> rot(c.begin() + 1, c.end());
      rot.push_back(c.front());
      CHECK(bcpc(h, w, rot) == bcpc(h, w, c));
    }
    WreathElement psi = h.make(std::vector<ElementId>(5, 0), h.random_element(rng).top);
    CHECK(profile(h, h.conj(w, psi)) == profile(h, w));
    CHECK(profile(h, h.conj(w, h.random_element(rng))) == profile(h, w));
  }
}

TEST_CASE("C2 wr Sym2 classes") {
  WreathGroup h(cyclic(2), 2);
  auto labels = brute_force_class_labels(h);
  std::map<std::uint32_t, int> sizes;
  for (auto l : labels) ++sizes[l];
  std::vector<int> s;
  for (auto [l, n] : sizes) s.push_back(n);
  std::sort(s.begin(), s.end());
  CHECK(s == std::vector<int>{1, 1, 2, 2, 2});
  auto by_code = class_sizes_by_code(h);
  std::vector<std::uint64_t> sorted(by_code.begin(), by_code.end());
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<std::uint64_t>{1, 1, 2, 2, 2, 2, 2, 2});
}

TEST_CASE("conj_test agrees with both oracles on all pairs") {
  for (auto [base, n] : {std::pair<const char*, std::size_t>{"cyclic(2)", 2}, {"cyclic(3)", 2}, {"sym3", 2}, {"cyclic(2)", 3}}) {
    CAPTURE(base);
    CAPTURE(n);
    WreathGroup h(named_group(base), n);
    auto all = h.enumerate();
    auto brute = brute_force_class_labels(h);
    auto embedded = embedded_labels(h);
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = 0; j < all.size(); ++j) {
        bool fast = conj_test(h, all[i], all[j]);
        CHECK(fast == (brute[i] == brute[j]));
        CHECK(fast == (embedded[i] == embedded[j]));
      }
    for (std::size_t i = 0; i < all.size(); i += 3) {
      std::size_t j = (i * 7 + 1) % all.size();
      CHECK(brute_force_conj(h, all[i], all[j]) == (brute[i] == brute[j]));
    }
  }
}

TEST_CASE("n = 1 reduces to base conjugacy") {
  FiniteGroup s4 = sym(4);
  WreathGroup h(s4, 1);
  for (ElementId a = 0; a < 24; ++a)
    for (ElementId b = 0; b < 24; ++b)
      CHECK(conj_test(h, h.make({a}, Permutation(1)), h.make({b}, Permutation(1))) ==
            (s4.classes().class_of[a] == s4.classes().class_of[b]));
}

TEST_CASE("class sizes by code match the embedded group") {
  WreathGroup h(sym(3), 3);
  FiniteGroup big = oracle::imprimitive_group(h);
  auto sizes = class_sizes_by_code(h);
  for (const auto& w : h.enumerate()) {
    ElementId x = big.index_of(oracle::imprimitive(h, w));
    CHECK(sizes[h.encode(w)] == big.classes().classes[big.classes().class_of[x]].size());
  }
}

TEST_CASE("distinguished element orbit for Alt5 and p = 2") {
  HpConstruction hp = build_hp(sym(5), 2);
  CHECK(hp.order == 28800);
  CHECK(hp.alpha1_class == 30);
  CHECK(hp.predicted == 3600);
  HpMeasurement m = measure_hp(hp);
  CHECK(m.measured == 3600);
  CHECK(m.maol_lower_bound == BigRational(1, 8));
  CHECK(m.target_bound == BigRational(1, 8));
  CHECK_THROWS_AS(build_hp(sym(5), 4), BadParameter);
  CHECK_THROWS_AS(build_hp(sym(5), 3, 1000), TooLarge);
}
