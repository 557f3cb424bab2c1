#include <doctest.h>

#include <set>

#include "autorbit/automorphisms.hpp"
#include "autorbit/catalog.hpp"
#include "autorbit/errors.hpp"
#include "oracles.hpp"

using namespace autorbit;

namespace {

std::set<std::vector<ElementId>> as_maps(const AutomorphismGroup& a) {
  std::set<std::vector<ElementId>> out;
  for (ElementId x = 0; x < a.group.order(); ++x) {
    auto img = a.group.element(x);
    out.emplace(img.begin(), img.end());
  }
  return out;
}

}  // namespace

TEST_CASE("small automorphism groups") {
  CHECK(automorphism_group(cyclic(5)).group.order() == 4);
  AutomorphismGroup s3 = automorphism_group(sym(3));
  CHECK(s3.group.order() == 6);
  CHECK(s3.inner.size() == 6);
  AutomorphismGroup a5 = automorphism_group(alt(5));
  CHECK(a5.group.order() == 120);
  CHECK(a5.inner.size() == 60);
  CHECK(mcs(a5.group) == 4);
  CHECK(automorphism_group(cyclic(12)).group.order() == 4);
  CHECK(automorphism_group(sym(4)).group.order() == 24);
}

TEST_CASE("search agrees with trying every generator image") {
  for (const char* name : {"cyclic(12)", "sym3", "sym4", "alt4", "extraspecial(3)", "alt5"}) {
    CAPTURE(name);
    FiniteGroup g = named_group(name);
    AutomorphismGroup a = automorphism_group(g);
    auto brute = oracle::all_automorphisms(g);
    std::set<std::vector<ElementId>> expected(brute.begin(), brute.end());
    CHECK(as_maps(a) == expected);
    CHECK(maol(g, a).maol == oracle::maol(g.order(), brute));
  }
}

TEST_CASE("every automorphism preserves the multiplication table") {
  for (const char* name : {"sym4", "extraspecial(3)", "alt5", "pgl(2,3)", "psl(3,2)"}) {
    CAPTURE(name);
    FiniteGroup g = named_group(name);
    AutomorphismGroup a = automorphism_group(g);
    CHECK(a.group.order() % (g.order() / center(g).size()) == 0);
    bool exhaustive = g.order() <= 200;
    for (ElementId f = 0; f < a.group.order(); f += exhaustive ? 1 : 97) {
      auto phi = a.group.element(f);
      for (ElementId x = 0; x < g.order(); ++x)
        for (ElementId y = 0; y < g.order(); y += exhaustive ? 1 : 7)
          CHECK(phi[g.mul(x, y)] == g.mul(phi[x], phi[y]));
    }
  }
}

TEST_CASE("maol values") {
  FiniteGroup c5 = cyclic(5);
  OrbitReport r = maol(c5, automorphism_group(c5));
  CHECK(r.maol == BigRational(4, 5));
  CHECK(r.orbit_sizes == std::vector<std::uint64_t>{4, 1});
  CHECK(r.maol_length == 4);

  // the whole of the non-central part is one orbit of length 24
  FiniteGroup he = extraspecial_p3_exponent_p(3);
  OrbitReport e = maol(he, automorphism_group(he));
  CHECK(e.maol == BigRational(8, 9));
  CHECK(e.orbit_sizes == std::vector<std::uint64_t>{24, 2, 1});

  FiniteGroup psl28 = named_group("psl(2,8)");
  CHECK(maol(psl28, automorphism_group(psl28)).maol == BigRational(3, 7));
}

TEST_CASE("orbits") {
  FiniteGroup s5 = sym(5);
  std::vector<Permutation> inner;
  for (ElementId g : s5.generator_ids()) inner.push_back(inner_automorphism(s5, g));
  CHECK(orbit_of(0, inner) == ElementSet{0});
  ElementId four = s5.index_of(parse_cycles("(1 2 3 4)", 5));
  CHECK(orbit_of(four, inner).size() == 30);
}

TEST_CASE("stored generators are validated") {
  FiniteGroup s3 = sym(3);
  AutomorphismGroup a = automorphism_group(s3);
  CHECK(automorphism_group_from_generators(s3, a.group.generators()).group.order() == 6);
  std::vector<Point> swap{0, 2, 1, 3, 4, 5};
  CHECK_THROWS_AS(automorphism_group_from_generators(s3, {Permutation(swap)}), InvalidAutomorphism);
  CHECK_THROWS_AS(maol(sym(4), a), ActionMismatch);
  CHECK_THROWS_AS(automorphism_group(sym(7)), TooLarge);
  CHECK_THROWS_AS(automorphism_group(alt(5), 3), BudgetExceeded);
}
