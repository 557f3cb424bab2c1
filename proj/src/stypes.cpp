#include "autorbit/stypes.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

#include "autorbit/automorphisms.hpp"
#include "autorbit/catalog.hpp"
#include "autorbit/errors.hpp"

namespace autorbit {

namespace {

ElementSet ids_in(const FiniteGroup& ambient, const FiniteGroup& sub) {
  ElementSet ids;
  ids.reserve(sub.order());
  for (ElementId x = 0; x < sub.order(); ++x) ids.push_back(ambient.index_of(sub.element(x)));
  std::sort(ids.begin(), ids.end());
  return ids;
}

struct ClassicalName {
  std::string family;
  std::size_t d = 0;
  std::uint64_t q = 0;
};

std::optional<ClassicalName> classical_name(const std::string& name) {
  char fam[4] = {};
  std::size_t d = 0;
  unsigned long long q = 0;
  int used = 0;
  if (std::sscanf(name.c_str(), "%3[a-z](%zu,%llu)%n", fam, &d, &q, &used) != 3 ||
      used != static_cast<int>(name.size()))
    return std::nullopt;
  return ClassicalName{fam, d, q};
}

}  // namespace

SimpleAmbient simple_ambient(const FiniteGroup& s) {
  const std::string name = canonical_group_name(s.name());
  SimpleAmbient a{s, {}};
  const bool natural_alt = name == "alt" + std::to_string(s.degree()) && s.degree() >= 5 &&
                           s.degree() != 6;
  if (natural_alt) {
    a.aut = sym(s.degree());
    a.socle = ids_in(a.aut, s);
  } else if (name == "psl(3,4)") {
    a.aut = extended_aut_psl34();
    a.socle = derived_series(a.aut).back();
  } else if (auto c = classical_name(name); c && c->d >= 3 &&
             (c->family == "psl" || (c->family == "pgl" && std::gcd<std::uint64_t>(c->d, c->q - 1) == 1))) {
    a.aut = extended_aut_psl(c->d, c->q);
    a.socle = derived_series(a.aut).back();
  } else if (auto u = classical_name(name); u && u->d >= 3 && std::gcd<std::uint64_t>(u->d, u->q + 1) == 1 &&
             (u->family == "psu" || u->family == "pgu")) {
    a.aut = projective_semilinear_group(ClassicalKind::SU, u->d, u->q);
    a.socle = derived_series(a.aut).back();
  } else {
    AutomorphismGroup ag = automorphism_group(s);
    a.aut = ag.group;
    a.socle = ag.inner;
  }
  if (a.socle.size() != s.order())
    throw std::logic_error("simple_ambient: socle of order " + std::to_string(a.socle.size()) +
                           " for " + s.name());
  return a;
}

OutQuotient out_quotient(const FiniteGroup& aut_s, const ElementSet& s) {
  return {quotient_map(aut_s, s)};
}

CoarseTyping coarse_typing(const FiniteGroup& aut_s, const ElementSet& s, const ElementSet& d) {
  if (!std::includes(d.begin(), d.end(), s.begin(), s.end()))
    throw BadParameter("designated subgroup D does not contain S");
  QuotientMap q = quotient_map(aut_s, d);
  if (!is_abelian(q.group))
    throw NonAbelianQuotient("Aut(S)/D of order " + std::to_string(q.group.order()) +
                             " is not abelian");
  return {std::move(q)};
}

BigRational ClassTypeTable::h() const {
  BigRational best(0);
  for (const auto& c : classes) best = std::max(best, c.rho);
  return best;
}

ClassTypeTable class_type_table(const FiniteGroup& aut_s, const ElementSet& s,
                                const CoarseTyping* typing) {
  OutQuotient out = out_quotient(aut_s, s);
  const auto& out_cls = out.map.group.classes();
  const auto& cls = aut_s.classes();
  std::optional<CoarseTyping> own;
  if (!typing && is_abelian(out.map.group)) {
    own = CoarseTyping{out.map};
    typing = &*own;
  }

  ClassTypeTable t;
  t.socle_order = s.size();
  t.out_order = out.order();
  for (const auto& c : out_cls.classes) t.type_sizes.push_back(c.size());
  for (std::size_t c = 0; c < cls.size(); ++c) {
    ElementId rep = cls.representative(c);
    ClassTypeEntry e;
    e.size = cls.classes[c].size();
    e.type = out_cls.class_of[out.map.image[rep]];
    e.rho = BigRational(static_cast<std::int64_t>(e.size),
                        static_cast<std::int64_t>(t.socle_order * t.type_sizes[e.type]));
    if (typing) e.coarse = typing->map.image[rep];
    t.type_of_class.push_back(e.type);
    t.classes.push_back(std::move(e));
  }
  return t;
}

BigRational h_value(const FiniteGroup& aut_s, const ElementSet& s) {
  return class_type_table(aut_s, s).h();
}

CoarseTypeSet ct_set(const WreathGroup& h, const WreathElement& w, const CoarseTyping& typing) {
  if (h.base().order() != typing.map.image.size())
    throw ShapeMismatch("coarse typing does not match the wreath base group");
  CoarseTypeSet out;
  for (const auto& cycle : cycle_decompose(w.top).cycles)
    out.push_back(typing.map.image[bcpc_element(h, w, cycle)]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool ct_power_check(const WreathGroup& h, const WreathElement& w, std::int64_t k,
                    const CoarseTyping& typing) {
  std::uint64_t ord = w.top.order();
  std::uint64_t abs_k = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  if (std::gcd(abs_k, ord) != 1)
    throw GcdViolation("k = " + std::to_string(k) + " is not coprime to the top order " +
                       std::to_string(ord));
  CoarseTypeSet lhs = ct_set(h, h.power(w, k), typing);
  CoarseTypeSet rhs;
  for (ElementId t : ct_set(h, w, typing)) rhs.push_back(typing.map.group.power(t, k));
  std::sort(rhs.begin(), rhs.end());
  rhs.erase(std::unique(rhs.begin(), rhs.end()), rhs.end());
  return lhs == rhs;
}

}  // namespace autorbit
