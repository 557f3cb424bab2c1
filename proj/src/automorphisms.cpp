#include "autorbit/automorphisms.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "autorbit/budget.hpp"
#include "autorbit/errors.hpp"

namespace autorbit {

CayleyTable::CayleyTable(const FiniteGroup& g) : order(g.order()), table(g.cayley_table()) {
  inverse.resize(order);
  element_order.resize(order);
  for (ElementId x = 0; x < order; ++x) {
    inverse[x] = g.inv(x);
    element_order[x] = g.element_order(x);
  }
}

Permutation inner_automorphism(const FiniteGroup& g, ElementId conjugator) {
  std::vector<Point> images(g.order());
  for (ElementId x = 0; x < g.order(); ++x) images[x] = static_cast<Point>(g.conj(x, conjugator));
  return Permutation(std::move(images));
}

namespace {

/// Automorphism-invariant label: order, class size, class sizes of x^k.
std::vector<std::uint32_t> fingerprints(const FiniteGroup& g, const CayleyTable& t) {
  const auto& cls = g.classes();
  auto class_size = [&](ElementId x) { return static_cast<std::uint64_t>(cls.classes[cls.class_of[x]].size()); };
  std::map<std::vector<std::uint64_t>, std::uint32_t> ids;
  std::vector<std::uint32_t> fp(t.order);
  for (ElementId x = 0; x < t.order; ++x) {
    std::vector<std::uint64_t> key{t.element_order[x], class_size(x)};
    ElementId y = x;
    for (std::uint64_t k = 2; k < t.element_order[x]; ++k) {
      y = t.mul(y, x);
      key.push_back(class_size(y));
    }
    auto [it, inserted] = ids.emplace(std::move(key), static_cast<std::uint32_t>(ids.size()));
    fp[x] = it->second;
  }
  return fp;
}

std::size_t closure_size(const CayleyTable& t, const std::vector<ElementId>& gens,
                         std::vector<char>& seen, std::vector<ElementId>& queue) {
  std::fill(seen.begin(), seen.end(), 0);
  queue.assign(1, 0);
  seen[0] = 1;
  for (std::size_t pos = 0; pos < queue.size(); ++pos)
    for (ElementId s : gens) {
      ElementId z = t.mul(queue[pos], s);
      if (!seen[z]) {
        seen[z] = 1;
        queue.push_back(z);
      }
    }
  return queue.size();
}

/// Greedy generating set: each step adds the element (highest order
/// first) that enlarges the generated subgroup the most.
std::vector<ElementId> small_generating_set(const CayleyTable& t) {
  std::vector<ElementId> by_order(t.order);
  std::iota(by_order.begin(), by_order.end(), ElementId{0});
  std::stable_sort(by_order.begin(), by_order.end(), [&](ElementId a, ElementId b) {
    return t.element_order[a] > t.element_order[b];
  });
  std::vector<ElementId> gens;
  std::vector<char> seen(t.order);
  std::vector<ElementId> queue;
  std::size_t current = 1;
  while (current < t.order) {
    ElementId best = 0;
    std::size_t best_size = current;
    for (ElementId x : by_order) {
      gens.push_back(x);
      std::size_t s = closure_size(t, gens, seen, queue);
      gens.pop_back();
      if (s > best_size) {
        best = x;
        best_size = s;
        if (s == t.order) break;
      }
    }
    gens.push_back(best);
    current = best_size;
  }
  return gens;
}

class AutSearch {
 public:
  AutSearch(const CayleyTable& t, std::vector<std::uint32_t> fp, std::vector<ElementId> gens,
            std::uint64_t budget)
      : t_(t), fp_(std::move(fp)), gens_(std::move(gens)), budget_(budget),
        images_(gens_.size()), phi_(t.order), used_(t.order) {
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      std::vector<ElementId> cands;
      for (ElementId y = 0; y < t.order; ++y)
        if (fp_[y] == fp_[gens_[i]]) cands.push_back(y);
      candidates_.push_back(std::move(cands));
    }
  }

  std::vector<Permutation> run() {
    descend(0);
    return std::move(found_);
  }

 private:
  static constexpr std::uint32_t kUnset = 0xffffffffu;

  /// Defines phi on <gens_[0..level]> from images_[0..level]; false if the
  /// assignment is not an injective, fingerprint-preserving homomorphism.
  bool extend(std::size_t level) {
    std::fill(phi_.begin(), phi_.end(), kUnset);
    std::fill(used_.begin(), used_.end(), 0);
    queue_.assign(1, 0);
    phi_[0] = 0;
    used_[0] = 1;
    for (std::size_t pos = 0; pos < queue_.size(); ++pos) {
      ElementId x = queue_[pos];
      for (std::size_t i = 0; i <= level; ++i) {
        ElementId z = t_.mul(x, gens_[i]);
        ElementId image = t_.mul(phi_[x], images_[i]);
        if (phi_[z] == kUnset) {
          if (used_[image] || fp_[image] != fp_[z]) return false;
          phi_[z] = image;
          used_[image] = 1;
          queue_.push_back(z);
        } else if (phi_[z] != image) {
          return false;
        }
      }
    }
    return true;
  }

  void descend(std::size_t level) {
    for (ElementId c : candidates_[level]) {
      if (++nodes_ > budget_)
        throw BudgetExceeded("automorphism search exceeded node budget of " +
                             std::to_string(budget_));
      if ((nodes_ & 0x3ff) == 0) check_deadline();
      images_[level] = c;
      if (!extend(level)) continue;
      if (level + 1 == gens_.size()) {
        std::vector<Point> p(t_.order);
        for (std::size_t x = 0; x < t_.order; ++x) p[x] = static_cast<Point>(phi_[x]);
        found_.emplace_back(std::move(p));
      } else {
        descend(level + 1);
      }
    }
  }

  const CayleyTable& t_;
  std::vector<std::uint32_t> fp_;
  std::vector<ElementId> gens_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::vector<ElementId>> candidates_;
  std::vector<ElementId> images_;
  std::vector<std::uint32_t> phi_;
  std::vector<char> used_;
  std::vector<ElementId> queue_;
  std::vector<Permutation> found_;
};

ElementSet inner_ids(const FiniteGroup& carrier, const FiniteGroup& aut) {
  ElementSet inner;
  for (ElementId g = 0; g < carrier.order(); ++g) {
    auto id = aut.find(inner_automorphism(carrier, g).images());
    if (!id) throw InvalidAutomorphism("automorphism group misses an inner automorphism");
    inner.push_back(*id);
  }
  std::sort(inner.begin(), inner.end());
  inner.erase(std::unique(inner.begin(), inner.end()), inner.end());
  return inner;
}

}  // namespace

AutomorphismGroup automorphism_group(const FiniteGroup& g, std::uint64_t node_budget,
                                     std::size_t max_order) {
  if (g.order() > max_order)
    throw TooLarge("automorphism search limited to groups of order <= " + std::to_string(max_order) +
                   ", got " + std::to_string(g.order()));
  std::size_t n = g.order();
  if (n == 1) {
    FiniteGroup trivial = close_group(1, {}, 1, "Aut(" + g.name() + ")");
    return {g, trivial, {0}};
  }
  CayleyTable t(g);
  std::vector<ElementId> gens = small_generating_set(t);
  AutSearch search(t, fingerprints(g, t), gens, node_budget);
  std::vector<Permutation> auts = search.run();
  std::sort(auts.begin(), auts.end());

  // generators: inner automorphisms of G's generators first, then any
  // automorphism not yet generated
  std::vector<Permutation> aut_gens;
  for (ElementId s : g.generator_ids()) {
    Permutation p = inner_automorphism(g, s);
    if (!p.is_identity()) aut_gens.push_back(std::move(p));
  }
  FiniteGroup a = close_group(n, aut_gens, auts.size(), "Aut(" + g.name() + ")");
  for (const auto& p : auts) {
    if (a.find(p.images())) continue;
    aut_gens.push_back(p);
    a = close_group(n, aut_gens, auts.size(), "Aut(" + g.name() + ")");
    if (a.order() == auts.size()) break;
  }
  if (a.order() != auts.size())
    throw std::logic_error("automorphism search returned a set that is not a group");
  ElementSet inner = inner_ids(g, a);
  if (inner.size() * center(g).size() != n)
    throw std::logic_error("|Inn(G)| differs from |G|/|Z(G)|");
  return {g, std::move(a), std::move(inner)};
}

AutomorphismGroup automorphism_group_from_generators(const FiniteGroup& g,
                                                     const std::vector<Permutation>& generators) {
  for (const auto& p : generators) validate_automorphism(g, p);
  FiniteGroup a = close_group(g.order(), generators, kDefaultClosureLimit, "Aut(" + g.name() + ")");
  ElementSet inner = inner_ids(g, a);
  return {g, std::move(a), std::move(inner)};
}

ElementSet orbit_of(ElementId x, const std::vector<Permutation>& gens) {
  ElementSet orbit{x};
  std::vector<char> seen;
  if (!gens.empty()) seen.assign(gens.front().degree(), 0);
  if (!gens.empty()) {
    if (x >= seen.size()) throw ActionMismatch("orbit_of: point outside the permutation domain");
    seen[x] = 1;
  }
  for (std::size_t pos = 0; pos < orbit.size(); ++pos)
    for (const auto& s : gens) {
      if (s.degree() != seen.size()) throw ActionMismatch("orbit_of: generator degree mismatch");
      ElementId y = s(orbit[pos]);
      if (!seen[y]) {
        seen[y] = 1;
        orbit.push_back(y);
      }
    }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

OrbitReport maol(const FiniteGroup& g, const AutomorphismGroup& a) {
  if (a.group.degree() != g.order() && !(g.order() == 1 && a.group.degree() == 1))
    throw ActionMismatch("automorphism group does not act on the elements of " + g.name());
  OrbitReport r;
  r.group = g.name();
  r.order = g.order();
  std::vector<char> done(g.order(), 0);
  for (ElementId x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    ElementSet orbit = orbit_of(x, a.group.generators());
    for (ElementId y : orbit) done[y] = 1;
    r.orbit_sizes.push_back(orbit.size());
  }
  std::sort(r.orbit_sizes.begin(), r.orbit_sizes.end(), std::greater<>());
  r.maol_length = r.orbit_sizes.front();
  r.maol = BigRational(static_cast<std::int64_t>(r.maol_length), static_cast<std::int64_t>(r.order));
  return r;
}

}  // namespace autorbit
