#include "autorbit/finite_group.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "autorbit/budget.hpp"
#include "autorbit/errors.hpp"

namespace autorbit {

namespace {

constexpr std::uint32_t kEmpty = 0xffffffffu;

std::uint64_t hash_images(std::span<const Point> v) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (Point x : v) {
    h ^= x;
    h *= 0x100000001b3ull;
  }
  h ^= h >> 29;
  h *= 0xbf58476d1ce4e5b9ull;
  h ^= h >> 32;
  return h;
}

/// Open-addressing map from image arrays (stored in a flat buffer) to ids.
class ElementIndex {
 public:
  ElementIndex() = default;
  ElementIndex(std::size_t degree, std::size_t expected) : degree_(degree) {
    std::size_t cap = 16;
    while (cap < 2 * expected) cap <<= 1;
    slots_.assign(cap, kEmpty);
  }

  std::optional<ElementId> find(const std::vector<Point>& data, std::span<const Point> key) const {
    std::size_t mask = slots_.size() - 1;
    for (std::size_t i = hash_images(key) & mask;; i = (i + 1) & mask) {
      std::uint32_t id = slots_[i];
      if (id == kEmpty) return std::nullopt;
      if (std::equal(key.begin(), key.end(), data.begin() + static_cast<std::ptrdiff_t>(id * degree_)))
        return id;
    }
  }

  /// Inserts id (whose images are already in data) assuming absent.
  void insert(const std::vector<Point>& data, ElementId id) {
    if (2 * (count_ + 1) > slots_.size()) grow(data);
    place(data, id);
    ++count_;
  }

 private:
  void place(const std::vector<Point>& data, ElementId id) {
    std::size_t mask = slots_.size() - 1;
    std::span<const Point> key(data.data() + static_cast<std::size_t>(id) * degree_, degree_);
    std::size_t i = hash_images(key) & mask;
    while (slots_[i] != kEmpty) i = (i + 1) & mask;
    slots_[i] = id;
  }

  void grow(const std::vector<Point>& data) {
    std::vector<std::uint32_t> old = std::move(slots_);
    slots_.assign(old.size() * 2, kEmpty);
    for (std::uint32_t id : old)
      if (id != kEmpty) place(data, id);
  }

  std::size_t degree_ = 0;
  std::size_t count_ = 0;
  std::vector<std::uint32_t> slots_;
};

thread_local std::vector<Point> tl_scratch;

}  // namespace

struct FiniteGroup::Storage {
  std::size_t degree = 0;
  std::size_t order = 0;
  std::vector<Point> data;
  ElementIndex index;
  std::vector<Permutation> generators;
  std::vector<ElementId> generator_ids;
  std::vector<ElementId> inverses;

  mutable std::once_flag classes_once;
  mutable ConjClassTable classes;
  mutable std::once_flag cayley_once;
  mutable std::vector<ElementId> cayley;
};

std::size_t ConjClassTable::largest_class_size() const {
  std::size_t m = 0;
  for (const auto& c : classes) m = std::max(m, c.size());
  return m;
}

std::size_t FiniteGroup::degree() const { return s_->degree; }
std::size_t FiniteGroup::order() const { return s_->order; }
const std::string& FiniteGroup::name() const { return name_; }

FiniteGroup FiniteGroup::renamed(std::string name) const {
  FiniteGroup g(*this);
  g.name_ = std::move(name);
  return g;
}

std::span<const Point> FiniteGroup::element(ElementId id) const {
  return {s_->data.data() + static_cast<std::size_t>(id) * s_->degree, s_->degree};
}

Permutation FiniteGroup::permutation(ElementId id) const {
  auto e = element(id);
  return Permutation(std::vector<Point>(e.begin(), e.end()));
}

std::optional<ElementId> FiniteGroup::find(std::span<const Point> images) const {
  if (images.size() != s_->degree) return std::nullopt;
  return s_->index.find(s_->data, images);
}

ElementId FiniteGroup::index_of(std::span<const Point> images) const {
  auto id = find(images);
  if (!id) throw BadParameter("permutation is not an element of group " + name_);
  return *id;
}

const std::vector<Permutation>& FiniteGroup::generators() const { return s_->generators; }
const std::vector<ElementId>& FiniteGroup::generator_ids() const { return s_->generator_ids; }

ElementId FiniteGroup::mul(ElementId a, ElementId b) const {
  auto pa = element(a);
  auto pb = element(b);
  tl_scratch.resize(s_->degree);
  for (std::size_t x = 0; x < s_->degree; ++x) tl_scratch[x] = pa[pb[x]];
  return *s_->index.find(s_->data, tl_scratch);
}

ElementId FiniteGroup::inv(ElementId a) const { return s_->inverses[a]; }

ElementId FiniteGroup::conj(ElementId x, ElementId g) const {
  auto px = element(x);
  auto pg = element(g);
  auto pgi = element(s_->inverses[g]);
  tl_scratch.resize(s_->degree);
  for (std::size_t i = 0; i < s_->degree; ++i) tl_scratch[i] = pg[px[pgi[i]]];
  return *s_->index.find(s_->data, tl_scratch);
}

ElementId FiniteGroup::power(ElementId x, std::int64_t k) const {
  auto ord = static_cast<std::int64_t>(element_order(x));
  k %= ord;
  if (k < 0) k += ord;
  ElementId result = 0;
  ElementId base = x;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::uint64_t FiniteGroup::element_order(ElementId x) const {
  auto p = element(x);
  std::vector<bool> seen(s_->degree, false);
  std::uint64_t result = 1;
  for (std::size_t start = 0; start < s_->degree; ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    for (std::size_t y = start; !seen[y]; y = p[y]) {
      seen[y] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

const ConjClassTable& FiniteGroup::classes() const {
  std::call_once(s_->classes_once, [this] { s_->classes = conjugacy_classes(*this); });
  return s_->classes;
}

const std::vector<ElementId>& FiniteGroup::cayley_table() const {
  if (order() > kMaxCayleyOrder)
    throw TooLarge("Cayley table requested for group of order " + std::to_string(order()));
  std::call_once(s_->cayley_once, [this] {
    std::size_t n = order();
    std::vector<ElementId> t(n * n);
    for (ElementId a = 0; a < n; ++a)
      for (ElementId b = 0; b < n; ++b) t[a * n + b] = mul(a, b);
    s_->cayley = std::move(t);
  });
  return s_->cayley;
}

FiniteGroup close_group(std::size_t degree, const std::vector<Permutation>& generators,
                        std::size_t limit, std::string name) {
  for (const auto& g : generators)
    if (g.degree() != degree) throw DegreeMismatch("close_group: generator degree mismatch");
  if (degree == 0 || degree > kMaxDegree) throw BadParameter("close_group: bad degree");

  std::vector<Point> data(degree);
  std::iota(data.begin(), data.end(), Point{0});
  ElementIndex index(degree, 64);
  index.insert(data, 0);
  std::size_t count = 1;
  std::vector<Point> tmp(degree);

  for (std::size_t pos = 0; pos < count; ++pos) {
    if ((pos & 0xfff) == 0) check_deadline();
    for (const auto& g : generators) {
      const Point* x = data.data() + pos * degree;
      for (std::size_t i = 0; i < degree; ++i) tmp[i] = x[g(i)];
      if (index.find(data, tmp)) continue;
      if (count >= limit)
        throw ClosureLimitExceeded("group closure exceeded limit of " + std::to_string(limit) +
                                   " elements");
      data.insert(data.end(), tmp.begin(), tmp.end());
      index.insert(data, static_cast<ElementId>(count));
      ++count;
    }
  }

  std::vector<std::uint32_t> perm(count);
  std::iota(perm.begin(), perm.end(), 0u);
  std::sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
    return std::lexicographical_compare(data.begin() + a * degree, data.begin() + (a + 1) * degree,
                                        data.begin() + b * degree, data.begin() + (b + 1) * degree);
  });

  auto s = std::make_shared<FiniteGroup::Storage>();
  s->degree = degree;
  s->order = count;
  s->data.resize(count * degree);
  for (std::size_t i = 0; i < count; ++i)
    std::copy_n(data.begin() + perm[i] * degree, degree, s->data.begin() + i * degree);
  data.clear();
  data.shrink_to_fit();
  s->index = ElementIndex(degree, count);
  for (std::size_t i = 0; i < count; ++i) s->index.insert(s->data, static_cast<ElementId>(i));

  s->generators = generators;
  for (const auto& g : generators) s->generator_ids.push_back(*s->index.find(s->data, g.images()));

  s->inverses.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    const Point* x = s->data.data() + i * degree;
    for (std::size_t j = 0; j < degree; ++j) tmp[x[j]] = static_cast<Point>(j);
    s->inverses[i] = *s->index.find(s->data, tmp);
  }

  FiniteGroup g(std::move(s));
  g.name_ = std::move(name);
  return g;
}

ConjClassTable conjugacy_classes(const FiniteGroup& g) {
  ConjClassTable t;
  std::size_t n = g.order();
  t.class_of.assign(n, kEmpty);
  const auto& gens = g.generator_ids();
  std::vector<ElementId> frontier;
  for (ElementId x = 0; x < n; ++x) {
    if (t.class_of[x] != kEmpty) continue;
    auto cid = static_cast<std::uint32_t>(t.classes.size());
    ElementSet cls{x};
    t.class_of[x] = cid;
    frontier.assign(1, x);
    while (!frontier.empty()) {
      ElementId y = frontier.back();
      frontier.pop_back();
      for (ElementId s : gens) {
        ElementId z = g.conj(y, s);
        if (t.class_of[z] == kEmpty) {
          t.class_of[z] = cid;
          cls.push_back(z);
          frontier.push_back(z);
        }
      }
    }
    if ((cid & 0xff) == 0) check_deadline();
    std::sort(cls.begin(), cls.end());
    t.classes.push_back(std::move(cls));
  }
  return t;
}

std::uint64_t mcs(const FiniteGroup& g) { return g.order() / g.classes().largest_class_size(); }

Subgroup subgroup_closure(const FiniteGroup& g, std::span<const ElementId> generators) {
  Subgroup h;
  h.generators.assign(generators.begin(), generators.end());
  std::vector<bool> in(g.order(), false);
  in[0] = true;
  h.elements.push_back(0);
  for (std::size_t pos = 0; pos < h.elements.size(); ++pos) {
    for (ElementId s : h.generators) {
      ElementId z = g.mul(h.elements[pos], s);
      if (!in[z]) {
        in[z] = true;
        h.elements.push_back(z);
      }
    }
  }
  std::sort(h.elements.begin(), h.elements.end());
  return h;
}

Subgroup normal_closure(const FiniteGroup& g, std::span<const ElementId> seeds,
                        std::span<const ElementId> conjugators) {
  std::vector<ElementId> gens;
  for (ElementId s : seeds)
    if (s != 0) gens.push_back(s);
  Subgroup h = subgroup_closure(g, gens);
  for (;;) {
    std::vector<ElementId> extra;
    for (ElementId c : conjugators) {
      for (ElementId s : h.generators) {
        ElementId z = g.conj(s, c);
        if (!std::binary_search(h.elements.begin(), h.elements.end(), z) &&
            std::find(extra.begin(), extra.end(), z) == extra.end())
          extra.push_back(z);
      }
    }
    if (extra.empty()) return h;
    gens = h.generators;
    gens.insert(gens.end(), extra.begin(), extra.end());
    h = subgroup_closure(g, gens);
  }
}

bool is_normal(const FiniteGroup& g, const ElementSet& n) {
  for (ElementId c : g.generator_ids())
    for (ElementId x : n)
      if (!std::binary_search(n.begin(), n.end(), g.conj(x, c))) return false;
  return true;
}

ElementSet center(const FiniteGroup& g) {
  ElementSet z;
  for (ElementId x = 0; x < g.order(); ++x) {
    bool central = true;
    for (ElementId s : g.generator_ids())
      if (g.mul(x, s) != g.mul(s, x)) {
        central = false;
        break;
      }
    if (central) z.push_back(x);
  }
  return z;
}

bool is_abelian(const FiniteGroup& g) {
  const auto& gens = g.generator_ids();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i])) return false;
  return true;
}

std::vector<ElementSet> derived_series(const FiniteGroup& g) {
  std::vector<ElementSet> series;
  Subgroup current;
  current.generators = g.generator_ids();
  current.elements.resize(g.order());
  std::iota(current.elements.begin(), current.elements.end(), ElementId{0});
  series.push_back(current.elements);
  for (;;) {
    std::vector<ElementId> commutators;
    const auto& gens = current.generators;
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        ElementId a = gens[i], b = gens[j];
        ElementId c = g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)));
        if (c != 0) commutators.push_back(c);
      }
    Subgroup next = normal_closure(g, commutators, current.generators);
    if (next.elements.size() == current.elements.size()) break;
    series.push_back(next.elements);
    current = std::move(next);
  }
  return series;
}

bool is_solvable(const FiniteGroup& g) { return derived_series(g).back().size() == 1; }

QuotientMap quotient_map(const FiniteGroup& g, const ElementSet& n) {
  if (n.empty() || n.front() != 0 || !std::is_sorted(n.begin(), n.end()))
    throw BadParameter("quotient: N must be a sorted subgroup containing the identity");
  if (!is_normal(g, n)) throw NotNormal("quotient: subgroup is not normal");

  std::size_t order = g.order();
  std::vector<std::uint32_t> coset_of(order, kEmpty);
  std::vector<ElementSet> cosets;
  for (ElementId x = 0; x < order; ++x) {
    if (coset_of[x] != kEmpty) continue;
    auto cid = static_cast<std::uint32_t>(cosets.size());
    ElementSet coset;
    coset.reserve(n.size());
    for (ElementId m : n) {
      ElementId y = g.mul(m, x);
      if (coset_of[y] != kEmpty) throw NotNormal("quotient: N is not a subgroup");
      coset_of[y] = cid;
      coset.push_back(y);
    }
    std::sort(coset.begin(), coset.end());
    cosets.push_back(std::move(coset));
  }
  std::size_t k = cosets.size();
  if (k > kMaxDegree) throw TooLarge("quotient: too many cosets for a permutation action");

  // g acts by left multiplication: coset(x) -> coset(g x)
  auto action = [&](ElementId e) {
    std::vector<Point> images(k);
    for (std::size_t c = 0; c < k; ++c) images[c] = static_cast<Point>(coset_of[g.mul(e, cosets[c].front())]);
    return Permutation(std::move(images));
  };
  std::vector<Permutation> gens;
  for (ElementId s : g.generator_ids()) gens.push_back(action(s));
  FiniteGroup quotient = close_group(k, gens, kDefaultClosureLimit,
                                    g.name().empty() ? std::string{} : g.name() + "/N");
  if (quotient.order() != k) throw NotNormal("quotient: coset action is not regular");

  std::vector<ElementId> coset_image(k);
  for (std::size_t c = 0; c < k; ++c) coset_image[c] = quotient.index_of(action(cosets[c].front()));
  std::vector<ElementId> image(order);
  for (ElementId x = 0; x < order; ++x) image[x] = coset_image[coset_of[x]];
  return QuotientMap{std::move(quotient), std::move(image), std::move(cosets)};
}

FiniteGroup quotient_group(const FiniteGroup& g, const ElementSet& n) {
  return quotient_map(g, n).group;
}

void validate_automorphism(const FiniteGroup& g, const Permutation& aut) {
  if (aut.degree() != g.order())
    throw InvalidAutomorphism("automorphism degree differs from group order");
  if (aut(0) != 0) throw InvalidAutomorphism("automorphism does not fix the identity");
  // products along every Cayley-graph edge determine a homomorphism
  for (ElementId x = 0; x < g.order(); ++x)
    for (ElementId s : g.generator_ids())
      if (aut(g.mul(x, s)) != g.mul(aut(x), aut(s)))
        throw InvalidAutomorphism("map does not preserve products");
}

bool is_characteristic(const FiniteGroup& g, const ElementSet& n,
                       const std::vector<Permutation>& auts) {
  for (const auto& a : auts) validate_automorphism(g, a);
  for (const auto& a : auts)
    for (ElementId x : n)
      if (!std::binary_search(n.begin(), n.end(), static_cast<ElementId>(a(x)))) return false;
  return true;
}

}  // namespace autorbit
