#include "autorbit/wreath.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "autorbit/budget.hpp"
#include "autorbit/catalog.hpp"
#include "autorbit/errors.hpp"
#include "autorbit/field.hpp"

namespace autorbit {

namespace {

std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) return std::nullopt;
  return r;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t a, std::size_t e) {
  std::optional<std::uint64_t> r = 1;
  for (std::size_t i = 0; i < e && r; ++i) r = checked_mul(*r, a);
  return r;
}

std::optional<std::uint64_t> factorial(std::size_t n) {
  std::optional<std::uint64_t> r = 1;
  for (std::size_t i = 2; i <= n && r; ++i) r = checked_mul(*r, i);
  return r;
}

ClassMultiset to_multiset(const std::map<std::uint32_t, std::uint32_t>& counts) {
  return ClassMultiset(counts.begin(), counts.end());
}

}  // namespace

std::uint64_t permutation_rank(const Permutation& p) {
  const std::size_t n = p.degree();
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      if (p(j) < p(i)) ++smaller;
    rank = rank * (n - i) + smaller;
  }
  return rank;
}

Permutation permutation_unrank(std::size_t n, std::uint64_t rank) {
  std::vector<std::uint64_t> digits(n);
  for (std::size_t i = n; i-- > 0;) {
    digits[i] = rank % (n - i);
    rank /= (n - i);
  }
  std::vector<Point> avail(n);
  for (std::size_t i = 0; i < n; ++i) avail[i] = static_cast<Point>(i);
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i) {
    images[i] = avail[digits[i]];
    avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(digits[i]));
  }
  return Permutation(std::move(images));
}

WreathGroup::WreathGroup(FiniteGroup base, std::size_t n) : WreathGroup(std::move(base), sym(n)) {}

WreathGroup::WreathGroup(FiniteGroup base, FiniteGroup top)
    : base_(std::move(base)), top_(std::move(top)), n_(top_.degree()) {
  if (n_ == 0) throw BadParameter("wreath product needs n >= 1");
  if (base_.order() <= FiniteGroup::kMaxCayleyOrder) table_ = &base_.cayley_table();
}

std::optional<std::uint64_t> WreathGroup::order() const {
  auto b = checked_pow(base_.order(), n_);
  return b ? checked_mul(*b, top_.order()) : std::nullopt;
}

WreathElement WreathGroup::identity() const {
  return {std::vector<ElementId>(n_, 0), Permutation(n_)};
}

WreathElement WreathGroup::make(std::vector<ElementId> base, Permutation top) const {
  WreathElement w{std::move(base), std::move(top)};
  check_shape(w);
  return w;
}

void WreathGroup::check_shape(const WreathElement& w) const {
  if (w.base.size() != n_ || w.top.degree() != n_)
    throw ShapeMismatch("wreath element has " + std::to_string(w.base.size()) +
                        " coordinates and top degree " + std::to_string(w.top.degree()) +
                        ", expected " + std::to_string(n_));
  for (ElementId g : w.base)
    if (g >= base_.order()) throw ShapeMismatch("base entry outside the base group");
  if (!top_.find(w.top.images())) throw ShapeMismatch("top permutation outside the top group");
}

WreathElement WreathGroup::mul(const WreathElement& a, const WreathElement& b) const {
  if (a.base.size() != n_ || b.base.size() != n_ || a.top.degree() != n_ || b.top.degree() != n_)
    throw ShapeMismatch("wreath product of elements of different shapes");
  std::vector<Point> sinv(n_);
  for (std::size_t i = 0; i < n_; ++i) sinv[a.top(i)] = static_cast<Point>(i);
  std::vector<ElementId> base(n_);
  for (std::size_t i = 0; i < n_; ++i) base[i] = base_mul(a.base[i], b.base[sinv[i]]);
  return {std::move(base), compose(a.top, b.top)};
}

WreathElement WreathGroup::inv(const WreathElement& a) const {
  if (a.base.size() != n_ || a.top.degree() != n_) throw ShapeMismatch("wreath inverse: bad shape");
  std::vector<ElementId> base(n_);
  for (std::size_t i = 0; i < n_; ++i) base[i] = base_.inv(a.base[a.top(i)]);
  return {std::move(base), inverse(a.top)};
}

WreathElement WreathGroup::conj(const WreathElement& a, const WreathElement& b) const {
  return mul(mul(b, a), inv(b));
}

WreathElement WreathGroup::power(const WreathElement& a, std::int64_t k) const {
  WreathElement x = k < 0 ? inv(a) : a;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  WreathElement r = identity();
  while (e) {
    if (e & 1) r = mul(r, x);
    e >>= 1;
    if (e) x = mul(x, x);
  }
  return r;
}

std::vector<WreathElement> WreathGroup::generators() const {
  std::vector<WreathElement> gens;
  for (std::size_t i = 0; i < n_; ++i)
    for (ElementId s : base_.generator_ids()) {
      if (s == 0) continue;
      WreathElement w = identity();
      w.base[i] = s;
      gens.push_back(std::move(w));
    }
  for (const auto& t : top_.generators()) {
    if (t.is_identity()) continue;
    gens.push_back({std::vector<ElementId>(n_, 0), t});
  }
  return gens;
}

WreathElement WreathGroup::random_element(std::mt19937_64& rng) const {
  std::uniform_int_distribution<ElementId> pick_base(0, static_cast<ElementId>(base_.order() - 1));
  std::uniform_int_distribution<ElementId> pick_top(0, static_cast<ElementId>(top_.order() - 1));
  std::vector<ElementId> base(n_);
  for (auto& g : base) g = pick_base(rng);
  return {std::move(base), top_.permutation(pick_top(rng))};
}

std::uint64_t WreathGroup::encode(const WreathElement& w) const {
  auto b = checked_pow(base_.order(), n_);
  auto f = factorial(n_);
  if (!b || !f || !checked_mul(*b, *f))
    throw TooLarge("wreath element codes do not fit 64 bits");
  std::uint64_t code = 0;
  for (std::size_t i = n_; i-- > 0;) code = code * base_.order() + w.base[i];
  return code + permutation_rank(w.top) * *b;
}

WreathElement WreathGroup::decode(std::uint64_t code) const {
  auto b = checked_pow(base_.order(), n_);
  if (!b) throw TooLarge("wreath element codes do not fit 64 bits");
  WreathElement w{std::vector<ElementId>(n_), permutation_unrank(n_, code / *b)};
  code %= *b;
  for (std::size_t i = 0; i < n_; ++i) {
    w.base[i] = static_cast<ElementId>(code % base_.order());
    code /= base_.order();
  }
  return w;
}

std::vector<WreathElement> WreathGroup::enumerate(std::uint64_t limit) const {
  auto ord = order();
  if (!ord || *ord > limit)
    throw TooLarge("wreath group " + base_.name() + " wr " + top_.name() + " exceeds " +
                   std::to_string(limit) + " elements");
  std::vector<WreathElement> all;
  all.reserve(*ord);
  for (ElementId t = 0; t < top_.order(); ++t) {
    Permutation top = top_.permutation(t);
    std::vector<ElementId> base(n_, 0);
    while (true) {
      all.push_back({base, top});
      std::size_t i = 0;
      while (i < n_ && ++base[i] == base_.order()) base[i++] = 0;
      if (i == n_) break;
    }
  }
  return all;
}

ElementId bcpc_element(const WreathGroup& h, const WreathElement& w, std::span<const Point> cycle) {
  const std::size_t n = h.n();
  if (cycle.empty() || w.top.degree() != n) throw NotACycleOfTop("empty cycle or shape mismatch");
  std::vector<char> seen(n, 0);
  for (std::size_t j = 0; j < cycle.size(); ++j) {
    Point i = cycle[j];
    if (i >= n || seen[i]) throw NotACycleOfTop("cycle repeats a point or leaves the domain");
    seen[i] = 1;
    if (w.top(i) != cycle[(j + 1) % cycle.size()])
      throw NotACycleOfTop("points are not consecutive under the top permutation");
  }
  ElementId prod = 0;
  for (Point i : cycle) prod = h.base_mul(w.base[i], prod);
  return prod;
}

std::uint32_t bcpc(const WreathGroup& h, const WreathElement& w, std::span<const Point> cycle) {
  return h.base().classes().class_of[bcpc_element(h, w, cycle)];
}

BcpcProfile profile(const WreathGroup& h, const WreathElement& w,
                    const std::vector<std::uint32_t>* class_types) {
  std::map<std::size_t, std::map<std::uint32_t, std::uint32_t>> plain;
  std::map<std::pair<std::size_t, std::uint32_t>, std::map<std::uint32_t, std::uint32_t>> refined;
  for (const auto& cycle : cycle_decompose(w.top).cycles) {
    std::uint32_t c = bcpc(h, w, cycle);
    ++plain[cycle.size()][c];
    if (class_types) ++refined[{cycle.size(), class_types->at(c)}][c];
  }
  BcpcProfile p;
  for (const auto& [l, counts] : plain) p.by_length[l] = to_multiset(counts);
  for (const auto& [key, counts] : refined) p.by_length_and_type[key] = to_multiset(counts);
  return p;
}

bool conj_test(const WreathGroup& h, const WreathElement& v, const WreathElement& w) {
  if (v.base.size() != h.n() || w.base.size() != h.n()) throw ShapeMismatch("conj_test: bad shape");
  if (cycle_decompose(v.top).cycle_type() != cycle_decompose(w.top).cycle_type()) return false;
  return profile(h, v).by_length == profile(h, w).by_length;
}

bool brute_force_conj(const WreathGroup& h, const WreathElement& v, const WreathElement& w,
                      std::uint64_t limit) {
  auto ord = h.order();
  if (!ord || *ord > limit)
    throw TooLarge("brute-force conjugacy limited to " + std::to_string(limit) + " elements");
  const std::size_t n = h.n();
  const FiniteGroup& g = h.base();
  const FiniteGroup& top = h.top();
  std::vector<Point> winv(n), kinv(n);
  for (std::size_t i = 0; i < n; ++i) winv[w.top(i)] = static_cast<Point>(i);
  std::vector<ElementId> k(n);
  // k v = w k, with k = (k_i) psi: tops give psi v.top = w.top psi, and
  // coordinate i gives k_i v_{psi^-1(i)} = w_i k_{w.top^-1(i)}.
  for (ElementId t = 0; t < top.order(); ++t) {
    auto psi = top.element(t);
    bool top_ok = true;
    for (std::size_t i = 0; i < n && top_ok; ++i) top_ok = psi[v.top(i)] == w.top(psi[i]);
    if (!top_ok) continue;
    for (std::size_t i = 0; i < n; ++i) kinv[psi[i]] = static_cast<Point>(i);
    std::fill(k.begin(), k.end(), 0);
    while (true) {
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i)
        ok = h.base_mul(k[i], v.base[kinv[i]]) == h.base_mul(w.base[i], k[winv[i]]);
      if (ok) return true;
      std::size_t i = 0;
      while (i < n && ++k[i] == g.order()) k[i++] = 0;
      if (i == n) break;
    }
  }
  return false;
}

std::vector<std::uint32_t> brute_force_class_labels(const WreathGroup& h, std::uint64_t limit) {
  std::vector<WreathElement> all = h.enumerate(limit);
  std::unordered_map<std::uint64_t, std::uint32_t> index;
  for (std::uint32_t i = 0; i < all.size(); ++i) index.emplace(h.encode(all[i]), i);
  constexpr std::uint32_t kUnset = 0xffffffffu;
  std::vector<std::uint32_t> label(all.size(), kUnset);
  std::uint32_t next = 0;
  for (std::uint32_t x = 0; x < all.size(); ++x) {
    if (label[x] != kUnset) continue;
    for (const auto& k : all) label[index.at(h.encode(h.conj(all[x], k)))] = next;
    ++next;
  }
  return label;
}

std::vector<std::uint64_t> conjugation_orbit(const WreathGroup& h, const WreathElement& x,
                                             const std::vector<WreathElement>& conjugators,
                                             std::uint64_t limit) {
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::uint64_t> queue{h.encode(x)};
  seen.insert(queue.front());
  std::vector<WreathElement> inverses;
  for (const auto& c : conjugators) inverses.push_back(h.inv(c));
  for (std::size_t pos = 0; pos < queue.size(); ++pos) {
    if ((pos & 0xfff) == 0) check_deadline();
    WreathElement y = h.decode(queue[pos]);
    for (std::size_t j = 0; j < conjugators.size(); ++j) {
      std::uint64_t z = h.encode(h.mul(h.mul(conjugators[j], y), inverses[j]));
      if (seen.insert(z).second) {
        if (seen.size() > limit)
          throw TooLarge("conjugation orbit exceeds " + std::to_string(limit) + " elements");
        queue.push_back(z);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::vector<std::uint64_t> class_sizes_by_code(const WreathGroup& h, std::uint64_t limit) {
  auto ord = h.order();
  auto fact = factorial(h.n());
  if (!ord || *ord > limit) throw TooLarge("class sizes: wreath group too large");
  if (h.top().order() != *fact) throw BadParameter("class sizes by code need the full Sym_n top");
  std::vector<WreathElement> gens = h.generators();
  std::vector<std::uint64_t> size(*ord, 0);
  for (std::uint64_t c = 0; c < *ord; ++c) {
    if (size[c]) continue;
    auto orbit = conjugation_orbit(h, h.decode(c), gens, limit);
    for (std::uint64_t y : orbit) size[y] = orbit.size();
  }
  return size;
}

HpConstruction build_hp(const FiniteGroup& aut_s, std::uint32_t p, std::uint64_t limit) {
  if (!is_prime(p)) throw BadParameter("H_p needs a prime p, got " + std::to_string(p));
  if (p > kMaxDegree) throw TooLarge("p too large");
  auto order = checked_pow(aut_s.order(), p);
  if (order) order = checked_mul(*order, p);
  auto storage = order ? checked_mul(*order, p - 1) : std::nullopt;
  if (!storage || *storage > limit)
    throw TooLarge("H_p orbit storage |Aut(S)|^p * p * (p-1) exceeds " + std::to_string(limit));

  std::vector<Point> cyc(p);
  for (std::uint32_t i = 0; i < p; ++i) cyc[i] = static_cast<Point>((i + 1) % p);
  Permutation sigma(cyc);
  // smallest primitive root mod p
  std::uint32_t u = 1;
  for (std::uint32_t c = 2; c < p; ++c) {
    std::uint32_t x = c, ord = 1;
    while (x != 1) {
      x = x * c % p;
      ++ord;
    }
    if (ord == p - 1) {
      u = c;
      break;
    }
  }
  std::vector<Point> mult(p);
  for (std::uint32_t i = 0; i < p; ++i) mult[i] = static_cast<Point>(std::uint64_t{i} * u % p);

  std::string name = "C" + std::to_string(p);
  FiniteGroup top = close_group(p, {sigma}, p, name);
  FiniteGroup normalizer = close_group(p, {sigma, Permutation(mult)}, std::uint64_t{p} * (p - 1),
                                       "N(" + name + ")");

  const auto& cls = aut_s.classes();
  std::size_t best = 0;
  for (std::size_t c = 1; c < cls.size(); ++c)
    if (cls.classes[c].size() > cls.classes[best].size()) best = c;

  WreathGroup hp(aut_s, top);
  WreathElement alpha = hp.identity();
  alpha.base[0] = cls.representative(best);
  alpha.top = sigma;
  std::uint64_t alpha1 = cls.classes[best].size();
  std::uint64_t predicted = (p - 1) * alpha1 * *checked_pow(aut_s.order(), p - 1);
  return {hp, WreathGroup(aut_s, normalizer), std::move(alpha), *order, alpha1, predicted};
}

HpMeasurement measure_hp(const HpConstruction& hp, std::uint64_t limit) {
  auto orbit = conjugation_orbit(hp.group, hp.alpha, hp.automorphisms.generators(), limit);
  HpMeasurement m;
  m.measured = orbit.size();
  m.maol_lower_bound = BigRational(static_cast<std::int64_t>(m.measured),
                                   static_cast<std::int64_t>(hp.order));
  const std::int64_t p = static_cast<std::int64_t>(hp.group.n());
  m.target_bound = BigRational(p - 1, p) *
                  BigRational(static_cast<std::int64_t>(hp.alpha1_class),
                              static_cast<std::int64_t>(hp.group.base().order()));
  return m;
}

}  // namespace autorbit
