#include "autorbit/multinomial.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "autorbit/errors.hpp"

namespace autorbit {

namespace {

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string join(const std::vector<BigRational>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + ")";
}

/// All vectors of k nonnegative integers summing to total, lexicographic.
void for_each_weak_composition(std::uint64_t total, std::size_t k,
                               const std::function<void(const std::vector<std::uint64_t>&)>& f) {
  std::vector<std::uint64_t> v(k, 0);
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t left) {
    if (i + 1 == k) {
      v[i] = left;
      f(v);
      return;
    }
    for (std::uint64_t a = 0; a <= left; ++a) {
      v[i] = a;
      rec(i + 1, left - a);
    }
  };
  if (k > 0) rec(0, total);
}

void check_pmf(const std::vector<BigRational>& rho, const std::vector<std::uint64_t>& counts,
               SweepResult& out) {
  BigRational value = multinomial_pmf(rho, counts);
  BigRational bound = *std::max_element(rho.begin(), rho.end());
  ++out.checked;
  if (value == bound) ++out.equality_cases;
  if (value > bound) out.violations.push_back({"rho=" + join(rho) + " l=" + join(counts), value, bound});
}

}  // namespace

std::uint64_t TypeDistribution::n() const {
  std::uint64_t s = 0;
  for (auto c : counts) s += c;
  return s;
}

mpz_class multinomial_coefficient(const std::vector<std::uint64_t>& counts) {
  mpz_class result = 1, b;
  std::uint64_t running = 0;
  for (std::uint64_t l : counts) {
    running += l;
    mpz_bin_uiui(b.get_mpz_t(), running, l);
    result *= b;
  }
  return result;
}

BigRational multinomial_pmf(const std::vector<BigRational>& rho,
                            const std::vector<std::uint64_t>& counts) {
  if (rho.size() != counts.size() || rho.empty())
    throw BadParameter("pmf: " + std::to_string(rho.size()) + " probabilities for " +
                       std::to_string(counts.size()) + " counts");
  BigRational sum(0);
  for (const auto& r : rho) {
    if (r < BigRational(0)) throw BadParameter("pmf: negative probability " + r.str());
    sum += r;
  }
  if (sum != BigRational(1)) throw BadParameter("pmf: probabilities sum to " + sum.str());
  BigRational value(mpq_class(multinomial_coefficient(counts)));
  for (std::size_t i = 0; i < rho.size(); ++i) value *= pow(rho[i], counts[i]);
  return value;
}

BigRational r_value(const TypeDistribution& d) { return multinomial_pmf(d.rho, d.counts); }

BigRational orbit_upper_bound(const WreathGroup& h, const WreathElement& w,
                              const ClassTypeTable& table) {
  if (table.classes.size() != h.base().classes().size())
    throw ShapeMismatch("class type table does not describe the wreath base group");
  BcpcProfile prof = profile(h, w, &table.type_of_class);
  BigRational bound(1);
  for (const auto& [key, multiset] : prof.by_length_and_type) {
    TypeDistribution d;
    d.type = key.second;
    for (std::uint32_t c = 0; c < table.classes.size(); ++c) {
      if (table.type_of_class[c] != d.type) continue;
      d.classes.push_back(c);
      d.rho.push_back(table.classes[c].rho);
      std::uint64_t count = 0;
      for (const auto& [cls, mult] : multiset)
        if (cls == c) count = mult;
      d.counts.push_back(count);
    }
    bound *= r_value(d);
  }
  return bound;
}

BigRational lemma3_candidate_value(std::uint64_t n, const std::vector<std::uint64_t>& counts) {
  if (counts.empty()) throw BadComposition("empty composition");
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] == 0) throw BadComposition("parts must be positive: " + join(counts));
    if (i && counts[i] > counts[i - 1]) throw BadComposition("parts must be nonincreasing: " + join(counts));
    sum += counts[i];
  }
  if (sum != n) throw BadComposition("parts " + join(counts) + " do not sum to " + std::to_string(n));
  if (counts.size() == 1) return BigRational(1);
  if (n < 2) throw BadComposition("n must be at least 2");
  const auto denom = static_cast<std::int64_t>(n - 1);
  BigRational value(mpq_class(multinomial_coefficient(counts)));
  value *= pow(BigRational(static_cast<std::int64_t>(counts[0] - 1), denom), counts[0] - 1);
  for (std::size_t i = 1; i < counts.size(); ++i)
    value *= pow(BigRational(static_cast<std::int64_t>(counts[i]), denom), counts[i]);
  return value;
}

std::vector<std::vector<std::uint64_t>> partitions_into(std::uint64_t n, std::size_t k) {
  std::vector<std::vector<std::uint64_t>> out;
  if (k == 0 || n < k) return out;
  std::vector<std::uint64_t> v(k);
  std::function<void(std::size_t, std::uint64_t, std::uint64_t)> rec =
      [&](std::size_t i, std::uint64_t left, std::uint64_t cap) {
        if (i + 1 == k) {
          if (left >= 1 && left <= cap) {
            v[i] = left;
            out.push_back(v);
          }
          return;
        }
        std::uint64_t rest = k - i - 1;
        for (std::uint64_t a = 1; a <= cap && a + rest <= left; ++a) {
          v[i] = a;
          rec(i + 1, left - a, a);
        }
      };
  rec(0, n, n);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

std::vector<GridRange> lemma3_grid_ranges() {
  return {{4, 1, 9, {}}, {3, 1, 15, {3}}, {2, 10, 96, {2}}};
}

SweepResult verify_lemma3_grids(const std::vector<GridRange>& ranges) {
  SweepResult out;
  for (const auto& r : ranges)
    for (std::uint64_t n = r.n_min; n <= r.n_max; ++n) {
      if (std::find(r.excluded.begin(), r.excluded.end(), n) != r.excluded.end()) continue;
      for (const auto& l : partitions_into(n, r.k)) {
        BigRational value = lemma3_candidate_value(n, l);
        ++out.checked;
        if (value == BigRational(1)) ++out.equality_cases;
        if (value > BigRational(1))
          out.violations.push_back({"n=" + std::to_string(n) + " l=" + join(l), value, BigRational(1)});
      }
    }
  return out;
}

SweepResult pmf_bound_exhaustive(std::uint64_t max_denominator, std::size_t max_k,
                                 std::uint64_t max_n) {
  SweepResult out;
  for (std::size_t k = 1; k <= max_k; ++k)
    for (std::uint64_t den = 1; den <= max_denominator; ++den)
      for_each_weak_composition(den, k, [&](const std::vector<std::uint64_t>& a) {
        std::vector<BigRational> rho;
        for (auto x : a) rho.emplace_back(static_cast<std::int64_t>(x), static_cast<std::int64_t>(den));
        for (std::uint64_t n = 1; n <= max_n; ++n)
          for_each_weak_composition(n, k, [&](const std::vector<std::uint64_t>& l) { check_pmf(rho, l, out); });
      });
  return out;
}

SweepResult pmf_bound_random(std::uint64_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
  };
  // k parts summing to total, from k-1 sorted cut points
  auto random_parts = [&](std::uint64_t total, std::size_t k) {
    std::vector<std::uint64_t> cuts{0, total};
    for (std::size_t i = 1; i < k; ++i) cuts.push_back(uniform(0, total));
    std::sort(cuts.begin(), cuts.end());
    std::vector<std::uint64_t> parts;
    for (std::size_t i = 1; i < cuts.size(); ++i) parts.push_back(cuts[i] - cuts[i - 1]);
    return parts;
  };
  SweepResult out;
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::size_t k = uniform(1, 6);
    std::uint64_t den = uniform(1, 60);
    std::vector<BigRational> rho;
    for (auto x : random_parts(den, k))
      rho.emplace_back(static_cast<std::int64_t>(x), static_cast<std::int64_t>(den));
    check_pmf(rho, random_parts(uniform(1, 20), k), out);
  }
  return out;
}

}  // namespace autorbit
