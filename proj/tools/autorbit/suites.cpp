#include "autorbit/suites.hpp"

#include <atomic>
#include <chrono>
#include <random>
#include <thread>

#include "autorbit/automorphisms.hpp"
#include "autorbit/budget.hpp"
#include "autorbit/catalog.hpp"
#include "autorbit/errors.hpp"
#include "autorbit/multinomial.hpp"
#include "autorbit/stypes.hpp"

namespace autorbit::app {

namespace {

ReportItem run_one(const Task& t, const Budgets& budgets) {
  ReportItem item{t.id, t.expected, "", Status::fail, "", std::nullopt};
  auto start = std::chrono::steady_clock::now();
  std::optional<std::chrono::steady_clock::duration> limit;
  if (budgets.time_limit_s)
    limit = std::chrono::duration_cast<std::chrono::steady_clock::duration>(
        std::chrono::duration<double>(*budgets.time_limit_s));
  try {
    ScopedDeadline deadline(limit);
    item.computed = t.compute();
    bool ok = t.accept ? t.accept(item.computed) : item.computed == t.expected;
    item.status = ok ? Status::pass : Status::fail;
  } catch (const ResourceError& e) {
    item.status = Status::skipped;
    item.note = e.what();
  } catch (const std::exception& e) {
    item.status = Status::fail;
    item.note = e.what();
  }
  item.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return item;
}

std::string str(std::uint64_t v) { return std::to_string(v); }

std::string violations_text(std::size_t n) { return std::to_string(n) + " violations"; }

}  // namespace

std::vector<ReportItem> run_tasks(const std::vector<Task>& tasks, const Budgets& budgets) {
  std::vector<ReportItem> items(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) items[i] = run_one(tasks[i], budgets);
  };
  unsigned threads = std::min<unsigned>(worker_count(), static_cast<unsigned>(tasks.size()));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return items;
}

VerificationReport verify_paper_table(const Budgets& b) {
  auto mcs_of = [b](std::string spec) {
    return [b, spec] { return str(mcs(load_group(spec, b))); };
  };
  auto h_of = [b](std::string name) {
    return [b, name] {
      SimpleAmbient a = simple_ambient(named_group(name, b.max_order));
      return h_value(a.aut, a.socle).str();
    };
  };
  auto maol_of = [b](std::string name) {
    return [b, name] {
      FiniteGroup g = named_group(name, b.max_order);
      return maol(g, automorphism_group(g, b.max_nodes)).maol.str();
    };
  };
  std::vector<Task> tasks{
      {"mcs(sym5)", "4", mcs_of("name:sym5"), {}},
      {"mcs(aut(alt6))", "6", mcs_of("name:aut(alt6)"), {}},
      {"h(alt5)", "1/2", h_of("alt5"), {}},
      {"h(alt6)", "3/4", h_of("alt6"), {}},
      {"mcs(pgl(2,3))", "3", mcs_of("name:pgl(2,3)"), {}},
      {"mcs(pgl(3,2))", "3", mcs_of("name:pgl(3,2)"), {}},
      {"mcs(pgu(3,2))", "4", mcs_of("name:pgu(3,2)"), {}},
      {"mcs(pgl(3,4))", "12", mcs_of("name:pgl(3,4)"), {}},
      {"mcs(pgu(3,4))", "13", mcs_of("name:pgu(3,4)"), {}},
      {"mcs(pgl(4,2))", "6", mcs_of("name:pgl(4,2)"), {}},
      {"mcs(pgu(4,2))", "5", mcs_of("name:pgu(4,2)"), {}},
      {"maol(psl(2,8))", "3/7", maol_of("psl(2,8)"), {}},
      {"largest_class(aut(psl(3,4)))", "24192",
       [b] { return str(named_group("aut_psl34", b.max_order).classes().largest_class_size()); }, {}},
      {"maol(extraspecial(3))", "2/3", maol_of("extraspecial(3)"), {}},
  };
  VerificationReport r{"paper-table", std::nullopt, run_tasks(tasks, b), tasks.size(), {}};
  return r;
}

VerificationReport verify_wreath(const WreathSweep& sweep, const Budgets& b) {
  FiniteGroup base = load_group(sweep.base, b);
  WreathGroup h(base, sweep.n);
  VerificationReport r;
  r.suite = "wreath";
  auto start = std::chrono::steady_clock::now();
  std::uint64_t disagreements = 0;
  auto record = [&](const WreathElement& v, const WreathElement& w, bool fast, bool brute) {
    ++r.checked;
    if (fast == brute) return;
    ++disagreements;
    if (r.violations.size() < 10)
      r.violations.push_back("v=" + wreath_string(h, v) + " w=" + wreath_string(h, w) +
                             " conj_test=" + (fast ? "true" : "false") +
                             " brute_force=" + (brute ? "true" : "false"));
  };
  std::string id;
  if (sweep.exhaustive) {
    id = "all pairs of " + base.name() + " wr Sym" + std::to_string(sweep.n);
    std::vector<WreathElement> all = h.enumerate(b.max_order);
    std::vector<std::uint32_t> labels = brute_force_class_labels(h, std::min<std::uint64_t>(b.max_order, 20000));
    for (std::size_t i = 0; i < all.size(); ++i) {
      check_deadline();
      for (std::size_t j = 0; j < all.size(); ++j)
        record(all[i], all[j], conj_test(h, all[i], all[j]), labels[i] == labels[j]);
    }
  } else {
    id = std::to_string(sweep.samples) + " random pairs of " + base.name() + " wr Sym" +
         std::to_string(sweep.n);
    r.seed = sweep.seed;
    std::mt19937_64 rng(sweep.seed);
    for (std::uint64_t s = 0; s < sweep.samples; ++s) {
      WreathElement v = h.random_element(rng);
      WreathElement w = s % 2 ? h.conj(v, h.random_element(rng)) : h.random_element(rng);
      record(v, w, conj_test(h, v, w), brute_force_conj(h, v, w));
    }
  }
  ReportItem item{id, "0 disagreements", std::to_string(disagreements) + " disagreements",
                  disagreements ? Status::fail : Status::pass, "", std::nullopt};
  item.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  r.items.push_back(std::move(item));
  return r;
}

VerificationReport verify_lemma3() {
  VerificationReport r;
  r.suite = "lemma3";
  for (const GridRange& g : lemma3_grid_ranges()) {
    std::string id = "k=" + std::to_string(g.k) + " n=" + std::to_string(g.n_min) + ".." +
                     std::to_string(g.n_max);
    for (auto x : g.excluded) id += " without " + std::to_string(x);
    auto start = std::chrono::steady_clock::now();
    SweepResult s = verify_lemma3_grids({g});
    r.checked += s.checked;
    for (const auto& v : s.violations) r.violations.push_back(v.where + " value=" + v.value.str());
    r.items.push_back({id, violations_text(0), violations_text(s.violations.size()),
                       s.violations.empty() ? Status::pass : Status::fail,
                       std::to_string(s.checked) + " compositions",
                       std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count()});
  }
  // the two excluded cases n = k in {2, 3} exceed 1
  for (auto [n, expected] : {std::pair<std::uint64_t, const char*>{2, "2"}, {3, "3/2"}}) {
    std::vector<std::uint64_t> ones(n, 1);
    std::string computed = lemma3_candidate_value(n, ones).str();
    r.items.push_back({"excluded n=k=" + std::to_string(n), expected, computed,
                       computed == expected ? Status::pass : Status::fail, "", std::nullopt});
  }
  return r;
}

VerificationReport verify_pmf(bool exhaustive, std::uint64_t samples, std::uint64_t seed) {
  VerificationReport r;
  r.suite = "pmf";
  auto start = std::chrono::steady_clock::now();
  SweepResult s;
  std::string id;
  if (exhaustive) {
    s = pmf_bound_exhaustive();
    id = "denominator<=6 k<=4 n<=8";
  } else {
    s = pmf_bound_random(samples, seed);
    r.seed = seed;
    id = std::to_string(samples) + " random samples";
  }
  r.checked = s.checked;
  for (const auto& v : s.violations)
    r.violations.push_back(v.where + " pmf=" + v.value.str() + " max=" + v.bound.str());
  r.items.push_back({id, violations_text(0), violations_text(s.violations.size()),
                     s.violations.empty() ? Status::pass : Status::fail,
                     std::to_string(s.equality_cases) + " equality cases",
                     std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count()});
  std::string eq = multinomial_pmf({BigRational(1, 2), BigRational(1, 2)}, {1, 1}).str();
  r.items.push_back({"equality 2(1/2)(1/2)", "1/2", eq, eq == "1/2" ? Status::pass : Status::fail, "",
                     std::nullopt});
  return r;
}

VerificationReport verify_nonsolvable_bound(const Budgets& b) {
  const BigRational three_sevenths(3, 7), bound_18_19(18, 19);
  std::vector<Task> tasks;
  for (const char* name : {"alt5", "psl(3,2)", "alt6", "psl(2,8)", "sym5", "sym6", "pgl(2,7)"}) {
    std::string n = name;
    tasks.push_back({"maol(" + n + ")", "nonsolvable, <= 3/7, <= 18/19",
                     [b, n] {
                       FiniteGroup g = named_group(n, b.max_order);
                       std::string m = maol(g, automorphism_group(g, b.max_nodes)).maol.str();
                       return (is_solvable(g) ? "solvable, " : "nonsolvable, ") + m;
                     },
                     [three_sevenths, bound_18_19](const std::string& computed) {
                       const std::string prefix = "nonsolvable, ";
                       if (computed.rfind(prefix, 0) != 0) return false;
                       BigRational m = BigRational::parse(computed.substr(prefix.size()));
                       return m <= three_sevenths && m <= bound_18_19;
                     }});
  }
  return {"nonsolvable-bound", std::nullopt, run_tasks(tasks, b), tasks.size(), {}};
}

}  // namespace autorbit::app
