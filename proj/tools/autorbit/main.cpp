#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "autorbit/automorphisms.hpp"
#include "autorbit/budget.hpp"
#include "autorbit/catalog.hpp"
#include "autorbit/errors.hpp"
#include "autorbit/group_spec.hpp"
#include "autorbit/stypes.hpp"
#include "autorbit/suites.hpp"
#include "autorbit/wreath.hpp"

using namespace autorbit;
using namespace autorbit::app;
using nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kResource = 3 };

void print(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int emit_report(const VerificationReport& r, const std::string& out, bool timings) {
  ordered_json j = report_to_json(r, timings);
  if (!out.empty()) write_json_file(out, j);
  print(j);
  return r.passed() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Automorphism orbits, conjugacy classes and wreath products of finite groups"};
  app.require_subcommand(1);
  app.fallthrough();

  Budgets budgets;
  double time_limit = 0;
  bool timings = false;
  app.add_option("--max-order", budgets.max_order, "largest group to enumerate")
      ->capture_default_str();
  app.add_option("--max-nodes", budgets.max_nodes, "automorphism search node budget")
      ->capture_default_str();
  app.add_option("--time-limit-s", time_limit, "wall-clock limit per computation (0 = none)");
  app.add_flag("--timings", timings, "include runtime_ms in reports");

  std::string group_spec, simple_spec, auts_file, out_file;

  auto* catalog = app.add_subcommand("catalog", "named groups");
  catalog->require_subcommand(1);
  auto* catalog_list_cmd = catalog->add_subcommand("list", "list named groups with orders");

  auto* maol_cmd = app.add_subcommand("maol", "automorphism orbits on the elements");
  maol_cmd->add_option("--group", group_spec, "name:<id> or file:<path>")->required();
  maol_cmd->add_option("--auts", auts_file, "automorphisms written by `aut --out`");

  auto* mcs_cmd = app.add_subcommand("mcs", "minimal centralizer size");
  mcs_cmd->add_option("--group", group_spec)->required();

  auto* h_cmd = app.add_subcommand("h", "S-types, rho and h(S) for a simple group S");
  h_cmd->add_option("--simple", simple_spec)->required();

  auto* classes_cmd = app.add_subcommand("classes", "conjugacy classes");
  classes_cmd->add_option("--group", group_spec)->required();

  auto* aut_cmd = app.add_subcommand("aut", "automorphism group");
  aut_cmd->add_option("--group", group_spec)->required();
  aut_cmd->add_option("--out", out_file, "write generators as JSON");

  auto* construct = app.add_subcommand("construct", "explicit constructions");
  construct->require_subcommand(1);
  std::uint32_t p = 2;
  auto* hp_cmd = construct->add_subcommand("hp", "Aut(S) wr C_p and the orbit of its distinguished element");
  hp_cmd->add_option("--simple", simple_spec)->required();
  hp_cmd->add_option("--p", p)->capture_default_str();

  auto* verify = app.add_subcommand("verify", "verification suites");
  verify->require_subcommand(1);
  verify->add_option("--out", out_file, "also write the report to a file");
  WreathSweep sweep;
  auto* v_wreath = verify->add_subcommand("wreath", "conj_test against brute force");
  v_wreath->add_option("--base", sweep.base)->required();
  v_wreath->add_option("--n", sweep.n)->required();
  auto* ex_flag = v_wreath->add_flag("--exhaustive", sweep.exhaustive, "all ordered pairs");
  v_wreath->add_option("--samples", sweep.samples)->capture_default_str()->excludes(ex_flag);
  v_wreath->add_option("--seed", sweep.seed)->capture_default_str()->excludes(ex_flag);
  auto* v_lemma3 = verify->add_subcommand("lemma3", "Lagrange-point grids");
  bool pmf_exhaustive = false;
  std::uint64_t pmf_samples = 0, pmf_seed = 1;
  auto* v_pmf = verify->add_subcommand("pmf", "multinomial pmf <= max probability");
  auto* pmf_ex = v_pmf->add_flag("--exhaustive", pmf_exhaustive, "denominator <= 6, k <= 4, n <= 8 (default)");
  v_pmf->add_option("--samples", pmf_samples)->excludes(pmf_ex);
  v_pmf->add_option("--seed", pmf_seed)->capture_default_str()->excludes(pmf_ex);
  auto* v_table = verify->add_subcommand("paper-table", "small-group numeric checkpoints");
  auto* v_nonsolvable = verify->add_subcommand("nonsolvable-bound", "maol of curated nonsolvable groups");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  if (time_limit < 0) {
    std::cerr << "error: --time-limit-s must be nonnegative\n";
    return kUsage;
  }
  if (time_limit > 0) budgets.time_limit_s = time_limit;

  try {
    std::optional<std::chrono::steady_clock::duration> limit;
    if (budgets.time_limit_s)
      limit = std::chrono::duration_cast<std::chrono::steady_clock::duration>(
          std::chrono::duration<double>(*budgets.time_limit_s));
    ScopedDeadline deadline(limit);

    if (*catalog_list_cmd) {
      ordered_json groups = ordered_json::array();
      for (const auto& e : catalog_list()) groups.push_back({{"name", e.name}, {"order", e.order}});
      print({{"groups", groups}});
    } else if (*maol_cmd) {
      FiniteGroup g = load_group(group_spec, budgets);
      AutomorphismGroup a = auts_file.empty() ? automorphism_group(g, budgets.max_nodes)
                                              : automorphisms_from_json(g, read_json_file(auts_file));
      OrbitReport r = maol(g, a);
      print({{"group", r.group}, {"order", r.order}, {"orbitSizes", r.orbit_sizes},
             {"MAOL", r.maol_length}, {"maol", r.maol.str()}});
    } else if (*mcs_cmd) {
      FiniteGroup g = load_group(group_spec, budgets);
      print({{"group", g.name()}, {"order", g.order()}, {"mcs", mcs(g)}});
    } else if (*h_cmd) {
      FiniteGroup s = load_group(simple_spec, budgets);
      SimpleAmbient a = simple_ambient(s);
      ClassTypeTable t = class_type_table(a.aut, a.socle);
      ordered_json classes = ordered_json::array();
      for (const auto& c : t.classes)
        classes.push_back({{"size", c.size}, {"type", c.type}, {"rho", c.rho.str()}});
      print({{"group", s.name()}, {"order", t.socle_order}, {"autOrder", a.aut.order()},
             {"outOrder", t.out_order}, {"classes", classes}, {"h", t.h().str()}});
    } else if (*classes_cmd) {
      FiniteGroup g = load_group(group_spec, budgets);
      const auto& cls = g.classes();
      ordered_json list = ordered_json::array();
      for (std::size_t c = 0; c < cls.size(); ++c) {
        ElementId rep = cls.representative(c);
        list.push_back({{"representative", cycle_string(g.element(rep))},
                        {"size", cls.classes[c].size()},
                        {"elementOrder", g.element_order(rep)}});
      }
      print({{"group", g.name()}, {"order", g.order()}, {"classes", list}});
    } else if (*aut_cmd) {
      FiniteGroup g = load_group(group_spec, budgets);
      AutomorphismGroup a = automorphism_group(g, budgets.max_nodes);
      if (!out_file.empty()) write_json_file(out_file, automorphisms_to_json(a));
      print({{"group", g.name()}, {"order", g.order()}, {"autOrder", a.group.order()},
             {"innerOrder", a.inner.size()}, {"generators", a.group.generators().size()}});
    } else if (*hp_cmd) {
      FiniteGroup s = load_group(simple_spec, budgets);
      SimpleAmbient a = simple_ambient(s);
      HpConstruction hp = build_hp(a.aut, p);
      HpMeasurement m = measure_hp(hp);
      print({{"simple", s.name()}, {"p", p}, {"alpha", wreath_string(hp.group, hp.alpha)},
             {"order", hp.order}, {"predicted", hp.predicted}, {"measured", m.measured},
             {"maolLowerBound", m.maol_lower_bound.str()}, {"targetBound", m.target_bound.str()}});
      return hp.predicted == m.measured ? kOk : kFailed;
    } else if (*v_wreath) {
      return emit_report(verify_wreath(sweep, budgets), out_file, timings);
    } else if (*v_lemma3) {
      return emit_report(verify_lemma3(), out_file, timings);
    } else if (*v_pmf) {
      bool exhaustive = pmf_exhaustive || pmf_samples == 0;
      return emit_report(verify_pmf(exhaustive, pmf_samples, pmf_seed), out_file, timings);
    } else if (*v_table) {
      return emit_report(verify_paper_table(budgets), out_file, timings);
    } else if (*v_nonsolvable) {
      return emit_report(verify_nonsolvable_bound(budgets), out_file, timings);
    }
    return kOk;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
}
