#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "autorbit/group_spec.hpp"
#include "autorbit/report.hpp"

namespace autorbit::app {

struct Task {
  std::string id;
  std::string expected;
  std::function<std::string()> compute;
  /// Defaults to computed == expected.
  std::function<bool(const std::string&)> accept;
};

/// Runs tasks on worker_count() threads; items come back in task order.
/// Resource errors turn an item into "skipped", other errors into "fail".
std::vector<ReportItem> run_tasks(const std::vector<Task>& tasks, const Budgets& budgets);

VerificationReport verify_paper_table(const Budgets& budgets);

struct WreathSweep {
  std::string base;
  std::size_t n = 2;
  bool exhaustive = false;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 1;
};
VerificationReport verify_wreath(const WreathSweep& sweep, const Budgets& budgets);

VerificationReport verify_lemma3();

VerificationReport verify_pmf(bool exhaustive, std::uint64_t samples, std::uint64_t seed);

/// Curated nonsolvable groups: maol <= 3/7 and <= 18/19.
VerificationReport verify_nonsolvable_bound(const Budgets& budgets);

}  // namespace autorbit::app
