#include "autorbit/budget.hpp"

#include "autorbit/errors.hpp"

namespace autorbit {

namespace {
thread_local std::optional<std::chrono::steady_clock::time_point> tl_deadline;
}

ScopedDeadline::ScopedDeadline(std::optional<std::chrono::steady_clock::duration> limit)
    : previous_(tl_deadline) {
  if (limit) {
    auto d = std::chrono::steady_clock::now() + *limit;
    if (!tl_deadline || d < *tl_deadline) tl_deadline = d;
  }
}

ScopedDeadline::~ScopedDeadline() { tl_deadline = previous_; }

void check_deadline() {
  if (tl_deadline && std::chrono::steady_clock::now() > *tl_deadline)
    throw TimeLimitExceeded("time limit exceeded");
}

}  // namespace autorbit
