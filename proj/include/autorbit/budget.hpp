#pragma once

#include <chrono>
#include <optional>

namespace autorbit {

/// Installs a wall-clock deadline for the current thread. Long-running
/// loops call check_deadline() and throw TimeLimitExceeded past it.
class ScopedDeadline {
 public:
  explicit ScopedDeadline(std::optional<std::chrono::steady_clock::duration> limit);
  ~ScopedDeadline();
  ScopedDeadline(const ScopedDeadline&) = delete;
  ScopedDeadline& operator=(const ScopedDeadline&) = delete;

 private:
  std::optional<std::chrono::steady_clock::time_point> previous_;
};

void check_deadline();

}  // namespace autorbit
