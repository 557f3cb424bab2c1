#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace autorbit::app {

enum class Status { pass, fail, skipped };

std::string to_string(Status s);
Status status_from_string(const std::string& s);

struct ReportItem {
  std::string id;
  std::string expected;
  std::string computed;
  Status status = Status::skipped;
  std::string note;                 // skip reason, error, or sweep detail
  std::optional<double> runtime_ms;

  friend bool operator==(const ReportItem&, const ReportItem&) = default;
};

struct VerificationReport {
  std::string suite;
  std::optional<std::uint64_t> seed;
  std::vector<ReportItem> items;
  std::uint64_t checked = 0;
  std::vector<std::string> violations;

  bool passed() const;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// runtime_ms is written only when `timings` is set, so reports without
/// timings are byte-identical across runs.
nlohmann::ordered_json report_to_json(const VerificationReport& r, bool timings = false);
/// Throws ParseError.
VerificationReport report_from_json(const nlohmann::json& j);

}  // namespace autorbit::app
