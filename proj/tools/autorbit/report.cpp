#include "autorbit/report.hpp"

#include "autorbit/errors.hpp"

namespace autorbit::app {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "skipped";
}

Status status_from_string(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "skipped") return Status::skipped;
  throw ParseError("unknown item status: " + s);
}

bool VerificationReport::passed() const {
  for (const auto& item : items)
    if (item.status == Status::fail) return false;
  return violations.empty();
}

nlohmann::ordered_json report_to_json(const VerificationReport& r, bool timings) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  if (r.seed) j["seed"] = *r.seed;
  j["checked"] = r.checked;
  j["violations"] = r.violations;
  j["items"] = nlohmann::ordered_json::array();
  for (const auto& item : r.items) {
    nlohmann::ordered_json e;
    e["id"] = item.id;
    e["expected"] = item.expected;
    e["computed"] = item.computed;
    e["status"] = to_string(item.status);
    if (!item.note.empty()) e["note"] = item.note;
    if (timings && item.runtime_ms) e["runtime_ms"] = *item.runtime_ms;
    j["items"].push_back(std::move(e));
  }
  j["status"] = r.passed() ? "pass" : "fail";
  return j;
}

VerificationReport report_from_json(const nlohmann::json& j) {
  try {
    VerificationReport r;
    r.suite = j.at("suite").get<std::string>();
    if (j.contains("seed")) r.seed = j.at("seed").get<std::uint64_t>();
    r.checked = j.value("checked", std::uint64_t{0});
    if (j.contains("violations")) r.violations = j.at("violations").get<std::vector<std::string>>();
    for (const auto& e : j.at("items")) {
      ReportItem item;
      item.id = e.at("id").get<std::string>();
      item.expected = e.at("expected").get<std::string>();
      item.computed = e.at("computed").get<std::string>();
      item.status = status_from_string(e.at("status").get<std::string>());
      item.note = e.value("note", std::string{});
      if (e.contains("runtime_ms")) item.runtime_ms = e.at("runtime_ms").get<double>();
      r.items.push_back(std::move(item));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed verification report: ") + e.what());
  }
}

}  // namespace autorbit::app
