#include "fgt/report.hpp"

#include <sstream>

namespace fgt {

namespace {

bool check_passes(const Check& c) {
  if (!c.pass) return false;
  for (const auto& child : c.children)
    if (!check_passes(child)) return false;
  return true;
}

nlohmann::ordered_json check_to_json(const Check& c, bool timings) {
  nlohmann::ordered_json j;
  j["name"] = c.name;
  j["verdict"] = check_passes(c) ? "pass" : "fail";
  if (timings && c.duration_ms >= 0) j["duration_ms"] = c.duration_ms;
  if (!c.details.empty()) j["details"] = c.details;
  if (!c.children.empty()) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& child : c.children) arr.push_back(check_to_json(child, timings));
    j["checks"] = arr;
  }
  return j;
}

void check_to_text(const Check& c, int indent, bool timings, std::ostringstream& out) {
  out << std::string(indent * 2, ' ') << (check_passes(c) ? "[PASS] " : "[FAIL] ") << c.name;
  if (timings && c.duration_ms >= 0) out << " (" << c.duration_ms << " ms)";
  if (!c.details.empty()) out << "  " << c.details.dump();
  out << "\n";
  for (const auto& child : c.children) check_to_text(child, indent + 1, timings, out);
}

}  // namespace

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (!check_passes(c)) return false;
  return true;
}

std::size_t Report::passed_count() const {
  std::size_t n = 0;
  for (const auto& c : checks)
    if (check_passes(c)) ++n;
  return n;
}

nlohmann::ordered_json Report::to_json(bool include_timings) const {
  nlohmann::ordered_json j;
  j["schema_version"] = schema_version;
  j["tool"] = "fgt";
  j["command"] = command;
  if (!options.empty()) j["options"] = options;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) arr.push_back(check_to_json(c, include_timings));
  j["checks"] = arr;
  j["summary"] = {{"total", checks.size()}, {"passed", passed_count()},
                  {"all_pass", all_pass()}};
  return j;
}

std::string Report::to_json_text(bool include_timings) const {
  return to_json(include_timings).dump(2) + "\n";
}

std::string Report::to_text(bool include_timings) const {
  std::ostringstream out;
  out << "== " << command << " ==\n";
  for (const auto& c : checks) check_to_text(c, 0, include_timings, out);
  out << (all_pass() ? "ALL CHECKS PASSED" : "SOME CHECKS FAILED") << " ("
      << passed_count() << "/" << checks.size() << ")\n";
  return out.str();
}

}  // namespace fgt
