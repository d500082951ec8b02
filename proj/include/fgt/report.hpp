#ifndef FGT_REPORT_HPP
#define FGT_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace fgt {

/// One named check with a verdict, structured witness data and children.
struct Check {
  std::string name;
  bool pass = true;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  std::vector<Check> children;
  long long duration_ms = -1;  // serialized only when timings are requested

  static Check passing(std::string name) {
    Check c;
    c.name = std::move(name);
    return c;
  }
};

/// A structured result tree, serializable as stable JSON (byte-identical for
/// identical inputs and bounds) or as human-readable text derived from it.
struct Report {
  int schema_version = 1;
  std::string command;
  nlohmann::ordered_json options = nlohmann::ordered_json::object();
  std::vector<Check> checks;

  bool all_pass() const;
  std::size_t passed_count() const;

  nlohmann::ordered_json to_json(bool include_timings = false) const;
  std::string to_json_text(bool include_timings = false) const;
  std::string to_text(bool include_timings = false) const;
};

}  // namespace fgt

#endif
