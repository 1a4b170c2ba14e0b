#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace biharm::verify {

struct CheckRecord {
  std::string id;
  std::string desc;
  /// The measured quantity (max residual, or the value held against a floor).
  double residual = 0.0;
  double tol = 0.0;
  bool pass = false;
  /// Signed distance from the threshold, positive when passing.
  double margin = 0.0;
};

/// Passes when value <= tol (NaN fails).
CheckRecord check_at_most(std::string id, std::string desc, double value, double tol);

/// Passes when value >= floor (NaN fails).
CheckRecord check_at_least(std::string id, std::string desc, double value, double floor);

/// Categorical outcome; margin carries the deciding quantity's distance.
CheckRecord check_condition(std::string id, std::string desc, bool pass, double residual, double tol, double margin);

struct SuiteReport {
  std::string suite;
  nlohmann::json config = nlohmann::json::object();
  std::vector<CheckRecord> checks;
  double duration_ms = 0.0;

  bool passed() const;
  std::size_t failures() const;
};

nlohmann::json to_json(const CheckRecord& check);
nlohmann::json to_json(const SuiteReport& report, bool with_duration = true);
/// Header id,desc,residual,tol,pass,margin; one row per check.
std::string to_csv(const SuiteReport& report);

/// Shortest round-trip decimal form (JSON and CSV share it).
std::string format_number(double x);

/// Writes text to path; throws std::runtime_error when the path is not writable.
void write_text_file(const std::string& path, std::string_view text);

}  // namespace biharm::verify
