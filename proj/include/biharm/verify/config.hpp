#pragma once

// Run configuration. Sources in increasing precedence: built-in defaults,
// a key=value file, command-line flags.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "biharm/biharmonic_residual.hpp"

namespace biharm::verify {

struct SuiteConfig {
  /// When set, suites run at this single (m, l) instead of their built-in set.
  std::optional<double> m;
  std::optional<double> l;
  GridSpec grid{};
  double tol = 1e-6;
  double fd_step = 1e-3;
  std::uint64_t seed = 0;
  /// "json" or "csv".
  std::string format = "json";
  std::optional<std::string> out;
};

/// Applies one key/value pair (keys as the long flags without dashes:
/// m, l, grid, tol, fd-step, seed, format, out). Throws InvalidArgument on
/// unknown keys or invalid values.
void apply_setting(SuiteConfig& config, std::string_view key, std::string_view value);

/// Lines "key = value"; blank lines and '#' comments are ignored.
void apply_config_text(SuiteConfig& config, std::string_view text);
void apply_config_file(SuiteConfig& config, const std::string& path);

/// "NxM" with N, M >= 1.
GridSpec parse_grid(std::string_view text);

VerdictOptions verdict_options(const SuiteConfig& config);

/// Config echo for reports (output destination excluded).
nlohmann::json to_json(const SuiteConfig& config);

}  // namespace biharm::verify
