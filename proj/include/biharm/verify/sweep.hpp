#pragma once

// Tabulates the Hopf-cylinder invariants over an (m, l) grid. The verdict
// column comes from the numerically built cylinder: over the circle with
// kappa_g = sqrt(4m - l^2) when that is positive, over a base geodesic
// otherwise.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "biharm/verify/config.hpp"

namespace biharm::verify {

struct SweepSpec {
  double m0 = 0.0, m1 = 1.0;
  double l0 = 0.0, l1 = 2.0;
  /// Points per axis; 1 takes the lower end only, and an axis with equal ends
  /// contributes a single point.
  int steps = 5;
};

struct SweepRow {
  double m = 0.0;
  double l = 0.0;
  double kappa_g = 0.0;
  double mean_curvature = 0.0;
  double norm_a_sq = 0.0;
  std::optional<double> radius;
  std::string surface;
  std::string verdict;
  double max_residual = 0.0;
};

std::vector<SweepRow> sweep(const SweepSpec& spec, const SuiteConfig& config = {});

nlohmann::json sweep_to_json(const std::vector<SweepRow>& rows, const SweepSpec& spec, const SuiteConfig& config);
std::string sweep_to_csv(const std::vector<SweepRow>& rows);

}  // namespace biharm::verify
