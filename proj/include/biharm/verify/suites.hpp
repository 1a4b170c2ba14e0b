#pragma once

// Named verification suites. Check ids are dotted paths; the first segment
// names the group:
//   tables.*     closed-form frame tables against derived data
//   hopf.*       Hopf cylinders over circles and lift identities
//   ode.*        curve-level biharmonicity system
//   sphere.*     geodesic spheres in the round 3-sphere chart
//   sol.*        Sol candidates
//   umbilical.*  umbilical patches and the Codazzi identities
//   property.*   invariants of the calculus itself

#include <string>
#include <string_view>
#include <vector>

#include "biharm/verify/config.hpp"
#include "biharm/verify/report.hpp"

namespace biharm::verify {

std::vector<std::string> suite_names();

/// Throws InvalidArgument for an unknown name.
SuiteReport run_suite(std::string_view name, const SuiteConfig& config = {});

}  // namespace biharm::verify
