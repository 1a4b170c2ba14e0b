#pragma once

// Biharmonic hypersurface system for surfaces (dimension m = 2):
//
//   normal:      Delta H - H |A|^2 + H Ric(xi, xi)                = 0
//   tangential:  2 A(grad H) + grad H^2 - 2 H (Ric(xi))^T         = 0
//
// plus the reduced constant-mean-curvature forms for BCV and Sol ambients.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "biharm/surface_calculus.hpp"

namespace biharm {

struct ResidualOptions {
  DifferenceOptions differences{};
  /// Grid used to certify the CMC precondition of residual_cmc.
  int cmc_grid_u = 5;
  int cmc_grid_v = 5;
  /// Largest admissible |grad H| for a patch to count as CMC.
  double cmc_tol = 1e-6;
};

struct BiharmonicResidual {
  ParamPoint at;
  double mean_curvature = 0.0;
  /// Delta H - H|A|^2 + H Ric(xi, xi), or its CMC reduction.
  double normal_residual = 0.0;
  /// I-norm of the tangential part.
  double tangential_residual = 0.0;
  std::optional<std::array<double, 3>> chn_triple;
  std::optional<std::array<double, 3>> csl_triple;
};

/// Grid of cell-centre parameter points, nu x nv.
struct GridSpec {
  int nu = 5;
  int nv = 5;
};

enum class Classification { minimal, proper_biharmonic, not_biharmonic };
std::string to_string(Classification c);

struct VerdictOptions {
  ResidualOptions residual{};
  /// Residual tolerance; also the |H| bound for "minimal".
  double tol = 1e-6;
  /// Proper biharmonic surfaces need min |H| above this.
  double margin_floor = 1e-3;
};

struct Verdict {
  Classification classification = Classification::not_biharmonic;
  double max_abs_h = 0.0;
  double min_abs_h = 0.0;
  double max_normal_residual = 0.0;
  double max_tangential_residual = 0.0;
  /// Distance of the deciding quantity from its threshold; positive means
  /// the decision is clear of the threshold by that amount.
  double margin = 0.0;
  int points = 0;
};

BiharmonicResidual residual_full(const SurfacePatch& patch, const ParamPoint& q, const ResidualOptions& options = {});

/// Reduced system for CMC patches; throws PreconditionFailed when the
/// patch is not CMC over the certification grid.
BiharmonicResidual residual_cmc(const SurfacePatch& patch, const ParamPoint& q, const ResidualOptions& options = {});

/// Left-hand sides of the BCV classification system,
///   (|A|^2 - (4m - l^2/2) - (l^2 - 4m)(c3)^2,  (l^2 - 4m) c3 a1_3,  (l^2 - 4m) c3 a2_3),
/// with c3 = g(xi, E3) and ai_3 = g(e_i, E3) in the adapted frame.
std::array<double, 3> chn_residual(const MetricModel& model, const SurfacePatch& patch, const ParamPoint& q);

/// Left-hand sides of the Sol system (|A|^2 + 2 (c3)^2, c3 a3, c3 b3).
std::array<double, 3> csl_residual(const MetricModel& model, const SurfacePatch& patch, const ParamPoint& q);

/// Cell-centre points of the grid over the patch domain.
std::vector<ParamPoint> grid_points(const ParamDomain& domain, const GridSpec& grid);

Verdict verdict(const SurfacePatch& patch, const GridSpec& grid, const VerdictOptions& options = {});

}  // namespace biharm
