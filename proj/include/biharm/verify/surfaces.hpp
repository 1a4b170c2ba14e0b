#pragma once

// Named test surfaces used by the suites and by `biharm residual`.

#include <limits>
#include <string>
#include <vector>

#include "biharm/hopf_cylinders.hpp"

namespace biharm::verify {

/// Chart radius of the geodesic sphere of intrinsic radius rho about the
/// origin of SpaceFormChart(c).
double geodesic_sphere_chart_radius(double c, double rho);

/// Sphere of chart radius r about centre, parameters (phi, theta) with the
/// poles cut off by pole_gap. This parameter order makes the normal point
/// inward.
SurfacePatch chart_sphere(const MetricModel& model, const Vec3& centre, double r, double pole_gap = 0.35);

/// Geodesic sphere of intrinsic radius rho about the origin of SpaceFormChart(c).
SurfacePatch geodesic_sphere(double c, double rho, double pole_gap = 0.35);

/// Plane {axis = offset}, axis in {'x', 'y', 'z'}, over [-w, w]^2; the two
/// free coordinates in cyclic order.
SurfacePatch coordinate_plane(const MetricModel& model, char axis, double offset, double half_width = 1.0);

/// (r cos u, r sin u, v) in Sol.
SurfacePatch sol_vertical_cylinder(double r, double half_height = 1.0);

/// (r e^{-v} cos u, r e^{v} sin u, v) in Sol: the round cylinder read in
/// the orthonormal frame scaling.
SurfacePatch sol_adapted_cylinder(double r, double half_height = 1.0);

/// Hopf cylinder over the origin circle of geodesic curvature kappa.
SurfacePatch hopf_circle_cylinder(double m, double l, double kappa);

/// Hopf cylinder over a base geodesic through the origin.
SurfacePatch hopf_line_cylinder(double m, double l);

/// The same immersion with parameters exchanged, (u, v) -> r(v, u).
SurfacePatch swap_parameters(const SurfacePatch& patch);

/// Ad-hoc surface selection for the CLI.
struct SurfaceRequest {
  std::string name;
  double m = 1.0;
  double l = 0.0;
  double c = 1.0;
  /// Intrinsic radius (sphere), chart radius (sol cylinders); NaN selects a default.
  double radius = std::numeric_limits<double>::quiet_NaN();
  /// Geodesic curvature of the base circle; NaN selects sqrt(4m - l^2).
  double kappa = std::numeric_limits<double>::quiet_NaN();
  double offset = 0.0;
};

std::vector<std::string> surface_names();

/// Throws InvalidArgument for unknown names.
SurfacePatch named_surface(const SurfaceRequest& request);

}  // namespace biharm::verify
