#include "biharm/verify/surfaces.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <type_traits>

namespace biharm::verify {

double geodesic_sphere_chart_radius(double c, double rho) {
  if (!(rho > 0.0) || !std::isfinite(rho)) throw InvalidArgument("sphere radius must be positive");
  if (c == 0.0) return rho;
  const double k = std::sqrt(std::abs(c));
  if (c > 0.0) {
    if (!(k * rho < std::numbers::pi)) throw InvalidArgument("geodesic radius exceeds the injectivity radius");
    return 2.0 / k * std::tan(0.5 * k * rho);
  }
  return 2.0 / k * std::tanh(0.5 * k * rho);
}

SurfacePatch chart_sphere(const MetricModel& model, const Vec3& centre, double r, double pole_gap) {
  if (!(r > 0.0)) throw InvalidArgument("sphere radius must be positive");
  if (!(pole_gap > 0.0 && pole_gap < 0.5 * std::numbers::pi)) throw InvalidArgument("pole gap must be in (0, pi/2)");
  return SurfacePatch::analytic(model, {0.0, 2.0 * std::numbers::pi, pole_gap, std::numbers::pi - pole_gap},
                                [centre, r](const auto& phi, const auto& theta) {
                                  using std::cos;
                                  using std::sin;
                                  using T = std::decay_t<decltype(phi)>;
                                  T st = sin(theta);
                                  return Vec3T<T>{centre[0] + r * st * cos(phi), centre[1] + r * st * sin(phi),
                                                  centre[2] + r * cos(theta)};
                                });
}

SurfacePatch geodesic_sphere(double c, double rho, double pole_gap) {
  return chart_sphere(MetricModel::space_form(c), {0.0, 0.0, 0.0}, geodesic_sphere_chart_radius(c, rho), pole_gap);
}

SurfacePatch coordinate_plane(const MetricModel& model, char axis, double offset, double half_width) {
  if (!(half_width > 0.0)) throw InvalidArgument("plane half-width must be positive");
  int fixed = axis == 'x' ? 0 : axis == 'y' ? 1 : axis == 'z' ? 2 : -1;
  if (fixed < 0) throw InvalidArgument(std::string("unknown plane axis '") + axis + "'");
  return SurfacePatch::analytic(model, {-half_width, half_width, -half_width, half_width},
                                [fixed, offset](const auto& u, const auto& v) {
                                  using T = std::decay_t<decltype(u)>;
                                  Vec3T<T> p{};
                                  p[fixed] = T(offset);
                                  p[(fixed + 1) % 3] = u;
                                  p[(fixed + 2) % 3] = v;
                                  return p;
                                });
}

SurfacePatch sol_vertical_cylinder(double r, double half_height) {
  if (!(r > 0.0) || !(half_height > 0.0)) throw InvalidArgument("cylinder radius and height must be positive");
  return SurfacePatch::analytic(MetricModel::sol(), {0.0, 2.0 * std::numbers::pi, -half_height, half_height},
                                [r](const auto& u, const auto& v) {
                                  using std::cos;
                                  using std::sin;
                                  using T = std::decay_t<decltype(u)>;
                                  return Vec3T<T>{r * cos(u), r * sin(u), v};
                                });
}

SurfacePatch sol_adapted_cylinder(double r, double half_height) {
  if (!(r > 0.0) || !(half_height > 0.0)) throw InvalidArgument("cylinder radius and height must be positive");
  return SurfacePatch::analytic(MetricModel::sol(), {0.0, 2.0 * std::numbers::pi, -half_height, half_height},
                                [r](const auto& u, const auto& v) {
                                  using std::cos;
                                  using std::exp;
                                  using std::sin;
                                  using T = std::decay_t<decltype(u)>;
                                  return Vec3T<T>{r * exp(-v) * cos(u), r * exp(v) * sin(u), v};
                                });
}

SurfacePatch hopf_circle_cylinder(double m, double l, double kappa) {
  return lift_cylinder(m, l, coordinate_circle(m, circle_for_kg(m, kappa)));
}

SurfacePatch hopf_line_cylinder(double m, double l) {
  const double half = m == 0.0 ? 0.5 : std::min(0.5, 0.4 / std::sqrt(std::abs(m)));
  return lift_cylinder(m, l, geodesic_line(m, 0.3, half));
}

SurfacePatch swap_parameters(const SurfacePatch& patch) {
  if (!patch.is_analytic()) throw InvalidArgument("swap_parameters needs an analytic patch");
  const ParamDomain d = patch.domain();
  return SurfacePatch::analytic(patch.model(), {d.v0, d.v1, d.u0, d.u1},
                                [patch](const auto& u, const auto& v) { return patch.evaluate(v, u); });
}

std::vector<std::string> surface_names() {
  return {"hopf-circle", "hopf-line", "sphere", "sol-plane-x", "sol-plane-y", "sol-plane-z",
          "sol-cylinder", "sol-adapted-cylinder"};
}

SurfacePatch named_surface(const SurfaceRequest& q) {
  const bool has_radius = !std::isnan(q.radius);
  if (q.name == "hopf-circle") {
    double kappa = q.kappa;
    if (std::isnan(kappa)) {
      double disc = 4.0 * q.m - q.l * q.l;
      if (!(disc > 0.0)) throw InvalidArgument("hopf-circle needs 4m - l^2 > 0 or an explicit kappa");
      kappa = std::sqrt(disc);
    }
    return hopf_circle_cylinder(q.m, q.l, kappa);
  }
  if (q.name == "hopf-line") return hopf_line_cylinder(q.m, q.l);
  if (q.name == "sphere") return geodesic_sphere(q.c, has_radius ? q.radius : 0.25 * std::numbers::pi);
  if (q.name == "sol-plane-x") return coordinate_plane(MetricModel::sol(), 'x', q.offset);
  if (q.name == "sol-plane-y") return coordinate_plane(MetricModel::sol(), 'y', q.offset);
  if (q.name == "sol-plane-z") return coordinate_plane(MetricModel::sol(), 'z', q.offset);
  if (q.name == "sol-cylinder") return sol_vertical_cylinder(has_radius ? q.radius : 1.0);
  if (q.name == "sol-adapted-cylinder") return sol_adapted_cylinder(has_radius ? q.radius : 1.0);
  throw InvalidArgument("unknown surface '" + q.name + "'");
}

}  // namespace biharm::verify
