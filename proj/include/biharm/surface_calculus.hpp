#pragma once

// Extrinsic and intrinsic geometry of parametric surfaces r(u, v) immersed in
// a MetricModel.
//
// Sign conventions:
//   unit normal  (r_u, r_v, xi) is positively oriented in the chart
//   h(X, Y)      = -g(nabla_X xi, Y)
//   A            = I^{-1} h,  H = tr(A) / 2,  |A|^2 = sum of squared principal curvatures

#include <functional>
#include <utility>

#include "biharm/chart_geometry.hpp"

namespace biharm {

struct ParamPoint {
  double u = 0.0;
  double v = 0.0;
};

/// Rectangular parameter domain [u0, u1] x [v0, v1].
struct ParamDomain {
  double u0 = 0.0;
  double u1 = 1.0;
  double v0 = 0.0;
  double v1 = 1.0;

  bool contains(const ParamPoint& q) const { return q.u >= u0 && q.u <= u1 && q.v >= v0 && q.v <= v1; }
};

/// Step control for difference stencils on scalar fields.
struct DifferenceOptions {
  double step = 1e-3;
  /// One Richardson extrapolation (h, h/2) on top of the central stencil.
  bool richardson = true;
};

using ScalarField = std::function<double(double u, double v)>;

class SurfacePatch {
 public:
  /// Immersion given as a generic callable, instantiated for double and
  /// for second-order dual numbers; jets are exact.
  template <typename F>
  static SurfacePatch analytic(MetricModel model, ParamDomain domain, F immersion) {
    SurfacePatch patch(std::move(model), domain);
    patch.eval_ = [immersion](double u, double v) { return Vec3(immersion(u, v)); };
    patch.eval_d2_ = [immersion](const D2& u, const D2& v) { return Vec3T<D2>(immersion(u, v)); };
    return patch;
  }

  /// Immersion known only pointwise; jets use central differences of the
  /// given step.
  static SurfacePatch sampled(MetricModel model, ParamDomain domain, std::function<Vec3(double, double)> immersion,
                              double jet_step = 1e-4);

  const MetricModel& model() const { return model_; }
  const ParamDomain& domain() const { return domain_; }
  bool is_analytic() const { return static_cast<bool>(eval_d2_); }
  double jet_step() const { return jet_step_; }

  /// r(u, v); throws OutOfDomain outside the parameter domain.
  ChartPoint point(const ParamPoint& q) const;

  Vec3 evaluate(double u, double v) const { return eval_(u, v); }
  Vec3T<D2> evaluate(const D2& u, const D2& v) const { return eval_d2_(u, v); }

 private:
  SurfacePatch(MetricModel model, ParamDomain domain);

  MetricModel model_;
  ParamDomain domain_;
  double jet_step_ = 0.0;
  std::function<Vec3(double, double)> eval_;
  std::function<Vec3T<D2>(const D2&, const D2&)> eval_d2_;
};

/// Position and partial derivatives of r up to second order.
struct ImmersionJet {
  ChartPoint point;
  Vec3 r_u{};
  Vec3 r_v{};
  Vec3 r_uu{};
  Vec3 r_uv{};
  Vec3 r_vv{};
};

struct ShapeReport {
  ParamPoint at;
  ChartPoint point;
  TangentVector normal;
  Mat2 first_form{};
  Mat2 second_form{};
  Mat2 shape_operator{};
  double mean_curvature = 0.0;
  double norm_a_sq = 0.0;
  /// Frobenius norm of A - H Id in an I-orthonormal basis.
  double umbilicity_deficit = 0.0;
};

/// Orthonormal frame adapted to the surface: e1 along r_u, e2 completes the
/// tangent plane (Gram-Schmidt in g), normal as in unit_normal.
struct AdaptedFrame {
  TangentVector e1;
  TangentVector e2;
  TangentVector normal;
};

ImmersionJet immersion_jet(const SurfacePatch& patch, const ParamPoint& q);
Mat2 first_fundamental_form(const SurfacePatch& patch, const ParamPoint& q);
TangentVector unit_normal(const SurfacePatch& patch, const ParamPoint& q);
ShapeReport shape_report(const SurfacePatch& patch, const ParamPoint& q);
AdaptedFrame adapted_frame(const SurfacePatch& patch, const ParamPoint& q);

/// Push forward parameter-space components (X^u, X^v) to the ambient chart.
TangentVector push_forward(const SurfacePatch& patch, const ParamPoint& q, const Vec2& components);

/// Parameter-space components I^{ab} d_b f of the intrinsic gradient.
Vec2 gradient_components(const SurfacePatch& patch, const ScalarField& f, const ParamPoint& q,
                         const DifferenceOptions& options = {});

/// grad f as an ambient tangent vector (tangent to the surface).
TangentVector intrinsic_gradient(const SurfacePatch& patch, const ScalarField& f, const ParamPoint& q,
                                 const DifferenceOptions& options = {});

/// Laplace-Beltrami operator in divergence form,
/// (1/sqrt(det I)) d_a(sqrt(det I) I^{ab} d_b f), nested central differences.
double laplace_beltrami(const SurfacePatch& patch, const ScalarField& f, const ParamPoint& q,
                        const DifferenceOptions& options = {});

/// The mean curvature of the patch as a scalar field.
ScalarField mean_curvature_field(const SurfacePatch& patch);

}  // namespace biharm
