#include "biharm/chart_geometry.hpp"

#include <cmath>
#include <sstream>

namespace biharm {

ModelKind parse_model_kind(std::string_view name) {
  if (name == "bcv" || name == "BCV") return ModelKind::bcv;
  if (name == "sol" || name == "Sol") return ModelKind::sol;
  if (name == "space_form" || name == "space-form" || name == "spaceform" || name == "SpaceFormChart")
    return ModelKind::space_form;
  throw InvalidArgument("unknown model kind '" + std::string(name) + "'");
}

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::bcv: return "bcv";
    case ModelKind::sol: return "sol";
    case ModelKind::space_form: return "space_form";
  }
  return "?";
}

MetricModel::MetricModel(ModelKind kind, ModelParams params) : kind_(kind), params_(params) {
  if (!std::isfinite(params.m) || !std::isfinite(params.l) || !std::isfinite(params.c))
    throw InvalidArgument("model parameters must be finite");
  if (!std::isfinite(params.domain_floor) || params.domain_floor < 0.0 || params.domain_floor >= 1.0)
    throw InvalidArgument("domain_floor must lie in [0, 1)");
}

MetricModel make_model(ModelKind kind, ModelParams params) { return {kind, params}; }

MetricModel make_model(std::string_view kind, ModelParams params) { return {parse_model_kind(kind), params}; }

std::string MetricModel::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case ModelKind::bcv: os << "BCV(m=" << params_.m << ", l=" << params_.l << ")"; break;
    case ModelKind::sol: os << "Sol"; break;
    case ModelKind::space_form: os << "SpaceForm(c=" << params_.c << ")"; break;
  }
  return os.str();
}

bool MetricModel::contains(const ChartPoint& p) const {
  if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z)) return false;
  switch (kind_) {
    case ModelKind::bcv:
      if (params_.m < 0.0) return 1.0 + params_.m * (p.x * p.x + p.y * p.y) > params_.domain_floor;
      return true;
    case ModelKind::sol:
      return true;
    case ModelKind::space_form:
      if (params_.c < 0.0)
        return 1.0 + 0.25 * params_.c * (p.x * p.x + p.y * p.y + p.z * p.z) > params_.domain_floor;
      return true;
  }
  return false;
}

void MetricModel::require_valid(const ChartPoint& p) const {
  if (!contains(p)) {
    std::ostringstream os;
    os << "point (" << p.x << ", " << p.y << ", " << p.z << ") is outside the domain of " << describe();
    throw InvalidPoint(os.str());
  }
}

Mat3 metric_at(const MetricModel& model, const ChartPoint& p) {
  model.require_valid(p);
  return model.metric(p.coords());
}

double inner_at(const MetricModel& model, const TangentVector& a, const TangentVector& b) {
  if (!(a.base == b.base)) throw InvalidPoint("inner_at: vectors have different base points");
  return inner(metric_at(model, a.base), a.components, b.components);
}

double norm_at(const MetricModel& model, const TangentVector& v) {
  double q = inner_at(model, v, v);
  return std::sqrt(q > 0.0 ? q : 0.0);
}

std::array<TangentVector, 3> orthonormal_frame_at(const MetricModel& model, const ChartPoint& p) {
  model.require_valid(p);
  auto e = model.frame(p.coords());
  return {TangentVector{p, e[0]}, TangentVector{p, e[1]}, TangentVector{p, e[2]}};
}

Vec3 frame_coefficients(const MetricModel& model, const TangentVector& v) {
  model.require_valid(v.base);
  Mat3 g = model.metric(v.base.coords());
  auto e = model.frame(v.base.coords());
  return {inner(g, v.components, e[0]), inner(g, v.components, e[1]), inner(g, v.components, e[2])};
}

Vec3 Christoffels::contract(const Vec3& a, const Vec3& b) const {
  Vec3 r{};
  for (int k = 0; k < 3; ++k) r[k] = inner(gamma[k], a, b);
  return r;
}

Christoffels christoffels_at(const MetricModel& model, const ChartPoint& p) {
  model.require_valid(p);
  return {christoffel_components(model, p.coords())};
}

TangentVector lie_bracket_frame_at(const MetricModel& model, const ChartPoint& p, int i, int j) {
  if (i < 1 || i > 3 || j < 1 || j > 3) throw InvalidArgument("frame index must be 1, 2 or 3");
  model.require_valid(p);
  auto e = model.frame(p.coords());
  const Vec3& ei = e[i - 1];
  const Vec3& ej = e[j - 1];
  // [X, Y]^k = X(Y^k) - Y(X^k)
  auto directional = [&](const Vec3& dir, int index) {
    Vec3T<D1> q{D1(p.x, dir[0]), D1(p.y, dir[1]), D1(p.z, dir[2])};
    auto f = model.frame(q)[index - 1];
    return Vec3{f[0].eps, f[1].eps, f[2].eps};
  };
  return {p, directional(ei, j) - directional(ej, i)};
}

// ---------------------------------------------------------------------------

double CurvatureData::riemann(const Vec3& x, const Vec3& y, const Vec3& z, const Vec3& w) const {
  double s = 0.0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) s += riemann_lower[a][b][c][d] * x[a] * y[b] * z[c] * w[d];
  return s;
}

Vec3 CurvatureData::curvature_operator(const Vec3& x, const Vec3& y, const Vec3& z) const {
  Vec3 r{};
  for (int l = 0; l < 3; ++l) {
    double s = 0.0;
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += curvature_up[l][k][i][j] * x[i] * y[j] * z[k];
    r[l] = s;
  }
  return r;
}

double CurvatureData::ricci_form(const Vec3& x, const Vec3& y) const { return inner(ricci, x, y); }

Vec3 CurvatureData::ricci_operator(const Vec3& z) const { return mat_vec(g_inv, mat_vec(ricci, z)); }

CurvatureData curvature_at(const MetricModel& model, const ChartPoint& p) {
  model.require_valid(p);
  CurvatureData data;
  data.base = p;
  data.g = model.metric(p.coords());
  data.g_inv = inverse3(data.g);

  // gamma and its coordinate derivatives dgamma[a] = d_a Gamma
  std::array<std::array<Mat3, 3>, 3> dgamma{};
  for (int a = 0; a < 3; ++a) {
    Vec3T<D1> q;
    for (int i = 0; i < 3; ++i) q[i] = D1(p.coords()[i], i == a ? 1.0 : 0.0);
    auto gq = christoffel_components(model, q);
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          dgamma[a][k][i][j] = gq[k][i][j].eps;
          if (a == 0) data.christoffels.gamma[k][i][j] = gq[k][i][j].re;
        }
  }
  const auto& gam = data.christoffels.gamma;

  // R(d_i, d_j) d_k = R^l_{kij} d_l with
  // R^l_{kij} = d_i G^l_{jk} - d_j G^l_{ik} + G^l_{im} G^m_{jk} - G^l_{jm} G^m_{ik}
  for (int l = 0; l < 3; ++l)
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          double s = dgamma[i][l][j][k] - dgamma[j][l][i][k];
          for (int m = 0; m < 3; ++m) s += gam[l][i][m] * gam[m][j][k] - gam[l][j][m] * gam[m][i][k];
          data.curvature_up[l][k][i][j] = s;
        }

  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
          double s = 0.0;
          for (int l = 0; l < 3; ++l) s += data.g[a][l] * data.curvature_up[l][b][c][d];
          data.riemann_lower[a][b][c][d] = s;
        }

  // Ric(X, Y) = g^{pq} g(R(X, d_p) d_q, Y) = g^{pq} Rm(Y, q, X, p)
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      double s = 0.0;
      for (int pi = 0; pi < 3; ++pi)
        for (int qi = 0; qi < 3; ++qi) s += data.g_inv[pi][qi] * data.riemann_lower[y][qi][x][pi];
      data.ricci[x][y] = s;
    }
  return data;
}

namespace {

void require_based_at(const ChartPoint& p, std::initializer_list<const TangentVector*> vs) {
  for (const auto* v : vs)
    if (!(v->base == p)) throw InvalidPoint("tangent vector is not based at the evaluation point");
}

}  // namespace

double riemann_at(const MetricModel& model, const ChartPoint& p, const TangentVector& x, const TangentVector& y,
                  const TangentVector& z, const TangentVector& w) {
  require_based_at(p, {&x, &y, &z, &w});
  return curvature_at(model, p).riemann(x.components, y.components, z.components, w.components);
}

double ricci_at(const MetricModel& model, const ChartPoint& p, const TangentVector& x, const TangentVector& y) {
  require_based_at(p, {&x, &y});
  return curvature_at(model, p).ricci_form(x.components, y.components);
}

TangentVector ricci_operator_at(const MetricModel& model, const ChartPoint& p, const TangentVector& z) {
  require_based_at(p, {&z});
  return {p, curvature_at(model, p).ricci_operator(z.components)};
}

}  // namespace biharm
