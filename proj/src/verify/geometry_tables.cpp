#include "biharm/verify/geometry_tables.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>

#include "biharm/verify/embedded_tables.hpp"

namespace biharm::verify {

using nlohmann::json;

double evaluate(const TableFormula& formula, double m, double l, const ChartPoint& p) {
  double sum = 0.0;
  for (const TableTerm& t : formula)
    sum += t.coef * std::pow(m, t.pm) * std::pow(l, t.pl) * std::pow(p.x, t.px) * std::pow(p.y, t.py) *
           std::pow(p.z, t.pz);
  return sum;
}

namespace {

int index_of(const json& j, const char* key) {
  int i = j.at(key).get<int>();
  if (i < 1 || i > 3) throw InvalidArgument(std::string("table index out of range: ") + key);
  return i;
}

TableFormula parse_formula(const json& j) {
  TableFormula f;
  for (const json& term : j) {
    TableTerm t;
    t.coef = term.at("c").get<double>();
    t.pm = term.value("m", 0);
    t.pl = term.value("l", 0);
    t.px = term.value("x", 0);
    t.py = term.value("y", 0);
    t.pz = term.value("z", 0);
    f.push_back(t);
  }
  return f;
}

std::vector<VectorEntry> parse_vectors(const json& list, bool with_k) {
  std::vector<VectorEntry> out;
  for (const json& e : list) {
    VectorEntry v;
    v.i = index_of(e, "i");
    v.j = index_of(e, "j");
    if (with_k) v.k = index_of(e, "k");
    const json& value = e.at("value");
    if (value.size() != 3) throw InvalidArgument("vector table entry needs three components");
    for (int c = 0; c < 3; ++c) v.value[c] = parse_formula(value[c]);
    out.push_back(std::move(v));
  }
  return out;
}

ModelTables parse_model(const json& j) {
  ModelTables t;
  t.lie_brackets = parse_vectors(j.at("lie_brackets"), false);
  t.connection = parse_vectors(j.at("connection"), false);
  t.curvature_operator = parse_vectors(j.value("curvature_operator", json::array()), true);
  for (const json& e : j.at("riemann")) {
    RiemannEntry r;
    const json& idx = e.at("ijkl");
    if (idx.size() != 4) throw InvalidArgument("riemann entry needs four indices");
    for (int a = 0; a < 4; ++a) {
      r.ijkl[a] = idx[a].get<int>();
      if (r.ijkl[a] < 1 || r.ijkl[a] > 3) throw InvalidArgument("riemann index out of range");
    }
    r.value = parse_formula(e.at("value"));
    t.riemann.push_back(std::move(r));
  }
  for (const json& e : j.at("ricci")) t.ricci.push_back({index_of(e, "i"), index_of(e, "j"), parse_formula(e.at("value"))});
  return t;
}

Vec3 eval_vector(const VectorEntry& e, double m, double l, const ChartPoint& p) {
  return {evaluate(e.value[0], m, l, p), evaluate(e.value[1], m, l, p), evaluate(e.value[2], m, l, p)};
}

double max_abs_diff(const Vec3& a, const Vec3& b) {
  double d = 0.0;
  for (int i = 0; i < 3; ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

ModelTables::VecTable ModelTables::lie_at(double m, double l, const ChartPoint& p) const {
  VecTable t{};
  for (const VectorEntry& e : lie_brackets) {
    Vec3 v = eval_vector(e, m, l, p);
    t[e.i - 1][e.j - 1] = v;
    t[e.j - 1][e.i - 1] = -1.0 * v;
  }
  return t;
}

ModelTables::VecTable ModelTables::connection_at(double m, double l, const ChartPoint& p) const {
  VecTable t{};
  for (const VectorEntry& e : connection) t[e.i - 1][e.j - 1] = eval_vector(e, m, l, p);
  return t;
}

Tensor4 ModelTables::riemann_at(double m, double l, const ChartPoint& p) const {
  Tensor4 r{};
  for (const RiemannEntry& e : riemann) {
    const double v = evaluate(e.value, m, l, p);
    const int i = e.ijkl[0] - 1, j = e.ijkl[1] - 1, k = e.ijkl[2] - 1, q = e.ijkl[3] - 1;
    for (int swap = 0; swap < 2; ++swap) {
      const int a = swap ? k : i, b = swap ? q : j, c = swap ? i : k, d = swap ? j : q;
      r[a][b][c][d] = v;
      r[b][a][c][d] = -v;
      r[a][b][d][c] = -v;
      r[b][a][d][c] = v;
    }
  }
  return r;
}

Mat3 ModelTables::ricci_at(double m, double l, const ChartPoint& p) const {
  Mat3 r{};
  for (const PairEntry& e : ricci) {
    const double v = evaluate(e.value, m, l, p);
    r[e.i - 1][e.j - 1] = v;
    r[e.j - 1][e.i - 1] = v;
  }
  return r;
}

GeometryTables parse_geometry_tables(std::string_view json_text) {
  try {
    const json j = json::parse(json_text);
    GeometryTables t;
    t.version = j.at("version").get<int>();
    if (t.version != 1) throw InvalidArgument("unsupported geometry table version " + std::to_string(t.version));
    t.bcv = parse_model(j.at("models").at("bcv"));
    t.sol = parse_model(j.at("models").at("sol"));
    return t;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed geometry tables: ") + e.what());
  }
}

const GeometryTables& embedded_geometry_tables() {
  static const GeometryTables tables = parse_geometry_tables(detail::embedded_tables_json);
  return tables;
}

double TableComparison::max_any() const {
  return std::max({max_lie, max_connection, max_curvature_operator, max_riemann, max_ricci});
}

TableComparison compare_with_tables(const MetricModel& model, const ModelTables& tables, const ChartPoint& p) {
  if (model.kind() == ModelKind::space_form) throw InvalidArgument("no closed-form tables for space-form charts");
  const double m = model.m(), l = model.l();
  const auto frame = orthonormal_frame_at(model, p);
  const CurvatureData curv = curvature_at(model, p);
  const auto lie = tables.lie_at(m, l, p);
  const auto conn = tables.connection_at(m, l, p);
  const Tensor4 rm = tables.riemann_at(m, l, p);
  const Mat3 ric = tables.ricci_at(m, l, p);

  TableComparison out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Vec3 bracket = frame_coefficients(model, lie_bracket_frame_at(model, p, i + 1, j + 1));
      out.max_lie = std::max(out.max_lie, max_abs_diff(bracket, lie[i][j]));
      Vec3 nabla = frame_coefficients(model, covariant_derivative_at(model, p, frame_field(model, j + 1), frame[i]));
      out.max_connection = std::max(out.max_connection, max_abs_diff(nabla, conn[i][j]));
      out.max_ricci = std::max(out.max_ricci,
                               std::abs(curv.ricci_form(frame[i].components, frame[j].components) - ric[i][j]));
      out.entries += 3;
      for (int k = 0; k < 3; ++k)
        for (int q = 0; q < 3; ++q) {
          double v = curv.riemann(frame[i].components, frame[j].components, frame[k].components, frame[q].components);
          out.max_riemann = std::max(out.max_riemann, std::abs(v - rm[i][j][k][q]));
          ++out.entries;
        }
    }
  }
  for (const VectorEntry& e : tables.curvature_operator) {
    Vec3 r = curv.curvature_operator(frame[e.i - 1].components, frame[e.j - 1].components, frame[e.k - 1].components);
    Vec3 coeffs = frame_coefficients(model, {p, r});
    out.max_curvature_operator = std::max(out.max_curvature_operator, max_abs_diff(coeffs, eval_vector(e, m, l, p)));
    ++out.entries;
  }
  return out;
}

}  // namespace biharm::verify
