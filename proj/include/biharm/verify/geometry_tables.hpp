#pragma once

// Closed-form frame tables (brackets, connection, curvature, Ricci) loaded
// from the versioned JSON data set. They are oracles only: nothing in the
// computation path reads them.

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "biharm/chart_geometry.hpp"

namespace biharm::verify {

/// c * m^pm * l^pl * x^px * y^py * z^pz
struct TableTerm {
  double coef = 0.0;
  int pm = 0, pl = 0, px = 0, py = 0, pz = 0;
};

using TableFormula = std::vector<TableTerm>;

double evaluate(const TableFormula& formula, double m, double l, const ChartPoint& p);

/// Frame-valued entry, e.g. [E_i, E_j] or nabla_{E_i} E_j (or R(E_i,E_j)E_k).
struct VectorEntry {
  int i = 0, j = 0, k = 0;
  std::array<TableFormula, 3> value;
};

struct RiemannEntry {
  std::array<int, 4> ijkl{};
  TableFormula value;
};

struct PairEntry {
  int i = 0, j = 0;
  TableFormula value;
};

struct ModelTables {
  std::vector<VectorEntry> lie_brackets;
  std::vector<VectorEntry> connection;
  std::vector<VectorEntry> curvature_operator;
  std::vector<RiemannEntry> riemann;
  std::vector<PairEntry> ricci;

  /// Tables expanded to full arrays at a point (0-based indices).
  using VecTable = std::array<std::array<Vec3, 3>, 3>;
  VecTable lie_at(double m, double l, const ChartPoint& p) const;
  VecTable connection_at(double m, double l, const ChartPoint& p) const;
  /// R_{ijkl} in the frame, completed by the curvature symmetries.
  Tensor4 riemann_at(double m, double l, const ChartPoint& p) const;
  Mat3 ricci_at(double m, double l, const ChartPoint& p) const;
};

struct GeometryTables {
  int version = 0;
  ModelTables bcv;
  ModelTables sol;
};

/// Throws InvalidArgument on malformed input or an unsupported version.
GeometryTables parse_geometry_tables(std::string_view json_text);

/// The data set compiled into the binary.
const GeometryTables& embedded_geometry_tables();

struct TableComparison {
  double max_lie = 0.0;
  double max_connection = 0.0;
  double max_curvature_operator = 0.0;
  double max_riemann = 0.0;
  double max_ricci = 0.0;
  int entries = 0;

  double max_any() const;
};

/// Deviation between the numerically derived frame data of a BCV or Sol
/// model and its table at one point.
TableComparison compare_with_tables(const MetricModel& model, const ModelTables& tables, const ChartPoint& p);

}  // namespace biharm::verify
