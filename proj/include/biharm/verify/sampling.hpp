#pragma once

// Deterministic quasi-random sampling: a Halton sequence in bases 2, 3, 5
// shifted modulo 1 by a seed-derived offset, plus a seeded uniform stream.

#include <array>
#include <cstdint>
#include <random>

#include "biharm/chart_geometry.hpp"

namespace biharm::verify {

double radical_inverse(std::uint64_t index, unsigned base);

class QuasiRandomSampler {
 public:
  explicit QuasiRandomSampler(std::uint64_t seed = 0);

  /// Next point of the shifted sequence in [0, 1)^3.
  std::array<double, 3> next_unit();

  /// Next point in the box [lo, hi] that the model accepts; rejected
  /// points are skipped.
  ChartPoint next_in(const MetricModel& model, const Vec3& lo, const Vec3& hi);

  /// Seeded uniform draw, independent of the Halton stream.
  double uniform(double a, double b);

 private:
  std::array<double, 3> shift_{};
  std::uint64_t index_ = 1;
  std::mt19937_64 engine_;
};

}  // namespace biharm::verify
