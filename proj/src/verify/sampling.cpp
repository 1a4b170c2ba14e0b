#include "biharm/verify/sampling.hpp"

#include <cmath>

namespace biharm::verify {

namespace {

// 53 random mantissa bits; std::uniform_real_distribution is not
// reproducible across standard libraries.
double unit_from_bits(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

}  // namespace

double radical_inverse(std::uint64_t index, unsigned base) {
  double inv = 1.0 / base;
  double scale = inv;
  double out = 0.0;
  while (index > 0) {
    out += static_cast<double>(index % base) * scale;
    index /= base;
    scale *= inv;
  }
  return out;
}

QuasiRandomSampler::QuasiRandomSampler(std::uint64_t seed) : engine_(seed) {
  if (seed != 0)
    for (double& s : shift_) s = unit_from_bits(engine_());
}

std::array<double, 3> QuasiRandomSampler::next_unit() {
  static constexpr unsigned bases[3] = {2, 3, 5};
  std::array<double, 3> out{};
  for (int i = 0; i < 3; ++i) {
    double v = radical_inverse(index_, bases[i]) + shift_[i];
    out[i] = v - std::floor(v);
  }
  ++index_;
  return out;
}

ChartPoint QuasiRandomSampler::next_in(const MetricModel& model, const Vec3& lo, const Vec3& hi) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    auto u = next_unit();
    ChartPoint p{lo[0] + (hi[0] - lo[0]) * u[0], lo[1] + (hi[1] - lo[1]) * u[1], lo[2] + (hi[2] - lo[2]) * u[2]};
    if (model.contains(p)) return p;
  }
  throw InvalidArgument("sampling box has no valid points for " + model.describe());
}

double QuasiRandomSampler::uniform(double a, double b) { return a + (b - a) * unit_from_bits(engine_()); }

}  // namespace biharm::verify
