#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "cft/error.hpp"
#include "cft/grid.hpp"

namespace cft {

/// Samples rect(t - center): 1 inside, 0 outside, 1/2 on the jump
/// (|t - center| = 1/2 to within 1e-12).
inline SampledSignal rect_signal(double center, const UniformGrid& grid) {
  constexpr double kEdgeTolerance = 1e-12;
  ComplexSeq values(grid.count());
  for (std::size_t j = 0; j < grid.count(); ++j) {
    const double offset = std::abs(grid.point(j) - center);
    if (std::abs(offset - 0.5) <= kEdgeTolerance) {
      values[j] = 0.5;
    } else if (offset < 0.5) {
      values[j] = 1.0;
    } else {
      values[j] = 0.0;
    }
  }
  return SampledSignal(grid, std::move(values));
}

/// Closed-form transform of rect(t - 1) in the (a, b) = (0, -1) convention:
///   exp(-i w) sin(w / 2) / (w / 2) / sqrt(2 pi).
inline Complex rect_transform_analytic(double omega) {
  const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  const Complex shift = std::polar(1.0, -omega);
  if (std::abs(omega) < 1e-8) {
    return norm * shift * (1.0 - omega * omega / 24.0);
  }
  const double half = 0.5 * omega;
  return norm * shift * (std::sin(half) / half);
}

/// sin(t) + 0.1 exp(-2 i t): two real-sinusoid lines at +-1 plus a weaker
/// one-sided line at -2.
inline SampledSignal fig1_signal(const UniformGrid& grid) {
  ComplexSeq values(grid.count());
  for (std::size_t j = 0; j < grid.count(); ++j) {
    const double t = grid.point(j);
    values[j] = std::sin(t) + 0.1 * std::polar(1.0, -2.0 * t);
  }
  return SampledSignal(grid, std::move(values));
}

enum class TestSignalKind { RectShifted, Fig1Composite };

/// Named demonstration signal; `center` only applies to RectShifted.
struct TestSignalSpec {
  TestSignalKind kind = TestSignalKind::RectShifted;
  double center = 1.0;
};

inline SampledSignal make_test_signal(const TestSignalSpec& spec, const UniformGrid& grid) {
  if (!std::isfinite(spec.center)) {
    throw Error(ErrorKind::InvalidArgument, "test signal center must be finite");
  }
  switch (spec.kind) {
    case TestSignalKind::RectShifted: return rect_signal(spec.center, grid);
    case TestSignalKind::Fig1Composite: return fig1_signal(grid);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown test signal kind");
}

/// 201 points on [-10, 10].
inline UniformGrid fig2_grid() { return UniformGrid(-10.0, 20.0 / 200.0, 201); }

/// 201 points on [-100, 100].
inline UniformGrid fig1_grid() { return UniformGrid(-100.0, 200.0 / 200.0, 201); }

}  // namespace cft
