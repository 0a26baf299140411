#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cft/conventions.hpp"
#include "cft/error.hpp"

namespace cft {

using Complex = std::complex<double>;
using ComplexSeq = std::vector<Complex>;

/// Relative tolerance used when recovering a grid from sampled coordinates.
inline constexpr double kUniformityTolerance = 1e-9;

/// Evenly spaced axis: point(j) = start + spacing * j, j = 0 .. count-1.
/// Stored as (start, spacing, count) so lattice offsets stay integral.
class UniformGrid {
 public:
  UniformGrid(double start, double spacing, std::size_t count)
      : start_(start), spacing_(spacing), count_(count) {
    if (!std::isfinite(start) || !std::isfinite(spacing)) {
      throw Error(ErrorKind::InvalidArgument, "grid start and spacing must be finite");
    }
    if (spacing == 0.0) {
      throw Error(ErrorKind::InvalidArgument, "grid spacing must be nonzero");
    }
    if (count == 0) {
      throw Error(ErrorKind::InvalidArgument, "grid must contain at least one point");
    }
  }

  double start() const noexcept { return start_; }
  double spacing() const noexcept { return spacing_; }
  std::size_t count() const noexcept { return count_; }

  /// Zero-based point accessor.
  double point(std::size_t j) const noexcept {
    return start_ + spacing_ * static_cast<double>(j);
  }

  std::vector<double> points() const {
    std::vector<double> out(count_);
    for (std::size_t j = 0; j < count_; ++j) out[j] = point(j);
    return out;
  }

  friend bool operator==(const UniformGrid&, const UniformGrid&) = default;

 private:
  double start_;
  double spacing_;
  std::size_t count_;
};

/// Samples of a function on a time axis.
struct SampledSignal {
  SampledSignal(UniformGrid g, ComplexSeq v) : grid(g), values(std::move(v)) {
    if (values.size() != grid.count()) {
      throw Error(ErrorKind::InvalidArgument,
                  "signal has " + std::to_string(values.size()) + " values for a grid of " +
                      std::to_string(grid.count()) + " points");
    }
  }

  UniformGrid grid;
  ComplexSeq values;
};

/// Transform values on a frequency axis, tagged with the convention that produced them.
struct Spectrum {
  Spectrum(UniformGrid g, ComplexSeq v, TransformConvention c)
      : grid(g), values(std::move(v)), convention(c) {
    if (values.size() != grid.count()) {
      throw Error(ErrorKind::InvalidArgument,
                  "spectrum has " + std::to_string(values.size()) + " values for a grid of " +
                      std::to_string(grid.count()) + " points");
    }
  }

  UniformGrid grid;
  ComplexSeq values;
  TransformConvention convention;
};

/// Recovers (start, spacing, count) from strictly monotonic, evenly spaced
/// coordinates. Descending input yields a negative spacing.
inline UniformGrid infer_grid(std::span<const double> points) {
  const std::size_t n = points.size();
  if (n < 2) {
    throw Error(ErrorKind::TooShort,
                "need at least 2 points to infer a grid, got " + std::to_string(n));
  }
  for (double p : points) {
    if (!std::isfinite(p)) throw Error(ErrorKind::NonUniformGrid, "non-finite coordinate");
  }
  const double spacing = (points[n - 1] - points[0]) / static_cast<double>(n - 1);
  if (spacing == 0.0) {
    throw Error(ErrorKind::NonUniformGrid, "coordinates are not strictly monotonic");
  }
  for (std::size_t j = 1; j < n; ++j) {
    const double gap = points[j] - points[j - 1];
    if (std::abs(gap - spacing) > kUniformityTolerance * std::abs(spacing)) {
      throw Error(ErrorKind::NonUniformGrid,
                  "gap between points " + std::to_string(j - 1) + " and " + std::to_string(j) +
                      " deviates from the mean spacing");
    }
  }
  return UniformGrid(points[0], spacing, n);
}

/// Spacing of the frequency lattice on which the forward Riemann sum is a
/// phase-scaled DFT: W = -2 pi / (tau * b * N).
inline double natural_frequency_spacing(double time_spacing, std::size_t count,
                                        const TransformConvention& conv) {
  return -2.0 * std::numbers::pi / (time_spacing * conv.b() * static_cast<double>(count));
}

/// Conjugate of natural_frequency_spacing: tau = -2 pi / (W * b * N).
inline double natural_time_spacing(double freq_spacing, std::size_t count,
                                   const TransformConvention& conv) {
  return -2.0 * std::numbers::pi / (freq_spacing * conv.b() * static_cast<double>(count));
}

inline UniformGrid natural_frequency_grid(const UniformGrid& time_grid,
                                          const TransformConvention& conv) {
  return UniformGrid(0.0, natural_frequency_spacing(time_grid.spacing(), time_grid.count(), conv),
                     time_grid.count());
}

inline UniformGrid natural_time_grid(const UniformGrid& freq_grid,
                                     const TransformConvention& conv) {
  return UniformGrid(0.0, natural_time_spacing(freq_grid.spacing(), freq_grid.count(), conv),
                     freq_grid.count());
}

/// -pi / (tau * b). Its magnitude is the highest unaliased frequency.
inline double nyquist_frequency(const UniformGrid& time_grid, const TransformConvention& conv) {
  return -std::numbers::pi / (time_grid.spacing() * conv.b());
}

}  // namespace cft
