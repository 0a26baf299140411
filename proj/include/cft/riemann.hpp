#pragma once

// Riemann-sum approximations to the continuous Fourier transform pair.
//
// Forward, for samples x_j on t_j = t_0 + tau * j:
//   F(w) = sqrt(|b| / (2 pi)^(1-a)) |tau| sum_j x_j exp(i b w t_j)
// Inverse, for values X_k on w_k = w_0 + W * k:
//   f(t) = sqrt(|b| / (2 pi)^(1+a)) |W| sum_k X_k exp(-i b w_k t)
//
// On the natural lattice w_k = W k with W = -2 pi / (tau b N) the forward
// sum equals |tau| * prefactor * exp(i b w_k t_0) * DFT(x)_k, so it can be
// evaluated with an FFT. The sum is periodic in w up to a phase,
//   F(w + 2 pi m / (tau b)) = exp(i 2 pi m t_0 / tau) F(w),
// which lets the output be relabelled onto any lattice offset n * W.
// The inverse direction is symmetric with the roles of (tau, t_0) and
// (W, w_0) exchanged and the phase sign flipped.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "cft/conventions.hpp"
#include "cft/dft.hpp"
#include "cft/error.hpp"
#include "cft/grid.hpp"

namespace cft {

/// How far (in lattice steps) a requested start may sit from the lattice.
inline constexpr double kLatticeTolerance = 1e-6;

/// Relative oracle tolerance for FFT-vs-direct-sum agreement.
inline constexpr double kOracleRelativeTolerance = 1e-9;

enum class ShiftDirection { Forward, Inverse };

/// Relabelling of natural-lattice values onto a lattice offset by `steps`.
/// Indices are zero-based: output k takes natural index source[k] after
/// wrapping by wrap_counts[k] periods, so that for every k
///   source[k] - N * wrap_counts[k] == k + steps.
struct GridShift {
  std::int64_t steps = 0;
  std::vector<std::int64_t> wrap_counts;
  std::vector<std::size_t> source;
};

struct ShiftResult {
  ComplexSeq values;
  GridShift shift;
};

namespace detail {

inline std::int64_t floor_div(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

/// Integer n with value ~= n * spacing, or OffGridStart.
inline std::int64_t lattice_index(double value, double spacing, const char* what) {
  const double ratio = value / spacing;
  if (!std::isfinite(ratio)) {
    throw Error(ErrorKind::OffGridStart, std::string(what) + " is not finite");
  }
  const double nearest = std::round(ratio);
  if (std::abs(ratio - nearest) > kLatticeTolerance) {
    throw Error(ErrorKind::OffGridStart,
                std::string(what) + " = " + std::to_string(value) +
                    " is not an integer multiple of the lattice spacing " +
                    std::to_string(spacing));
  }
  return static_cast<std::int64_t>(nearest);
}

inline void require_transformable(std::size_t n, const char* what) {
  if (n < 2) {
    throw Error(ErrorKind::GridTooShort,
                std::string(what) + " needs at least 2 points, got " + std::to_string(n));
  }
}

}  // namespace detail

/// Moves natural-lattice values (index k <-> k * spacing_conj) onto the
/// lattice starting at `steps` * spacing_conj, applying the periodicity phase
/// of the source domain. `source_start` and `source_spacing` describe the
/// domain that was transformed: (t_0, tau) forward, (w_0, W) inverse.
inline ShiftResult apply_shift(std::span<const Complex> natural_values, std::int64_t steps,
                               double source_start, double source_spacing,
                               ShiftDirection direction) {
  const auto n = static_cast<std::int64_t>(natural_values.size());
  detail::require_nonempty(natural_values.size(), "apply_shift");
  const double sign = direction == ShiftDirection::Forward ? 1.0 : -1.0;
  const double period_phase = sign * 2.0 * std::numbers::pi / source_spacing * source_start;

  ShiftResult result;
  result.shift.steps = steps;
  result.shift.wrap_counts.resize(natural_values.size());
  result.shift.source.resize(natural_values.size());
  result.values.resize(natural_values.size());
  for (std::int64_t k = 0; k < n; ++k) {
    const std::int64_t target = k + steps;
    const std::int64_t wraps = detail::floor_div(target, n);
    const std::int64_t q = target - wraps * n;
    const std::int64_t m = -wraps;
    const auto ku = static_cast<std::size_t>(k);
    result.shift.wrap_counts[ku] = m;
    result.shift.source[ku] = static_cast<std::size_t>(q);
    Complex v = natural_values[static_cast<std::size_t>(q)];
    if (m != 0) v *= std::polar(1.0, static_cast<double>(m) * period_phase);
    result.values[ku] = v;
  }
  return result;
}

/// Direct O(N*M) evaluation of the forward sum at arbitrary frequencies.
/// Reference for forward_fft.
inline ComplexSeq forward_naive(const SampledSignal& signal, std::span<const double> omegas,
                                const TransformConvention& conv) {
  const UniformGrid& g = signal.grid;
  const double scale = forward_prefactor(conv) * std::abs(g.spacing());
  ComplexSeq out(omegas.size());
  for (std::size_t i = 0; i < omegas.size(); ++i) {
    const double bw = conv.b() * omegas[i];
    Complex acc{0.0, 0.0};
    for (std::size_t j = 0; j < g.count(); ++j) {
      acc += signal.values[j] * std::polar(1.0, bw * g.point(j));
    }
    out[i] = scale * acc;
  }
  return out;
}

/// Direct O(N*M) evaluation of the inverse sum at arbitrary times.
/// Reference for inverse_fft.
inline ComplexSeq inverse_naive(const Spectrum& spectrum, std::span<const double> times) {
  const UniformGrid& g = spectrum.grid;
  const double b = spectrum.convention.b();
  const double scale = inverse_prefactor(spectrum.convention) * std::abs(g.spacing());
  ComplexSeq out(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double bt = -b * times[i];
    Complex acc{0.0, 0.0};
    for (std::size_t k = 0; k < g.count(); ++k) {
      acc += spectrum.values[k] * std::polar(1.0, bt * g.point(k));
    }
    out[i] = scale * acc;
  }
  return out;
}

/// Forward sum on the N frequencies omega_start + W * k via one FFT.
/// omega_start must lie on the natural lattice (integer multiple of W).
inline Spectrum forward_fft(const SampledSignal& signal, double omega_start,
                            const TransformConvention& conv) {
  const UniformGrid& g = signal.grid;
  const std::size_t n = g.count();
  detail::require_transformable(n, "forward_fft");
  const double w = natural_frequency_spacing(g.spacing(), n, conv);
  const std::int64_t steps = detail::lattice_index(omega_start, w, "omega_start");

  ComplexSeq natural = fft(signal.values);
  const double scale = forward_prefactor(conv) * std::abs(g.spacing());
  const double bt0 = conv.b() * g.start();
  for (std::size_t k = 0; k < n; ++k) {
    natural[k] *= scale * std::polar(1.0, bt0 * (w * static_cast<double>(k)));
  }
  ShiftResult shifted = apply_shift(natural, steps, g.start(), g.spacing(), ShiftDirection::Forward);
  return Spectrum(UniformGrid(static_cast<double>(steps) * w, w, n), std::move(shifted.values),
                  conv);
}

/// Inverse sum on the N times time_start + tau * j via one inverse FFT,
/// tau = -2 pi / (W b N). time_start must lie on that lattice.
inline SampledSignal inverse_fft(const Spectrum& spectrum, double time_start) {
  const UniformGrid& g = spectrum.grid;
  const TransformConvention& conv = spectrum.convention;
  const std::size_t n = g.count();
  detail::require_transformable(n, "inverse_fft");
  const double tau = natural_time_spacing(g.spacing(), n, conv);
  const std::int64_t steps = detail::lattice_index(time_start, tau, "time_start");

  ComplexSeq natural = ifft(spectrum.values);
  const double scale = inverse_prefactor(conv) * static_cast<double>(n) * std::abs(g.spacing());
  const double bw0 = -conv.b() * g.start();
  for (std::size_t j = 0; j < n; ++j) {
    natural[j] *= scale * std::polar(1.0, bw0 * (tau * static_cast<double>(j)));
  }
  ShiftResult shifted = apply_shift(natural, steps, g.start(), g.spacing(), ShiftDirection::Inverse);
  return SampledSignal(UniformGrid(static_cast<double>(steps) * tau, tau, n),
                       std::move(shifted.values));
}

/// Lattice offset that centres an N-point output on zero: -floor(N/2).
inline std::int64_t centered_steps(std::size_t n) {
  return -static_cast<std::int64_t>(n / 2);
}

/// omega_start placing floor(N/2) bins below zero, i.e. spanning roughly
/// [-|w_nyq|, +|w_nyq|].
inline double centered_omega_start(const UniformGrid& time_grid, const TransformConvention& conv) {
  return static_cast<double>(centered_steps(time_grid.count())) *
         natural_frequency_spacing(time_grid.spacing(), time_grid.count(), conv);
}

/// Forward then inverse on the input's own time lattice. Exact (up to
/// rounding) when the grid origin is an integer multiple of the spacing.
inline SampledSignal round_trip(const SampledSignal& signal, const TransformConvention& conv) {
  const UniformGrid& g = signal.grid;
  const double ratio = g.start() / g.spacing();
  if (std::abs(ratio - std::round(ratio)) > kLatticeTolerance) {
    throw Error(ErrorKind::MisalignedOrigin,
                "grid start " + std::to_string(g.start()) +
                    " is not an integer multiple of the spacing " + std::to_string(g.spacing()));
  }
  return inverse_fft(forward_fft(signal, 0.0, conv), g.start());
}

/// Absolute tolerance for forward_fft vs forward_naive on `signal`.
inline double forward_oracle_tolerance(const SampledSignal& signal,
                                       const TransformConvention& conv) {
  double mass = 0.0;
  for (const Complex& v : signal.values) mass += std::abs(v);
  return kOracleRelativeTolerance * mass * forward_prefactor(conv) *
         std::abs(signal.grid.spacing());
}

/// Absolute tolerance for inverse_fft vs inverse_naive on `spectrum`.
inline double inverse_oracle_tolerance(const Spectrum& spectrum) {
  double mass = 0.0;
  for (const Complex& v : spectrum.values) mass += std::abs(v);
  return kOracleRelativeTolerance * mass * inverse_prefactor(spectrum.convention) *
         std::abs(spectrum.grid.spacing());
}

}  // namespace cft
