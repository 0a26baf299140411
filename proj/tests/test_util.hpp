#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <span>

#include "cft/grid.hpp"

namespace cft::testing {

inline ComplexSeq random_complex(std::mt19937_64& rng, std::size_t n, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  ComplexSeq v(n);
  for (auto& z : v) z = {u(rng), u(rng)};
  return v;
}

inline double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

inline double l1(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& z : v) s += std::abs(z);
  return s;
}

inline double energy(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return s;
}

}  // namespace cft::testing
