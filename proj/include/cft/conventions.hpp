#pragma once

#include <cmath>
#include <numbers>

#include "cft/error.hpp"

namespace cft {

/// Fourier convention constants (a, b). The forward transform is
///   f~(w) = sqrt(|b| / (2 pi)^(1-a)) * Int f(t) exp(i b w t) dt
/// and the inverse carries sqrt(|b| / (2 pi)^(1+a)) with exp(-i b w t).
/// (a, b) = (0, -1) is the unitary angular-frequency convention.
class TransformConvention {
 public:
  constexpr TransformConvention() = default;

  TransformConvention(double a, double b) : a_(a), b_(b) {
    if (!std::isfinite(a) || !std::isfinite(b)) {
      throw Error(ErrorKind::InvalidArgument, "convention constants must be finite");
    }
    if (b == 0.0) {
      throw Error(ErrorKind::InvalidArgument, "convention constant b must be nonzero");
    }
  }

  constexpr double a() const noexcept { return a_; }
  constexpr double b() const noexcept { return b_; }

  friend constexpr bool operator==(const TransformConvention&,
                                   const TransformConvention&) = default;

 private:
  double a_ = 0.0;
  double b_ = -1.0;
};

inline double forward_prefactor(const TransformConvention& conv) {
  return std::sqrt(std::abs(conv.b()) / std::pow(2.0 * std::numbers::pi, 1.0 - conv.a()));
}

inline double inverse_prefactor(const TransformConvention& conv) {
  return std::sqrt(std::abs(conv.b()) / std::pow(2.0 * std::numbers::pi, 1.0 + conv.a()));
}

}  // namespace cft
