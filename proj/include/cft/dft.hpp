#pragma once

// Discrete Fourier transform pair with the sign and normalisation
//   X_k = sum_j x_j exp(-2 pi i j k / N),   x_j = (1/N) sum_k X_k exp(+2 pi i j k / N)
// (zero-based indices). dft_naive/idft_naive evaluate the sums literally and
// serve as the reference for the fast transforms.

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "cft/error.hpp"
#include "cft/grid.hpp"

namespace cft {

namespace detail {

inline void require_nonempty(std::size_t n, const char* what) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, std::string(what) + " of an empty sequence");
}

/// exp(-2 pi i num / den) with num already reduced into [0, den).
inline Complex unit_root(std::uint64_t num, std::uint64_t den) {
  const double angle = -2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace detail

inline ComplexSeq dft_naive(std::span<const Complex> x) {
  const std::size_t n = x.size();
  detail::require_nonempty(n, "dft_naive");
  ComplexSeq out(n);
  for (std::size_t k = 0; k < n; ++k) {
    Complex acc{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) {
      acc += x[j] * detail::unit_root((static_cast<std::uint64_t>(j) * k) % n, n);
    }
    out[k] = acc;
  }
  return out;
}

inline ComplexSeq idft_naive(std::span<const Complex> x) {
  const std::size_t n = x.size();
  detail::require_nonempty(n, "idft_naive");
  ComplexSeq out(n);
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t j = 0; j < n; ++j) {
    Complex acc{0.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) {
      acc += x[k] * std::conj(detail::unit_root((static_cast<std::uint64_t>(j) * k) % n, n));
    }
    out[j] = acc * scale;
  }
  return out;
}

/// Precomputed O(N log N) transform for a fixed length.
///
/// Lengths whose prime factors are all <= kMaxDirectRadix use a recursive
/// mixed-radix decimation-in-time pass (specialised butterflies for radix 2
/// and 4). Any other length is evaluated as a chirp-z (Bluestein) convolution
/// on a power-of-two plan. Twiddles are tabulated once from cos/sin of the
/// exact angle. A plan is immutable after construction and may be shared
/// between threads.
class FftPlan {
 public:
  static constexpr std::size_t kMaxDirectRadix = 13;

  explicit FftPlan(std::size_t n) : size_(n) {
    detail::require_nonempty(n, "FftPlan");
    if (!factorize()) {
      init_bluestein();
      return;
    }
    twiddles_.resize(n);
    for (std::size_t k = 0; k < n; ++k) twiddles_[k] = detail::unit_root(k, n);
  }

  std::size_t size() const noexcept { return size_; }
  bool uses_bluestein() const noexcept { return bluestein_ != nullptr; }

  ComplexSeq forward(std::span<const Complex> x) const {
    check_length(x.size());
    ComplexSeq out(size_);
    if (bluestein_) {
      bluestein_forward(x, out);
    } else {
      recurse(x.data(), 1, out.data(), size_, 0);
    }
    return out;
  }

  /// Inverse with the 1/N factor, via conj(forward(conj(X))) / N.
  ComplexSeq inverse(std::span<const Complex> x) const {
    check_length(x.size());
    ComplexSeq tmp(x.begin(), x.end());
    for (auto& v : tmp) v = std::conj(v);
    ComplexSeq out = forward(tmp);
    const double scale = 1.0 / static_cast<double>(size_);
    for (auto& v : out) v = std::conj(v) * scale;
    return out;
  }

 private:
  struct Bluestein {
    std::unique_ptr<FftPlan> inner;
    ComplexSeq chirp;         // exp(-i pi k^2 / N), k < N
    ComplexSeq kernel_hat;    // forward transform of the conjugate chirp, length M
  };

  void check_length(std::size_t n) const {
    if (n != size_) {
      throw Error(ErrorKind::InvalidArgument, "plan of length " + std::to_string(size_) +
                                                  " applied to " + std::to_string(n) + " values");
    }
  }

  bool factorize() {
    std::size_t rest = size_;
    while (rest % 4 == 0) {
      factors_.push_back(4);
      rest /= 4;
    }
    for (std::size_t p = 2; p <= kMaxDirectRadix && rest > 1; ++p) {
      while (rest % p == 0) {
        factors_.push_back(p);
        rest /= p;
      }
    }
    if (rest != 1) {
      factors_.clear();
      return false;
    }
    return true;
  }

  void init_bluestein() {
    std::size_t m = 1;
    while (m < 2 * size_ - 1) m <<= 1;
    auto state = std::make_unique<Bluestein>();
    state->inner = std::make_unique<FftPlan>(m);
    state->chirp.resize(size_);
    const std::uint64_t period = 2 * static_cast<std::uint64_t>(size_);
    for (std::size_t k = 0; k < size_; ++k) {
      // k^2 reduced mod 2N keeps the chirp angle small for large k.
      const std::uint64_t k2 = (static_cast<std::uint64_t>(k) * k) % period;
      state->chirp[k] = detail::unit_root(k2, period);
    }
    ComplexSeq kernel(m, Complex{0.0, 0.0});
    kernel[0] = std::conj(state->chirp[0]);
    for (std::size_t k = 1; k < size_; ++k) {
      kernel[k] = std::conj(state->chirp[k]);
      kernel[m - k] = kernel[k];
    }
    state->kernel_hat = state->inner->forward(kernel);
    bluestein_ = std::move(state);
  }

  void bluestein_forward(std::span<const Complex> x, std::span<Complex> out) const {
    const FftPlan& inner = *bluestein_->inner;
    ComplexSeq work(inner.size(), Complex{0.0, 0.0});
    for (std::size_t k = 0; k < size_; ++k) work[k] = x[k] * bluestein_->chirp[k];
    ComplexSeq spec = inner.forward(work);
    for (std::size_t k = 0; k < spec.size(); ++k) spec[k] *= bluestein_->kernel_hat[k];
    const ComplexSeq conv = inner.inverse(spec);
    for (std::size_t k = 0; k < size_; ++k) out[k] = conv[k] * bluestein_->chirp[k];
  }

  // Out-of-place decimation in time. `in` is read with `stride`; the n
  // outputs are written contiguously to `out`.
  void recurse(const Complex* in, std::size_t stride, Complex* out, std::size_t n,
               std::size_t level) const {
    if (n == 1) {
      *out = *in;
      return;
    }
    const std::size_t p = factors_[level];
    const std::size_t m = n / p;
    for (std::size_t r = 0; r < p; ++r) {
      recurse(in + r * stride, stride * p, out + r * m, m, level + 1);
    }
    const std::size_t tw_stride = size_ / n;
    switch (p) {
      case 2: butterfly2(out, m, tw_stride); break;
      case 4: butterfly4(out, m, tw_stride); break;
      default: butterfly_generic(out, m, p, tw_stride); break;
    }
  }

  void butterfly2(Complex* out, std::size_t m, std::size_t tw_stride) const {
    for (std::size_t k = 0; k < m; ++k) {
      const Complex a = out[k];
      const Complex b = out[k + m] * twiddles_[k * tw_stride];
      out[k] = a + b;
      out[k + m] = a - b;
    }
  }

  void butterfly4(Complex* out, std::size_t m, std::size_t tw_stride) const {
    for (std::size_t k = 0; k < m; ++k) {
      const Complex t0 = out[k];
      const Complex t1 = out[k + m] * twiddles_[k * tw_stride];
      const Complex t2 = out[k + 2 * m] * twiddles_[2 * k * tw_stride];
      const Complex t3 = out[k + 3 * m] * twiddles_[3 * k * tw_stride];
      const Complex a0 = t0 + t2;
      const Complex a1 = t0 - t2;
      const Complex a2 = t1 + t3;
      const Complex d = t1 - t3;
      const Complex a3{d.imag(), -d.real()};  // d * (-i)
      out[k] = a0 + a2;
      out[k + m] = a1 + a3;
      out[k + 2 * m] = a0 - a2;
      out[k + 3 * m] = a1 - a3;
    }
  }

  void butterfly_generic(Complex* out, std::size_t m, std::size_t p,
                         std::size_t tw_stride) const {
    std::array<Complex, kMaxDirectRadix> t{};
    const std::size_t root_stride = size_ / p;
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t r = 0; r < p; ++r) t[r] = out[k + r * m] * twiddles_[r * k * tw_stride];
      for (std::size_t q = 0; q < p; ++q) {
        Complex acc = t[0];
        for (std::size_t r = 1; r < p; ++r) acc += t[r] * twiddles_[((r * q) % p) * root_stride];
        out[k + q * m] = acc;
      }
    }
  }

  std::size_t size_;
  std::vector<std::size_t> factors_;
  ComplexSeq twiddles_;
  std::unique_ptr<Bluestein> bluestein_;
};

inline ComplexSeq fft(std::span<const Complex> x) {
  detail::require_nonempty(x.size(), "fft");
  return FftPlan(x.size()).forward(x);
}

inline ComplexSeq ifft(std::span<const Complex> x) {
  detail::require_nonempty(x.size(), "ifft");
  return FftPlan(x.size()).inverse(x);
}

}  // namespace cft
