// Transforms a sampled rect(t - 1) and prints the FFT-path values next to
// the closed-form transform for |omega| <= 2.

#include <cstdio>

#include "cft/cft.hpp"

int main() {
  const cft::TransformConvention conv(0.0, -1.0);
  const cft::SampledSignal signal = cft::rect_signal(1.0, cft::fig2_grid());
  const cft::Spectrum spectrum =
      cft::forward_fft(signal, cft::centered_omega_start(signal.grid, conv), conv);

  std::printf("%10s %12s %12s %12s %12s\n", "omega", "re", "im", "re_exact", "im_exact");
  for (std::size_t k = 0; k < spectrum.grid.count(); ++k) {
    const double w = spectrum.grid.point(k);
    if (w < -2.0 || w > 2.0) continue;
    const cft::Complex exact = cft::rect_transform_analytic(w);
    std::printf("%10.5f %12.8f %12.8f %12.8f %12.8f\n", w, spectrum.values[k].real(),
                spectrum.values[k].imag(), exact.real(), exact.imag());
  }
  return 0;
}
