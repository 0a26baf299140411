#pragma once

// Timing harness comparing the FFT-backed Riemann transform against a bare
// FFT and the direct O(N^2) sum on the rect(t - 1) workload over [-10, 10].

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cft/analytic.hpp"
#include "cft/conventions.hpp"
#include "cft/csv.hpp"
#include "cft/dft.hpp"
#include "cft/error.hpp"
#include "cft/riemann.hpp"

namespace cft::bench {

enum class Method { RiemannFft, BareFft, RiemannNaive };

inline constexpr std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::RiemannFft: return "riemann_fft";
    case Method::BareFft: return "bare_fft";
    case Method::RiemannNaive: return "riemann_naive";
  }
  return "unknown";
}

struct BenchRecord {
  std::size_t n = 0;
  Method method = Method::RiemannFft;
  double seconds = 0.0;  // median wall clock
  int repetitions = 0;
};

struct RatioRow {
  std::size_t n = 0;
  double ratio = 0.0;  // riemann_fft / bare_fft
};

struct BenchOptions {
  int repetitions = 5;
  std::size_t naive_cap = 4096;
  bool verify = true;  // check riemann_fft against riemann_naive where both run
};

inline std::vector<std::size_t> default_sizes() {
  std::vector<std::size_t> sizes;
  for (std::size_t n = std::size_t{1} << 12; n <= (std::size_t{1} << 17); n <<= 1) sizes.push_back(n);
  return sizes;
}

inline std::vector<std::size_t> odd_sizes() { return {201, 1001, 4097}; }

inline SampledSignal workload(std::size_t n) {
  return rect_signal(1.0, UniformGrid(-10.0, 20.0 / static_cast<double>(n - 1), n));
}

namespace detail {

inline double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 == 1 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

template <typename Fn>
double time_median(int repetitions, Fn&& fn) {
  fn();  // warm-up, discarded
  std::vector<double> samples;
  samples.reserve(static_cast<std::size_t>(repetitions));
  for (int r = 0; r < repetitions; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    samples.push_back(std::chrono::duration<double>(t1 - t0).count());
  }
  return median(std::move(samples));
}

// Keeps results observable so the timed calls are not elided.
inline volatile double g_sink = 0.0;

inline void consume(const ComplexSeq& v) { g_sink = g_sink + v.front().real(); }

}  // namespace detail

/// Times each (size, method) pair sequentially on the calling thread.
inline std::vector<BenchRecord> run_bench(const std::vector<std::size_t>& sizes,
                                          const std::set<Method>& methods,
                                          const BenchOptions& options = {}) {
  if (options.repetitions < 3) {
    throw Error(ErrorKind::InvalidArgument, "repetitions must be at least 3");
  }
  for (std::size_t n : sizes) {
    if (n < 2) throw Error(ErrorKind::InvalidArgument, "benchmark sizes must be at least 2");
    if (methods.count(Method::RiemannNaive) && n > options.naive_cap) {
      throw Error(ErrorKind::SizeTooLarge, "riemann_naive size " + std::to_string(n) +
                                               " exceeds the cap of " +
                                               std::to_string(options.naive_cap));
    }
  }

  const TransformConvention conv(0.0, -1.0);
  std::vector<BenchRecord> records;
  for (std::size_t n : sizes) {
    const SampledSignal signal = workload(n);
    const double omega_start = centered_omega_start(signal.grid, conv);
    const UniformGrid out_grid(
        omega_start, natural_frequency_spacing(signal.grid.spacing(), n, conv), n);
    const std::vector<double> omegas = out_grid.points();

    for (Method method : methods) {
      double seconds = 0.0;
      switch (method) {
        case Method::RiemannFft:
          seconds = detail::time_median(options.repetitions, [&] {
            detail::consume(forward_fft(signal, omega_start, conv).values);
          });
          break;
        case Method::BareFft:
          seconds = detail::time_median(options.repetitions,
                                        [&] { detail::consume(fft(signal.values)); });
          break;
        case Method::RiemannNaive:
          seconds = detail::time_median(options.repetitions, [&] {
            detail::consume(forward_naive(signal, omegas, conv));
          });
          break;
      }
      records.push_back({n, method, seconds, options.repetitions});
    }

    if (options.verify && methods.count(Method::RiemannFft) &&
        methods.count(Method::RiemannNaive)) {
      const ComplexSeq fast = forward_fft(signal, omega_start, conv).values;
      const ComplexSeq slow = forward_naive(signal, omegas, conv);
      double worst = 0.0;
      for (std::size_t k = 0; k < n; ++k) worst = std::max(worst, std::abs(fast[k] - slow[k]));
      if (worst > forward_oracle_tolerance(signal, conv)) {
        throw Error(ErrorKind::OracleMismatch,
                    "riemann_fft deviates from riemann_naive by " + std::to_string(worst) +
                        " at n = " + std::to_string(n));
      }
    }
  }
  return records;
}

/// riemann_fft / bare_fft for every size, ascending in n.
inline std::vector<RatioRow> ratio_table(const std::vector<BenchRecord>& records) {
  std::map<std::size_t, std::pair<const BenchRecord*, const BenchRecord*>> pairs;
  for (const BenchRecord& r : records) {
    auto& slot = pairs[r.n];
    if (r.method == Method::RiemannFft) slot.first = &r;
    if (r.method == Method::BareFft) slot.second = &r;
  }
  std::vector<RatioRow> rows;
  for (const auto& [n, pair] : pairs) {
    if (pair.first == nullptr || pair.second == nullptr) {
      throw Error(ErrorKind::MissingPair,
                  "size " + std::to_string(n) + " lacks a riemann_fft or bare_fft record");
    }
    rows.push_back({n, pair.first->seconds / pair.second->seconds});
  }
  return rows;
}

inline void write_records(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << "n,method,seconds,repetitions\n";
  for (const BenchRecord& r : records) {
    out << r.n << ',' << to_string(r.method) << ',' << csv::format_real(r.seconds) << ','
        << r.repetitions << '\n';
  }
}

inline void write_ratios(std::ostream& out, const std::vector<RatioRow>& rows) {
  out << "n,ratio\n";
  for (const RatioRow& r : rows) out << r.n << ',' << csv::format_real(r.ratio) << '\n';
}

}  // namespace cft::bench
