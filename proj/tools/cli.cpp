#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cft/cft.hpp"

namespace cft::cli {
namespace {

namespace fs = std::filesystem;

struct ConventionFlags {
  double a = 0.0;
  double b = -1.0;

  void attach(CLI::App& cmd) {
    cmd.add_option("--a", a, "Convention exponent a")->capture_default_str();
    cmd.add_option("--b", b, "Convention frequency factor b (nonzero)")->capture_default_str();
  }

  TransformConvention convention() const { return TransformConvention(a, b); }
};

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::IoError, "cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw Error(ErrorKind::IoError, "write to " + path.string() + " failed");
}

fs::path with_suffix(const std::string& prefix, const char* suffix) {
  return fs::path(prefix + suffix);
}

fs::path default_ratio_path(const fs::path& records) {
  fs::path p = records;
  p.replace_filename(records.stem().string() + "_ratio.csv");
  return p;
}

void run_forward(const std::string& in, const std::string& out_path, const ConventionFlags& flags,
                 const double* omega_start, bool center, std::ostream& out) {
  const TransformConvention conv = flags.convention();
  const SampledSignal signal = csv::read_signal_csv(in);
  double start = 0.0;
  if (center) {
    start = centered_omega_start(signal.grid, conv);
  } else if (omega_start != nullptr) {
    start = *omega_start;
  }
  const Spectrum spectrum = forward_fft(signal, start, conv);
  csv::write_spectrum_csv(spectrum, out_path);
  out << "wrote " << spectrum.grid.count() << " bins to " << out_path << '\n';
}

void run_inverse(const std::string& in, const std::string& out_path, const ConventionFlags& flags,
                 double t_start, std::ostream& out) {
  const Spectrum spectrum = csv::read_spectrum_csv(in, flags.convention());
  const SampledSignal signal = inverse_fft(spectrum, t_start);
  csv::write_signal_csv(signal, out_path);
  out << "wrote " << signal.grid.count() << " samples to " << out_path << '\n';
}

int run_compare(const std::string& in, const ConventionFlags& flags, double omega_start,
                std::ostream& out) {
  const TransformConvention conv = flags.convention();
  const SampledSignal signal = csv::read_signal_csv(in);
  const Spectrum fast = forward_fft(signal, omega_start, conv);
  const ComplexSeq slow = forward_naive(signal, fast.grid.points(), conv);
  double worst = 0.0;
  for (std::size_t k = 0; k < slow.size(); ++k) {
    worst = std::max(worst, std::abs(fast.values[k] - slow[k]));
  }
  const double tol = forward_oracle_tolerance(signal, conv);
  out << "max_abs_deviation," << csv::format_real(worst) << '\n'
      << "tolerance," << csv::format_real(tol) << '\n';
  return worst <= tol ? 0 : 1;
}

void run_bench_cmd(std::vector<std::size_t> sizes, bool odd, bool include_naive, int reps,
                   std::size_t naive_cap, const std::string& out_path, std::string ratio_path,
                   std::ostream& out) {
  if (sizes.empty()) sizes = bench::default_sizes();
  if (odd) {
    for (std::size_t n : bench::odd_sizes()) sizes.push_back(n);
  }
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());

  bench::BenchOptions options;
  options.repetitions = reps;
  options.naive_cap = naive_cap;
  auto records =
      bench::run_bench(sizes, {bench::Method::RiemannFft, bench::Method::BareFft}, options);
  if (include_naive) {
    std::vector<std::size_t> small;
    std::copy_if(sizes.begin(), sizes.end(), std::back_inserter(small),
                 [&](std::size_t n) { return n <= naive_cap; });
    const auto naive = bench::run_bench(small, {bench::Method::RiemannNaive}, options);
    records.insert(records.end(), naive.begin(), naive.end());
  }
  std::ostringstream rec_text;
  bench::write_records(rec_text, records);
  write_text(out_path, rec_text.str());

  const auto ratios = bench::ratio_table(records);
  std::ostringstream ratio_text;
  bench::write_ratios(ratio_text, ratios);
  if (ratio_path.empty()) ratio_path = default_ratio_path(out_path).string();
  write_text(ratio_path, ratio_text.str());
  out << ratio_text.str();
}

void run_demo(const std::string& figure, const std::string& prefix, const ConventionFlags& flags,
              std::ostream& out) {
  const TransformConvention conv = flags.convention();
  if (figure == "fig2") {
    if (!(conv == TransformConvention(0.0, -1.0))) {
      throw Error(ErrorKind::InvalidArgument,
                  "the analytic rect transform is only defined for a=0, b=-1");
    }
    const SampledSignal signal = rect_signal(1.0, fig2_grid());
    const Spectrum spectrum = forward_fft(signal, centered_omega_start(signal.grid, conv), conv);
    ComplexSeq analytic(spectrum.grid.count());
    double worst = 0.0;
    for (std::size_t k = 0; k < analytic.size(); ++k) {
      const double w = spectrum.grid.point(k);
      analytic[k] = rect_transform_analytic(w);
      if (std::abs(w) <= 2.0) worst = std::max(worst, std::abs(spectrum.values[k] - analytic[k]));
    }
    csv::write_signal_csv(signal, with_suffix(prefix, "_input.csv"));
    csv::write_spectrum_csv(spectrum, with_suffix(prefix, "_spectrum.csv"));
    csv::write_spectrum_csv(Spectrum(spectrum.grid, analytic, conv),
                            with_suffix(prefix, "_analytic.csv"));
    out << "max |riemann - analytic| for |omega| <= 2: " << csv::format_real(worst) << '\n';
    return;
  }

  const SampledSignal signal = fig1_signal(fig1_grid());
  const ComplexSeq raw = fft(signal.values);
  std::ostringstream dft_text;
  dft_text << "k,magnitude\n";
  for (std::size_t k = 0; k < raw.size(); ++k) {
    dft_text << (k + 1) << ',' << csv::format_real(std::abs(raw[k])) << '\n';
  }
  const Spectrum spectrum = forward_fft(signal, centered_omega_start(signal.grid, conv), conv);
  csv::write_signal_csv(signal, with_suffix(prefix, "_input.csv"));
  write_text(with_suffix(prefix, "_dft.csv"), dft_text.str());
  csv::write_spectrum_csv(spectrum, with_suffix(prefix, "_spectrum.csv"));
  out << "nyquist index (1-based): " << (raw.size() / 2 + 1) << '\n';
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Riemann-sum approximations to the continuous Fourier transform", "cft"};
  app.require_subcommand(1);

  std::string in_path, out_path, ratio_path, prefix, figure;
  ConventionFlags flags;
  double omega_start = 0.0;
  double t_start = 0.0;
  bool center = false;
  std::vector<std::size_t> sizes;
  bool odd = false;
  bool include_naive = false;
  int reps = 5;
  std::size_t naive_cap = 4096;

  auto* forward = app.add_subcommand("forward", "Forward transform of a t,re,im signal file");
  forward->add_option("--in", in_path, "Input signal CSV")->required();
  forward->add_option("--out", out_path, "Output spectrum CSV")->required();
  flags.attach(*forward);
  auto* omega_opt = forward->add_option("--omega-start", omega_start,
                                        "First output frequency (multiple of the natural spacing)");
  forward->add_flag("--center-nyquist", center, "Centre the output on omega = 0")
      ->excludes(omega_opt);

  auto* inverse = app.add_subcommand("inverse", "Inverse transform of an omega,re,im spectrum file");
  inverse->add_option("--in", in_path, "Input spectrum CSV")->required();
  inverse->add_option("--out", out_path, "Output signal CSV")->required();
  flags.attach(*inverse);
  inverse->add_option("--t-start", t_start, "First output time (multiple of the natural spacing)");

  auto* compare = app.add_subcommand("compare", "Check the FFT path against the direct sum");
  compare->add_option("--in", in_path, "Input signal CSV")->required();
  flags.attach(*compare);
  compare->add_option("--omega-start", omega_start, "First frequency");

  auto* bench_cmd = app.add_subcommand("bench", "Time the FFT path, a bare FFT and the direct sum");
  bench_cmd->add_option("--sizes", sizes, "Comma-separated input lengths")->delimiter(',');
  bench_cmd->add_option("--reps", reps, "Timed repetitions per point (>= 3)")->capture_default_str();
  bench_cmd->add_flag("--include-naive", include_naive, "Also time the direct sum");
  bench_cmd->add_flag("--odd-sizes", odd, "Add the sizes 201, 1001, 4097");
  bench_cmd->add_option("--naive-cap", naive_cap, "Largest size timed with the direct sum")
      ->capture_default_str();
  bench_cmd->add_option("--out", out_path, "Records CSV (n,method,seconds,repetitions)")->required();
  bench_cmd->add_option("--ratio-out", ratio_path, "Ratio CSV (default: <out>_ratio.csv)");

  auto* demo = app.add_subcommand("demo", "Write the CSVs behind the demonstration figures");
  demo->add_option("figure", figure, "fig1 or fig2")
      ->required()
      ->check(CLI::IsMember({"fig1", "fig2"}));
  demo->add_option("--out", prefix, "Output file prefix")->required();
  flags.attach(*demo);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*forward) {
      run_forward(in_path, out_path, flags, omega_opt->count() ? &omega_start : nullptr, center,
                  out);
    } else if (*inverse) {
      run_inverse(in_path, out_path, flags, t_start, out);
    } else if (*compare) {
      return run_compare(in_path, flags, omega_start, out);
    } else if (*bench_cmd) {
      run_bench_cmd(sizes, odd, include_naive, reps, naive_cap, out_path, ratio_path, out);
    } else if (*demo) {
      run_demo(figure, prefix, flags, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace cft::cli
