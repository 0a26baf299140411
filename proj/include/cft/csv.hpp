#pragma once

// Three-column CSV files for signals (t,re,im) and spectra (omega,re,im).
// Reals are written with 17 significant digits so a write/read cycle
// reproduces every double exactly.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "cft/conventions.hpp"
#include "cft/error.hpp"
#include "cft/grid.hpp"

namespace cft::csv {

inline constexpr std::string_view kSignalHeader = "t,re,im";
inline constexpr std::string_view kSpectrumHeader = "omega,re,im";

inline std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace detail {

struct Columns {
  std::vector<double> axis;
  ComplexSeq values;
};

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline double parse_field(std::string_view field, std::size_t line) {
  field = trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty() ||
      !std::isfinite(v)) {
    throw Error(ErrorKind::ParseError,
                "line " + std::to_string(line) + ": bad number '" + std::string(field) + "'");
  }
  return v;
}

inline Columns read_columns(std::istream& in, std::string_view header, const std::string& origin) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  Columns cols;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view row = trim(line);
    if (row.empty()) continue;
    if (!have_header) {
      if (row != header) {
        throw Error(ErrorKind::ParseError, origin + " line " + std::to_string(line_no) +
                                              ": expected header '" + std::string(header) + "'");
      }
      have_header = true;
      continue;
    }
    const auto c1 = row.find(',');
    const auto c2 = c1 == std::string_view::npos ? c1 : row.find(',', c1 + 1);
    if (c2 == std::string_view::npos || row.find(',', c2 + 1) != std::string_view::npos) {
      throw Error(ErrorKind::ParseError,
                  origin + " line " + std::to_string(line_no) + ": expected 3 fields");
    }
    cols.axis.push_back(parse_field(row.substr(0, c1), line_no));
    const double re = parse_field(row.substr(c1 + 1, c2 - c1 - 1), line_no);
    const double im = parse_field(row.substr(c2 + 1), line_no);
    cols.values.emplace_back(re, im);
  }
  if (!have_header) {
    throw Error(ErrorKind::ParseError, origin + ": missing header '" + std::string(header) + "'");
  }
  if (cols.axis.size() < 2) {
    throw Error(ErrorKind::TooShort, origin + ": need at least 2 rows, got " +
                                         std::to_string(cols.axis.size()));
  }
  return cols;
}

inline std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path.string() + " for reading");
  return in;
}

inline void write_columns(std::ostream& out, std::string_view header, const UniformGrid& grid,
                          const ComplexSeq& values) {
  out << header << '\n';
  for (std::size_t j = 0; j < values.size(); ++j) {
    out << format_real(grid.point(j)) << ',' << format_real(values[j].real()) << ','
        << format_real(values[j].imag()) << '\n';
  }
}

inline void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::IoError, "cannot open " + path.string() + " for writing");
  out << text;
  out.flush();
  if (!out) throw Error(ErrorKind::IoError, "write to " + path.string() + " failed");
}

}  // namespace detail

inline SampledSignal read_signal(std::istream& in, const std::string& origin = "<stream>") {
  auto cols = detail::read_columns(in, kSignalHeader, origin);
  return SampledSignal(infer_grid(cols.axis), std::move(cols.values));
}

inline Spectrum read_spectrum(std::istream& in, const TransformConvention& conv,
                              const std::string& origin = "<stream>") {
  auto cols = detail::read_columns(in, kSpectrumHeader, origin);
  return Spectrum(infer_grid(cols.axis), std::move(cols.values), conv);
}

inline SampledSignal read_signal_csv(const std::filesystem::path& path) {
  auto in = detail::open_input(path);
  return read_signal(in, path.string());
}

/// Spectrum files carry no convention; the caller supplies the one used to produce them.
inline Spectrum read_spectrum_csv(const std::filesystem::path& path,
                                  const TransformConvention& conv) {
  auto in = detail::open_input(path);
  return read_spectrum(in, conv, path.string());
}

inline void write_signal(std::ostream& out, const SampledSignal& signal) {
  detail::write_columns(out, kSignalHeader, signal.grid, signal.values);
}

inline void write_spectrum(std::ostream& out, const Spectrum& spectrum) {
  detail::write_columns(out, kSpectrumHeader, spectrum.grid, spectrum.values);
}

inline void write_signal_csv(const SampledSignal& signal, const std::filesystem::path& path) {
  std::ostringstream text;
  write_signal(text, signal);
  detail::write_file(path, text.str());
}

inline void write_spectrum_csv(const Spectrum& spectrum, const std::filesystem::path& path) {
  std::ostringstream text;
  write_spectrum(text, spectrum);
  detail::write_file(path, text.str());
}

}  // namespace cft::csv
