#include "cft/csv.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "test_util.hpp"

namespace cft {
namespace {

namespace fs = std::filesystem;

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected cft::Error";
  return ErrorKind::InvalidArgument;
}

SampledSignal parse(const std::string& text) {
  std::istringstream in(text);
  return csv::read_signal(in);
}

TEST(CsvTest, ReadsSignal) {
  const SampledSignal s = parse("t,re,im\n0,1,0\n1,0,0\n2,1,0\n");
  EXPECT_EQ(s.grid, UniformGrid(0.0, 1.0, 3));
  EXPECT_EQ(s.values, (ComplexSeq{1.0, 0.0, 1.0}));
}

TEST(CsvTest, ToleratesWhitespaceAndCrlf) {
  const SampledSignal s = parse("t,re,im\r\n 0 , 1.5 , -2e-3\r\n1,+0,0\r\n\n");
  EXPECT_EQ(s.values[0], Complex(1.5, -2e-3));
}

TEST(CsvTest, ReadErrors) {
  EXPECT_EQ(kind_of([] { parse("t,re,im\n0,1,0\n1,0,0\n2.5,1,0\n"); }), ErrorKind::NonUniformGrid);
  EXPECT_EQ(kind_of([] { parse("t,re,im\n"); }), ErrorKind::TooShort);
  EXPECT_EQ(kind_of([] { parse("t,re,im\n0,1,0\n"); }), ErrorKind::TooShort);
  EXPECT_EQ(kind_of([] { parse(""); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse("time,re,im\n0,1,0\n1,1,0\n"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse("t,re,im\n0,1,0\n1,x,0\n"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse("t,re,im\n0,1\n1,1,0\n"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse("t,re,im\n0,1,0,4\n1,1,0\n"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse("t,re,im\n0,1,0\n1,nan,0\n"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { csv::read_signal_csv("/nonexistent/dir/x.csv"); }), ErrorKind::IoError);
  try {
    parse("t,re,im\n0,1,0\n1,oops,0\n");
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(CsvTest, WritesSingleBinSpectrum) {
  const Spectrum s(UniformGrid(0.0, 1.0, 1), ComplexSeq{1.0}, TransformConvention{});
  std::ostringstream out;
  csv::write_spectrum(out, s);
  EXPECT_EQ(out.str(), "omega,re,im\n0,1,0\n");
}

TEST(CsvTest, FileRoundTripIsBitExactAndDeterministic) {
  std::mt19937_64 rng(9);
  const Spectrum s(UniformGrid(-3.141592653589793, 0.031259628393928291, 201),
                   testing::random_complex(rng, 201, 1e3), TransformConvention(1.0, 2.0));
  const fs::path dir = fs::temp_directory_path() / "cft_csv_test";
  fs::create_directories(dir);
  const fs::path a = dir / "a.csv", b = dir / "b.csv";
  csv::write_spectrum_csv(s, a);
  csv::write_spectrum_csv(s, b);
  const Spectrum back = csv::read_spectrum_csv(a, s.convention);
  EXPECT_EQ(back.values, s.values);
  EXPECT_EQ(back.convention, s.convention);
  EXPECT_EQ(back.grid.count(), 201u);
  EXPECT_NEAR(back.grid.spacing() / s.grid.spacing(), 1.0, 1e-14);

  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_EQ(kind_of([&] { csv::write_spectrum_csv(s, dir / "missing" / "x.csv"); }),
            ErrorKind::IoError);
  fs::remove_all(dir);
}

TEST(CsvTest, SignalWriteReadKeepsValues) {
  std::mt19937_64 rng(10);
  const SampledSignal s(UniformGrid(5.0, -0.25, 40), testing::random_complex(rng, 40));
  std::stringstream io;
  csv::write_signal(io, s);
  const SampledSignal back = csv::read_signal(io);
  EXPECT_EQ(back.values, s.values);
  EXPECT_EQ(back.grid.start(), 5.0);
  EXPECT_EQ(back.grid.spacing(), -0.25);
}

}  // namespace
}  // namespace cft
