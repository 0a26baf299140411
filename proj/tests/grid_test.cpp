#include "cft/grid.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

namespace cft {
namespace {

constexpr double kPi = std::numbers::pi;

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected cft::Error";
  return ErrorKind::InvalidArgument;
}

TEST(GridTest, InferFig2Axis) {
  std::vector<double> pts;
  for (int j = 0; j <= 200; ++j) pts.push_back(-10.0 + 0.1 * j);
  const UniformGrid g = infer_grid(pts);
  EXPECT_DOUBLE_EQ(g.start(), -10.0);
  EXPECT_NEAR(g.spacing(), 0.1, 1e-15);
  EXPECT_EQ(g.count(), 201u);
}

TEST(GridTest, InferTwoPoints) {
  const std::vector<double> pts{0.0, 1.0};
  const UniformGrid g = infer_grid(pts);
  EXPECT_EQ(g, UniformGrid(0.0, 1.0, 2));
}

TEST(GridTest, InferDescendingGivesNegativeSpacing) {
  const std::vector<double> pts{3.0, 2.0, 1.0, 0.0};
  const UniformGrid g = infer_grid(pts);
  EXPECT_EQ(g.start(), 3.0);
  EXPECT_EQ(g.spacing(), -1.0);
}

TEST(GridTest, InferErrors) {
  EXPECT_EQ(kind_of([] { infer_grid(std::vector<double>{0.0, 1.0, 2.1}); }),
            ErrorKind::NonUniformGrid);
  EXPECT_EQ(kind_of([] { infer_grid(std::vector<double>{0.0}); }), ErrorKind::TooShort);
  EXPECT_EQ(kind_of([] { infer_grid(std::vector<double>{}); }), ErrorKind::TooShort);
  EXPECT_EQ(kind_of([] { infer_grid(std::vector<double>{1.0, 1.0, 1.0}); }),
            ErrorKind::NonUniformGrid);
  EXPECT_EQ(kind_of([] { infer_grid(std::vector<double>{0.0, 2.0, 1.0, 3.0}); }),
            ErrorKind::NonUniformGrid);
}

TEST(GridTest, InferReproducesGrid) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> start(-1e3, 1e3), spacing(1e-3, 10.0);
  std::uniform_int_distribution<std::size_t> count(2, 500);
  for (int trial = 0; trial < 200; ++trial) {
    const double sign = trial % 2 == 0 ? 1.0 : -1.0;
    const UniformGrid g(start(rng), sign * spacing(rng), count(rng));
    const UniformGrid back = infer_grid(g.points());
    EXPECT_EQ(back.count(), g.count());
    EXPECT_NEAR(back.start(), g.start(), 1e-12 * std::abs(g.start()));
    EXPECT_NEAR(back.spacing() / g.spacing(), 1.0, 1e-12);
  }
}

TEST(GridTest, ConstructorRejectsBadFields) {
  EXPECT_THROW(UniformGrid(0.0, 0.0, 3), Error);
  EXPECT_THROW(UniformGrid(0.0, 1.0, 0), Error);
  EXPECT_THROW(UniformGrid(std::nan(""), 1.0, 3), Error);
  EXPECT_NO_THROW(UniformGrid(0.0, 1.0, 1));
}

TEST(GridTest, SignalLengthMustMatchGrid) {
  EXPECT_THROW(SampledSignal(UniformGrid(0.0, 1.0, 3), ComplexSeq(2)), Error);
  EXPECT_THROW(Spectrum(UniformGrid(0.0, 1.0, 3), ComplexSeq(4), TransformConvention{}), Error);
}

TEST(GridTest, NaturalFrequencyGridExamples) {
  const TransformConvention unitary(0.0, -1.0);
  const UniformGrid w1 = natural_frequency_grid(UniformGrid(0.0, 1.0, 201), unitary);
  EXPECT_EQ(w1.start(), 0.0);
  EXPECT_NEAR(w1.spacing(), 0.0312596283939282909299765510774, 1e-16);
  EXPECT_NEAR(w1.point(200), 200.0 * 2.0 * kPi / 201.0, 1e-13);

  EXPECT_NEAR(natural_frequency_grid(UniformGrid(0.0, 1.0, 1), {0.0, 1.0}).spacing(), -2.0 * kPi,
              1e-15);
  EXPECT_NEAR(natural_frequency_grid(UniformGrid(-10.0, 0.1, 201), unitary).spacing(),
              0.312596283939282909299765510774, 1e-14);
}

TEST(GridTest, NaturalTimeGridExamples) {
  EXPECT_NEAR(natural_time_grid(UniformGrid(0.0, 2.0 * kPi / 201.0, 201), {0.0, -1.0}).spacing(),
              1.0, 1e-14);
  EXPECT_NEAR(natural_time_grid(UniformGrid(0.0, -2.0 * kPi, 1), {0.0, 1.0}).spacing(), 1.0,
              1e-15);
  EXPECT_NEAR(natural_time_grid(UniformGrid(0.0, 1.0, 4), {0.0, 1.0}).spacing(), -kPi / 2.0,
              1e-15);
}

TEST(GridTest, NyquistExamples) {
  EXPECT_NEAR(nyquist_frequency(UniformGrid(0.0, 1.0, 201), {0.0, -1.0}), kPi, 1e-15);
  EXPECT_NEAR(nyquist_frequency(UniformGrid(0.0, kPi, 8), {0.0, 1.0}), -1.0, 1e-15);
  EXPECT_NEAR(nyquist_frequency(UniformGrid(-10.0, 0.1, 201), {0.0, -1.0}), 10.0 * kPi, 1e-13);
}

TEST(GridTest, ConjugateGridProperties) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> spacing(-5.0, 5.0), bdist(-8.0, 8.0);
  std::uniform_int_distribution<std::size_t> count(1, 4096);
  for (int trial = 0; trial < 500; ++trial) {
    double tau = spacing(rng);
    double b = bdist(rng);
    if (std::abs(tau) < 1e-3 || std::abs(b) < 1e-3) continue;
    const TransformConvention conv(0.0, b);
    const UniformGrid g(0.0, tau, count(rng));
    const UniformGrid w = natural_frequency_grid(g, conv);
    EXPECT_NEAR(natural_time_grid(w, conv).spacing() / tau, 1.0, 1e-12);
    const double product = std::abs(w.spacing()) * std::abs(tau) * static_cast<double>(g.count());
    EXPECT_NEAR(product / (2.0 * kPi / std::abs(b)), 1.0, 1e-14);
  }
}

}  // namespace
}  // namespace cft
