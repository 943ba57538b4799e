#include <gtest/gtest.h>

#include <cmath>

#include "ratebound/numerics.hpp"

using namespace ratebound;

TEST(Differences, PolynomialsAreExactToRounding) {
  const auto cubic = [](double x) { return x * x * x - 2 * x; };
  EXPECT_NEAR(central_difference(cubic, 0.7), 3 * 0.49 - 2, 1e-9);
  EXPECT_NEAR(central_second_difference(cubic, 0.7), 6 * 0.7, 1e-6);
  // second-order one-sided slopes are exact for quadratics
  const auto quad = [](double x) { return 3 * x * x + x; };
  EXPECT_NEAR(left_slope(quad, 0.5, 1e-3), 4.0, 1e-9);
  EXPECT_NEAR(right_slope(quad, 0.5, 1e-3), 4.0, 1e-9);
}

TEST(Differences, OneSidedSlopesSeeAKink) {
  const auto kink = [](double x) { return std::abs(x - 1.0); };
  EXPECT_NEAR(left_slope(kink, 1.0, 1e-4), -1.0, 1e-9);
  EXPECT_NEAR(right_slope(kink, 1.0, 1e-4), 1.0, 1e-9);
}

TEST(Bracket, RequiresSignChange) {
  const auto f = [](double x) { return x * x + 1; };
  EXPECT_THROW(make_bracket(f, -1.0, 1.0), BracketError);
  const auto g = [](double x) { return x - 0.3; };
  const RootBracket b = make_bracket(g, 0.0, 1.0);
  EXPECT_LT(b.f_lo * b.f_hi, 0.0);
}

TEST(Bisect, ConvergesAndStopsOnExactZero) {
  const auto f = [](double x) { return std::cos(x) - x; };
  EXPECT_NEAR(bisect(f, make_bracket(f, 0.0, 1.0)), 0.73908513321516064, 1e-11);
  int calls = 0;
  const auto g = [&](double x) {
    ++calls;
    return x - 1.0;
  };
  EXPECT_EQ(bisect(g, make_bracket(g, 0.0, 2.0)), 1.0);
  EXPECT_LE(calls, 3);
}

TEST(GoldenSection, FindsInteriorMinimum) {
  const auto f = [](double x) { return (x - 0.3) * (x - 0.3) + 2.0; };
  const Extremum m = golden_section_min(f, 0.0, 1.0);
  EXPECT_NEAR(m.arg, 0.3, 1e-5);
  EXPECT_NEAR(m.value, 2.0, 1e-10);
}

TEST(GridGolden, PrefersEndpointsWhenMonotone) {
  const auto inc = [](double x) { return x; };
  const Extremum lo = grid_golden_min(inc, 0.2, 0.9);
  EXPECT_EQ(lo.arg, 0.2);
  const Extremum hi = grid_golden_max(inc, 0.2, 0.9);
  EXPECT_EQ(hi.arg, 0.9);
}

TEST(GridGolden, PicksGlobalMinimumOfMultimodal) {
  const auto f = [](double x) { return std::sin(12 * x) + 0.1 * x; };
  const Extremum m = grid_golden_min(f, 0.0, 3.0);
  // global minimum near 3pi/24 shifted by the tilt
  double best = 1e9, arg = 0;
  for (int i = 0; i <= 300000; ++i) {
    const double x = 3.0 * i / 300000;
    if (f(x) < best) best = f(x), arg = x;
  }
  EXPECT_NEAR(m.arg, arg, 1e-4);
  EXPECT_LE(m.value, best + 1e-12);
}
