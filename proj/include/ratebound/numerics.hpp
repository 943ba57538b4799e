#pragma once

// One-dimensional numerical kernels: finite differences, bisection and
// grid-then-golden-section extremisation. Everything is deterministic.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace ratebound {

/// Raised when a root bracket does not straddle a sign change.
class BracketError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RootBracket {
  double lo;
  double hi;
  double f_lo;
  double f_hi;
};

inline constexpr double kFirstDerivativeStep = 1e-6;
inline constexpr double kHigherDerivativeStep = 1e-4;

template <class F>
double central_difference(F&& f, double x, double h = kFirstDerivativeStep) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

template <class F>
double central_second_difference(F&& f, double x, double h = kHigherDerivativeStep) {
  return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

/// Left-sided slope at x, second order (Richardson on backward differences).
template <class F>
double left_slope(F&& f, double x, double h) {
  const double fx = f(x);
  const double d_h = (fx - f(x - h)) / h;
  const double d_2h = (fx - f(x - 2.0 * h)) / (2.0 * h);
  return 2.0 * d_h - d_2h;
}

/// Right-sided slope at x, second order (Richardson on forward differences).
template <class F>
double right_slope(F&& f, double x, double h) {
  const double fx = f(x);
  const double d_h = (f(x + h) - fx) / h;
  const double d_2h = (f(x + 2.0 * h) - fx) / (2.0 * h);
  return 2.0 * d_h - d_2h;
}

template <class F>
RootBracket make_bracket(F&& f, double lo, double hi) {
  RootBracket b{lo, hi, f(lo), f(hi)};
  if (!(b.lo < b.hi) || !(b.f_lo * b.f_hi < 0.0))
    throw BracketError("no sign change on [" + std::to_string(lo) + ", " + std::to_string(hi) +
                       "]: f(lo) = " + std::to_string(b.f_lo) + ", f(hi) = " + std::to_string(b.f_hi));
  return b;
}

/// Bisection on a certified bracket until the width drops below tol.
/// An exact zero at a midpoint is returned immediately.
template <class F>
double bisect(F&& f, RootBracket bracket, double tol = 1e-12) {
  double lo = bracket.lo;
  double hi = bracket.hi;
  double f_lo = bracket.f_lo;
  for (int iter = 0; iter < 200 && hi - lo > tol; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

struct Extremum {
  double arg;
  double value;
};

/// Golden-section minimisation of a unimodal f on [lo, hi].
template <class F>
Extremum golden_section_min(F&& f, double lo, double hi, double tol = 1e-10) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int iter = 0; iter < 200 && b - a > tol; ++iter) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  return fc <= fd ? Extremum{c, fc} : Extremum{d, fd};
}

/// Minimum of f on [lo, hi]: uniform pre-scan on `grid` intervals, golden-section
/// refinement around the best grid point, then comparison with both endpoints.
/// Ties resolve to the smallest argument.
template <class F>
Extremum grid_golden_min(F&& f, double lo, double hi, std::size_t grid = 1024, double tol = 1e-10) {
  if (!(hi > lo)) return {lo, f(lo)};
  const double step = (hi - lo) / static_cast<double>(grid);
  const auto at = [&](std::size_t i) { return i == grid ? hi : lo + step * static_cast<double>(i); };
  std::size_t best = 0;
  double best_val = f(lo);
  for (std::size_t i = 1; i <= grid; ++i) {
    const double v = f(at(i));
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  Extremum result{at(best), best_val};
  const double a = best == 0 ? lo : at(best - 1);
  const double b = best == grid ? hi : at(best + 1);
  const Extremum refined = golden_section_min(f, a, b, tol);
  if (refined.value < result.value) result = refined;
  const double f_lo = f(lo);
  if (f_lo <= result.value) result = {lo, f_lo};
  const double f_hi = f(hi);
  if (f_hi < result.value) result = {hi, f_hi};
  return result;
}

/// Maximum counterpart of grid_golden_min.
template <class F>
Extremum grid_golden_max(F&& f, double lo, double hi, std::size_t grid = 1024, double tol = 1e-10) {
  const Extremum m = grid_golden_min([&](double x) { return -f(x); }, lo, hi, grid, tol);
  return {m.arg, -m.value};
}

}  // namespace ratebound
