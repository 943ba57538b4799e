#pragma once

// Transforms that improve an upper bound (secant to (A,0), chord through the
// origin side), root location for the convexity switch points, and grid
// scans that check sign laws, junction smoothness and convexity.
//
// Every scan is deterministic: fixed grids, no randomisation.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ratebound/bounds.hpp"
#include "ratebound/numerics.hpp"
#include "ratebound/qary.hpp"
#include "ratebound/qcontext.hpp"

namespace ratebound {

/// Default tolerances of every check, in one place.
struct Tolerances {
  double transform_agreement = 1e-6;
  double argument_agreement = 1e-4;
  double junction_value = 1e-10;
  double junction_slope = 1e-4;
  double convexity_slack = 1e-8;
  double split_location = 1e-3;
  double dominance_slack = 1e-12;
  double composition = 1e-12;
  double monotone_slack = 1e-10;
  double idempotence = 1e-8;
  double derivative_relative = 1e-5;
  double involution = 1e-10;
  double identity = 1e-12;
};

enum class Verdict { pass, fail };

struct ScanReport {
  std::string function_id;
  double lo = 0.0;
  double hi = 0.0;
  std::size_t grid_size = 0;
  std::vector<RootBracket> sign_changes;
  double max_violation = 0.0;
  double tolerance = 0.0;
  std::optional<double> witness;
  std::vector<std::pair<std::string, double>> metrics;
  Verdict verdict = Verdict::fail;

  bool passed() const noexcept { return verdict == Verdict::pass; }

  void note_violation(double v, double at) {
    if (v > max_violation || (std::isnan(v) && !std::isnan(max_violation))) {
      max_violation = v;
      witness = at;
    }
  }

  void finalize(bool extra_conditions = true) {
    verdict = (max_violation <= tolerance && extra_conditions) ? Verdict::pass : Verdict::fail;
  }
};

enum class Anchor { one, theta };

/// min over x in [0, delta] of curve(x) (A - delta) / (A - x) with A = 1 or theta.
/// Returns the minimiser and the minimum; for delta >= A the value is 0.
inline Extremum secant_transform(const BoundCurve& curve, double delta, Anchor anchor) {
  const double a = anchor == Anchor::one ? 1.0 : curve.ctx().theta();
  const std::string what = "secant_transform(" + std::string(to_string(curve.name())) + ")";
  delta = detail::clamp_to(delta, curve.domain().lo, std::min(curve.domain().hi, a), what.c_str());
  if (delta >= a) return {delta, 0.0};
  const double scale = a - delta;
  return grid_golden_min([&](double x) { return curve(x) * scale / (a - x); }, 0.0, delta, 1024, 1e-10);
}

/// 1 - max over x in [delta, theta] of (1 - curve(x)) delta / x, with the maximiser.
inline Extremum chord_transform_origin(const BoundCurve& curve, double delta) {
  const double th = curve.ctx().theta();
  const std::string what = "chord_transform_origin(" + std::string(to_string(curve.name())) + ")";
  delta = detail::clamp_to(delta, 0.0, th, what.c_str());
  if (delta <= 0.0) throw DomainError(what + ": delta must be positive");
  const Extremum m =
      grid_golden_max([&](double x) { return (1.0 - curve(x)) * delta / x; }, delta, th, 1024, 1e-10);
  return {m.arg, 1.0 - m.value};
}

enum class MinCharacterization { hs, ep, aaltonen };

inline std::string_view to_string(MinCharacterization k) {
  switch (k) {
    case MinCharacterization::hs: return "hs";
    case MinCharacterization::ep: return "ep";
    case MinCharacterization::aaltonen: return "aaltonen";
  }
  return "?";
}

/// Compare each closed-form hybrid with the transform that generates it:
///   hs       = secant_transform(hamming, anchor 1),  argmin = min{delta, 2/q}
///   ep       = secant_transform(elias, anchor theta), argmin = min{delta, (2q-3)/(q(q-1))}
///   aaltonen = chord_transform_origin(mrrw1),        argmax = max{delta, (1-2/q)^2}
inline ScanReport verify_min_characterization(MinCharacterization kind, const QContext& ctx, std::size_t grid,
                                              const Tolerances& tol = {}) {
  ScanReport r;
  r.function_id = "min_characterization_" + std::string(to_string(kind));
  r.grid_size = grid;
  r.tolerance = tol.transform_agreement;
  double max_arg_dev = 0.0;
  double arg_witness = 0.0;

  const auto record_arg = [&](double dev, double at) {
    if (dev > max_arg_dev) {
      max_arg_dev = dev;
      arg_witness = at;
    }
  };

  switch (kind) {
    case MinCharacterization::hs: {
      const BoundCurve hamming(BoundName::hamming, ctx);
      r.lo = 0.0;
      r.hi = 1.0;
      for (std::size_t i = 0; i < grid; ++i) {
        const double delta = static_cast<double>(i) / static_cast<double>(grid);
        const Extremum t = secant_transform(hamming, delta, Anchor::one);
        r.note_violation(std::abs(t.value - hybrid_bound(BoundName::hs, ctx, delta)), delta);
        record_arg(std::abs(t.arg - std::min(delta, ctx.two_over_q())), delta);
      }
      break;
    }
    case MinCharacterization::ep: {
      const BoundCurve elias(BoundName::elias, ctx);
      const double th = ctx.theta();
      r.lo = 0.0;
      r.hi = th;
      for (std::size_t i = 0; i < grid; ++i) {
        const double delta = th * static_cast<double>(i) / static_cast<double>(grid);
        const Extremum t = secant_transform(elias, delta, Anchor::theta);
        r.note_violation(std::abs(t.value - hybrid_bound(BoundName::ep, ctx, delta)), delta);
        record_arg(std::abs(t.arg - std::min(delta, ctx.ep_junction())), delta);
      }
      break;
    }
    case MinCharacterization::aaltonen: {
      const BoundCurve mrrw(BoundName::mrrw1, ctx);
      const double th = ctx.theta();
      r.lo = 0.0;
      r.hi = th;
      for (std::size_t i = 1; i <= grid; ++i) {
        const double delta = th * static_cast<double>(i) / static_cast<double>(grid);
        const Extremum t = chord_transform_origin(mrrw, delta);
        r.note_violation(std::abs(t.value - hybrid_bound(BoundName::aaltonen, ctx, delta)), delta);
        record_arg(std::abs(t.arg - std::max(delta, ctx.aaltonen_junction())), delta);
      }
      break;
    }
  }
  r.metrics = {{"max_argument_deviation", max_arg_dev}, {"argument_witness", arg_witness}};
  r.finalize(max_arg_dev <= tol.argument_agreement);
  return r;
}

/// Largest omega on a uniform grid of [delta, 1] satisfying the anticode
/// feasibility condition rho/(theta(1-omega+2rho)) <= 1 - sqrt((1-delta/theta)/(1-omega+2rho)),
/// with rho = omega/2 below 2/q and (1-omega)/(q-2) above it.
inline double omega_max_scan(const QContext& ctx, double delta, std::size_t grid) {
  require_q_above_two(ctx, "omega_max_scan");
  const double th = ctx.theta();
  const double q = ctx.qd();
  delta = detail::clamp_to(delta, 0.0, th, "omega_max_scan");
  const double rest = std::max(0.0, 1.0 - delta / th);
  const auto feasible = [&](double w) {
    const double rho = w <= 2.0 / q ? w / 2.0 : (1.0 - w) / (q - 2.0);
    const double core = 1.0 - w + 2.0 * rho;
    // At omega = 1 the second branch gives 0/0; its limit is lhs = 1/(q-1) and
    // rhs = 1 when delta = theta, -infinity otherwise.
    if (core <= 0.0) return rest <= 0.0;
    const double lhs = rho / (th * core);
    const double rhs = 1.0 - std::sqrt(rest / core);
    return lhs <= rhs + 1e-14;
  };
  double best = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t i = 0; i <= grid; ++i) {
    const double w = i == grid ? 1.0 : delta + (1.0 - delta) * static_cast<double>(i) / static_cast<double>(grid);
    if (feasible(w)) best = w;
  }
  if (std::isnan(best)) throw DomainError("omega_max_scan: no feasible omega on the grid");
  return best;
}

enum class RootKind { b, delta_E, delta_MRRW, z_E };

inline std::string_view to_string(RootKind k) {
  switch (k) {
    case RootKind::b: return "b";
    case RootKind::delta_E: return "delta_E";
    case RootKind::delta_MRRW: return "delta_MRRW";
    case RootKind::z_E: return "z_E";
  }
  return "?";
}

struct RootResult {
  double root;         // in the relative-distance variable (z for z_E)
  double native_root;  // root of the bracketed function (z_E, y_MRRW, or b itself)
  RootBracket bracket; // certified bracket of the native function
};

/// Interval that provably contains the root of the given kind.
inline Interval proven_root_interval(RootKind kind, const QContext& ctx) {
  const double q = ctx.qd();
  switch (kind) {
    case RootKind::b: return {0.0, 1.0};
    case RootKind::z_E: return {1.0 / q, 0.5};
    case RootKind::delta_E: return {ctx.ep_junction(), 0.75 * (q - 4.0 / 3.0) / (q - 1.0)};
    case RootKind::delta_MRRW: return {0.5 - std::sqrt(q - 1.0) / q, ctx.aaltonen_junction()};
  }
  return {0.0, 1.0};
}

/// Bisection roots:
///   b          : H_q(x/2) = x, x > 0 (the Hamming/Singleton crossing)
///   z_E        : phi(z) = 0 on (1/q, 1/2)
///   delta_E    : x with Z(x) = z_E, the Elias convexity switch
///   delta_MRRW : xi(y) with G2(y) = 0 on (1/q, 1/2), the MRRW convexity switch
inline RootResult locate_root(RootKind kind, const QContext& ctx, double tol = 1e-12) {
  const double q = ctx.qd();
  switch (kind) {
    case RootKind::b: {
      // Symmetric about 1 so that the first midpoint is exactly 1.
      const double eps = std::ldexp(1.0, -10);
      const auto f = [&](double x) { return entropy(ctx, x / 2.0) - x; };
      const RootBracket br = make_bracket(f, eps, 2.0 - eps);
      const double root = bisect(f, br, tol);
      return {root, root, br};
    }
    case RootKind::z_E:
    case RootKind::delta_E: {
      require_q_above_two(ctx, "locate_root(delta_E)");
      const auto f = [&](double z) { return phi(ctx, z); };
      const RootBracket br = make_bracket(f, 1.0 / q, 0.5);
      const double z = bisect(f, br, tol);
      return {kind == RootKind::z_E ? z : elias_argument_inverse(ctx, z), z, br};
    }
    case RootKind::delta_MRRW: {
      require_q_above_two(ctx, "locate_root(delta_MRRW)");
      const auto f = [&](double y) { return chi_and_g2(ctx, y).g2; };
      const RootBracket br = make_bracket(f, 1.0 / q, 0.5);
      const double y = bisect(f, br, tol);
      return {xi(ctx, y), y, br};
    }
  }
  throw DomainError("locate_root: unknown kind");
}

/// C0/C1 check of a piecewise curve at a junction, comparing the two branch
/// formulas directly. Slopes are second-order one-sided differences at
/// h in {1e-4, 1e-5, 1e-6}; the estimates must also agree with each other.
inline ScanReport smoothness_check(const BoundCurve& curve, double point, const Tolerances& tol = {}) {
  ScanReport r;
  r.function_id = "junction_" + std::string(to_string(curve.name()));
  r.lo = r.hi = point;
  r.tolerance = tol.junction_slope;
  r.witness = point;
  if (!curve.piecewise()) {
    r.max_violation = std::numeric_limits<double>::infinity();
    r.finalize();
    return r;
  }
  const auto left = [&](double x) { return curve.branch(0, x); };
  const auto right = [&](double x) { return curve.branch(1, x); };
  const double value_gap = std::abs(left(point) - right(point));

  constexpr double kSteps[] = {1e-4, 1e-5, 1e-6};
  double lmin = std::numeric_limits<double>::infinity(), lmax = -lmin;
  double rmin = lmin, rmax = -lmin;
  double slope_gap = 0.0;
  for (double h : kSteps) {
    const double ls = left_slope(left, point, h);
    const double rs = right_slope(right, point, h);
    lmin = std::min(lmin, ls);
    lmax = std::max(lmax, ls);
    rmin = std::min(rmin, rs);
    rmax = std::max(rmax, rs);
    slope_gap = std::max(slope_gap, std::abs(ls - rs));
  }
  const double spread = std::max(lmax - lmin, rmax - rmin);
  r.grid_size = 3;
  r.max_violation = slope_gap;
  r.metrics = {{"value_gap", value_gap}, {"slope_gap", slope_gap}, {"richardson_spread", spread},
               {"left_slope", lmin}, {"right_slope", rmin}};
  r.finalize(value_gap <= tol.junction_value && spread <= tol.junction_slope);
  return r;
}

enum class Shape { convex, concave, convex_then_concave, concave_then_convex };

struct ConvexityExpectation {
  Shape shape;
  double split = 0.0;  // switch point for the split shapes
};

/// Sign of normalised second differences on a uniform grid. For split shapes,
/// points within `split_location` of the switch are exempt from the sign test,
/// and the single empirical sign change must land within that distance.
template <class F>
ScanReport convexity_scan(std::string id, F&& f, Interval interval, ConvexityExpectation expected,
                          std::size_t grid = 2048, const Tolerances& tol = {}) {
  ScanReport r;
  r.function_id = std::move(id);
  r.lo = interval.lo;
  r.hi = interval.hi;
  r.grid_size = grid;
  r.tolerance = tol.convexity_slack;
  const double h = (interval.hi - interval.lo) / static_cast<double>(grid - 1);
  const auto at = [&](std::size_t i) { return i + 1 == grid ? interval.hi : interval.lo + h * static_cast<double>(i); };
  std::vector<double> values(grid);
  for (std::size_t i = 0; i < grid; ++i) values[i] = f(at(i));

  const bool split = expected.shape == Shape::convex_then_concave || expected.shape == Shape::concave_then_convex;
  const auto expected_sign = [&](double x) {
    switch (expected.shape) {
      case Shape::convex: return 1.0;
      case Shape::concave: return -1.0;
      case Shape::convex_then_concave: return x < expected.split ? 1.0 : -1.0;
      case Shape::concave_then_convex: return x < expected.split ? -1.0 : 1.0;
    }
    return 0.0;
  };

  int prev_sign = 0;
  double prev_x = 0.0, prev_s = 0.0;
  for (std::size_t i = 1; i + 1 < grid; ++i) {
    const double x = at(i);
    const double s = (values[i + 1] - 2.0 * values[i] + values[i - 1]) / (h * h);
    if (!(split && std::abs(x - expected.split) <= tol.split_location)) r.note_violation(std::max(0.0, -expected_sign(x) * s), x);
    if (std::isnan(s)) r.note_violation(std::numeric_limits<double>::infinity(), x);
    const int sign = s > tol.convexity_slack ? 1 : (s < -tol.convexity_slack ? -1 : 0);
    if (sign != 0) {
      if (prev_sign != 0 && sign != prev_sign) r.sign_changes.push_back({prev_x, x, prev_s, s});
      prev_sign = sign;
      prev_x = x;
      prev_s = s;
    }
  }

  bool extra = true;
  if (split) {
    extra = r.sign_changes.size() == 1;
    if (extra) {
      const double crossing = 0.5 * (r.sign_changes.front().lo + r.sign_changes.front().hi);
      const double distance = std::abs(crossing - expected.split);
      r.metrics = {{"crossing", crossing}, {"predicted", expected.split}, {"distance", distance}};
      extra = distance <= tol.split_location;
    }
  }
  r.finalize(extra);
  return r;
}

inline ScanReport convexity_scan(const BoundCurve& curve, Interval interval, ConvexityExpectation expected,
                                 std::size_t grid = 2048, const Tolerances& tol = {}) {
  return convexity_scan("convexity_" + std::string(to_string(curve.name())), curve, interval, expected, grid, tol);
}

enum class SignFunction { g_prime, G, G2, phi, h_prime, hA_prime };

inline std::string_view to_string(SignFunction f) {
  switch (f) {
    case SignFunction::g_prime: return "g_prime";
    case SignFunction::G: return "G";
    case SignFunction::G2: return "G2";
    case SignFunction::phi: return "phi";
    case SignFunction::h_prime: return "h_prime";
    case SignFunction::hA_prime: return "hA_prime";
  }
  return "?";
}

struct SignLaw {
  std::function<double(double)> fn;
  Interval interval;
  double predicted;      // predicted crossing; outside the open interval means "no crossing"
  double sign_on_left;   // expected sign left of the crossing
  Interval crossing_window;  // the crossing must also lie in here
};

/// The sign law each auxiliary function obeys:
///   g'  : sign(x - 2/q) on (0,1)
///   G   : sign(1/q - y) on (0,theta)
///   G2  : sign(y_MRRW - y) on (0,theta), y_MRRW in (1/q,1/2)
///   phi : sign(z_E - z) on (0,theta), z_E in (1/q,1/2)
///   h'  : sign(z - 1/q) on (0,z_E)
///   hA' : sign(1/q - y) on (0,theta)
/// Derivatives are central differences of the level-below function.
inline SignLaw sign_law(SignFunction which, const QContext& ctx) {
  const double q = ctx.qd();
  const double th = ctx.theta();
  switch (which) {
    case SignFunction::g_prime:
      return {[ctx](double x) {
                return central_difference([&](double t) { return secant_ratio(SecantKind::g, ctx, t); }, x);
              },
              {0.0, 1.0}, 2.0 / q, -1.0, {0.0, 1.0}};
    case SignFunction::G:
      return {[ctx](double y) { return big_g_value(ctx, y); }, {0.0, th}, 1.0 / q, 1.0, {0.0, th}};
    case SignFunction::G2: {
      require_q_above_two(ctx, "sign_scan(G2)");
      const double y = locate_root(RootKind::delta_MRRW, ctx).native_root;
      return {[ctx](double t) { return chi_and_g2(ctx, t).g2; }, {0.0, th}, y, 1.0, {1.0 / q, 0.5}};
    }
    case SignFunction::phi: {
      require_q_above_two(ctx, "sign_scan(phi)");
      const double z = locate_root(RootKind::z_E, ctx).root;
      return {[ctx](double t) { return phi(ctx, t); }, {0.0, th}, z, 1.0, {1.0 / q, 0.5}};
    }
    case SignFunction::h_prime: {
      require_q_above_two(ctx, "sign_scan(h_prime)");
      const double z = locate_root(RootKind::z_E, ctx).root;
      return {[ctx](double x) {
                return central_difference([&](double t) { return secant_ratio(SecantKind::h, ctx, t); }, x);
              },
              {0.0, z}, 1.0 / q, -1.0, {0.0, z}};
    }
    case SignFunction::hA_prime:
      require_q_above_two(ctx, "sign_scan(hA_prime)");
      return {[ctx](double x) {
                return central_difference([&](double t) { return secant_ratio(SecantKind::hA, ctx, t); }, x);
              },
              {0.0, th}, 1.0 / q, 1.0, {0.0, th}};
  }
  throw DomainError("sign_law: unknown function");
}

/// Evaluates the function on `grid` interior points of its interval and checks
/// the sign law: the expected number of sign changes (one, or none when the
/// predicted point is not interior), the orientation, and a crossing within
/// one grid step of the predicted point.
inline ScanReport sign_scan(SignFunction which, const QContext& ctx, std::size_t grid) {
  const SignLaw law = sign_law(which, ctx);
  ScanReport r;
  r.function_id = "sign_" + std::string(to_string(which));
  r.lo = law.interval.lo;
  r.hi = law.interval.hi;
  r.grid_size = grid;
  const double step = (r.hi - r.lo) / static_cast<double>(grid + 1);
  r.tolerance = step;

  double first_sign = 0.0;
  double prev_x = 0.0, prev_v = 0.0;
  for (std::size_t i = 1; i <= grid; ++i) {
    const double x = r.lo + step * static_cast<double>(i);
    const double v = law.fn(x);
    if (std::isnan(v)) {
      r.note_violation(std::numeric_limits<double>::infinity(), x);
      continue;
    }
    if (v == 0.0) continue;
    if (first_sign == 0.0) first_sign = v > 0.0 ? 1.0 : -1.0;
    if (prev_v != 0.0 && (v > 0.0) != (prev_v > 0.0)) r.sign_changes.push_back({prev_x, x, prev_v, v});
    prev_x = x;
    prev_v = v;
  }

  const bool expect_crossing = law.predicted > r.lo && law.predicted < r.hi;
  bool ok = r.sign_changes.size() == (expect_crossing ? 1u : 0u);
  ok = ok && first_sign == law.sign_on_left;
  if (ok && expect_crossing) {
    const RootBracket& b = r.sign_changes.front();
    const double crossing = 0.5 * (b.lo + b.hi);
    const double distance = std::abs(crossing - law.predicted);
    r.note_violation(distance, crossing);
    r.metrics = {{"crossing", crossing}, {"predicted", law.predicted}, {"distance", distance}};
    ok = crossing > law.crossing_window.lo && crossing < law.crossing_window.hi;
  } else if (!ok) {
    r.note_violation(std::numeric_limits<double>::infinity(), r.sign_changes.empty() ? r.lo : r.sign_changes.front().lo);
  }
  r.finalize(ok);
  return r;
}

/// alpha_E(x)/(theta - x) decreases up to (2q-3)/(q(q-1)) and increases after.
inline ScanReport monotone_ratio_check(const QContext& ctx, std::size_t grid, const Tolerances& tol = {}) {
  require_q_above_two(ctx, "monotone_ratio_check");
  ScanReport r;
  r.function_id = "monotone_ratio_elias";
  const double th = ctx.theta();
  const double j = ctx.ep_junction();
  r.lo = 0.0;
  r.hi = th;
  r.grid_size = grid;
  r.tolerance = tol.monotone_slack;
  const auto ratio = [&](double x) { return classical_bound(BoundName::elias, ctx, x) / (th - x); };
  const double step = th / static_cast<double>(grid);
  double prev = ratio(0.0);
  for (std::size_t i = 1; i < grid; ++i) {
    const double x0 = step * static_cast<double>(i - 1);
    const double x = step * static_cast<double>(i);
    const double cur = ratio(x);
    if (x <= j) r.note_violation(cur - prev, x);
    else if (x0 >= j) r.note_violation(prev - cur, x);
    prev = cur;
  }
  r.finalize();
  return r;
}

/// The theta-anchored secant transform leaves ep unchanged.
inline ScanReport transform_idempotence(const QContext& ctx, std::size_t grid, const Tolerances& tol = {}) {
  const BoundCurve ep(BoundName::ep, ctx);
  ScanReport r;
  r.function_id = "transform_idempotence_ep";
  r.lo = 0.0;
  r.hi = ctx.theta();
  r.grid_size = grid;
  r.tolerance = tol.idempotence;
  for (std::size_t i = 0; i <= grid; ++i) {
    const double d = r.hi * static_cast<double>(i) / static_cast<double>(grid);
    r.note_violation(std::abs(secant_transform(ep, d, Anchor::theta).value - ep(d)), d);
  }
  r.finalize();
  return r;
}

/// Closed-form derivatives (G', G'', G''', phi', g', G2') against central
/// differences of the level-below function, on interior grids.
inline ScanReport derivative_crosscheck(const QContext& ctx, std::size_t grid, const Tolerances& tol = {}) {
  ScanReport r;
  r.function_id = "derivative_crosscheck";
  r.grid_size = grid;
  r.tolerance = tol.derivative_relative;
  const double th = ctx.theta();
  r.lo = 0.0;
  r.hi = th;
  const double h = kFirstDerivativeStep;
  const auto rel = [](double closed, double numeric) {
    return std::abs(closed - numeric) / std::max(1.0, std::abs(closed));
  };
  for (std::size_t i = 1; i <= grid; ++i) {
    const double frac = static_cast<double>(i) / static_cast<double>(grid + 1);
    const double y = 0.02 * th + 0.96 * th * frac;
    const GValues g = big_g(ctx, y);
    r.note_violation(rel(g.d1, central_difference([&](double t) { return big_g_value(ctx, t); }, y, h)), y);
    r.note_violation(rel(g.d2, central_difference([&](double t) { return big_g(ctx, t).d1; }, y, h)), y);
    r.note_violation(rel(g.d3, central_difference([&](double t) { return big_g(ctx, t).d2; }, y, h)), y);
    r.note_violation(rel(g2_prime(ctx, y), central_difference([&](double t) { return chi_and_g2(ctx, t).g2; }, y, h)), y);
    if (ctx.q() > 2)
      r.note_violation(rel(phi_prime(ctx, y), central_difference([&](double t) { return phi(ctx, t); }, y, h)), y);
    const double x = 0.02 + 0.96 * frac;
    r.note_violation(
        rel(g_prime(ctx, x), central_difference([&](double t) { return secant_ratio(SecantKind::g, ctx, t); }, x, h)),
        x);
  }
  r.finalize();
  return r;
}

}  // namespace ratebound
