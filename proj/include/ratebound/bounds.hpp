#pragma once

// Asymptotic upper bounds on the rate of q-ary codes, as functions of the
// relative minimum distance.
//
// The Plotkin bound is taken as the straight line 1 - x/theta joining (0,1)
// to (theta,0), i.e. the secant of any convex bound between those endpoints.

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ratebound/numerics.hpp"
#include "ratebound/qary.hpp"
#include "ratebound/qcontext.hpp"

namespace ratebound {

enum class BoundName {
  singleton,
  hamming,
  plotkin,
  elias,
  mrrw1,
  aaltonen,
  hs,
  hp,
  ep,
  beta,
  alpha_star,
  omega_max,
};

inline constexpr std::array<BoundName, 12> kAllBounds = {
    BoundName::singleton, BoundName::hamming, BoundName::plotkin, BoundName::elias,
    BoundName::mrrw1,     BoundName::aaltonen, BoundName::hs,     BoundName::hp,
    BoundName::ep,        BoundName::beta,    BoundName::alpha_star, BoundName::omega_max};

inline std::string_view to_string(BoundName name) {
  switch (name) {
    case BoundName::singleton: return "singleton";
    case BoundName::hamming: return "hamming";
    case BoundName::plotkin: return "plotkin";
    case BoundName::elias: return "elias";
    case BoundName::mrrw1: return "mrrw1";
    case BoundName::aaltonen: return "aaltonen";
    case BoundName::hs: return "hs";
    case BoundName::hp: return "hp";
    case BoundName::ep: return "ep";
    case BoundName::beta: return "beta";
    case BoundName::alpha_star: return "alpha_star";
    case BoundName::omega_max: return "omega_max";
  }
  return "?";
}

inline BoundName parse_bound_name(std::string_view text) {
  for (BoundName n : kAllBounds)
    if (to_string(n) == text) return n;
  throw std::invalid_argument("unknown bound name '" + std::string(text) + "'");
}

/// True for the bounds that are only stated for q > 2.
inline bool requires_q_above_two(BoundName name) {
  return name == BoundName::ep || name == BoundName::aaltonen || name == BoundName::omega_max;
}

struct Interval {
  double lo;
  double hi;

  bool contains(double x) const { return x >= lo - detail::kClampEps && x <= hi + detail::kClampEps; }
};

inline Interval bound_domain(BoundName name, const QContext& ctx) {
  switch (name) {
    case BoundName::singleton:
    case BoundName::hamming:
    case BoundName::hs:
    case BoundName::beta:
    case BoundName::alpha_star:
      return {0.0, 1.0};
    default:
      return {0.0, ctx.theta()};
  }
}

inline std::vector<double> bound_junctions(BoundName name, const QContext& ctx) {
  switch (name) {
    case BoundName::hs:
    case BoundName::beta:
    case BoundName::alpha_star:
      if (ctx.q() > 2) return {ctx.two_over_q()};
      return {};
    case BoundName::ep:
    case BoundName::omega_max:
      return {ctx.ep_junction()};
    case BoundName::aaltonen:
      return {ctx.aaltonen_junction()};
    default:
      return {};
  }
}

namespace detail {

inline double check_domain(BoundName name, const QContext& ctx, double x) {
  const Interval dom = bound_domain(name, ctx);
  const std::string what(to_string(name));
  return clamp_to(x, dom.lo, dom.hi, what.c_str());
}

inline double hamming_formula(const QContext& ctx, double x) { return 1.0 - entropy(ctx, x / 2.0); }

inline double elias_formula(const QContext& ctx, double x) { return 1.0 - entropy(ctx, elias_argument(ctx, x)); }

inline double mrrw1_formula(const QContext& ctx, double x) { return entropy(ctx, xi(ctx, x)); }

inline double log_q_of_q_minus_one(const QContext& ctx) { return std::log(ctx.qd() - 1.0) / ctx.ln_q(); }

/// Branch `index` of a piecewise bound, evaluated without branch selection.
/// Branch formulas accept arguments slightly past their junction.
inline double branch_formula(BoundName name, int index, const QContext& ctx, double x) {
  const double q = ctx.qd();
  const double th = ctx.theta();
  const double hq1 = log_q_of_q_minus_one(ctx);
  switch (name) {
    case BoundName::hs:
      return index == 0 ? hamming_formula(ctx, x) : (1.0 - x) * hq1;
    case BoundName::beta:
    case BoundName::alpha_star:
      return index == 0 ? entropy(ctx, x / 2.0) : 1.0 - (1.0 - x) * hq1;
    case BoundName::ep:
      return index == 0 ? elias_formula(ctx, x) : (th - x) * (q - 1.0) * hq1 / (q - 2.0);
    case BoundName::aaltonen:
      return index == 0 ? 1.0 - x * hq1 / (1.0 - 2.0 / q) : mrrw1_formula(ctx, x);
    case BoundName::omega_max: {
      const FTriple f = f_triple(ctx, x);
      return index == 0 ? f.f1 : f.f2;
    }
    default:
      throw std::invalid_argument("bound '" + std::string(to_string(name)) + "' has no branches");
  }
}

inline double piecewise(BoundName name, const QContext& ctx, double x) {
  const std::vector<double> j = bound_junctions(name, ctx);
  const int branch = (j.empty() || x <= j.front()) ? 0 : 1;
  return branch_formula(name, branch, ctx, x);
}

/// min over x' in [0, delta] of alpha_H(x') (theta - delta) / (theta - x').
inline double hp_formula(const QContext& ctx, double delta) {
  const double th = ctx.theta();
  if (delta >= th) return 0.0;
  const double scale = th - delta;
  const auto objective = [&](double x) { return hamming_formula(ctx, x) * scale / (th - x); };
  Extremum best = grid_golden_min(objective, 0.0, delta, 512, 1e-9);
  // One Newton step on the stationarity condition when the minimum is interior.
  if (best.arg > 0.0 && best.arg < delta) {
    const double h = 1e-5;
    if (best.arg - h > 0.0 && best.arg + h < delta) {
      const double d1 = central_difference(objective, best.arg, h);
      const double d2 = central_second_difference(objective, best.arg, h);
      if (d2 > 0.0) {
        const double x = std::clamp(best.arg - d1 / d2, 0.0, delta);
        const double v = objective(x);
        if (v < best.value) best = {x, v};
      }
    }
  }
  return best.value;
}

}  // namespace detail

/// Singleton, Hamming, Plotkin, Elias and first MRRW bounds.
inline double classical_bound(BoundName name, const QContext& ctx, double x) {
  x = detail::check_domain(name, ctx, x);
  switch (name) {
    case BoundName::singleton: return 1.0 - x;
    case BoundName::hamming: return detail::hamming_formula(ctx, x);
    case BoundName::plotkin: return 1.0 - x / ctx.theta();
    case BoundName::elias: return detail::elias_formula(ctx, x);
    case BoundName::mrrw1: return detail::mrrw1_formula(ctx, x);
    default:
      throw std::invalid_argument("'" + std::string(to_string(name)) + "' is not a classical bound");
  }
}

/// Hamming-Singleton, Hamming-Plotkin, Elias-Plotkin and straight-line MRRW hybrids.
inline double hybrid_bound(BoundName name, const QContext& ctx, double x) {
  if (requires_q_above_two(name)) require_q_above_two(ctx, std::string(to_string(name)).c_str());
  x = detail::check_domain(name, ctx, x);
  switch (name) {
    case BoundName::hs:
    case BoundName::ep:
    case BoundName::aaltonen:
      return detail::piecewise(name, ctx, x);
    case BoundName::hp:
      return detail::hp_formula(ctx, x);
    default:
      throw std::invalid_argument("'" + std::string(to_string(name)) + "' is not a hybrid bound");
  }
}

/// Exponential growth rate of the largest anticodes: H(x/2) below 2/q, then
/// the tangent line 1 - (1-x) H_q(1). Equals 1 - hs identically.
inline double anticode_rate(const QContext& ctx, double x) {
  x = detail::check_domain(BoundName::beta, ctx, x);
  return detail::piecewise(BoundName::beta, ctx, x);
}

inline double alpha_star(const QContext& ctx, double x) { return anticode_rate(ctx, x); }

/// Largest admissible anticode diameter omega for a given delta: f1 up to the
/// Elias/Plotkin junction, f2 after it.
inline double omega_max(const QContext& ctx, double delta) {
  require_q_above_two(ctx, "omega_max");
  delta = detail::check_domain(BoundName::omega_max, ctx, delta);
  return detail::piecewise(BoundName::omega_max, ctx, delta);
}

/// A named bound bound to an alphabet. Immutable after construction.
class BoundCurve {
 public:
  BoundCurve(BoundName name, QContext ctx)
      : name_(name), ctx_(ctx), domain_(bound_domain(name, ctx)), junctions_(bound_junctions(name, ctx)) {
    if (requires_q_above_two(name)) require_q_above_two(ctx, std::string(to_string(name)).c_str());
  }

  BoundName name() const noexcept { return name_; }
  const QContext& ctx() const noexcept { return ctx_; }
  const Interval& domain() const noexcept { return domain_; }
  const std::vector<double>& junctions() const noexcept { return junctions_; }
  bool piecewise() const noexcept { return !junctions_.empty(); }

  double operator()(double x) const {
    switch (name_) {
      case BoundName::singleton:
      case BoundName::hamming:
      case BoundName::plotkin:
      case BoundName::elias:
      case BoundName::mrrw1:
        return classical_bound(name_, ctx_, x);
      case BoundName::hs:
      case BoundName::hp:
      case BoundName::ep:
      case BoundName::aaltonen:
        return hybrid_bound(name_, ctx_, x);
      case BoundName::beta:
      case BoundName::alpha_star:
        return anticode_rate(ctx_, x);
      case BoundName::omega_max:
        return omega_max(ctx_, x);
    }
    throw std::invalid_argument("unknown bound");
  }

  /// Left (index 0) or right (index 1) formula of a piecewise curve.
  double branch(int index, double x) const { return detail::branch_formula(name_, index, ctx_, x); }

 private:
  BoundName name_;
  QContext ctx_;
  Interval domain_;
  std::vector<double> junctions_;
};

}  // namespace ratebound
