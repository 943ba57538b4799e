#pragma once

// Scalar special functions shared by every rate bound: the q-ary entropy,
// the MRRW involution xi, and the auxiliary functions (phi, G, chi, G2, the
// secant ratios, f1/f2/f3) whose sign patterns prove convexity and
// minimisation properties of the bounds.
//
// All logarithms are natural internally; base-q quantities divide by ln q once.

#include <algorithm>
#include <cmath>

#include "ratebound/qcontext.hpp"

namespace ratebound {

/// q-ary entropy H_q(x) = x log_q((q-1)/x) + (1-x) log_q(1/(1-x)) on [0,1].
inline double entropy(const QContext& ctx, double x) {
  x = detail::clamp_to(x, 0.0, 1.0, "entropy");
  const double nats = x * std::log(ctx.qd() - 1.0) - detail::xlogx(x) - detail::xlogx(1.0 - x);
  return nats / ctx.ln_q();
}

/// dH_q/dx = log_q((q-1)(1-x)/x), finite on (0,1).
inline double entropy_prime(const QContext& ctx, double x) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError("entropy_prime: argument must lie in (0,1)");
  return std::log((ctx.qd() - 1.0) * (1.0 - x) / x) / ctx.ln_q();
}

/// xi(x) = (sqrt(theta(1-x)) - sqrt(x(1-theta)))^2, an involution of [0,theta].
inline double xi(const QContext& ctx, double x) {
  const double th = ctx.theta();
  x = detail::clamp_to(x, 0.0, th, "xi");
  const double s = std::sqrt(th * (1.0 - x)) - std::sqrt(x * (1.0 - th));
  return s * s;
}

/// phi(z) = integral of (1 - 1/t) from (1-theta)/(1-z) to theta/z, in closed
/// form via the antiderivative t - ln t. Defined for q >= 3 on (0, theta].
inline double phi(const QContext& ctx, double z) {
  require_q_above_two(ctx, "phi");
  const double th = ctx.theta();
  z = detail::clamp_to(z, 0.0, th, "phi");
  if (z <= 0.0) throw DomainError("phi: upper integration limit diverges at z = 0");
  const double upper = th / z;
  const double lower = (1.0 - th) / (1.0 - z);
  return (upper - std::log(upper)) - (lower - std::log(lower));
}

/// phi'(z) = (z - 1/2) * 2(theta - z) / (z^2 (1-z)^2).
inline double phi_prime(const QContext& ctx, double z) {
  require_q_above_two(ctx, "phi_prime");
  const double th = ctx.theta();
  z = detail::clamp_to(z, 0.0, th, "phi_prime");
  if (z <= 0.0) throw DomainError("phi_prime: singular at z = 0");
  const double w = z * (1.0 - z);
  return (z - 0.5) * 2.0 * (th - z) / (w * w);
}

struct GValues {
  double value;
  double d1;
  double d2;
  double d3;
};

/// G(y) = sqrt(y/(1-theta)) ln(y/theta) + sqrt((1-y)/theta) ln((1-y)/(1-theta)) on [0,theta].
inline double big_g_value(const QContext& ctx, double y) {
  const double th = ctx.theta();
  y = detail::clamp_to(y, 0.0, th, "big_g");
  const double first = y > 0.0 ? std::sqrt(y / (1.0 - th)) * std::log(y / th) : 0.0;
  const double second = std::sqrt((1.0 - y) / th) * std::log((1.0 - y) / (1.0 - th));
  return first + second;
}

/// G and its first three derivatives. The derivatives blow up at y = 0 only,
/// so the accepted range is (0, theta].
inline GValues big_g(const QContext& ctx, double y) {
  const double th = ctx.theta();
  y = detail::clamp_to(y, 0.0, th, "big_g");
  if (y <= 0.0) throw DomainError("big_g: derivatives are singular at y = 0");
  const double s = std::sqrt(th * (1.0 - th));
  const double one_m_th = 1.0 - th;
  const double one_m_y = 1.0 - y;

  // -s G'(y) = integral of ln t between sqrt((1-theta)/(1-y)) and sqrt(theta/y).
  const auto antideriv = [](double t) { return t * std::log(t) - t; };
  const double hi = std::sqrt(th / y);
  const double lo = std::sqrt(one_m_th / one_m_y);
  const double d1 = -(antideriv(hi) - antideriv(lo)) / s;

  const double d2 = (std::log(th / y) * std::sqrt(th) / std::pow(y, 1.5) +
                     std::log(one_m_th / one_m_y) * std::sqrt(one_m_th) / std::pow(one_m_y, 1.5)) /
                    (4.0 * s);

  const double d3 = (std::sqrt(one_m_th) / std::pow(one_m_y, 2.5) * (1.0 + 1.5 * std::log(one_m_th / one_m_y)) -
                     std::sqrt(th) / std::pow(y, 2.5) * (1.0 + 1.5 * std::log(th / y))) /
                    (4.0 * s);

  return {big_g_value(ctx, y), d1, d2, d3};
}

struct ChiG2 {
  double chi;
  double g2;
};

/// chi(y) = 1 - 2y + (2theta-1) sqrt(y(1-y)/(theta(1-theta))) on [0,theta].
inline double chi(const QContext& ctx, double y) {
  const double th = ctx.theta();
  y = detail::clamp_to(y, 0.0, th, "chi");
  return 1.0 - 2.0 * y + (2.0 * th - 1.0) * std::sqrt(y * (1.0 - y) / (th * (1.0 - th)));
}

/// chi(y) together with G2(y) = ln sqrt((1-y)(q-1)/y) - chi(y); y in (0,theta].
inline ChiG2 chi_and_g2(const QContext& ctx, double y) {
  const double th = ctx.theta();
  y = detail::clamp_to(y, 0.0, th, "chi_and_g2");
  if (y <= 0.0) throw DomainError("chi_and_g2: G2 has a log singularity at y = 0");
  const double c = chi(ctx, y);
  return {c, 0.5 * std::log((1.0 - y) * (ctx.qd() - 1.0) / y) - c};
}

/// G2'(y) from the relation G2'(y) y (1-y) = chi(y) (y - 1/2).
inline double g2_prime(const QContext& ctx, double y) {
  const double th = ctx.theta();
  y = detail::clamp_to(y, 0.0, th, "g2_prime");
  if (y <= 0.0) throw DomainError("g2_prime: singular at y = 0");
  return chi(ctx, y) * (y - 0.5) / (y * (1.0 - y));
}

enum class SecantKind { g, h, hA };

/// The three secant ratios whose monotonicity drives the minimisation identities:
///   g(x)  = (1 - H(x/2)) / (1 - x)       on [0, 1)
///   h(z)  = (1 - H(z)) / (theta - z)^2   on [0, theta)
///   hA(y) = (1 - H(y)) / xi(y)           on (0, theta)
inline double secant_ratio(SecantKind kind, const QContext& ctx, double x) {
  const double th = ctx.theta();
  switch (kind) {
    case SecantKind::g: {
      x = detail::clamp_to(x, 0.0, 1.0, "secant_ratio(g)");
      if (x >= 1.0) throw DomainError("secant_ratio(g): pole at x = 1");
      return (1.0 - entropy(ctx, x / 2.0)) / (1.0 - x);
    }
    case SecantKind::h: {
      x = detail::clamp_to(x, 0.0, th, "secant_ratio(h)");
      if (x >= th) throw DomainError("secant_ratio(h): pole at z = theta");
      const double gap = th - x;
      return (1.0 - entropy(ctx, x)) / (gap * gap);
    }
    case SecantKind::hA: {
      x = detail::clamp_to(x, 0.0, th, "secant_ratio(hA)");
      if (x <= 0.0 || x >= th) throw DomainError("secant_ratio(hA): defined on the open interval (0, theta)");
      return (1.0 - entropy(ctx, x)) / xi(ctx, x);
    }
  }
  throw DomainError("secant_ratio: unknown kind");
}

/// Closed form g'(x) = log_q(q^2 x (2-x) / (4(q-1))) / (2 (1-x)^2) on (0,1).
inline double g_prime(const QContext& ctx, double x) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError("g_prime: argument must lie in (0,1)");
  const double q = ctx.qd();
  const double one_m_x = 1.0 - x;
  return std::log(q * q * x * (2.0 - x) / (4.0 * (q - 1.0))) / ctx.ln_q() / (2.0 * one_m_x * one_m_x);
}

struct FTriple {
  double f1;
  double f2;
  double f3;
};

/// f1 = 2theta(1 - sqrt(1 - d/theta)), f2 = 1 - (1 - d/theta)(q-1)^2/(q(q-2)),
/// f3 = 1 - ((q-1)/(q-2)) sqrt(1 - d/theta). Requires q >= 3.
inline FTriple f_triple(const QContext& ctx, double delta) {
  require_q_above_two(ctx, "f_triple");
  const double th = ctx.theta();
  delta = detail::clamp_to(delta, 0.0, th, "f_triple");
  const double q = ctx.qd();
  const double rest = std::max(0.0, 1.0 - delta / th);
  const double root = std::sqrt(rest);
  return {2.0 * th * (1.0 - root), 1.0 - rest * (q - 1.0) * (q - 1.0) / (q * (q - 2.0)),
          1.0 - (q - 1.0) / (q - 2.0) * root};
}

/// Z(x) = theta(1 - sqrt(1 - x/theta)), the inner Elias argument.
inline double elias_argument(const QContext& ctx, double x) {
  const double th = ctx.theta();
  x = detail::clamp_to(x, 0.0, th, "elias_argument");
  return th * (1.0 - std::sqrt(std::max(0.0, 1.0 - x / th)));
}

/// Inverse of elias_argument: x = theta(1 - (1 - z/theta)^2).
inline double elias_argument_inverse(const QContext& ctx, double z) {
  const double th = ctx.theta();
  z = detail::clamp_to(z, 0.0, th, "elias_argument_inverse");
  const double t = 1.0 - z / th;
  return th * (1.0 - t * t);
}

}  // namespace ratebound
