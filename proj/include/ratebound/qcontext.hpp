#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace ratebound {

/// Raised when an argument falls outside the domain of an evaluator.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Ambient alphabet parameter. theta = 1 - 1/q is always derived from q.
class QContext {
 public:
  explicit QContext(int q) : q_(q) {
    if (q < 2) throw DomainError("alphabet size q must be >= 2, got " + std::to_string(q));
    ln_q_ = std::log(static_cast<double>(q));
  }

  int q() const noexcept { return q_; }
  double qd() const noexcept { return static_cast<double>(q_); }
  double theta() const noexcept { return 1.0 - 1.0 / qd(); }
  double ln_q() const noexcept { return ln_q_; }

  /// 2/q, the Hamming/Singleton hybrid junction.
  double two_over_q() const noexcept { return 2.0 / qd(); }
  /// (2q-3)/(q(q-1)), the Elias/Plotkin hybrid junction.
  double ep_junction() const noexcept { return (2.0 * qd() - 3.0) / (qd() * (qd() - 1.0)); }
  /// (1-2/q)^2, the straight-line MRRW junction.
  double aaltonen_junction() const noexcept {
    const double t = 1.0 - 2.0 / qd();
    return t * t;
  }

  friend bool operator==(const QContext& a, const QContext& b) noexcept { return a.q_ == b.q_; }

 private:
  int q_;
  double ln_q_;
};

inline void require_q_above_two(const QContext& ctx, const char* what) {
  if (ctx.q() <= 2)
    throw DomainError(std::string(what) + " requires q > 2 (got q = " + std::to_string(ctx.q()) + ")");
}

namespace detail {

inline constexpr double kClampEps = 1e-14;

/// Clamp x into [lo, hi] when it is within kClampEps of the interval; throw otherwise.
inline double clamp_to(double x, double lo, double hi, const char* what) {
  if (!(x >= lo - kClampEps && x <= hi + kClampEps) || std::isnan(x))
    throw DomainError(std::string(what) + ": argument " + std::to_string(x) + " outside [" +
                      std::to_string(lo) + ", " + std::to_string(hi) + "]");
  if (x < lo) return lo;
  if (x > hi) return hi;
  return x;
}

/// x * ln(x) with the continuity convention 0 * ln 0 = 0.
inline double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

}  // namespace detail

}  // namespace ratebound
