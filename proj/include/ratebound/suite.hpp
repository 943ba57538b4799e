#pragma once

// Registry of verification checks, grouped in suites, and the JSON report.
//
// Report schema (keys in this order):
//   { "tool_version", "suite", "q_list", "checks": [ { "check_id", "q", "params",
//     "status", "max_violation", "tolerance", "witness" } ], "summary": { "pass",
//     "fail", "skipped" } }
// status is "pass", "fail" or "skipped"; non-finite numbers serialise as null.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "ratebound/bounds.hpp"
#include "ratebound/combinatorics.hpp"
#include "ratebound/qary.hpp"
#include "ratebound/report.hpp"
#include "ratebound/variational.hpp"

namespace ratebound {

using Json = nlohmann::ordered_json;

enum class CheckStatus { pass, fail, skipped };

inline std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

struct CheckRecord {
  std::string check_id;
  int q = 0;
  Json params = Json::object();
  CheckStatus status = CheckStatus::skipped;
  double max_violation = 0.0;
  double tolerance = 0.0;
  std::optional<double> witness;
};

struct VerificationReport {
  std::string tool_version = kToolVersion;
  std::string suite;
  std::vector<int> q_list;
  std::vector<CheckRecord> checks;

  std::size_t count(CheckStatus s) const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [s](const CheckRecord& c) { return c.status == s; }));
  }
  bool all_passed() const { return count(CheckStatus::fail) == 0; }
};

enum class Suite { all, lemmas, junctions, dominance, oracle };

inline std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::all: return "all";
    case Suite::lemmas: return "lemmas";
    case Suite::junctions: return "junctions";
    case Suite::dominance: return "dominance";
    case Suite::oracle: return "oracle";
  }
  return "?";
}

inline Suite parse_suite(std::string_view s) {
  for (Suite x : {Suite::all, Suite::lemmas, Suite::junctions, Suite::dominance, Suite::oracle})
    if (to_string(x) == s) return x;
  throw std::invalid_argument("unknown suite '" + std::string(s) + "'");
}

/// Grid sizes used by the registered checks.
struct SuiteGrids {
  std::size_t sign = 4096;
  std::size_t dominance = 2048;
  std::size_t convexity = 2048;
  std::size_t min_characterization = 512;
  std::size_t omega_deltas = 100;
  std::size_t omega_grid = 100000;
  std::size_t involution = 1000;
  std::size_t derivative = 256;
};

struct SuiteConfig {
  Tolerances tol;
  SuiteGrids grids;
};

/// Largest length exercised by the exhaustive oracles for a given q.
inline int oracle_n_max(int q) {
  if (q == 2) return 5;
  if (q == 3) return 4;
  if (q == 4) return 3;
  return q <= 16 ? 2 : 1;
}

inline CheckRecord from_scan(std::string id, int q, const ScanReport& r, Json params = Json::object()) {
  CheckRecord c;
  c.check_id = std::move(id);
  c.q = q;
  params["grid"] = r.grid_size;
  for (const auto& [k, v] : r.metrics) params[k] = v;
  c.params = std::move(params);
  c.status = r.passed() ? CheckStatus::pass : CheckStatus::fail;
  c.max_violation = r.max_violation;
  c.tolerance = r.tolerance;
  c.witness = r.witness;
  return c;
}

namespace detail {

struct Violation {
  double value = 0.0;
  std::optional<double> at;

  void note(double v, double x) {
    if (v > value || std::isnan(v)) {
      value = std::isnan(v) ? INFINITY : v;
      at = x;
    }
  }
};

inline CheckRecord make_record(std::string id, int q, const Violation& v, double tolerance, Json params = Json::object(),
                               bool extra = true) {
  CheckRecord c;
  c.check_id = std::move(id);
  c.q = q;
  c.params = std::move(params);
  c.max_violation = v.value;
  c.tolerance = tolerance;
  c.witness = v.at;
  c.status = (v.value <= tolerance && extra) ? CheckStatus::pass : CheckStatus::fail;
  return c;
}

inline CheckRecord skipped(std::string id, int q, std::string reason) {
  CheckRecord c;
  c.check_id = std::move(id);
  c.q = q;
  c.params = Json{{"reason", std::move(reason)}};
  c.status = CheckStatus::skipped;
  return c;
}

/// sup over the grid of max(0, lower(x) - upper(x)).
inline Violation dominance_violation(const BoundCurve& lower, const BoundCurve& upper, double hi, std::size_t grid) {
  Violation v;
  for (std::size_t i = 0; i < grid; ++i) {
    const double x = i + 1 == grid ? hi : hi * static_cast<double>(i) / static_cast<double>(grid - 1);
    v.note(std::max(0.0, lower(x) - upper(x)), x);
  }
  return v;
}

// --- lemmas ---------------------------------------------------------------

inline CheckRecord entropy_anchors(const QContext& ctx, const SuiteConfig& cfg) {
  Violation v;
  v.note(std::abs(entropy(ctx, 0.0)), 0.0);
  v.note(std::abs(entropy(ctx, ctx.theta()) - 1.0), ctx.theta());
  v.note(std::abs(entropy(ctx, 1.0) - std::log(ctx.qd() - 1.0) / ctx.ln_q()), 1.0);
  return make_record("entropy_anchors", ctx.q(), v, cfg.tol.identity);
}

inline CheckRecord xi_involution(const QContext& ctx, const SuiteConfig& cfg) {
  Violation v;
  const std::size_t n = cfg.grids.involution;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = ctx.theta() * static_cast<double>(i) / static_cast<double>(n - 1);
    v.note(std::abs(xi(ctx, xi(ctx, x)) - x), x);
  }
  return make_record("xi_involution", ctx.q(), v, cfg.tol.involution, Json{{"grid", n}});
}

/// phi(1/q) > 0, phi(1/2) < 0, and sign(phi'(z)) = sign(z - 1/2) by central differences.
inline CheckRecord phi_shape(const QContext& ctx, const SuiteConfig& cfg) {
  const double q = ctx.qd();
  Violation v;
  const double at_inv_q = phi(ctx, 1.0 / q);
  const double at_half = phi(ctx, 0.5);
  v.note(std::max(0.0, -at_inv_q), 1.0 / q);
  v.note(std::max(0.0, at_half), 0.5);
  bool signs_ok = at_inv_q > 0.0 && at_half < 0.0;
  const std::size_t n = cfg.grids.sign;
  const double th = ctx.theta();
  for (std::size_t i = 1; i <= n; ++i) {
    const double z = th * static_cast<double>(i) / static_cast<double>(n + 1);
    if (std::abs(z - 0.5) < 1e-4) continue;
    const double d = central_difference([&](double t) { return phi(ctx, t); }, z);
    if ((d > 0.0) != (z > 0.5)) {
      signs_ok = false;
      v.note(std::abs(d), z);
    }
  }
  return make_record("phi_shape", ctx.q(), v, 0.0, Json{{"phi_at_1_over_q", at_inv_q}, {"phi_at_half", at_half}},
                     signs_ok);
}

/// G2(1/q) > 0, G2(1/2) < 0 and sign(G2'(y)) = sign(y - 1/2) by central differences.
inline CheckRecord g2_boundary(const QContext& ctx, const SuiteConfig& cfg) {
  const double q = ctx.qd();
  Violation v;
  const double at_inv_q = chi_and_g2(ctx, 1.0 / q).g2;
  const double at_half = chi_and_g2(ctx, 0.5).g2;
  v.note(std::max(0.0, -at_inv_q), 1.0 / q);
  v.note(std::max(0.0, at_half), 0.5);
  bool signs_ok = at_inv_q > 0.0 && at_half < 0.0;
  const std::size_t n = cfg.grids.sign;
  const double th = ctx.theta();
  for (std::size_t i = 1; i <= n; ++i) {
    const double y = th * static_cast<double>(i) / static_cast<double>(n + 1);
    if (std::abs(y - 0.5) < 1e-4 || th - y < 1e-3) continue;
    const double d = central_difference([&](double t) { return chi_and_g2(ctx, t).g2; }, y);
    if ((d > 0.0) != (y > 0.5)) {
      signs_ok = false;
      v.note(std::abs(d), y);
    }
  }
  return make_record("g2_boundary", ctx.q(), v, 0.0, Json{{"g2_at_1_over_q", at_inv_q}, {"g2_at_half", at_half}},
                     signs_ok);
}

/// f1 - f2 = (1-2/q) f3^2 and the common sign law of f1 - 2/q, f2 - 2/q, f3.
inline CheckRecord f_triple_identities(const QContext& ctx, const SuiteConfig& cfg) {
  const double q = ctx.qd();
  const double j = ctx.ep_junction();
  Violation v;
  bool signs_ok = true;
  const std::size_t n = cfg.grids.dominance;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = ctx.theta() * static_cast<double>(i) / static_cast<double>(n - 1);
    const FTriple f = f_triple(ctx, d);
    v.note(std::abs((f.f1 - f.f2) - (1.0 - 2.0 / q) * f.f3 * f.f3), d);
    if (std::abs(d - j) > 1e-9) {
      const double expected = d > j ? 1.0 : -1.0;
      if ((f.f1 - 2.0 / q) * expected <= 0.0 || (f.f2 - 2.0 / q) * expected <= 0.0 || f.f3 * expected <= 0.0)
        signs_ok = false;
    }
  }
  return make_record("f_triple_identities", ctx.q(), v, cfg.tol.identity, Json{{"grid", n}}, signs_ok);
}

inline CheckRecord root_check(RootKind kind, const QContext& ctx) {
  const RootResult r = locate_root(kind, ctx);
  Interval expect = proven_root_interval(kind, ctx);
  std::string id = "root_" + std::string(to_string(kind));
  Json params{{"root", r.root}, {"native_root", r.native_root}};
  Violation v;
  bool ok;
  if (kind == RootKind::b) {
    if (ctx.q() == 2) {
      ok = r.root == 1.0;
      expect = {1.0, 1.0};
    } else if (ctx.q() == 3) {
      expect = {0.90, 0.95};
      ok = r.root > expect.lo && r.root < expect.hi;
    } else {
      ok = r.root > 0.0 && r.root < 1.0;
    }
  } else {
    ok = r.root > expect.lo && r.root < expect.hi;
  }
  params["bracket_lo"] = expect.lo;
  params["bracket_hi"] = expect.hi;
  if (!ok) v.note(std::max(expect.lo - r.root, r.root - expect.hi), r.root);
  return make_record(id, ctx.q(), v, 0.0, std::move(params), ok);
}

inline std::vector<CheckRecord> lemma_checks(const QContext& ctx, const SuiteConfig& cfg) {
  const int q = ctx.q();
  const bool q3 = q > 2;
  const auto sk = [&](const char* id) { return skipped(id, q, "requires q > 2"); };
  const auto& g = cfg.grids;
  const auto& tol = cfg.tol;
  std::vector<CheckRecord> out;

  out.push_back(entropy_anchors(ctx, cfg));
  out.push_back(xi_involution(ctx, cfg));
  out.push_back(q3 ? phi_shape(ctx, cfg) : sk("phi_shape"));
  out.push_back(q3 ? g2_boundary(ctx, cfg) : sk("g2_boundary"));
  out.push_back(q3 ? f_triple_identities(ctx, cfg) : sk("f_triple_identities"));
  out.push_back(from_scan("derivative_crosscheck", q, derivative_crosscheck(ctx, g.derivative, tol)));

  out.push_back(from_scan("sign_g_prime", q, sign_scan(SignFunction::g_prime, ctx, g.sign)));
  for (auto [fn, id] : {std::pair{SignFunction::G, "sign_G"}, std::pair{SignFunction::G2, "sign_G2"},
                        std::pair{SignFunction::phi, "sign_phi"}, std::pair{SignFunction::h_prime, "sign_h_prime"},
                        std::pair{SignFunction::hA_prime, "sign_hA_prime"}})
    out.push_back(q3 ? from_scan(id, q, sign_scan(fn, ctx, g.sign)) : sk(id));

  out.push_back(root_check(RootKind::b, ctx));
  out.push_back(q3 ? root_check(RootKind::delta_E, ctx) : sk("root_delta_E"));
  out.push_back(q3 ? root_check(RootKind::delta_MRRW, ctx) : sk("root_delta_MRRW"));

  const double th = ctx.theta();
  if (q3) {
    const double de = locate_root(RootKind::delta_E, ctx).root;
    out.push_back(from_scan("convexity_elias", q,
                            convexity_scan(BoundCurve(BoundName::elias, ctx), {0.0, th},
                                           {Shape::convex_then_concave, de}, g.convexity, tol),
                            Json{{"split", de}}));
    const double dm = locate_root(RootKind::delta_MRRW, ctx).root;
    out.push_back(from_scan("convexity_mrrw1", q,
                            convexity_scan(BoundCurve(BoundName::mrrw1, ctx), {0.0, th},
                                           {Shape::concave_then_convex, dm}, g.convexity, tol),
                            Json{{"split", dm}}));
    out.push_back(from_scan("convexity_ep", q,
                            convexity_scan(BoundCurve(BoundName::ep, ctx), {0.0, th}, {Shape::convex}, g.convexity, tol)));
  } else {
    out.push_back(sk("convexity_elias"));
    out.push_back(from_scan("convexity_mrrw1", q,
                            convexity_scan(BoundCurve(BoundName::mrrw1, ctx), {0.0, th}, {Shape::convex}, g.convexity, tol)));
    out.push_back(sk("convexity_ep"));
  }
  out.push_back(from_scan("convexity_hs", q,
                          convexity_scan(BoundCurve(BoundName::hs, ctx), {0.0, 1.0}, {Shape::convex}, g.convexity, tol)));
  out.push_back(from_scan("convexity_beta", q,
                          convexity_scan(BoundCurve(BoundName::beta, ctx), {0.0, 1.0}, {Shape::concave}, g.convexity, tol)));

  out.push_back(q3 ? from_scan("monotone_ratio_elias", q, monotone_ratio_check(ctx, g.dominance, tol))
                   : sk("monotone_ratio_elias"));

  if (q3) {
    Violation v;
    const double step = (1.0 - 0.0) / static_cast<double>(g.omega_grid);
    for (std::size_t i = 0; i < g.omega_deltas; ++i) {
      const double d = th * static_cast<double>(i) / static_cast<double>(g.omega_deltas - 1);
      v.note(std::abs(omega_max_scan(ctx, d, g.omega_grid) - omega_max(ctx, d)), d);
    }
    out.push_back(make_record("omega_max_scan", q, v, step,
                              Json{{"deltas", g.omega_deltas}, {"grid", g.omega_grid}}));
  } else {
    out.push_back(sk("omega_max_scan"));
  }

  out.push_back(from_scan("min_characterization_hs", q,
                          verify_min_characterization(MinCharacterization::hs, ctx, g.min_characterization, tol)));
  out.push_back(q3 ? from_scan("min_characterization_ep", q,
                               verify_min_characterization(MinCharacterization::ep, ctx, g.min_characterization, tol))
                   : sk("min_characterization_ep"));
  out.push_back(q3 ? from_scan("min_characterization_aaltonen", q,
                               verify_min_characterization(MinCharacterization::aaltonen, ctx, g.min_characterization,
                                                           tol))
                   : sk("min_characterization_aaltonen"));
  out.push_back(q3 ? from_scan("transform_idempotence_ep", q, transform_idempotence(ctx, g.min_characterization, tol))
                   : sk("transform_idempotence_ep"));
  return out;
}

// --- junctions ------------------------------------------------------------

inline std::vector<CheckRecord> junction_checks(const QContext& ctx, const SuiteConfig& cfg) {
  const int q = ctx.q();
  std::vector<CheckRecord> out;
  for (BoundName n : {BoundName::hs, BoundName::beta, BoundName::ep, BoundName::omega_max, BoundName::aaltonen}) {
    const std::string id = "junction_" + std::string(to_string(n));
    if (q == 2) {
      out.push_back(skipped(id, q, "requires q > 2"));
      continue;
    }
    const BoundCurve c(n, ctx);
    const double p = c.junctions().front();
    out.push_back(from_scan(id, q, smoothness_check(c, p, cfg.tol), Json{{"point", p}}));
  }
  if (q == 2) {
    out.push_back(skipped("endpoint_slope_ep", q, "requires q > 2"));
  } else {
    // One-sided slope at theta equals -(q-1) H_q(1)/(q-2), which is nonzero.
    const BoundCurve ep(BoundName::ep, ctx);
    const double th = ctx.theta();
    const double expected = -(ctx.qd() - 1.0) * detail::log_q_of_q_minus_one(ctx) / (ctx.qd() - 2.0);
    const double slope = left_slope(ep, th, 1e-5);
    Violation v;
    v.note(std::abs(slope - expected), th);
    out.push_back(make_record("endpoint_slope_ep", q, v, cfg.tol.junction_slope,
                              Json{{"slope", slope}, {"expected", expected}}, expected != 0.0));
  }
  return out;
}

// --- dominance ------------------------------------------------------------

inline std::vector<CheckRecord> dominance_checks(const QContext& ctx, const SuiteConfig& cfg) {
  const int q = ctx.q();
  const double th = ctx.theta();
  const std::size_t grid = cfg.grids.dominance;
  std::vector<CheckRecord> out;
  struct Pair {
    BoundName lower, upper;
  };
  for (Pair p : {Pair{BoundName::ep, BoundName::elias}, Pair{BoundName::ep, BoundName::plotkin},
                 Pair{BoundName::ep, BoundName::hp}, Pair{BoundName::hp, BoundName::hs},
                 Pair{BoundName::hs, BoundName::hamming}, Pair{BoundName::hs, BoundName::singleton},
                 Pair{BoundName::aaltonen, BoundName::mrrw1}}) {
    const std::string id = "dominance_" + std::string(to_string(p.lower)) + "_" + std::string(to_string(p.upper));
    if (q == 2 && (requires_q_above_two(p.lower) || requires_q_above_two(p.upper))) {
      out.push_back(skipped(id, q, "requires q > 2"));
      continue;
    }
    const double hi = common_domain({p.lower, p.upper}, ctx).hi;
    const Violation v = dominance_violation(BoundCurve(p.lower, ctx), BoundCurve(p.upper, ctx), hi, grid);
    out.push_back(make_record(id, q, v, cfg.tol.dominance_slack, Json{{"grid", grid}, {"interval_hi", hi}}));
  }
  if (q == 2) {
    out.push_back(skipped("composition_ep_hs_omega", q, "requires q > 2"));
  } else {
    Violation v;
    for (std::size_t i = 0; i < grid; ++i) {
      const double d = i + 1 == grid ? th : th * static_cast<double>(i) / static_cast<double>(grid - 1);
      v.note(std::abs(hybrid_bound(BoundName::ep, ctx, d) - hybrid_bound(BoundName::hs, ctx, omega_max(ctx, d))), d);
    }
    out.push_back(make_record("composition_ep_hs_omega", q, v, cfg.tol.composition, Json{{"grid", grid}}));
  }
  {
    Violation v;
    for (std::size_t i = 0; i < grid; ++i) {
      const double x = i + 1 == grid ? 1.0 : static_cast<double>(i) / static_cast<double>(grid - 1);
      v.note(std::abs(hybrid_bound(BoundName::hs, ctx, x) - (1.0 - anticode_rate(ctx, x))), x);
    }
    out.push_back(make_record("hs_anticode_complement", q, v, cfg.tol.identity, Json{{"grid", grid}}));
  }
  return out;
}

// --- oracle ---------------------------------------------------------------

inline std::vector<CheckRecord> oracle_checks(const QContext& ctx, const SuiteConfig&) {
  const int q = ctx.q();
  const int n_max = oracle_n_max(q);
  std::vector<CheckRecord> out;

  Violation eq, diam, delsarte, be, singleton, mono;
  Json mismatches = Json::array();
  std::size_t triples = 0;
  for (int n = 1; n <= n_max; ++n)
    for (int d = 0; d <= n; ++d) {
      ++triples;
      const BigInt formula = ak_size(q, n, d);
      const OracleResult anti = oracle_max_anticode(q, n, d);
      if (formula != BigInt(anti.size)) {
        eq.note(1.0, n * 100.0 + d);
        mismatches.push_back(Json{{"n", n}, {"d", d}, {"formula", formula.str()}, {"oracle", anti.size}});
      }
      std::vector<Word> members;
      for (auto c : ak_members(q, n, d)) members.push_back(decode_word(q, n, c));
      if (BigInt(members.size()) != formula) diam.note(1.0, n * 100.0 + d);
      if (max_pairwise_distance(members) > d) diam.note(max_pairwise_distance(members) - d, n * 100.0 + d);
      if (d >= 1 && ak_size(q, n, d) < ak_size(q, n, d - 1)) mono.note(1.0, n * 100.0 + d);
      if (n >= 2 && d <= n - 1 && ak_size(q, n, d) < ak_size(q, n - 1, d)) mono.note(1.0, n * 100.0 + d);

      const OracleResult code = oracle_max_code(q, n, d);
      if (d >= 1 && BigInt(code.size) > big_pow(q, n - d + 1)) singleton.note(1.0, n * 100.0 + d);
      if (d >= 1) {
        const DelsarteReport rep = delsarte_check(q, n, d);
        if (!rep.delsarte_pass) delsarte.note(1.0, n * 100.0 + d);
        for (const auto& inst : rep.bassalygo_elias)
          if (!inst.pass) be.note(1.0, n * 100.0 + d);
      }
    }
  const Json base{{"q", q}, {"n_max", n_max}, {"triples", triples}};
  Json eq_params = base;
  eq_params["mismatches"] = mismatches;
  out.push_back(make_record("formula_oracle_equality", q, eq, 0.0, eq_params));
  out.push_back(make_record("anticode_diameter_witness", q, diam, 0.0, base));
  out.push_back(make_record("ak_size_monotonicity", q, mono, 0.0, base));
  out.push_back(make_record("singleton_sanity", q, singleton, 0.0, base));
  out.push_back(make_record("delsarte_instances", q, delsarte, 0.0, base));
  out.push_back(make_record("bassalygo_elias_instances", q, be, 0.0, base));

  const std::vector<int> ns{100, 1000};
  if (q > 100) {
    out.push_back(skipped("rate_convergence", q, "requires n >= q"));
  } else {
    Violation v;
    Json gaps = Json::array();
    for (double delta : {0.3, 0.7}) {
      const std::vector<double> r = rate_convergence(ctx, delta, ns);
      const double beta = anticode_rate(ctx, delta);
      const double g100 = std::abs(r[0] - beta), g1000 = std::abs(r[1] - beta);
      gaps.push_back(Json{{"delta", delta}, {"gap_100", g100}, {"gap_1000", g1000}});
      v.note(std::max(0.0, g1000 - g100), delta);
      v.note(std::max(0.0, g1000 - 0.02), delta);
    }
    out.push_back(make_record("rate_convergence", q, v, 0.0, Json{{"n", ns}, {"gaps", gaps}}));
  }
  return out;
}

}  // namespace detail

/// Runs the selected suite for every q; check failures are data, never exceptions.
inline VerificationReport run_verification(const std::vector<int>& q_list, Suite suite, const SuiteConfig& cfg = {}) {
  if (q_list.empty()) throw std::invalid_argument("verify: q list must be nonempty");
  VerificationReport rep;
  rep.suite = std::string(to_string(suite));
  rep.q_list = q_list;
  for (int q : q_list) {
    const QContext ctx(q);
    const auto add = [&](std::vector<CheckRecord> v) {
      for (auto& c : v) rep.checks.push_back(std::move(c));
    };
    if (suite == Suite::all || suite == Suite::lemmas) add(detail::lemma_checks(ctx, cfg));
    if (suite == Suite::all || suite == Suite::junctions) add(detail::junction_checks(ctx, cfg));
    if (suite == Suite::all || suite == Suite::dominance) add(detail::dominance_checks(ctx, cfg));
    if (suite == Suite::all || suite == Suite::oracle) add(detail::oracle_checks(ctx, cfg));
  }
  return rep;
}

inline Json finite_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

inline Json to_json(const VerificationReport& rep) {
  Json j;
  j["tool_version"] = rep.tool_version;
  j["suite"] = rep.suite;
  j["q_list"] = rep.q_list;
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    Json e;
    e["check_id"] = c.check_id;
    e["q"] = c.q;
    e["params"] = c.params;
    e["status"] = std::string(to_string(c.status));
    e["max_violation"] = finite_or_null(c.max_violation);
    e["tolerance"] = finite_or_null(c.tolerance);
    e["witness"] = c.witness ? finite_or_null(*c.witness) : Json(nullptr);
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  j["summary"] = Json{{"pass", rep.count(CheckStatus::pass)},
                      {"fail", rep.count(CheckStatus::fail)},
                      {"skipped", rep.count(CheckStatus::skipped)}};
  return j;
}

}  // namespace ratebound
