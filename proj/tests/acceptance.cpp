// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ratebound/bounds.hpp"
#include "ratebound/combinatorics.hpp"
#include "ratebound/report.hpp"
#include "ratebound/suite.hpp"
#include "ratebound/variational.hpp"

using namespace ratebound;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

const std::vector<int> kJunctionQs{3, 4, 8, 16, 64};
const std::vector<int> kScanQs{3, 8, 16};

std::string fmt(double v) { return format_number(v); }

// Oracle-feasible triples: q in {2,3} with n <= 4, and q = 4 with n <= 3.
std::vector<std::pair<int, int>> desk_lengths() {
  std::vector<std::pair<int, int>> out;
  for (int q : {2, 3})
    for (int n = 1; n <= 4; ++n) out.push_back({q, n});
  for (int n = 1; n <= 3; ++n) out.push_back({4, n});
  return out;
}

Outcome criterion1() {
  Outcome o;
  int triples = 0;
  for (auto [q, n] : desk_lengths())
    for (int d = 0; d <= n; ++d) {
      ++triples;
      const std::size_t oracle = oracle_max_anticode(q, n, d).size;
      if (BigInt(oracle) != ak_size(q, n, d)) {
        o.pass = false;
        o.detail += " mismatch(q=" + std::to_string(q) + ",n=" + std::to_string(n) + ",d=" + std::to_string(d) + ")";
      }
    }
  o.detail = std::to_string(triples) + " triples" + o.detail;
  return o;
}

Outcome criterion2() {
  Outcome o;
  int triples = 0, be = 0;
  for (auto [q, n] : desk_lengths())
    for (int d = 1; d <= n; ++d) {
      ++triples;
      const DelsarteReport r = delsarte_check(q, n, d);
      be += static_cast<int>(r.bassalygo_elias.size());
      if (!r.pass) {
        o.pass = false;
        o.detail += " fail(q=" + std::to_string(q) + ",n=" + std::to_string(n) + ",d=" + std::to_string(d) + ")";
      }
    }
  o.detail = std::to_string(triples) + " Delsarte, " + std::to_string(be) + " Bassalygo-Elias instances" + o.detail;
  return o;
}

Outcome criterion3() {
  Outcome o;
  const Tolerances tol;  // value gap 1e-10, slope gap 1e-4
  double worst_value = 0.0, worst_slope = 0.0;
  for (int q : kJunctionQs) {
    const QContext ctx(q);
    const std::pair<BoundName, double> points[] = {{BoundName::hs, 2.0 / q},
                                                   {BoundName::ep, ctx.ep_junction()},
                                                   {BoundName::omega_max, ctx.ep_junction()},
                                                   {BoundName::aaltonen, ctx.aaltonen_junction()}};
    for (auto [name, p] : points) {
      const ScanReport r = smoothness_check(BoundCurve(name, ctx), p, tol);
      for (const auto& [k, v] : r.metrics) {
        if (k == "value_gap") worst_value = std::max(worst_value, v);
        if (k == "slope_gap") worst_slope = std::max(worst_slope, v);
      }
      if (!r.passed()) {
        o.pass = false;
        o.detail += " fail(" + std::string(to_string(name)) + ",q=" + std::to_string(q) + ")";
      }
    }
  }
  o.pass = o.pass && worst_value <= 1e-10 && worst_slope <= 1e-4;
  o.detail = "max value gap " + fmt(worst_value) + ", max slope gap " + fmt(worst_slope) + o.detail;
  return o;
}

Outcome criterion4() {
  Outcome o;
  const std::size_t grid = 2048;
  const double slack = 1e-12;
  const std::pair<BoundName, BoundName> chain[] = {
      {BoundName::ep, BoundName::elias},    {BoundName::ep, BoundName::plotkin},   {BoundName::ep, BoundName::hp},
      {BoundName::hp, BoundName::hs},       {BoundName::hs, BoundName::hamming},   {BoundName::hs, BoundName::singleton},
      {BoundName::aaltonen, BoundName::mrrw1}};
  double worst = 0.0;
  for (int q : kJunctionQs) {
    const QContext ctx(q);
    for (auto [lo, up] : chain) {
      const double hi = common_domain({lo, up}, ctx).hi;
      const auto v = detail::dominance_violation(BoundCurve(lo, ctx), BoundCurve(up, ctx), hi, grid);
      worst = std::max(worst, v.value);
      if (v.value > slack) {
        o.pass = false;
        o.detail += " " + std::string(to_string(lo)) + ">" + std::string(to_string(up)) + "(q=" + std::to_string(q) +
                    ",x=" + fmt(*v.at) + ")";
      }
    }
  }
  o.detail = "max forbidden excess " + fmt(worst) + o.detail;
  return o;
}

Outcome criterion5() {
  Outcome o;
  Tolerances tol;
  tol.transform_agreement = 1e-6;
  tol.argument_agreement = 1e-4;
  double worst_value = 0.0, worst_arg = 0.0;
  for (int q : kJunctionQs) {
    const QContext ctx(q);
    for (auto kind : {MinCharacterization::hs, MinCharacterization::ep, MinCharacterization::aaltonen}) {
      const ScanReport r = verify_min_characterization(kind, ctx, 512, tol);
      worst_value = std::max(worst_value, r.max_violation);
      for (const auto& [k, v] : r.metrics)
        if (k == "max_argument_deviation") worst_arg = std::max(worst_arg, v);
      if (!r.passed()) {
        o.pass = false;
        o.detail += " fail(" + std::string(to_string(kind)) + ",q=" + std::to_string(q) + ")";
      }
    }
  }
  if (!verify_min_characterization(MinCharacterization::hs, QContext(2), 512, tol).passed()) {
    o.pass = false;
    o.detail += " fail(hs,q=2)";
  }
  o.detail = "max value gap " + fmt(worst_value) + ", max argument deviation " + fmt(worst_arg) + o.detail;
  return o;
}

Outcome criterion6() {
  Outcome o;
  const std::size_t grid = 100000;
  const double step = 1e-5;
  double worst = 0.0;
  for (int q : kScanQs) {
    const QContext ctx(q);
    for (int i = 0; i < 100; ++i) {
      const double d = ctx.theta() * i / 99.0;
      const double gap = std::abs(omega_max_scan(ctx, d, grid) - omega_max(ctx, d));
      worst = std::max(worst, gap);
      if (!(gap <= step)) {
        o.pass = false;
        o.detail += " fail(q=" + std::to_string(q) + ",delta=" + fmt(d) + ")";
      }
    }
  }
  o.detail = "300 deltas, max gap " + fmt(worst) + o.detail;
  return o;
}

Outcome criterion7() {
  Outcome o;
  double worst = 0.0;
  for (int q : kScanQs) {
    const QContext ctx(q);
    for (SignFunction f : {SignFunction::g_prime, SignFunction::G, SignFunction::phi, SignFunction::G2}) {
      const ScanReport r = sign_scan(f, ctx, 4096);
      if (r.sign_changes.size() == 1) worst = std::max(worst, r.max_violation / r.tolerance);
      if (!r.passed()) {
        o.pass = false;
        o.detail += " fail(" + std::string(to_string(f)) + ",q=" + std::to_string(q) + ")";
      }
    }
  }
  o.detail = "worst crossing distance " + fmt(worst) + " grid steps" + o.detail;
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (int q = 3; q <= 64; ++q) {
    const QContext ctx(q);
    const double dq = q;
    const double de = locate_root(RootKind::delta_E, ctx).root;
    const double dm = locate_root(RootKind::delta_MRRW, ctx).root;
    const double e_lo = (2 * dq - 3) / (dq * (dq - 1)), e_hi = 0.75 * (dq - 4.0 / 3.0) / (dq - 1);
    const double m_lo = 0.5 - std::sqrt(dq - 1) / dq, m_hi = (1 - 2 / dq) * (1 - 2 / dq);
    if (!(de > e_lo && de < e_hi)) {
      o.pass = false;
      o.detail += " delta_E(q=" + std::to_string(q) + ")=" + fmt(de);
    }
    if (!(dm > m_lo && dm < m_hi)) {
      o.pass = false;
      o.detail += " delta_MRRW(q=" + std::to_string(q) + ")=" + fmt(dm);
    }
  }
  const double b2 = locate_root(RootKind::b, QContext(2)).root;
  const double b3 = locate_root(RootKind::b, QContext(3)).root;
  if (b2 != 1.0 || !(b3 > 0.90 && b3 < 0.95)) o.pass = false;
  o.detail = "q=3..64 bracketed; b(2)=" + fmt(b2) + ", b(3)=" + fmt(b3) + o.detail;
  return o;
}

Outcome criterion9() {
  Outcome o;
  Tolerances tol;
  tol.convexity_slack = 1e-8;
  const auto run = [&](const ScanReport& r, const std::string& label) {
    if (!r.passed()) {
      o.pass = false;
      o.detail += " fail(" + label + ")";
    }
  };
  for (int q : {2, 3, 4, 8, 16, 64}) {
    const QContext ctx(q);
    const double th = ctx.theta();
    const std::string qs = ",q=" + std::to_string(q);
    run(convexity_scan(BoundCurve(BoundName::hs, ctx), {0.0, 1.0}, {Shape::convex}, 2048, tol), "hs" + qs);
    run(convexity_scan(BoundCurve(BoundName::beta, ctx), {0.0, 1.0}, {Shape::concave}, 2048, tol), "beta" + qs);
    if (q == 2) {
      run(convexity_scan(BoundCurve(BoundName::mrrw1, ctx), {0.0, th}, {Shape::convex}, 2048, tol), "mrrw1" + qs);
      continue;
    }
    run(convexity_scan(BoundCurve(BoundName::ep, ctx), {0.0, th}, {Shape::convex}, 2048, tol), "ep" + qs);
    run(convexity_scan(BoundCurve(BoundName::mrrw1, ctx), {0.0, th},
                       {Shape::concave_then_convex, locate_root(RootKind::delta_MRRW, ctx).root}, 2048, tol),
        "mrrw1" + qs);
    run(convexity_scan(BoundCurve(BoundName::elias, ctx), {0.0, th},
                       {Shape::convex_then_concave, locate_root(RootKind::delta_E, ctx).root}, 2048, tol),
        "elias" + qs);
  }
  o.detail = "q in {2,3,4,8,16,64}" + o.detail;
  return o;
}

// Parses the data rows of a CSV produced by write_csv.
std::vector<std::vector<double>> parse_rows(const std::string& csv) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(csv);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<double> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(std::move(row));
  }
  return rows;
}

Outcome criterion10() {
  Outcome o;
  const double j = 29.0 / 240.0;
  double agree = 0.0, min_sep = INFINITY;
  for (const auto& r : parse_rows(to_csv(figure1_table()))) {
    if (r[0] <= j) agree = std::max(agree, std::abs(r[1] - r[2]));
    if (r[0] > j + 0.01 && r[0] < 15.0 / 16.0) min_sep = std::min(min_sep, r[1] - r[2]);
  }
  if (!(agree <= 1e-10 && min_sep > 0.0)) o.pass = false;
  const auto rows2 = parse_rows(to_csv(figure2_table()));
  const auto& first = rows2.front();
  const auto& last = rows2.back();
  const bool ends = first[0] == 0.125 && last[0] == 0.875;
  if (!(ends && std::abs(first[1]) <= 1e-10 && std::abs(last[1]) <= 1e-10 && last[2] > 0.0)) o.pass = false;
  o.detail = "fig1 agreement " + fmt(agree) + ", min separation " + fmt(min_sep) + "; fig2 G(1/8)=" + fmt(first[1]) +
             ", G(7/8)=" + fmt(last[1]) + ", G3(7/8)=" + fmt(last[2]);
  return o;
}

Outcome criterion11() {
  Outcome o;
  const QContext ctx(3);
  for (double delta : {0.3, 0.7}) {
    const auto r = rate_convergence(ctx, delta, {100, 1000});
    const double beta = anticode_rate(ctx, delta);
    const double g100 = std::abs(r[0] - beta), g1000 = std::abs(r[1] - beta);
    if (!(g1000 < g100 && g1000 < 0.02)) o.pass = false;
    o.detail += (o.detail.empty() ? "" : "; ") + std::string("delta=") + fmt(delta) + " gap100=" + fmt(g100) +
                " gap1000=" + fmt(g1000);
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"anticode formula equals exhaustive oracle", criterion1},
      {"Delsarte and Bassalygo-Elias instances", criterion2},
      {"junction value and slope continuity", criterion3},
      {"dominance chain", criterion4},
      {"closed forms match numeric transforms", criterion5},
      {"omega_max scan matches closed form", criterion6},
      {"sign laws", criterion7},
      {"root brackets", criterion8},
      {"convexity verdicts", criterion9},
      {"figure data", criterion10},
      {"anticode rate convergence", criterion11},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::printf("%s criterion %zu: %s (%s) [%.2fs]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str(), secs);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
