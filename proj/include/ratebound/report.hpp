#pragma once

// Tabulation of bound curves and figure data, plus the oracle table, with a
// fixed locale-independent CSV encoding: '#' comment prologue, a header line,
// then rows; numbers in shortest-form with 12 significant digits; LF newlines.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>
#include <vector>

#include "ratebound/bounds.hpp"
#include "ratebound/combinatorics.hpp"
#include "ratebound/qary.hpp"

namespace ratebound {

inline constexpr const char* kToolVersion = "ratebound 0.1.0";

/// 12 significant digits, C-locale, no trailing zeros.
inline std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  if (res.ec != std::errc{}) throw std::runtime_error("format_number: conversion failed");
  return std::string(buf, res.ptr);
}

struct CurveTable {
  int q = 0;
  std::vector<std::string> header_comments;
  std::string x_column = "x";
  std::vector<std::string> columns;
  std::vector<double> xs;
  std::vector<std::vector<double>> rows;  // one value per column
};

inline void write_csv(const CurveTable& t, std::ostream& out) {
  for (const auto& c : t.header_comments) out << "# " << c << '\n';
  out << t.x_column;
  for (const auto& c : t.columns) out << ',' << c;
  out << '\n';
  for (std::size_t i = 0; i < t.xs.size(); ++i) {
    out << format_number(t.xs[i]);
    for (double v : t.rows[i]) out << ',' << format_number(v);
    out << '\n';
  }
}

inline std::string to_csv(const CurveTable& t) {
  std::ostringstream os;
  write_csv(t, os);
  return os.str();
}

/// Uniform grid of `points` values on [lo, hi]; the last point is hi exactly.
inline std::vector<double> uniform_grid(double lo, double hi, std::size_t points) {
  std::vector<double> xs(points);
  for (std::size_t i = 0; i < points; ++i)
    xs[i] = i + 1 == points ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
  return xs;
}

/// Common domain of a set of bounds for the given q.
inline Interval common_domain(const std::vector<BoundName>& names, const QContext& ctx) {
  Interval dom{0.0, 1.0};
  for (BoundName n : names) {
    const Interval d = bound_domain(n, ctx);
    dom.lo = std::max(dom.lo, d.lo);
    dom.hi = std::min(dom.hi, d.hi);
  }
  return dom;
}

/// Rows of every requested bound at `points` uniform abscissae on [lo, hi].
inline CurveTable curve_table(int q, const std::vector<BoundName>& names, double lo, double hi, std::size_t points) {
  const QContext ctx(q);
  if (names.empty()) throw std::invalid_argument("curves: at least one bound name is required");
  if (points < 2) throw std::invalid_argument("curves: need at least 2 points");
  std::vector<BoundCurve> curves;
  for (BoundName n : names) curves.emplace_back(n, ctx);
  const Interval dom = common_domain(names, ctx);
  if (!(lo < hi) || !dom.contains(lo) || !dom.contains(hi))
    throw DomainError("curves: need lo < hi inside the common domain [" + format_number(dom.lo) + ", " +
                      format_number(dom.hi) + "]");
  CurveTable t;
  t.q = q;
  for (BoundName n : names) t.columns.emplace_back(to_string(n));
  t.xs = uniform_grid(lo, hi, points);
  for (double x : t.xs) {
    std::vector<double> row;
    row.reserve(curves.size());
    for (const auto& c : curves) {
      const double v = c(x);
      if (!std::isfinite(v)) throw DomainError("curves: non-finite value of " + std::string(to_string(c.name())));
      row.push_back(v);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

/// Elias bound against the Elias-Plotkin hybrid for q = 16 on [0, 15/16].
inline CurveTable figure1_table() {
  CurveTable t = curve_table(16, {BoundName::elias, BoundName::ep}, 0.0, 15.0 / 16.0, 1024);
  t.header_comments = {kToolVersion, "figure fig1: elias and ep, q = 16"};
  return t;
}

/// 1 - e^{2/3}/q, where the first term of G''' changes sign.
inline double figure2_marked_point(int q) { return 1.0 - std::exp(2.0 / 3.0) / static_cast<double>(q); }

/// G(y) and G'''(y) for q = 8 on [1/8, 7/8], 1024 uniform points plus the
/// marked point 1 - e^{2/3}/8 (flagged in the `marked` column).
inline CurveTable figure2_table() {
  const QContext ctx(8);
  CurveTable t;
  t.q = 8;
  t.header_comments = {kToolVersion, "figure fig2: G and G''' on [1/q, theta], q = 8"};
  t.x_column = "y";
  t.columns = {"G", "G3", "marked"};
  std::vector<double> ys = uniform_grid(1.0 / 8.0, 7.0 / 8.0, 1024);
  const double mark = figure2_marked_point(8);
  const auto pos = std::lower_bound(ys.begin(), ys.end(), mark);
  if (pos == ys.end() || *pos != mark) ys.insert(pos, mark);
  for (double y : ys) {
    const GValues g = big_g(ctx, y);
    t.xs.push_back(y);
    t.rows.push_back({g.value, g.d3, y == mark ? 1.0 : 0.0});
  }
  return t;
}

// ---------------------------------------------------------------------------
// Oracle table

struct OracleRow {
  int q;
  int n;
  int d;
  BigInt ak_size;
  std::size_t oracle_anticode;
  std::size_t oracle_code;
  BigInt delsarte_rhs_floor;  // floor(q^n / A*_q(n,d-1)); q^n when d = 0
  bool match;
};

inline std::vector<OracleRow> oracle_table(int q, int n_max) {
  if (q < 2) throw DomainError("oracle: q must be >= 2");
  if (n_max < 0) throw DomainError("oracle: n_max must be >= 0");
  const std::uint64_t total = space_size(q, n_max);
  if (total > vertex_cap()) throw CapExceeded(total, vertex_cap());
  std::vector<OracleRow> rows;
  for (int n = 1; n <= n_max; ++n)
    for (int d = 0; d <= n; ++d) {
      const BigInt formula = ak_size(q, n, d);
      const std::size_t anti = oracle_max_anticode(q, n, d).size;
      const std::size_t code = oracle_max_code(q, n, d).size;
      const BigInt space = big_pow(q, n);
      const BigInt rhs = d == 0 ? space : BigInt(space / ak_size(q, n, d - 1));
      rows.push_back({q, n, d, formula, anti, code, rhs, formula == BigInt(anti)});
    }
  return rows;
}

inline void write_oracle_csv(const std::vector<OracleRow>& rows, const std::vector<std::string>& comments,
                             std::ostream& out) {
  for (const auto& c : comments) out << "# " << c << '\n';
  out << "q,n,d,ak_size,oracle_anticode,oracle_code,delsarte_rhs_floor,match\n";
  for (const auto& r : rows)
    out << r.q << ',' << r.n << ',' << r.d << ',' << r.ak_size << ',' << r.oracle_anticode << ',' << r.oracle_code
        << ',' << r.delsarte_rhs_floor << ',' << (r.match ? "true" : "false") << '\n';
}

}  // namespace ratebound
