// ratebound: tabulate rate bounds, emit figure data, run the verification
// suites and print exhaustive oracle tables.
//
// Exit codes: 0 success / all checks pass, 1 a check failed, 2 usage or
// domain error, 3 I/O error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ratebound/bounds.hpp"
#include "ratebound/combinatorics.hpp"
#include "ratebound/report.hpp"
#include "ratebound/suite.hpp"

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string joined_command_line(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    if (i) s += ' ';
    s += argv[i];
  }
  return s;
}

// Writes `text` to `path`, or stdout when path is empty or "-".
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw IoError("failed writing to stdout");
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << text;
  f.close();
  if (!f) throw IoError("failed writing '" + path + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Asymptotic rate bounds for q-ary codes"};
  app.set_version_flag("--version", ratebound::kToolVersion);
  app.require_subcommand(1);
  const std::string cmdline = joined_command_line(argc, argv);

  // curves
  auto* curves = app.add_subcommand("curves", "Tabulate bounds on a uniform grid");
  int c_q = 0;
  std::vector<std::string> c_names;
  std::optional<double> c_lo, c_hi;
  std::size_t c_points = 1024;
  std::string c_out;
  curves->add_option("--q", c_q, "Alphabet size")->required();
  curves->add_option("--names", c_names, "Comma-separated bound names")->required()->delimiter(',');
  curves->add_option("--lo", c_lo, "Left end (default: domain start)");
  curves->add_option("--hi", c_hi, "Right end (default: end of common domain)");
  curves->add_option("--points", c_points, "Number of rows")->capture_default_str();
  curves->add_option("--out", c_out, "Output file (default stdout)");

  // figure
  auto* figure = app.add_subcommand("figure", "Emit figure data");
  std::string f_which, f_out;
  figure->add_option("which", f_which, "fig1 or fig2")->required()->check(CLI::IsMember({"fig1", "fig2"}));
  figure->add_option("--out", f_out, "Output file (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  std::vector<int> v_q;
  std::string v_suite = "all", v_out;
  ratebound::SuiteConfig cfg;
  verify->add_option("--q", v_q, "Comma-separated alphabet sizes")->required()->delimiter(',');
  verify->add_option("--suite", v_suite, "all, lemmas, junctions, dominance or oracle")
      ->check(CLI::IsMember({"all", "lemmas", "junctions", "dominance", "oracle"}))
      ->capture_default_str();
  verify->add_option("--out", v_out, "JSON report file (default stdout)");
  verify->add_option("--tol-transform", cfg.tol.transform_agreement)->capture_default_str();
  verify->add_option("--tol-argument", cfg.tol.argument_agreement)->capture_default_str();
  verify->add_option("--tol-junction-value", cfg.tol.junction_value)->capture_default_str();
  verify->add_option("--tol-junction-slope", cfg.tol.junction_slope)->capture_default_str();
  verify->add_option("--tol-convexity", cfg.tol.convexity_slack)->capture_default_str();
  verify->add_option("--tol-dominance", cfg.tol.dominance_slack)->capture_default_str();
  verify->add_option("--sign-grid", cfg.grids.sign)->capture_default_str();
  verify->add_option("--dominance-grid", cfg.grids.dominance)->capture_default_str();

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Exhaustive anticode/code table");
  int o_q = 0, o_n = 0;
  std::string o_out;
  oracle->add_option("--q", o_q, "Alphabet size")->required();
  oracle->add_option("--n-max", o_n, "Largest length")->required();
  oracle->add_option("--out", o_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*curves) {
      std::vector<ratebound::BoundName> names;
      for (const auto& n : c_names) names.push_back(ratebound::parse_bound_name(n));
      const ratebound::QContext ctx(c_q);
      for (auto n : names)
        if (ratebound::requires_q_above_two(n)) ratebound::require_q_above_two(ctx, std::string(to_string(n)).c_str());
      const ratebound::Interval dom = ratebound::common_domain(names, ctx);
      ratebound::CurveTable t = ratebound::curve_table(c_q, names, c_lo.value_or(dom.lo), c_hi.value_or(dom.hi), c_points);
      t.header_comments = {ratebound::kToolVersion, "q = " + std::to_string(c_q), cmdline};
      emit(c_out, ratebound::to_csv(t));
      return 0;
    }
    if (*figure) {
      ratebound::CurveTable t = f_which == "fig1" ? ratebound::figure1_table() : ratebound::figure2_table();
      emit(f_out, ratebound::to_csv(t));
      return 0;
    }
    if (*verify) {
      const auto rep = ratebound::run_verification(v_q, ratebound::parse_suite(v_suite), cfg);
      emit(v_out, ratebound::to_json(rep).dump(2) + "\n");
      if (!v_out.empty() && v_out != "-")
        std::cerr << "pass " << rep.count(ratebound::CheckStatus::pass) << ", fail "
                  << rep.count(ratebound::CheckStatus::fail) << ", skipped "
                  << rep.count(ratebound::CheckStatus::skipped) << '\n';
      return rep.all_passed() ? 0 : kExitCheckFailed;
    }
    if (*oracle) {
      std::ostringstream os;
      const auto rows = ratebound::oracle_table(o_q, o_n);
      ratebound::write_oracle_csv(rows, {ratebound::kToolVersion, "q = " + std::to_string(o_q), cmdline}, os);
      emit(o_out, os.str());
      return 0;
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
