#pragma once

// Command-line front end: solve | expect | density | scan | converge | verify.
// Exit status: 0 success, 1 numeric or check failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "gps/model.hpp"
#include "gps/report.hpp"
#include "gps/spectrum.hpp"
#include "gps/verify.hpp"

namespace gps::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct CommonOptions {
  double A = 0.0;
  double lambda = 0.0;
  double alpha = 4.0;
  int ell = 0;
  int states = 1;
  int order = 200;
  double r_max = 300.0;
  std::optional<double> scale;
  std::optional<double> gamma;
  std::string format = "csv";
  std::string out;

  [[nodiscard]] GshoParams params() const { return {A, lambda, alpha}; }

  [[nodiscard]] NumericsConfig numerics() const {
    NumericsConfig cfg;
    cfg.order = order;
    cfg.r_max = r_max;
    cfg.states = states;
    if (gamma) cfg.scale = *gamma * r_max / 2.0;
    else if (scale) cfg.scale = *scale;
    return cfg;
  }
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline nlohmann::json numerics_json(const NumericsConfig& cfg) {
  return {{"N", cfg.order}, {"L", cfg.scale}, {"r_max", cfg.r_max}, {"gamma", cfg.gamma()}};
}

inline std::string numerics_line(const NumericsConfig& cfg) {
  return fmt::format("numerics N={} L={} r_max={} gamma={}", cfg.order, format_number(cfg.scale),
                     format_number(cfg.r_max), format_number(cfg.gamma()));
}

inline std::vector<Cell> param_cells(const GshoParams& p, int ell) {
  return {p.A, p.lambda, p.alpha, static_cast<long long>(ell)};
}

inline Report cmd_solve(const CommonOptions& o) {
  const NumericsConfig cfg = o.numerics();
  Report r;
  r.columns = {"A", "lambda", "alpha", "ell", "n", "energy"};
  for (const BoundState& s : solve_states(o.params(), o.ell, cfg)) {
    auto row = param_cells(o.params(), o.ell);
    row.emplace_back(static_cast<long long>(s.label.n));
    row.emplace_back(s.energy);
    r.rows.push_back(std::move(row));
  }
  r.numerics = numerics_json(cfg);
  r.footer.push_back(numerics_line(cfg));
  return r;
}

inline Report cmd_expect(const CommonOptions& o, const std::vector<double>& powers) {
  const NumericsConfig cfg = o.numerics();
  Report r;
  r.columns = {"A", "lambda", "alpha", "ell", "n", "power", "value"};
  for (const BoundState& s : solve_states(o.params(), o.ell, cfg)) {
    for (double power : powers) {
      auto row = param_cells(o.params(), o.ell);
      row.emplace_back(static_cast<long long>(s.label.n));
      row.emplace_back(power);
      row.emplace_back(expectation_r_power(s, power));
      r.rows.push_back(std::move(row));
    }
  }
  r.numerics = numerics_json(cfg);
  r.footer.push_back(numerics_line(cfg));
  return r;
}

inline Report cmd_density(CommonOptions o, int state) {
  o.states = std::max(o.states, state + 1);
  const NumericsConfig cfg = o.numerics();
  const auto states = solve_states(o.params(), o.ell, cfg);
  const BoundState& s = states.at(static_cast<std::size_t>(state));
  Report r;
  r.preamble.push_back("non-uniform spacing: samples are the mapped collocation nodes");
  r.preamble.push_back(fmt::format("state n={} ell={} energy={}", state, o.ell, format_number(s.energy)));
  r.columns = {"r", "psi_squared"};
  for (const DensitySample& d : radial_density(s)) r.rows.push_back({d.r, d.value});
  const DensitySample peak = density_peak(s);
  r.footer.push_back(fmt::format("peak r={} psi_squared={}", format_number(peak.r), format_number(peak.value)));
  r.numerics = numerics_json(cfg);
  r.footer.push_back(numerics_line(cfg));
  return r;
}

struct ScanOptions {
  std::string axis = "lambda";
  double min = 0.0;
  double max = 0.0;
  int points = 2;
  std::string curve;
};

inline std::vector<double> scan_axis(const ScanOptions& s) {
  if (s.points < 1) throw UsageError("scan: --points must be >= 1");
  if (s.points == 1) {
    if (s.min != s.max) throw UsageError("scan: a single point needs --min == --max");
    return {s.min};
  }
  if (!(s.min < s.max)) throw UsageError("scan: need --min < --max");
  std::vector<double> out(static_cast<std::size_t>(s.points));
  for (int i = 0; i < s.points; ++i) out[i] = s.min + (s.max - s.min) * i / (s.points - 1);
  out.back() = s.max;
  return out;
}

inline Report cmd_scan(const CommonOptions& o, const ScanOptions& s) {
  Report r;
  const auto axis = scan_axis(s);
  if (s.curve == "potential") {
    if (!(s.min > 0.0)) throw UsageError("scan --curve potential: radii must be > 0");
    r.columns = {"r", "V"};
    for (double radius : axis) r.rows.push_back({radius, 0.5 * gsho_v(o.params(), radius)});
    return r;
  }
  if (!s.curve.empty()) throw UsageError("scan: unknown --curve " + s.curve);
  if (s.axis != "lambda" && s.axis != "A") throw UsageError("scan: --axis must be lambda or A");

  const NumericsConfig cfg = o.numerics();
  const SpectralSolver solver(cfg);
  r.columns = {"axis_value"};
  for (int k = 1; k <= cfg.states; ++k) r.columns.push_back(fmt::format("E{}", k));

  std::vector<std::vector<double>> columns(static_cast<std::size_t>(cfg.states));
  for (double value : axis) {
    if (value < 0.0) throw UsageError("scan: " + s.axis + " must be >= 0");
    GshoParams p = o.params();
    (s.axis == "lambda" ? p.lambda : p.A) = value;
    std::vector<Cell> row{value};
    const auto states = solver.solve(p, o.ell);
    for (const BoundState& st : states) {
      row.emplace_back(st.energy);
      columns[st.label.n].push_back(st.energy);
    }
    r.rows.push_back(std::move(row));
  }
  std::string summary = "monotone increasing in " + s.axis + ":";
  for (std::size_t k = 0; k < columns.size(); ++k) {
    bool increasing = true;
    for (std::size_t i = 1; i < columns[k].size(); ++i) increasing = increasing && columns[k][i] > columns[k][i - 1];
    summary += fmt::format(" E{}={}", k + 1, increasing ? "yes" : "no");
  }
  r.footer.push_back(summary);
  r.numerics = numerics_json(cfg);
  r.footer.push_back(numerics_line(cfg));
  return r;
}

inline Report cmd_converge(const CommonOptions& o, const std::vector<int>& orders) {
  const NumericsConfig cfg = o.numerics();
  const auto rows = convergence_scan(o.params(), o.ell, cfg, orders);
  Report r;
  r.columns = {"N"};
  for (int k = 1; k <= cfg.states; ++k) r.columns.push_back(fmt::format("E{}", k));
  for (int k = 1; k <= cfg.states; ++k) r.columns.push_back(fmt::format("digits{}", k));
  r.columns.push_back("stable");
  for (const ConvergenceRow& row : rows) {
    std::vector<Cell> cells{static_cast<long long>(row.order)};
    for (double e : row.energies) cells.emplace_back(e);
    for (int k = 0; k < cfg.states; ++k) {
      if (row.digits.empty()) cells.emplace_back(std::monostate{});
      else cells.emplace_back(static_cast<long long>(row.digits[k]));
    }
    if (row.stable.empty()) {
      cells.emplace_back(std::monostate{});
    } else {
      const bool all = std::all_of(row.stable.begin(), row.stable.end(), [](bool b) { return b; });
      cells.emplace_back(std::string(all ? "yes" : "no"));
    }
    r.rows.push_back(std::move(cells));
  }
  r.footer.push_back(fmt::format("stable means >= {} agreeing significant digits with the previous N", kStableDigits));
  r.numerics = numerics_json(cfg);
  r.footer.push_back(numerics_line(cfg));
  return r;
}

inline VerifySet parse_set(const std::string& s) {
  if (s == "table1") return VerifySet::kTable1;
  if (s == "table2") return VerifySet::kTable2;
  if (s == "table3") return VerifySet::kTable3;
  if (s == "bounds") return VerifySet::kBounds;
  if (s == "all") return VerifySet::kAll;
  throw UsageError("verify: unknown --set " + s);
}

inline Report cmd_verify(const CommonOptions& o, const std::string& set_name, const VerifyTolerances& tol) {
  const VerifySet set = parse_set(set_name);
  NumericsConfig cfg = o.numerics();
  cfg.states = 2;
  const VerifyResult result = run_verification(set, cfg, tol);

  Report r;
  r.columns = {"source", "A", "lambda", "alpha", "ell", "n", "quantity", "reference", "bound_lo",
               "bound_hi", "computed", "delta", "tolerance", "digits", "status"};
  std::vector<std::string> failures;
  for (const VerifyRow& row : result.rows) {
    const ReferenceEntry& e = *row.entry;
    std::string quantity = "energy";
    if (row.kind == CheckKind::kBounds) quantity = "energy_in_bounds";
    else if (e.source == Table::kTable3) quantity = fmt::format("<r^{}>", format_number(e.power));
    std::vector<Cell> cells{std::string(row.kind == CheckKind::kBounds ? "T1-bounds" : table_name(e.source)),
                            e.A, e.lambda, e.alpha, static_cast<long long>(e.ell),
                            static_cast<long long>(e.n), quantity, e.value};
    if (row.kind == CheckKind::kBounds) {
      cells.emplace_back(*e.bound_lo);
      cells.emplace_back(*e.bound_hi);
    } else {
      cells.emplace_back(std::monostate{});
      cells.emplace_back(std::monostate{});
    }
    if (row.computed) {
      cells.emplace_back(*row.computed);
      cells.emplace_back(row.delta);
    } else {
      cells.emplace_back(std::monostate{});
      cells.emplace_back(std::monostate{});
    }
    if (row.kind == CheckKind::kValue) cells.emplace_back(row.tolerance);
    else cells.emplace_back(std::monostate{});
    if (row.computed) cells.emplace_back(static_cast<long long>(agreeing_digits(*row.computed, e.value)));
    else cells.emplace_back(std::monostate{});
    cells.emplace_back(std::string(row.pass ? "pass" : "FAIL"));
    r.rows.push_back(std::move(cells));
    if (!row.pass) {
      failures.push_back(fmt::format("FAIL {} A={} lambda={} alpha={} ell={} n={} {}{}", table_name(e.source),
                                     format_number(e.A), format_number(e.lambda), format_number(e.alpha), e.ell,
                                     e.n, quantity, row.diagnostic.empty() ? "" : ": " + row.diagnostic));
    }
  }

  r.footer.push_back(numerics_line(cfg));
  r.footer.push_back(fmt::format("passed {}/{} max|delta|={}", result.passed(), result.rows.size(),
                                 format_number(result.max_abs_delta())));
  for (const auto& f : failures) r.footer.push_back(f);

  nlohmann::json mapping = nlohmann::json::object();
  if (set == VerifySet::kTable1 || set == VerifySet::kAll) {
    const NumericsConfig alt = alternate_map_reading(cfg);
    const VerifyResult alt_result = run_verification(VerifySet::kTable1, alt, tol);
    const VerifyResult primary_t1 =
        set == VerifySet::kTable1 ? result : run_verification(VerifySet::kTable1, cfg, tol);
    auto describe = [](const NumericsConfig& c, const VerifyResult& v) {
      return fmt::format("map reading L={} gamma={}: table1 {}/{} pass, max|delta|={}", format_number(c.scale),
                         format_number(c.gamma()), v.passed(), v.rows.size(), format_number(v.max_abs_delta()));
    };
    r.footer.push_back(describe(cfg, primary_t1));
    r.footer.push_back(describe(alt, alt_result));
    std::string verdict = "table1 reproduced by:";
    if (primary_t1.all_pass()) verdict += " L=" + format_number(cfg.scale);
    if (alt_result.all_pass()) verdict += " L=" + format_number(alt.scale);
    if (!primary_t1.all_pass() && !alt_result.all_pass()) verdict += " neither";
    r.footer.push_back(verdict);
    mapping = {{"primary", {{"L", cfg.scale}, {"gamma", cfg.gamma()}, {"passed", primary_t1.passed()},
                            {"total", primary_t1.rows.size()}, {"max_abs_delta", primary_t1.max_abs_delta()}}},
               {"alternate", {{"L", alt.scale}, {"gamma", alt.gamma()}, {"passed", alt_result.passed()},
                              {"total", alt_result.rows.size()}, {"max_abs_delta", alt_result.max_abs_delta()}}}};
  }
  r.numerics = numerics_json(cfg);
  if (!mapping.empty()) r.numerics["map_readings"] = mapping;
  r.exit_status = result.all_pass() ? kExitOk : kExitFailure;
  return r;
}

template <typename T>
std::vector<T> parse_list(const std::string& text, const char* what) {
  std::vector<T> out;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) {
    std::istringstream field(item);
    T v{};
    if (!(field >> v) || !(field >> std::ws).eof()) throw UsageError(std::string("bad ") + what + " entry '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError(std::string("empty ") + what + " list");
  return out;
}

/// Parses args (program name first) and runs the subcommand, writing results
/// to --out or `out` and diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bound states of the generalized spiked harmonic oscillator", "gps_spectra"};
  app.require_subcommand(1);

  CommonOptions common;
  std::string powers_text = "-1,1";
  std::string orders_text = "120,160,200";
  std::string set_name = "all";
  int density_state = 0;
  ScanOptions scan;
  VerifyTolerances tol;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--A", common.A, "inverse-square coupling A >= 0")->check(CLI::NonNegativeNumber);
    sub->add_option("--lambda", common.lambda, "spike strength >= 0")->check(CLI::NonNegativeNumber);
    sub->add_option("--alpha", common.alpha, "spike exponent > 0")->check(CLI::PositiveNumber);
    sub->add_option("--ell", common.ell, "angular momentum")->check(CLI::NonNegativeNumber);
    sub->add_option("--states", common.states, "states per ell")->check(CLI::PositiveNumber);
    sub->add_option("--N", common.order, "collocation order")->check(CLI::Range(2, 5000));
    sub->add_option("--rmax", common.r_max, "truncation radius")->check(CLI::PositiveNumber);
    auto* l_opt = sub->add_option("--L", common.scale, "map scale L")->check(CLI::PositiveNumber);
    auto* g_opt = sub->add_option("--gamma", common.gamma, "map parameter gamma = 2L/r_max")->check(CLI::PositiveNumber);
    l_opt->excludes(g_opt);
    sub->add_option("--format", common.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", common.out, "output path (default: stdout)");
  };

  auto* solve = app.add_subcommand("solve", "lowest eigenvalues for one (A, lambda, alpha, ell)");
  auto* expect = app.add_subcommand("expect", "expectation values <r^p>");
  auto* density = app.add_subcommand("density", "radial density |psi|^2 on the native grid");
  auto* scan_cmd = app.add_subcommand("scan", "energies along a lambda or A axis, or the potential curve");
  auto* converge = app.add_subcommand("converge", "energies versus collocation order");
  auto* verify = app.add_subcommand("verify", "check against the embedded reference tables");
  for (auto* sub : {solve, expect, density, scan_cmd, converge, verify}) add_common(sub);

  expect->add_option("--powers", powers_text, "comma-separated powers p");
  density->add_option("--n", density_state, "state index")->check(CLI::NonNegativeNumber);
  scan_cmd->add_option("--axis", scan.axis, "lambda or A")->check(CLI::IsMember({"lambda", "A"}));
  scan_cmd->add_option("--min", scan.min, "axis start");
  scan_cmd->add_option("--max", scan.max, "axis end");
  scan_cmd->add_option("--points", scan.points, "number of axis points");
  scan_cmd->add_option("--curve", scan.curve, "'potential' emits (r, V(r)) over [min, max]");
  converge->add_option("--Ns", orders_text, "ascending comma-separated orders");
  verify->add_option("--set", set_name, "table1|table2|table3|bounds|all")
      ->check(CLI::IsMember({"table1", "table2", "table3", "bounds", "all"}));
  verify->add_option("--tol-energy", tol.energy, "absolute energy tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--tol-expect", tol.expectation, "absolute expectation tolerance")->check(CLI::PositiveNumber);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitUsage;
  }

  Report report;
  try {
    if (*solve) report = cmd_solve(common);
    else if (*expect) report = cmd_expect(common, parse_list<double>(powers_text, "power"));
    else if (*density) report = cmd_density(common, density_state);
    else if (*scan_cmd) report = cmd_scan(common, scan);
    else if (*converge) report = cmd_converge(common, parse_list<int>(orders_text, "N"));
    else report = cmd_verify(common, set_name, tol);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!common.out.empty()) {
    file.open(common.out, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << common.out << '\n';
      return kExitFailure;
    }
    sink = &file;
  }
  if (common.format == "json") write_json(report, *sink);
  else write_csv(report, *sink);
  if (report.exit_status != kExitOk) {
    for (const auto& line : report.footer)
      if (line.rfind("FAIL", 0) == 0) err << line << '\n';
  }
  return report.exit_status;
}

}  // namespace gps::cli
