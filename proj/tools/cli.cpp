// Copyright 2026 The cournotq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "cournotq.h"

namespace cournotq::cli {

namespace {

struct MarketFlags {
  double a = 100.0;
  double c1 = 10.0;
  double ch = 10.0;
  double cl = 10.0;
  double theta = 0.5;
};

struct EntanglementFlags {
  double gamma = 0.0;
  double t = 0.0;
  CLI::Option* gamma_opt = nullptr;
  CLI::Option* t_opt = nullptr;
};

struct AxisFlags {
  double t_min = 0.0;
  double t_max = 0.999;
  double t_step = 0.001;
  double s_min = 0.0;
  double s_max = 0.2;
  double s_step = 0.002;
};

struct Flags {
  MarketFlags market;
  EntanglementFlags entanglement;
  AxisFlags axis;
  double k = 1.0;
  std::string s_text;
  CLI::Option* s_opt = nullptr;
  std::string s_list = "0.05,1/9,0.13,4/27,0.2";
  std::string out_path;
  std::uint64_t seed = 20260101;
  double tol = 0.0;
  CLI::Option* tol_opt = nullptr;
  std::string depth = "full";
};

// Thrown inside a command to end it with an exit code and message.
struct Exit {
  int code;
  std::string message;
};

int ExitCodeFor(cq_status status) {
  return status == CQ_ERR_NON_INTERIOR ? kExitNonInterior : kExitInvalidInput;
}

void Check(cq_status status, const char* what) {
  if (status == CQ_OK) return;
  std::ostringstream msg;
  msg << what << ": " << cq_last_error();
  throw Exit{ExitCodeFor(status), msg.str()};
}

void InvalidInput(const std::string& message) {
  throw Exit{kExitInvalidInput, message};
}

std::string JoinRow(const std::vector<std::string>& cells) {
  std::string row;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) row += ',';
    row += cells[i];
  }
  return row + '\n';
}

std::string CsvQuote(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

double ResolveGamma(const EntanglementFlags& e) {
  if (e.t_opt->count() > 0) {
    double gamma = 0.0;
    Check(cq_gamma_from_tanh(e.t, &gamma), "--t");
    return gamma;
  }
  if (!(e.gamma >= 0.0) || !std::isfinite(e.gamma)) {
    InvalidInput("--gamma must be finite and >= 0");
  }
  return e.gamma;
}

using MarketHandle = std::unique_ptr<cq_market, decltype(&cq_market_free)>;

MarketHandle MakeMarket(const MarketFlags& m) {
  cq_market* raw = nullptr;
  Check(cq_market_create(m.a, m.c1, m.ch, m.cl, m.theta, &raw),
        "invalid market");
  return MarketHandle(raw, &cq_market_free);
}

std::vector<std::string> EquilibriumCells(const char* label,
                                          const cq_equilibrium& e) {
  return {label,
          FormatDouble(e.gamma),
          FormatDouble(e.strategies.x1),
          FormatDouble(e.strategies.x2h),
          FormatDouble(e.strategies.x2l),
          FormatDouble(e.q1_high),
          FormatDouble(e.q2_high),
          FormatDouble(e.q1_low),
          FormatDouble(e.q2_low),
          FormatDouble(e.u1_high),
          FormatDouble(e.u1_low),
          FormatDouble(e.u2_high),
          FormatDouble(e.u2_low),
          FormatDouble(e.u1_avg),
          FormatDouble(e.u2_avg)};
}

cq_equilibrium SymmetricRow(double gamma, double quantity, double payoff) {
  cq_equilibrium e{};
  e.gamma = gamma;
  e.strategies = {quantity, quantity, quantity};
  e.q1_high = e.q2_high = e.q1_low = e.q2_low = quantity;
  e.u1_high = e.u1_low = e.u2_high = e.u2_low = payoff;
  e.u1_avg = e.u2_avg = payoff;
  return e;
}

void CmdEquilibrium(const Flags& f, std::ostream& out) {
  const double gamma = ResolveGamma(f.entanglement);
  const MarketHandle market = MakeMarket(f.market);

  cq_constants constants{};
  Check(cq_market_constants(market.get(), &constants), "constants");

  cq_equilibrium classical{};
  Check(cq_classical_equilibrium(market.get(), &classical),
        "classical equilibrium");
  cq_equilibrium quantum{};
  Check(cq_quantum_equilibrium(market.get(), gamma, &quantum),
        "quantum equilibrium");

  double nash_q = 0.0, nash_u = 0.0, pareto_q = 0.0, pareto_u = 0.0;
  Check(cq_symmetric_nash(constants.k1, &nash_q, &nash_u), "symmetric nash");
  Check(cq_pareto_optimum(constants.k1, &pareto_q, &pareto_u), "pareto");

  out << JoinRow({"row", "gamma", "x1", "x2H", "x2L", "q1_H", "q2_H", "q1_L",
                  "q2_L", "u1_H", "u1_L", "u2_H", "u2_L", "u1_avg",
                  "u2_avg"});
  out << JoinRow(EquilibriumCells("classical", classical));
  out << JoinRow(EquilibriumCells("quantum", quantum));
  out << JoinRow(EquilibriumCells("nash_reference",
                                  SymmetricRow(0.0, nash_q, nash_u)));
  out << JoinRow(EquilibriumCells("pareto_reference",
                                  SymmetricRow(0.0, pareto_q, pareto_u)));
}

void RequireMargin(double k) {
  if (!(k > 0.0) || !std::isfinite(k)) InvalidInput("--k must be > 0");
}

std::vector<double> TAxis(const AxisFlags& a) {
  if (!(a.t_min >= 0.0 && a.t_max < 1.0)) {
    InvalidInput("t range must lie in [0, 1)");
  }
  std::vector<double> axis = MakeAxis(a.t_min, a.t_max, a.t_step);
  if (axis.empty()) InvalidInput("bad t range or step");
  return axis;
}

void CmdSurface(const Flags& f, std::ostream& out) {
  RequireMargin(f.k);
  const AxisFlags& a = f.axis;
  const std::vector<double> t_axis = TAxis(a);
  if (!(a.s_min >= 0.0)) InvalidInput("s range must be >= 0");
  const std::vector<double> s_axis = MakeAxis(a.s_min, a.s_max, a.s_step);
  if (s_axis.empty()) InvalidInput("bad s range or step");

  const double k2 = f.k * f.k;
  out << "t,s,u1_norm,u2_norm\n";
  for (double t : t_axis) {
    double gamma = 0.0;
    Check(cq_gamma_from_tanh(t, &gamma), "t");
    for (double s : s_axis) {
      double u1 = 0.0, u2 = 0.0;
      Check(cq_average_profits(gamma, s, f.k, &u1, &u2), "average profits");
      out << JoinRow({FormatDouble(t), FormatDouble(s), FormatDouble(u1 / k2),
                      FormatDouble(u2 / k2)});
    }
  }
}

std::vector<double> ParseList(const std::string& text) {
  std::vector<double> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const std::optional<double> v = ParseNumber(item);
    if (!v || !(*v >= 0.0)) InvalidInput("bad --s-list entry '" + item + "'");
    values.push_back(*v);
  }
  if (values.empty()) InvalidInput("--s-list is empty");
  return values;
}

void CmdCurves(const Flags& f, std::ostream& out) {
  RequireMargin(f.k);
  const std::vector<double> s_values = ParseList(f.s_list);
  const std::vector<double> t_axis = TAxis(f.axis);
  const double k2 = f.k * f.k;
  const std::string baseline = FormatDouble(1.0 / 9.0);

  out << "t,s,u1_norm,baseline\n";
  for (double s : s_values) {
    for (double t : t_axis) {
      double gamma = 0.0, u1 = 0.0, u2 = 0.0;
      Check(cq_gamma_from_tanh(t, &gamma), "t");
      Check(cq_average_profits(gamma, s, f.k, &u1, &u2), "average profits");
      out << JoinRow(
          {FormatDouble(t), FormatDouble(s), FormatDouble(u1 / k2), baseline});
    }
  }
}

std::string Regime(double s, double s_m, double s_c) {
  constexpr double kTol = 1e-12;
  if (std::abs(s - s_m) <= kTol || std::abs(s - s_c) <= kTol) {
    return "boundary";
  }
  if (s < s_c) return "superior-everywhere";
  if (s < s_m) return "peaked-then-crossing";
  return "inferior-everywhere";
}

void CmdThresholds(const Flags& f, std::ostream& out) {
  double s_m = 0.0, s_c = 0.0;
  cq_thresholds(&s_m, &s_c);
  if (f.s_opt->count() == 0) {
    out << "s_m,s_c\n" << JoinRow({FormatDouble(s_m), FormatDouble(s_c)});
    return;
  }
  RequireMargin(f.k);
  const std::optional<double> parsed = ParseNumber(f.s_text);
  if (!parsed || !(*parsed >= 0.0)) InvalidInput("--s must be a number >= 0");
  const double s = *parsed;
  const double tol = f.tol_opt->count() > 0 ? f.tol : 1e-10;

  auto gamma_cell = [](int found, double gamma) {
    return found ? FormatDouble(gamma) : std::string("none");
  };
  auto tanh_cell = [](int found, double gamma) {
    return found ? FormatDouble(std::tanh(gamma)) : std::string("none");
  };

  int found_m = 0, found_c = 0;
  double gamma_m = 0.0, gamma_c = 0.0;
  if (s <= s_m) {
    Check(cq_find_gamma_m(s, f.k, tol, &found_m, &gamma_m), "gamma_m");
  }
  Check(cq_find_gamma_c(s, f.k, tol, &found_c, &gamma_c), "gamma_c");

  out << "s,s_m,s_c,gamma_m,gamma_c,t_m,t_c,regime\n";
  out << JoinRow({FormatDouble(s), FormatDouble(s_m), FormatDouble(s_c),
                  gamma_cell(found_m, gamma_m), gamma_cell(found_c, gamma_c),
                  tanh_cell(found_m, gamma_m), tanh_cell(found_c, gamma_c),
                  Regime(s, s_m, s_c)});
}

int CmdVerify(const Flags& f, std::ostream& out) {
  if (f.tol_opt->count() > 0 && !(f.tol > 0.0)) {
    InvalidInput("--tol must be > 0");
  }
  const double tol = f.tol_opt->count() > 0 ? f.tol : 0.0;
  const cq_depth depth = f.depth == "quick" ? CQ_DEPTH_QUICK : CQ_DEPTH_FULL;

  cq_verify_report* raw = nullptr;
  Check(cq_verify_run(f.seed, depth, tol, &raw), "verify");
  std::unique_ptr<cq_verify_report, decltype(&cq_verify_report_free)> report(
      raw, &cq_verify_report_free);

  bool all_passed = true;
  out << "check,status,max_error,tolerance,detail\n";
  for (std::size_t i = 0; i < cq_verify_report_size(report.get()); ++i) {
    const bool passed = cq_verify_report_passed(report.get(), i) == 1;
    all_passed = all_passed && passed;
    out << JoinRow({cq_verify_report_name(report.get(), i),
                    passed ? "pass" : "FAIL",
                    FormatDouble(cq_verify_report_max_error(report.get(), i)),
                    FormatDouble(cq_verify_report_tolerance(report.get(), i)),
                    CsvQuote(cq_verify_report_detail(report.get(), i))});
  }
  return all_passed ? kExitOk : kExitVerifyFailed;
}

void AddMarketFlags(CLI::App* cmd, MarketFlags& m) {
  cmd->add_option("--a", m.a, "demand intercept")->capture_default_str();
  cmd->add_option("--c1", m.c1, "firm 1 unit cost")->capture_default_str();
  cmd->add_option("--ch", m.ch, "firm 2 high unit cost")
      ->capture_default_str();
  cmd->add_option("--cl", m.cl, "firm 2 low unit cost")->capture_default_str();
  cmd->add_option("--theta", m.theta, "probability of the high cost")
      ->capture_default_str();
}

void AddTAxisFlags(CLI::App* cmd, AxisFlags& a) {
  cmd->add_option("--t-min", a.t_min, "first tanh(gamma)")
      ->capture_default_str();
  cmd->add_option("--t-max", a.t_max, "last tanh(gamma), < 1")
      ->capture_default_str();
  cmd->add_option("--t-step", a.t_step, "tanh(gamma) spacing")
      ->capture_default_str();
}

void AddOutFlag(CLI::App* cmd, Flags& f) {
  cmd->add_option("--out", f.out_path, "output file (default stdout)");
}

}  // namespace

std::string FormatDouble(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

std::optional<double> ParseNumber(std::string_view text) {
  auto parse_plain = [](std::string_view s) -> std::optional<double> {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (s.empty()) return std::nullopt;
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
      return std::nullopt;
    }
    return v;
  };
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return parse_plain(text);
  const auto num = parse_plain(text.substr(0, slash));
  const auto den = parse_plain(text.substr(slash + 1));
  if (!num || !den || *den == 0.0) return std::nullopt;
  return *num / *den;
}

std::vector<double> MakeAxis(double min, double max, double step) {
  if (!std::isfinite(min) || !std::isfinite(max) || !std::isfinite(step) ||
      !(step > 0.0) || min > max) {
    return {};
  }
  const auto intervals =
      static_cast<std::size_t>(std::floor((max - min) / step + 1e-9));
  std::vector<double> axis;
  axis.reserve(intervals + 1);
  for (std::size_t i = 0; i <= intervals; ++i) {
    axis.push_back(std::min(max, min + static_cast<double>(i) * step));
  }
  return axis;
}

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Flags f;
  CLI::App app{"Classical and entangled Cournot duopoly with asymmetric "
               "information",
               "cournotq"};
  app.require_subcommand(1);

  auto* equilibrium = app.add_subcommand(
      "equilibrium", "classical and quantum Bayes-Nash equilibria with profits");
  AddMarketFlags(equilibrium, f.market);
  f.entanglement.gamma_opt = equilibrium->add_option(
      "--gamma", f.entanglement.gamma, "squeezing parameter (default 0)");
  f.entanglement.t_opt =
      equilibrium->add_option("--t", f.entanglement.t, "tanh(gamma) in [0, 1)");
  f.entanglement.gamma_opt->excludes(f.entanglement.t_opt);
  AddOutFlag(equilibrium, f);

  auto* surface = app.add_subcommand(
      "surface", "normalized average profits over a tanh(gamma) x s grid");
  AddTAxisFlags(surface, f.axis);
  surface->add_option("--s-min", f.axis.s_min, "first s")
      ->capture_default_str();
  surface->add_option("--s-max", f.axis.s_max, "last s")
      ->capture_default_str();
  surface->add_option("--s-step", f.axis.s_step, "s spacing")
      ->capture_default_str();
  surface->add_option("--k", f.k, "common margin")->capture_default_str();
  AddOutFlag(surface, f);

  auto* curves = app.add_subcommand(
      "curves", "firm 1 normalized profit against tanh(gamma), one curve per s");
  curves->add_option("--s-list", f.s_list, "comma-separated s values, p/q ok")
      ->capture_default_str();
  AddTAxisFlags(curves, f.axis);
  curves->add_option("--k", f.k, "common margin")->capture_default_str();
  AddOutFlag(curves, f);

  auto* thresholds = app.add_subcommand(
      "thresholds", "asymmetry thresholds and, for a given s, gamma_m/gamma_c");
  f.s_opt = thresholds->add_option("--s", f.s_text,
                                   "informational asymmetry, p/q ok");
  thresholds->add_option("--k", f.k, "common margin")->capture_default_str();
  f.tol_opt = thresholds->add_option("--tol", f.tol, "root tolerance in gamma");
  AddOutFlag(thresholds, f);

  auto* verify = app.add_subcommand(
      "verify", "cross-check closed forms against the brute-force oracle");
  verify->add_option("--seed", f.seed, "random seed")->capture_default_str();
  verify->add_option("--depth", f.depth, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}))
      ->capture_default_str();
  auto* verify_tol =
      verify->add_option("--tol", f.tol, "replace every check's tolerance");
  AddOutFlag(verify, f);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!f.out_path.empty()) {
    file.open(f.out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "cannot open " << f.out_path << " for writing\n";
      return kExitInvalidInput;
    }
    sink = &file;
  }

  try {
    if (equilibrium->parsed()) {
      CmdEquilibrium(f, *sink);
    } else if (surface->parsed()) {
      CmdSurface(f, *sink);
    } else if (curves->parsed()) {
      CmdCurves(f, *sink);
    } else if (thresholds->parsed()) {
      CmdThresholds(f, *sink);
    } else if (verify->parsed()) {
      f.tol_opt = verify_tol;
      const int code = CmdVerify(f, *sink);
      if (code != kExitOk) err << "verification failed\n";
      return code;
    }
  } catch (const Exit& e) {
    err << "error: " << e.message << '\n';
    return e.code;
  }
  return kExitOk;
}

}  // namespace cournotq::cli
