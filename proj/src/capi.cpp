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

#include "cournotq.h"

#include <cmath>
#include <exception>
#include <new>
#include <optional>
#include <string>

#include "cournotq/classical.hpp"
#include "cournotq/error.hpp"
#include "cournotq/market.hpp"
#include "cournotq/oracle.hpp"
#include "cournotq/quantum.hpp"
#include "cournotq/verify.hpp"

struct cq_market {
  cournotq::MarketParams params;
};

struct cq_verify_report {
  cournotq::verify::Report report;
};

namespace {

namespace cq = cournotq;

thread_local std::string g_last_error;

cq_status Fail(cq_status status, const char* message) {
  g_last_error = message;
  return status;
}

// Runs body, translating exceptions into status codes.
template <typename Body>
cq_status Guard(Body&& body) {
  try {
    body();
    return CQ_OK;
  } catch (const cq::Error& e) {
    return Fail(static_cast<cq_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(CQ_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(CQ_ERR_INTERNAL, e.what());
  }
}

#define CQ_REQUIRE(ptr)                                             \
  do {                                                              \
    if ((ptr) == nullptr) {                                         \
      return Fail(CQ_ERR_NULL_ARGUMENT, #ptr " must not be NULL");  \
    }                                                               \
  } while (0)

cq_triple ToTriple(const cq::QuantumProfile& p) { return {p.x1, p.x2H, p.x2L}; }

cq_equilibrium FromQuantumReport(const cq::QuantumReport& r) {
  cq_equilibrium e{};
  e.gamma = r.entanglement.gamma();
  e.strategies = ToTriple(r.profile);
  e.q1_high = r.vs_high.q1;
  e.q2_high = r.vs_high.q2;
  e.q1_low = r.vs_low.q1;
  e.q2_low = r.vs_low.q2;
  e.u1_high = r.u1_vs_high;
  e.u1_low = r.u1_vs_low;
  e.u2_high = r.u2H;
  e.u2_low = r.u2L;
  e.u1_avg = r.average.u1_bar;
  e.u2_avg = r.average.u2_bar;
  return e;
}

cq::oracle::GridSpec ToGrid(const cq_grid_spec& g) {
  return {g.lo, g.hi, g.coarse_points, g.refine_rounds};
}

cq::oracle::FixedPointConfig ToConfig(const cq_fixed_point_config& c) {
  return {c.tol, c.max_iters, c.damping};
}

const cq::verify::CheckResult* CheckAt(const cq_verify_report* report,
                                       size_t index) {
  if (report == nullptr || index >= report->report.checks.size()) {
    return nullptr;
  }
  return &report->report.checks[index];
}

}  // namespace

extern "C" {

const char* cq_status_name(cq_status status) {
  switch (status) {
    case CQ_OK: return "Ok";
    case CQ_ERR_NULL_ARGUMENT: return "NullArgument";
    case CQ_ERR_INTERNAL: return "Internal";
    default: break;
  }
  if (status >= CQ_ERR_INVALID_PARAMS && status <= CQ_ERR_STEP_OUT_OF_DOMAIN) {
    // Names are string literals, so data() is NUL-terminated.
    return cq::ErrorCodeName(static_cast<cq::ErrorCode>(status)).data();
  }
  return "Unknown";
}

const char* cq_last_error(void) { return g_last_error.c_str(); }

cq_status cq_market_create(double a, double c1, double ch, double cl,
                           double theta, cq_market** out) {
  CQ_REQUIRE(out);
  return Guard([&] {
    const cq::MarketParams p = cq::Validate({a, c1, ch, cl, theta});
    *out = new cq_market{p};
  });
}

void cq_market_free(cq_market* market) { delete market; }

cq_status cq_market_constants(const cq_market* market, cq_constants* out) {
  CQ_REQUIRE(market);
  CQ_REQUIRE(out);
  return Guard([&] {
    const cq::DerivedConstants d = cq::DeriveConstants(market->params);
    *out = {d.k1, d.k2, d.delta, d.s, d.k1_ne_k2 ? 1 : 0};
  });
}

cq_status cq_price(double total_quantity, double a, double* out) {
  CQ_REQUIRE(out);
  return Guard([&] { *out = cq::Price(total_quantity, a); });
}

cq_status cq_profit(double q_self, double q_other, double c_self, double a,
                    double* out) {
  CQ_REQUIRE(out);
  return Guard([&] { *out = cq::Profit(q_self, q_other, c_self, a); });
}

cq_status cq_classical_equilibrium(const cq_market* market,
                                   cq_equilibrium* out) {
  CQ_REQUIRE(market);
  CQ_REQUIRE(out);
  return Guard([&] {
    const cq::MarketParams& p = market->params;
    const cq::ClassicalProfile q = cq::ClassicalBayesNash(p);
    const cq::ClassicalReport r = cq::ClassicalExpectedProfits(q, p);
    cq_equilibrium e{};
    e.gamma = 0.0;
    e.strategies = {q.q1, q.q2H, q.q2L};
    e.q1_high = q.q1;
    e.q2_high = q.q2H;
    e.q1_low = q.q1;
    e.q2_low = q.q2L;
    e.u1_high = cq::Profit(q.q1, q.q2H, p.c1, p.a);
    e.u1_low = cq::Profit(q.q1, q.q2L, p.c1, p.a);
    e.u2_high = r.u2H;
    e.u2_low = r.u2L;
    e.u1_avg = r.u1_expected;
    e.u2_avg = r.u2_average;
    *out = e;
  });
}

cq_status cq_symmetric_nash(double k, double* quantity, double* payoff) {
  CQ_REQUIRE(quantity);
  CQ_REQUIRE(payoff);
  return Guard([&] {
    const cq::SymmetricOutcome o = cq::SymmetricNash(k);
    *quantity = o.quantity;
    *payoff = o.payoff;
  });
}

cq_status cq_pareto_optimum(double k, double* quantity, double* payoff) {
  CQ_REQUIRE(quantity);
  CQ_REQUIRE(payoff);
  return Guard([&] {
    const cq::SymmetricOutcome o = cq::ParetoOptimum(k);
    *quantity = o.quantity;
    *payoff = o.payoff;
  });
}

cq_status cq_gamma_from_tanh(double t, double* gamma) {
  CQ_REQUIRE(gamma);
  return Guard([&] { *gamma = cq::Entanglement::FromTanh(t).gamma(); });
}

cq_status cq_strategies_to_quantities(double x1, double x2, double gamma,
                                      double* q1, double* q2) {
  CQ_REQUIRE(q1);
  CQ_REQUIRE(q2);
  return Guard([&] {
    const cq::Quantities q = cq::StrategiesToQuantities(
        x1, x2, cq::Entanglement::FromGamma(gamma));
    *q1 = q.q1;
    *q2 = q.q2;
  });
}

cq_status cq_quantum_equilibrium(const cq_market* market, double gamma,
                                 cq_equilibrium* out) {
  CQ_REQUIRE(market);
  CQ_REQUIRE(out);
  return Guard([&] {
    *out = FromQuantumReport(cq::QuantumEquilibriumReport(
        market->params, cq::Entanglement::FromGamma(gamma)));
  });
}

cq_status cq_average_profits(double gamma, double s, double k,
                             double* u1_bar, double* u2_bar) {
  CQ_REQUIRE(u1_bar);
  CQ_REQUIRE(u2_bar);
  return Guard([&] {
    const cq::AverageProfits u =
        cq::ComputeAverageProfits(cq::Entanglement::FromGamma(gamma), s, k);
    *u1_bar = u.u1_bar;
    *u2_bar = u.u2_bar;
  });
}

cq_status cq_profit_gamma_derivative(double gamma, double s, double k,
                                     double* out) {
  CQ_REQUIRE(out);
  return Guard([&] {
    *out =
        cq::ProfitGammaDerivative(cq::Entanglement::FromGamma(gamma), s, k);
  });
}

void cq_thresholds(double* s_m, double* s_c) {
  const auto [m, c] = cq::Thresholds();
  if (s_m != nullptr) *s_m = m;
  if (s_c != nullptr) *s_c = c;
}

cq_status cq_find_gamma_m(double s, double k, double tol, int* found,
                          double* gamma) {
  CQ_REQUIRE(found);
  CQ_REQUIRE(gamma);
  return Guard([&] {
    const std::optional<double> g = cq::FindGammaM(s, k, tol);
    *found = g.has_value() ? 1 : 0;
    if (g) *gamma = *g;
  });
}

cq_status cq_find_gamma_c(double s, double k, double tol, int* found,
                          double* gamma) {
  CQ_REQUIRE(found);
  CQ_REQUIRE(gamma);
  return Guard([&] {
    const std::optional<double> g = cq::FindGammaC(s, k, tol);
    *found = g.has_value() ? 1 : 0;
    if (g) *gamma = *g;
  });
}

cq_status cq_asymptotic_profits(double s, double k, double* u1_bar,
                                double* u2_bar) {
  CQ_REQUIRE(u1_bar);
  CQ_REQUIRE(u2_bar);
  return Guard([&] {
    const cq::AverageProfits u = cq::AsymptoticProfits(s, k);
    *u1_bar = u.u1_bar;
    *u2_bar = u.u2_bar;
  });
}

cq_status cq_default_grid(const cq_market* market, cq_grid_spec* out) {
  CQ_REQUIRE(market);
  CQ_REQUIRE(out);
  const cq::oracle::GridSpec g = cq::oracle::GridSpec::Over(market->params);
  *out = {g.lo, g.hi, g.coarse_points, g.refine_rounds};
  return CQ_OK;
}

void cq_default_fixed_point(cq_fixed_point_config* out) {
  if (out == nullptr) return;
  const cq::oracle::FixedPointConfig c;
  *out = {c.tol, c.max_iters, c.damping};
}

cq_status cq_oracle_equilibrium(const cq_market* market, double gamma,
                                const cq_grid_spec* grid,
                                const cq_fixed_point_config* cfg,
                                cq_triple* out, double* resolution) {
  CQ_REQUIRE(market);
  CQ_REQUIRE(grid);
  CQ_REQUIRE(cfg);
  CQ_REQUIRE(out);
  return Guard([&] {
    try {
      const cq::oracle::FixedPointResult r = cq::oracle::FixedPointBayesNash(
          market->params, cq::Entanglement::FromGamma(gamma), ToGrid(*grid),
          ToConfig(*cfg));
      *out = ToTriple(r.profile);
      if (resolution != nullptr) *resolution = r.resolution;
    } catch (const cq::oracle::NoConvergence& e) {
      *out = ToTriple(e.last_profile());
      throw;
    }
  });
}

cq_status cq_finite_diff_gamma(double s, double k, double gamma, double h,
                               double* out) {
  CQ_REQUIRE(out);
  return Guard([&] {
    *out = cq::oracle::FiniteDiffGamma(s, k, cq::Entanglement::FromGamma(gamma),
                                       h);
  });
}

cq_status cq_sample_quantity(double x_target, double r, uint64_t seed,
                             size_t n, double* mean, double* variance) {
  CQ_REQUIRE(mean);
  CQ_REQUIRE(variance);
  return Guard([&] {
    const cq::oracle::SampleStats stats =
        cq::oracle::SampleQuantity(x_target, {r, seed}, n);
    *mean = stats.mean;
    *variance = stats.variance;
  });
}

cq_status cq_verify_run(uint64_t seed, cq_depth depth, double tol_override,
                        cq_verify_report** out) {
  CQ_REQUIRE(out);
  return Guard([&] {
    cq::verify::Options options;
    options.seed = seed;
    options.depth = depth == CQ_DEPTH_QUICK ? cq::verify::Depth::kQuick
                                            : cq::verify::Depth::kFull;
    if (tol_override > 0.0) options.tol_override = tol_override;
    *out = new cq_verify_report{cq::verify::Run(options)};
  });
}

void cq_verify_report_free(cq_verify_report* report) { delete report; }

size_t cq_verify_report_size(const cq_verify_report* report) {
  return report == nullptr ? 0 : report->report.checks.size();
}

int cq_verify_report_passed(const cq_verify_report* report, size_t index) {
  const auto* check = CheckAt(report, index);
  if (check == nullptr) return -1;
  return check->passed ? 1 : 0;
}

const char* cq_verify_report_name(const cq_verify_report* report,
                                  size_t index) {
  const auto* check = CheckAt(report, index);
  return check == nullptr ? nullptr : check->name.c_str();
}

const char* cq_verify_report_detail(const cq_verify_report* report,
                                    size_t index) {
  const auto* check = CheckAt(report, index);
  return check == nullptr ? nullptr : check->detail.c_str();
}

double cq_verify_report_max_error(const cq_verify_report* report,
                                  size_t index) {
  const auto* check = CheckAt(report, index);
  return check == nullptr ? std::nan("") : check->max_error;
}

double cq_verify_report_tolerance(const cq_verify_report* report,
                                  size_t index) {
  const auto* check = CheckAt(report, index);
  return check == nullptr ? std::nan("") : check->tolerance;
}

}  // extern "C"
