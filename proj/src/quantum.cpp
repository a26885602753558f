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

#include "cournotq/quantum.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "cournotq/error.hpp"

// The closed forms below are written in z = exp(-2 gamma) in (0, 1]. With
// 3 cosh + sinh = e^gamma (2 + z) and 8 e^gamma cosh = 4 e^{2 gamma} (1 + z)
// every exponential growth cancels, so the expressions stay finite for any
// gamma and tend smoothly to their limits as z -> 0.

namespace cournotq {

namespace {

void CheckMargin(double k) {
  if (!(k > 0.0)) {
    std::ostringstream msg;
    msg << "k must be > 0, got " << k;
    throw Error(ErrorCode::kNonPositiveMargin, msg.str());
  }
}

void CheckTolerance(double tol) {
  if (!(tol > 0.0)) {
    throw Error(ErrorCode::kNonPositiveTolerance, "tol must be > 0");
  }
}

// Doubles hi from `start` until f(hi) < 0. Returns false if f stays
// non-negative up to `limit`.
bool ExpandBracket(const std::function<double(double)>& f, double start,
                   double limit, double* hi) {
  for (double g = start; g <= limit; g *= 2.0) {
    if (f(g) < 0.0) {
      *hi = g;
      return true;
    }
  }
  return false;
}

// f is known to be >= 0 at lo and < 0 at hi. Throws MultipleRoots if a
// uniform sample of [lo, hi] shows more than one sign change.
void RequireSingleCrossing(const std::function<double(double)>& f, double lo,
                           double hi) {
  constexpr int kSamples = 256;
  int changes = 0;
  bool prev_negative = f(lo) < 0.0;
  for (int i = 1; i <= kSamples; ++i) {
    const bool negative = f(lo + (hi - lo) * i / kSamples) < 0.0;
    if (negative != prev_negative) ++changes;
    prev_negative = negative;
  }
  if (changes > 1) {
    std::ostringstream msg;
    msg << changes << " sign changes on [" << lo << ", " << hi << "]";
    throw Error(ErrorCode::kMultipleRoots, msg.str());
  }
}

double Bisect(const std::function<double(double)>& f, double lo, double hi,
              double tol) {
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (f(mid) < 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Largest gamma tried while bracketing. z underflows to 0 near 372, after
// which both bracket functions are constant.
constexpr double kGammaLimit = 1024.0;

// Normalized u1_bar / k^2.
double NormalizedU1(double gamma, double s) {
  const double z = std::exp(-2.0 * gamma);
  const double cooperative = 4.0 * (1.0 + z) / ((2.0 + z) * (2.0 + z));
  return (cooperative + std::expm1(-2.0 * gamma) * s) / 8.0;
}

// Sign of the derivative: 4 e^gamma / (3 cosh + sinh)^3 - s.
double DerivativeBracket(double gamma, double s) {
  const double z = std::exp(-2.0 * gamma);
  const double d = 2.0 + z;
  return 4.0 * z / (d * d * d) - s;
}

}  // namespace

Entanglement::Entanglement(double gamma, double t)
    : gamma_(gamma),
      tanh_gamma_(t),
      cosh_gamma_(std::cosh(gamma)),
      sinh_gamma_(std::sinh(gamma)) {}

Entanglement Entanglement::FromGamma(double gamma) {
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
    std::ostringstream msg;
    msg << "gamma must be finite and >= 0, got " << gamma;
    throw Error(ErrorCode::kOutOfRange, msg.str());
  }
  return Entanglement(gamma, std::tanh(gamma));
}

Entanglement Entanglement::FromTanh(double t) {
  if (!(t >= 0.0 && t < 1.0)) {
    std::ostringstream msg;
    msg << "tanh(gamma) must lie in [0, 1), got " << t;
    throw Error(ErrorCode::kOutOfRange, msg.str());
  }
  return Entanglement(std::atanh(t), t);
}

Quantities StrategiesToQuantities(double x1, double x2, Entanglement gamma) {
  if (x1 < 0.0 || x2 < 0.0) {
    throw Error(ErrorCode::kNegativeStrategy, "strategies must be >= 0");
  }
  const double ch = gamma.cosh_gamma();
  const double sh = gamma.sinh_gamma();
  return {x1 * ch + x2 * sh, x2 * ch + x1 * sh};
}

double QuantumProfit(double x1, double x2, Entanglement gamma, CostType type,
                     const MarketParams& params, Player who) {
  const Quantities q = StrategiesToQuantities(x1, x2, gamma);
  if (who == Player::kFirm1) return Profit(q.q1, q.q2, params.c1, params.a);
  return Profit(q.q2, q.q1, params.CostOf(type), params.a);
}

QuantumProfile QuantumBayesNash(const MarketParams& params,
                                Entanglement gamma) {
  const DerivedConstants d = DeriveConstants(params);
  const double k = d.CommonMargin();
  const double theta = params.theta;
  const double g = gamma.gamma();
  const double z = std::exp(-2.0 * g);
  // Common factor 1 / (2 e^gamma (1 + 2 e^{2 gamma})) after dividing the
  // numerators by e^{2 gamma}.
  const double scale = std::exp(-g) / (2.0 * (2.0 + z));

  QuantumProfile eq;
  eq.x1 = k * (1.0 + z) * scale;
  eq.x2H = (z * (k - (1.0 - theta) * d.delta) +
            (k - 2.0 * (1.0 - theta) * d.delta)) * scale;
  eq.x2L = (z * (k + theta * d.delta) + (k + 2.0 * theta * d.delta)) * scale;

  const double growth = std::exp(g);  // q1 + q2 = e^gamma (x1 + x2)
  if (eq.x1 < 0.0 || eq.x2H < 0.0 || eq.x2L < 0.0 ||
      growth * (eq.x1 + eq.x2H) > params.a ||
      growth * (eq.x1 + eq.x2L) > params.a) {
    std::ostringstream msg;
    msg << "quantum equilibrium (" << eq.x1 << ", " << eq.x2H << ", "
        << eq.x2L << ") at gamma=" << g << " is not interior";
    throw Error(ErrorCode::kNonInteriorEquilibrium, msg.str());
  }
  return eq;
}

QuantumReport QuantumEquilibriumReport(const MarketParams& params,
                                       Entanglement gamma) {
  QuantumReport r;
  r.entanglement = gamma;
  r.profile = QuantumBayesNash(params, gamma);
  const QuantumProfile& x = r.profile;

  r.vs_high = StrategiesToQuantities(x.x1, x.x2H, gamma);
  r.vs_low = StrategiesToQuantities(x.x1, x.x2L, gamma);
  r.u1_vs_high = QuantumProfit(x.x1, x.x2H, gamma, CostType::kHigh, params,
                               Player::kFirm1);
  r.u1_vs_low = QuantumProfit(x.x1, x.x2L, gamma, CostType::kLow, params,
                              Player::kFirm1);
  r.u2H = QuantumProfit(x.x1, x.x2H, gamma, CostType::kHigh, params,
                        Player::kFirm2);
  r.u2L = QuantumProfit(x.x1, x.x2L, gamma, CostType::kLow, params,
                        Player::kFirm2);

  const double theta = params.theta;
  r.average.u1_bar = theta * r.u1_vs_high + (1.0 - theta) * r.u1_vs_low;
  r.average.u2_bar = theta * r.u2H + (1.0 - theta) * r.u2L;
  return r;
}

AverageProfits ComputeAverageProfits(Entanglement gamma, double s, double k) {
  const double k2 = k * k;
  const double u1 = k2 * NormalizedU1(gamma.gamma(), s);
  return {u1, u1 + k2 * s / 4.0};
}

AverageProfits ComputeAverageProfits(Entanglement gamma,
                                     const MarketParams& params) {
  const DerivedConstants d = DeriveConstants(params);
  return ComputeAverageProfits(gamma, d.s, d.CommonMargin());
}

double ProfitGammaDerivative(Entanglement gamma, double s, double k) {
  const double z = std::exp(-2.0 * gamma.gamma());
  return z * k * k / 4.0 * DerivativeBracket(gamma.gamma(), s);
}

std::pair<double, double> Thresholds() {
  return {kThresholdMax, kThresholdCrossing};
}

std::optional<double> FindGammaM(double s, double k, double tol) {
  CheckMargin(k);
  CheckTolerance(tol);
  if (!(s >= 0.0 && s <= kThresholdMax)) {
    std::ostringstream msg;
    msg << "gamma_m needs 0 <= s <= 4/27, got s=" << s;
    throw Error(ErrorCode::kOutOfRange, msg.str());
  }
  if (s == 0.0) return std::nullopt;
  if (s == kThresholdMax) return 0.0;

  auto bracket = [s](double g) { return DerivativeBracket(g, s); };
  double hi = 0.0;
  if (!ExpandBracket(bracket, 1.0, kGammaLimit, &hi)) {
    // s is positive, so this is reachable only through underflow of s
    // itself relative to z.
    return std::nullopt;
  }
  RequireSingleCrossing(bracket, 0.0, hi);
  return Bisect(bracket, 0.0, hi, tol);
}

std::optional<double> FindGammaC(double s, double k, double tol) {
  CheckMargin(k);
  CheckTolerance(tol);
  if (!(s > kThresholdCrossing && s < kThresholdMax)) return std::nullopt;

  const double gamma_m = *FindGammaM(s, k, tol);
  auto gap = [s](double g) { return NormalizedU1(g, s) - 1.0 / 9.0; };
  double hi = 0.0;
  const double start = gamma_m > 0.5 ? 2.0 * gamma_m : 1.0;
  if (!ExpandBracket(gap, start, kGammaLimit, &hi)) {
    // s so close to 1/9 that the limit profit rounds to the classical one.
    return std::nullopt;
  }
  RequireSingleCrossing(gap, gamma_m, hi);
  return Bisect(gap, gamma_m, hi, tol);
}

AverageProfits AsymptoticProfits(double s, double k) {
  const double k2 = k * k;
  return {k2 * (1.0 - s) / 8.0, k2 * (1.0 + s) / 8.0};
}

}  // namespace cournotq
