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
#include <random>

#include "cournotq/classical.hpp"
#include "cournotq/verify.hpp"
#include "doctest.h"
#include "test_util.hpp"

namespace cournotq {
namespace {

using testing::LiteralDerivative;
using testing::LiteralU1Bar;
using testing::ThrownCode;

Entanglement G(double gamma) { return Entanglement::FromGamma(gamma); }

// k = 90, delta = 10, theta = 1/2 with k1 = k2: c1 = E[c2] = 10.
const MarketParams kCommon{100.0, 10.0, 15.0, 5.0, 0.5};
const MarketParams kExample{100.0, 10.0, 20.0, 10.0, 0.5};

// Equilibrium strategies exactly as usually printed, in cosh/exp form.
QuantumProfile LiteralEquilibrium(double k, double theta, double delta,
                                  double gamma) {
  const double e2 = std::exp(2.0 * gamma);
  const double den = 2.0 * std::exp(gamma) * (1.0 + 2.0 * e2);
  return {k * std::cosh(gamma) / (1.0 + 2.0 * e2),
          (k - (1.0 - theta) * delta + e2 * (k - 2.0 * (1.0 - theta) * delta)) /
              den,
          (k + theta * delta + e2 * (k + 2.0 * theta * delta)) / den};
}

TEST_CASE("entanglement construction") {
  CHECK(G(0.0).tanh_gamma() == 0.0);
  CHECK(std::abs(G(1.3).tanh_gamma() - std::tanh(1.3)) <= 1e-12);
  const Entanglement from_t = Entanglement::FromTanh(0.5);
  CHECK(std::abs(from_t.gamma() - std::atanh(0.5)) <= 1e-15);
  CHECK(ThrownCode([] { G(-0.1); }) == ErrorCode::kOutOfRange);
  CHECK(ThrownCode([] { Entanglement::FromTanh(1.0); }) ==
        ErrorCode::kOutOfRange);
  CHECK(ThrownCode([] { Entanglement::FromTanh(-0.2); }) ==
        ErrorCode::kOutOfRange);
}

TEST_CASE("strategies to quantities") {
  const Quantities id = StrategiesToQuantities(3.0, 7.0, G(0.0));
  CHECK(id.q1 == 3.0);
  CHECK(id.q2 == 7.0);

  const Quantities ln2 = StrategiesToQuantities(1.0, 0.0, G(std::log(2.0)));
  CHECK(ln2.q1 == doctest::Approx(1.25).epsilon(1e-14));
  CHECK(ln2.q2 == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(ln2.q1 + ln2.q2 == doctest::Approx(2.0).epsilon(1e-14));

  for (double g : {0.1, 0.7, 2.5}) {
    const Quantities sym = StrategiesToQuantities(4.0, 4.0, G(g));
    CHECK(sym.q1 == doctest::Approx(4.0 * std::exp(g)).epsilon(1e-14));
    CHECK(sym.q2 == doctest::Approx(4.0 * std::exp(g)).epsilon(1e-14));
    const Quantities q = StrategiesToQuantities(2.0, 5.0, G(g));
    CHECK(q.q1 + q.q2 == doctest::Approx(7.0 * std::exp(g)).epsilon(1e-14));
  }
  CHECK(ThrownCode([] { StrategiesToQuantities(-1.0, 0.0, G(0.0)); }) ==
        ErrorCode::kNegativeStrategy);
}

TEST_CASE("quantum profit") {
  const MarketParams symmetric{100.0, 10.0, 10.0, 10.0, 0.5};
  // gamma = 0 is the classical profit.
  CHECK(QuantumProfit(20.0, 35.0, G(0.0), CostType::kHigh, kExample,
                      Player::kFirm1) == Profit(20.0, 35.0, 10.0, 100.0));
  CHECK(QuantumProfit(20.0, 35.0, G(0.0), CostType::kHigh, kExample,
                      Player::kFirm2) == Profit(35.0, 20.0, 20.0, 100.0));
  // x = (k/4) e^{-gamma} puts each firm at the Pareto quantity k/4.
  for (double g : {0.0, 0.3, 1.0, 3.0}) {
    const double x = 22.5 * std::exp(-g);
    CHECK(QuantumProfit(x, x, G(g), CostType::kLow, symmetric,
                        Player::kFirm1) == doctest::Approx(1012.5));
    CHECK(QuantumProfit(x, x, G(g), CostType::kLow, symmetric,
                        Player::kFirm2) == doctest::Approx(1012.5));
  }
  CHECK(QuantumProfit(0.0, 0.0, G(1.0), CostType::kHigh, symmetric,
                      Player::kFirm1) == 0.0);
  CHECK(QuantumProfit(0.0, 0.0, G(1.0), CostType::kHigh, symmetric,
                      Player::kFirm2) == 0.0);
}

TEST_CASE("quantum bayes-nash examples") {
  const MarketParams symmetric{100.0, 10.0, 10.0, 10.0, 0.3};
  const QuantumProfile zero = QuantumBayesNash(symmetric, G(0.0));
  CHECK(zero.x1 == doctest::Approx(30.0).epsilon(1e-14));
  CHECK(zero.x2H == doctest::Approx(30.0).epsilon(1e-14));
  CHECK(zero.x2L == doctest::Approx(30.0).epsilon(1e-14));

  // gamma = 0, k = 90, delta = 10, theta = 1/2: (30, 165/6, 195/6).
  const QuantumProfile ex = QuantumBayesNash(kCommon, G(0.0));
  CHECK(ex.x1 == doctest::Approx(30.0).epsilon(1e-14));
  CHECK(ex.x2H == doctest::Approx(27.5).epsilon(1e-14));
  CHECK(ex.x2L == doctest::Approx(32.5).epsilon(1e-14));
  const ClassicalProfile classical = ClassicalBayesNash(kCommon);
  CHECK(classical.q1 == doctest::Approx(ex.x1).epsilon(1e-14));
  CHECK(classical.q2H == doctest::Approx(ex.x2H).epsilon(1e-14));
  CHECK(classical.q2L == doctest::Approx(ex.x2L).epsilon(1e-14));

  for (double g : {0.4, 1.0, 5.0}) {
    const QuantumProfile s = QuantumBayesNash(symmetric, G(g));
    CHECK(s.x1 == doctest::Approx(s.x2H).epsilon(1e-14));
    CHECK(s.x1 == doctest::Approx(s.x2L).epsilon(1e-14));
  }

  // gamma = 1 reference from 50-digit arithmetic.
  const QuantumProfile one = QuantumBayesNash(kCommon, G(1.0));
  CHECK(one.x1 == doctest::Approx(8.8018931157173889).epsilon(1e-13));
  CHECK(one.x2H == doctest::Approx(7.8821945127887831).epsilon(1e-13));
  CHECK(one.x2L == doctest::Approx(9.7215917186459947).epsilon(1e-13));
}

TEST_CASE("rewritten equilibrium matches the literal expressions") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const MarketParams p = verify::RandomCommonMarginParams(rng);
    const DerivedConstants d = DeriveConstants(p);
    for (double g : {0.0, 0.25, 1.0, 3.0, 8.0}) {
      const QuantumProfile x = QuantumBayesNash(p, G(g));
      const QuantumProfile ref = LiteralEquilibrium(d.k1, p.theta, d.delta, g);
      CHECK(x.x1 == doctest::Approx(ref.x1).epsilon(1e-12));
      CHECK(x.x2H == doctest::Approx(ref.x2H).epsilon(1e-12));
      CHECK(x.x2L == doctest::Approx(ref.x2L).epsilon(1e-12));
    }
  }
}

TEST_CASE("quantum bayes-nash errors") {
  const MarketParams asymmetric{100.0, 10.0, 20.0, 10.0, 0.5};
  CHECK(ThrownCode([&] { QuantumBayesNash(asymmetric, G(0.5)); }) ==
        ErrorCode::kAsymmetricMargins);
  // Large (1 - theta) delta drives x2H negative: k = 50, delta = 40.
  const MarketParams wide{100.0, 50.0, 86.0, 46.0, 0.1};
  CHECK(std::abs(DeriveConstants(wide).k1 - DeriveConstants(wide).k2) < 1e-12);
  CHECK(ThrownCode([&] { QuantumBayesNash(wide, G(1.0)); }) ==
        ErrorCode::kNonInteriorEquilibrium);
}

TEST_CASE("first-order conditions hold at the closed form") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 20; ++i) {
    const MarketParams p = verify::RandomCommonMarginParams(rng);
    for (double g : {0.0, 0.5, 1.0, 2.0}) {
      const Entanglement gamma = G(g);
      const QuantumProfile x = QuantumBayesNash(p, gamma);
      const double h = 1e-4 * p.a;
      auto u1 = [&](double x1) {
        return p.theta * QuantumProfit(x1, x.x2H, gamma, CostType::kHigh, p,
                                       Player::kFirm1) +
               (1.0 - p.theta) * QuantumProfit(x1, x.x2L, gamma,
                                               CostType::kLow, p,
                                               Player::kFirm1);
      };
      auto u2H = [&](double x2) {
        return QuantumProfit(x.x1, x2, gamma, CostType::kHigh, p,
                             Player::kFirm2);
      };
      auto u2L = [&](double x2) {
        return QuantumProfit(x.x1, x2, gamma, CostType::kLow, p,
                             Player::kFirm2);
      };
      // Central differences of quadratics are exact up to rounding.
      const double scale = p.a * p.a * std::exp(2.0 * g);
      CHECK(std::abs(u1(x.x1 + h) - u1(x.x1 - h)) / (2 * h) <= 1e-9 * scale);
      CHECK(std::abs(u2H(x.x2H + h) - u2H(x.x2H - h)) / (2 * h) <=
            1e-9 * scale);
      CHECK(std::abs(u2L(x.x2L + h) - u2L(x.x2L - h)) / (2 * h) <=
            1e-9 * scale);
      CHECK(u1(x.x1 + h) < u1(x.x1));
      CHECK(u2H(x.x2H - h) < u2H(x.x2H));
    }
  }
}

TEST_CASE("average profits") {
  for (double s : {0.0, 0.1, 0.7, 2.0}) {
    const AverageProfits u = ComputeAverageProfits(G(0.0), s, 3.0);
    CHECK(u.u1_bar == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(u.u2_bar == doctest::Approx(1.0 + 9.0 * s / 4.0).epsilon(1e-14));
  }
  for (double s : {0.0, 0.5, 1.0, 2.0}) {
    const double k = 7.0;
    const AverageProfits u = ComputeAverageProfits(G(20.0), s, k);
    CHECK(std::abs(u.u1_bar - k * k * (1.0 - s) / 8.0) <= 1e-8 * k * k);
    CHECK(std::abs(u.u2_bar - k * k * (1.0 + s) / 8.0) <= 1e-8 * k * k);
  }
  // Against the literal cosh/sinh expression.
  for (double g = 0.0; g <= 15.0; g += 0.37) {
    for (double s : {0.0, 0.05, 0.13, 0.4, 1.5}) {
      CHECK(ComputeAverageProfits(G(g), s, 2.0).u1_bar ==
            doctest::Approx(LiteralU1Bar(g, s, 2.0)).epsilon(1e-12));
    }
  }
}

TEST_CASE("average profits agree with the composed equilibrium profits") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 30; ++i) {
    const MarketParams p = verify::RandomCommonMarginParams(rng);
    const double k = DeriveConstants(p).k1;
    for (double g : {0.0, 0.3, 1.0, 2.0, 6.0}) {
      const QuantumReport r = QuantumEquilibriumReport(p, G(g));
      const AverageProfits reduced = ComputeAverageProfits(G(g), p);
      CHECK(std::abs(r.average.u1_bar - reduced.u1_bar) <= 1e-10 * k * k);
      CHECK(std::abs(r.average.u2_bar - reduced.u2_bar) <= 1e-10 * k * k);
      CHECK(r.vs_high.q1 - r.vs_low.q1 ==
            doctest::Approx((r.profile.x2H - r.profile.x2L) * std::sinh(g))
                .epsilon(1e-10)
                .scale(k));
    }
  }
  CHECK(ThrownCode([] {
          ComputeAverageProfits(G(1.0), MarketParams{100, 10, 20, 10, 0.5});
        }) == ErrorCode::kAsymmetricMargins);
}

TEST_CASE("constant gap on a dense grid") {
  const double k = 5.0;
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    for (int j = 0; j < 200; ++j) {
      const double g = 20.0 * i / 199.0;
      const double s = 2.0 * j / 199.0;
      const AverageProfits u = ComputeAverageProfits(G(g), s, k);
      worst = std::max(worst, std::abs(u.u2_bar - u.u1_bar - k * k * s / 4.0));
    }
  }
  CHECK(worst <= 1e-9 * k * k);
}

TEST_CASE("gamma derivative") {
  for (double k : {1.0, 3.0}) {
    CHECK(ProfitGammaDerivative(G(0.0), 0.05, k) ==
          doctest::Approx(k * k / 4.0 * (4.0 / 27.0 - 0.05)).epsilon(1e-14));
  }
  CHECK(ProfitGammaDerivative(G(0.0), 4.0 / 27.0, 1.0) == 0.0);
  for (double g : {0.1, 0.5, 1.0}) {
    CHECK(ProfitGammaDerivative(G(g), 0.2, 1.0) < 0.0);
  }
  // 50-digit references.
  CHECK(ProfitGammaDerivative(G(1.0), 0.0, 1.0) ==
        doctest::Approx(0.0018811518058814752).epsilon(1e-13));
  CHECK(ProfitGammaDerivative(G(0.5), 4.0 / 27.0, 1.0) ==
        doctest::Approx(-0.0034314544531632217).epsilon(1e-13));

  // Literal form and an independent central difference of the literal u1.
  for (double s : {0.0, 0.05, 1.0 / 9.0, 4.0 / 27.0, 0.3}) {
    for (double g = 0.0; g <= 5.0; g += 0.05) {
      const double analytic = ProfitGammaDerivative(G(g), s, 2.0);
      CHECK(std::abs(analytic - LiteralDerivative(g, s, 2.0)) <= 1e-13);
      if (g >= 1e-5) {
        const double h = 1e-5;
        const double fd =
            (LiteralU1Bar(g + h, s, 2.0) - LiteralU1Bar(g - h, s, 2.0)) /
            (2 * h);
        CHECK(std::abs(analytic - fd) <= 1e-5 * 4.0);
      }
    }
  }
  // Strictly decreasing above s_m.
  for (double s : {4.0 / 27.0 + 1e-6, 0.2, 1.0}) {
    for (double g = 0.01; g <= 10.0; g += 0.01) {
      CHECK(ProfitGammaDerivative(G(g), s, 1.0) < 0.0);
    }
  }
}

TEST_CASE("thresholds") {
  const auto [s_m, s_c] = Thresholds();
  CHECK(s_m == doctest::Approx(0.148148148148).epsilon(1e-11));
  CHECK(s_c == doctest::Approx(0.111111111111).epsilon(1e-11));
  CHECK(s_m == 4.0 / 27.0);
  CHECK(s_c == 1.0 / 9.0);
  CHECK(s_c < s_m);
}

TEST_CASE("gamma_m") {
  CHECK(FindGammaM(4.0 / 27.0, 1.0).value() == 0.0);
  CHECK_FALSE(FindGammaM(0.0, 1.0).has_value());
  CHECK(ThrownCode([] { FindGammaM(-0.01, 1.0); }) == ErrorCode::kOutOfRange);
  CHECK(ThrownCode([] { FindGammaM(0.2, 1.0); }) == ErrorCode::kOutOfRange);
  CHECK(ThrownCode([] { FindGammaM(0.1, 1.0, 0.0); }) ==
        ErrorCode::kNonPositiveTolerance);
  CHECK(ThrownCode([] { FindGammaM(0.1, 0.0); }) ==
        ErrorCode::kNonPositiveMargin);

  const double gamma_m = FindGammaM(0.05, 1.0).value();
  CHECK(gamma_m == doctest::Approx(1.0646538112824195).epsilon(1e-9));
  CHECK(FindGammaM(0.13, 2.0).value() ==
        doctest::Approx(0.32671642832903978).epsilon(1e-9));
  // Sign change of the derivative across gamma_m.
  CHECK(ProfitGammaDerivative(G(gamma_m - 1e-6), 0.05, 1.0) > 0.0);
  CHECK(ProfitGammaDerivative(G(gamma_m + 1e-6), 0.05, 1.0) < 0.0);
  // Maximum of u1_bar over a 10^3-point gamma grid sits next to gamma_m.
  double best_g = 0.0;
  double best_u = -1.0;
  for (int i = 0; i < 1000; ++i) {
    const double g = 5.0 * i / 999.0;
    const double u = LiteralU1Bar(g, 0.05, 1.0);
    if (u > best_u) {
      best_u = u;
      best_g = g;
    }
  }
  CHECK(std::abs(best_g - gamma_m) <= 5.0 / 999.0);
  CHECK(ComputeAverageProfits(G(gamma_m), 0.05, 1.0).u1_bar >= best_u - 1e-15);

  // Tiny s pushes the root far out without failing.
  const double far = FindGammaM(1e-12, 1.0).value();
  CHECK(std::abs(ProfitGammaDerivative(G(far), 1e-12, 1.0)) < 1e-20);
}

TEST_CASE("gamma_c") {
  CHECK_FALSE(FindGammaC(0.05, 1.0).has_value());
  CHECK_FALSE(FindGammaC(1.0 / 9.0, 1.0).has_value());
  CHECK_FALSE(FindGammaC(4.0 / 27.0, 1.0).has_value());
  CHECK_FALSE(FindGammaC(0.2, 1.0).has_value());
  CHECK(ThrownCode([] { FindGammaC(0.13, 1.0, -1.0); }) ==
        ErrorCode::kNonPositiveTolerance);

  const double k = 3.0;
  const double gamma_c = FindGammaC(0.13, k).value();
  const double gamma_m = FindGammaM(0.13, k).value();
  CHECK(gamma_c == doctest::Approx(0.75203869838813704).epsilon(1e-9));
  CHECK(gamma_m < gamma_c);
  CHECK(std::abs(ComputeAverageProfits(G(gamma_c), 0.13, k).u1_bar -
                 k * k / 9.0) <= 1e-10 * k * k);
  for (int i = 1; i < 100; ++i) {
    const double inside = gamma_c * i / 100.0;
    const double outside = gamma_c + 5.0 * i / 100.0;
    CHECK(LiteralU1Bar(inside, 0.13, k) > k * k / 9.0);
    CHECK(LiteralU1Bar(outside, 0.13, k) < k * k / 9.0);
  }

  // Just above s_c the crossing moves far out but stays finite.
  const double near = FindGammaC(1.0 / 9.0 + 1e-6, 1.0).value();
  CHECK(near > 3.0);
  CHECK(std::abs(ComputeAverageProfits(G(near), 1.0 / 9.0 + 1e-6, 1.0).u1_bar -
                 1.0 / 9.0) <= 1e-12);
}

TEST_CASE("asymptotic profits") {
  const double k = 2.0;
  CHECK(AsymptoticProfits(0.0, k).u1_bar == 0.5);
  CHECK(AsymptoticProfits(0.0, k).u2_bar == 0.5);
  CHECK(AsymptoticProfits(1.0, k).u1_bar == 0.0);
  CHECK(AsymptoticProfits(1.0, k).u2_bar == 1.0);
  CHECK(AsymptoticProfits(2.0, k).u1_bar == -0.5);
  CHECK(AsymptoticProfits(2.0, k).u2_bar == 1.5);

  // Decay towards the limit is O(e^{-2 gamma}) with constant s/8 <= 2.
  for (double s : {0.0, 0.5, 1.0, 2.0, 10.0}) {
    for (double g = 5.0; g <= 15.0; g += 0.5) {
      const double gap = std::abs(ComputeAverageProfits(G(g), s, k).u1_bar -
                                  AsymptoticProfits(s, k).u1_bar);
      CHECK(gap <= 2.0 * std::exp(-2.0 * g) * k * k);
    }
  }
}

TEST_CASE("s-independent part rises and s-slope falls in gamma") {
  // u1_bar(gamma, s) = A(gamma) + B(gamma) s.
  double prev_a = -1.0;
  double prev_b = 1.0;
  for (int i = 0; i <= 2000; ++i) {
    const double g = 20.0 * i / 2000.0;
    const double a = ComputeAverageProfits(G(g), 0.0, 1.0).u1_bar;
    const double b = ComputeAverageProfits(G(g), 1.0, 1.0).u1_bar - a;
    CHECK(a >= prev_a - 1e-16);
    CHECK(b <= prev_b + 1e-16);
    prev_a = a;
    prev_b = b;
  }
}

TEST_CASE("gamma = 0 reduction for random markets") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 20; ++i) {
    const MarketParams p = verify::RandomCommonMarginParams(rng);
    const QuantumProfile x = QuantumBayesNash(p, G(0.0));
    const ClassicalProfile q = ClassicalBayesNash(p);
    const Quantities high = StrategiesToQuantities(x.x1, x.x2H, G(0.0));
    const Quantities low = StrategiesToQuantities(x.x1, x.x2L, G(0.0));
    CHECK(std::abs(high.q1 - q.q1) <= 1e-10);
    CHECK(std::abs(low.q1 - q.q1) <= 1e-10);
    CHECK(std::abs(high.q2 - q.q2H) <= 1e-10);
    CHECK(std::abs(low.q2 - q.q2L) <= 1e-10);
  }
}

}  // namespace
}  // namespace cournotq
