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

#include "cournotq/verify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <sstream>
#include <utility>

#include "cournotq/classical.hpp"
#include "cournotq/quantum.hpp"

namespace cournotq::verify {

namespace {

// Accumulates error/tolerance pairs; the worst ratio is reported.
class Check {
 public:
  Check(std::string name, const Options& options)
      : override_(options.tol_override) {
    result_.name = std::move(name);
    result_.passed = true;
  }

  void Compare(double error, double tolerance, const std::string& where) {
    const double tol = override_.value_or(tolerance);
    const double ratio = error / tol;
    if (!(error <= tol)) {
      if (result_.passed) result_.detail = where;
      result_.passed = false;
    }
    if (!(ratio <= worst_ratio_)) {
      worst_ratio_ = ratio;
      result_.max_error = error;
      result_.tolerance = tol;
    }
  }

  void Fail(const std::string& why) {
    result_.passed = false;
    result_.detail = why;
  }

  CheckResult Finish() && { return std::move(result_); }

 private:
  std::optional<double> override_;
  CheckResult result_;
  double worst_ratio_ = -1.0;
};

CheckResult Guarded(const std::string& name, const Options& options,
                    const std::function<void(Check&)>& body) {
  Check check(name, options);
  try {
    body(check);
  } catch (const std::exception& e) {
    check.Fail(std::string("exception: ") + e.what());
  }
  return std::move(check).Finish();
}

std::string Describe(const MarketParams& p, double gamma) {
  std::ostringstream out;
  out << "a=" << p.a << " c1=" << p.c1 << " cH=" << p.cH << " cL=" << p.cL
      << " theta=" << p.theta << " gamma=" << gamma;
  return out.str();
}

double MaxComponentError(const QuantumProfile& a, const QuantumProfile& b) {
  return std::max({std::abs(a.x1 - b.x1), std::abs(a.x2H - b.x2H),
                   std::abs(a.x2L - b.x2L)});
}

struct Plan {
  int param_sets;
  std::vector<double> gammas;
  int gap_grid;
};

Plan MakePlan(Depth depth) {
  if (depth == Depth::kQuick) return {3, {0.0, 1.0}, 50};
  return {20, {0.0, 0.5, 1.0, 2.0}, 200};
}

CheckResult ClassicalVsOracle(const Options& o, const Plan& plan,
                              std::mt19937_64& rng) {
  return Guarded("classical_vs_oracle", o, [&](Check& check) {
    const Entanglement classical = Entanglement::FromGamma(0.0);
    for (int i = 0; i < plan.param_sets; ++i) {
      const MarketParams p = RandomInteriorParams(rng);
      const ClassicalProfile closed = ClassicalBayesNash(p);
      const oracle::FixedPointResult found = oracle::FixedPointBayesNash(
          p, classical, oracle::GridSpec::Over(p), PreciseFixedPoint());
      const QuantumProfile as_quantum{closed.q1, closed.q2H, closed.q2L};
      check.Compare(MaxComponentError(found.profile, as_quantum),
                    2.0 * found.resolution, Describe(p, 0.0));
    }
  });
}

CheckResult QuantumVsOracle(const Options& o, const Plan& plan,
                            std::mt19937_64& rng) {
  return Guarded("quantum_vs_oracle", o, [&](Check& check) {
    for (int i = 0; i < plan.param_sets; ++i) {
      const MarketParams p = RandomCommonMarginParams(rng);
      for (double g : plan.gammas) {
        const Entanglement gamma = Entanglement::FromGamma(g);
        const QuantumProfile closed = QuantumBayesNash(p, gamma);
        const oracle::FixedPointResult found = oracle::FixedPointBayesNash(
            p, gamma, oracle::GridSpec::Over(p), PreciseFixedPoint());
        check.Compare(MaxComponentError(found.profile, closed),
                      2.0 * found.resolution, Describe(p, g));
      }
    }
  });
}

CheckResult ClassicalReduction(const Options& o, const Plan& plan,
                               std::mt19937_64& rng) {
  return Guarded("gamma0_reduction", o, [&](Check& check) {
    const Entanglement zero = Entanglement::FromGamma(0.0);
    for (int i = 0; i < std::max(plan.param_sets, 20); ++i) {
      const MarketParams p = RandomCommonMarginParams(rng);
      const QuantumProfile x = QuantumBayesNash(p, zero);
      const ClassicalProfile q = ClassicalBayesNash(p);
      const Quantities vs_high = StrategiesToQuantities(x.x1, x.x2H, zero);
      const Quantities vs_low = StrategiesToQuantities(x.x1, x.x2L, zero);
      const double err = std::max(
          {std::abs(vs_high.q1 - q.q1), std::abs(vs_low.q1 - q.q1),
           std::abs(vs_high.q2 - q.q2H), std::abs(vs_low.q2 - q.q2L)});
      check.Compare(err, 1e-10, Describe(p, 0.0));
    }
  });
}

CheckResult ComposedProfits(const Options& o, const Plan& plan,
                            std::mt19937_64& rng) {
  return Guarded("composed_vs_reduced_profits", o, [&](Check& check) {
    for (int i = 0; i < plan.param_sets; ++i) {
      const MarketParams p = RandomCommonMarginParams(rng);
      const double k = DeriveConstants(p).CommonMargin();
      for (double g : plan.gammas) {
        const Entanglement gamma = Entanglement::FromGamma(g);
        const QuantumReport composed = QuantumEquilibriumReport(p, gamma);
        const AverageProfits reduced = ComputeAverageProfits(gamma, p);
        const double err =
            std::max(std::abs(composed.average.u1_bar - reduced.u1_bar),
                     std::abs(composed.average.u2_bar - reduced.u2_bar));
        check.Compare(err, 1e-9 * k * k, Describe(p, g));
      }
    }
  });
}

CheckResult DerivativeVsFiniteDifference(const Options& o, const Plan& plan) {
  return Guarded("derivative_vs_finite_difference", o, [&](Check& check) {
    const double k = 1.0;
    const double h = 1e-5;
    const int samples = plan.gap_grid;
    for (double s : {0.0, 0.05, 1.0 / 9.0, 4.0 / 27.0, 0.3}) {
      for (int i = 0; i < samples; ++i) {
        const double g = 0.01 + (5.0 - 0.01) * i / (samples - 1);
        const Entanglement gamma = Entanglement::FromGamma(g);
        const double analytic = ProfitGammaDerivative(gamma, s, k);
        const double numeric = oracle::FiniteDiffGamma(s, k, gamma, h);
        std::ostringstream where;
        where << "s=" << s << " gamma=" << g;
        check.Compare(std::abs(analytic - numeric), 1e-5 * k * k, where.str());
      }
    }
  });
}

CheckResult ConstantGap(const Options& o, const Plan& plan) {
  return Guarded("constant_gap", o, [&](Check& check) {
    const double k = 3.0;
    const int n = plan.gap_grid;
    for (int i = 0; i < n; ++i) {
      const Entanglement gamma = Entanglement::FromGamma(20.0 * i / (n - 1));
      for (int j = 0; j < n; ++j) {
        const double s = 2.0 * j / (n - 1);
        const AverageProfits u = ComputeAverageProfits(gamma, s, k);
        std::ostringstream where;
        where << "s=" << s << " gamma=" << gamma.gamma();
        check.Compare(std::abs((u.u2_bar - u.u1_bar) - k * k * s / 4.0),
                      1e-9 * k * k, where.str());
      }
    }
  });
}

CheckResult AsymptoticLimit(const Options& o) {
  return Guarded("asymptotic_limit", o, [&](Check& check) {
    const double k = 1.0;
    const Entanglement far = Entanglement::FromGamma(20.0);
    for (double s : {0.0, 0.5, 1.0, 2.0}) {
      const AverageProfits u = ComputeAverageProfits(far, s, k);
      const AverageProfits limit = AsymptoticProfits(s, k);
      std::ostringstream where;
      where << "s=" << s;
      check.Compare(std::max(std::abs(u.u1_bar - limit.u1_bar),
                             std::abs(u.u2_bar - limit.u2_bar)),
                    1e-7 * k * k, where.str());
    }
  });
}

CheckResult ThresholdCrossing(const Options& o) {
  return Guarded("threshold_crossing", o, [&](Check& check) {
    const double k = 1.0;
    const double s = 0.13;
    const auto gamma_m = FindGammaM(s, k);
    const auto gamma_c = FindGammaC(s, k);
    if (!gamma_m || !gamma_c) {
      check.Fail("gamma_m or gamma_c missing for s=0.13");
      return;
    }
    if (!(*gamma_m < *gamma_c)) {
      check.Fail("gamma_m >= gamma_c for s=0.13");
      return;
    }
    const AverageProfits at_c =
        ComputeAverageProfits(Entanglement::FromGamma(*gamma_c), s, k);
    check.Compare(std::abs(at_c.u1_bar - k * k / 9.0), 1e-8 * k * k,
                  "u1_bar(gamma_c) vs k^2/9");
    const double slope =
        ProfitGammaDerivative(Entanglement::FromGamma(*gamma_m), s, k);
    check.Compare(std::abs(slope), 1e-8 * k * k, "derivative at gamma_m");
  });
}

CheckResult NoiseVariance(const Options& o, const Plan& plan) {
  return Guarded("noise_variance", o, [&](Check& check) {
    const std::size_t n = plan.param_sets >= 20 ? 100000 : 20000;
    std::uint64_t seed = o.seed;
    for (double r : {0.0, 0.5, 1.0, 2.0}) {
      const oracle::NoiseModel noise{r, seed++};
      const oracle::SampleStats stats = oracle::SampleQuantity(10.0, noise, n);
      const double expected = noise.variance();
      const double std_error = expected * std::sqrt(2.0 / (n - 1));
      std::ostringstream where;
      where << "r=" << r;
      check.Compare(std::abs(stats.variance - expected), 3.0 * std_error,
                    where.str());
    }
  });
}

}  // namespace

bool Report::AllPassed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

MarketParams RandomCommonMarginParams(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  MarketParams p;
  p.a = 20.0 + 180.0 * unit(rng);
  p.theta = 0.05 + 0.9 * unit(rng);
  p.cL = 0.4 * p.a * unit(rng);
  p.cH = p.cL + 0.25 * (p.a - p.cL) * unit(rng);
  p.c1 = p.theta * p.cH + (1.0 - p.theta) * p.cL;
  return Validate(p);
}

MarketParams RandomInteriorParams(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (;;) {
    MarketParams p;
    p.a = 20.0 + 180.0 * unit(rng);
    p.theta = 0.05 + 0.9 * unit(rng);
    p.cL = 0.4 * p.a * unit(rng);
    p.cH = p.cL + 0.25 * (p.a - p.cL) * unit(rng);
    p.c1 = 0.4 * p.a * unit(rng);
    try {
      const ClassicalProfile q = ClassicalBayesNash(Validate(p));
      // Keep clear of the boundary so the oracle's search stays interior.
      if (std::min({q.q1, q.q2H, q.q2L}) > 0.05 * p.a) return p;
    } catch (const Error&) {
    }
  }
}

oracle::FixedPointConfig PreciseFixedPoint() {
  oracle::FixedPointConfig cfg;
  cfg.tol = 1e-12;
  cfg.max_iters = 10000;
  return cfg;
}

Report Run(const Options& options) {
  const Plan plan = MakePlan(options.depth);
  std::mt19937_64 rng(options.seed);
  Report report;
  report.checks.push_back(ClassicalVsOracle(options, plan, rng));
  report.checks.push_back(QuantumVsOracle(options, plan, rng));
  report.checks.push_back(ClassicalReduction(options, plan, rng));
  report.checks.push_back(ComposedProfits(options, plan, rng));
  report.checks.push_back(DerivativeVsFiniteDifference(options, plan));
  report.checks.push_back(ConstantGap(options, plan));
  report.checks.push_back(AsymptoticLimit(options));
  report.checks.push_back(ThresholdCrossing(options));
  report.checks.push_back(NoiseVariance(options, plan));
  return report;
}

}  // namespace cournotq::verify
