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

// The entangled Cournot game in closed form.
//
// Each firm displaces its mode by x_j; the two-mode squeezing entangler with
// parameter gamma mixes the displacements so that the measured quantities
// are
//
//   q1 = x1 cosh(gamma) + x2 sinh(gamma)
//   q2 = x2 cosh(gamma) + x1 sinh(gamma).
//
// gamma = 0 is the classical game. Everything past the strategy mapping is
// the reduced form for k1 = k2 = k, where the iterated-game average profits
// depend on the market only through k and the asymmetry s.

#ifndef COURNOTQ_QUANTUM_HPP_
#define COURNOTQ_QUANTUM_HPP_

#include <optional>
#include <utility>

#include "cournotq/market.hpp"

namespace cournotq {

// Squeezing parameter gamma >= 0 together with tanh(gamma), the
// coordinate used by sweeps.
class Entanglement {
 public:
  // Throws OutOfRange for negative or non-finite gamma.
  static Entanglement FromGamma(double gamma);
  // t must lie in [0, 1); t = 1 (infinite squeezing) is not representable.
  static Entanglement FromTanh(double t);

  double gamma() const { return gamma_; }
  double tanh_gamma() const { return tanh_gamma_; }
  double cosh_gamma() const { return cosh_gamma_; }
  double sinh_gamma() const { return sinh_gamma_; }

 private:
  Entanglement(double gamma, double t);

  double gamma_;
  double tanh_gamma_;
  double cosh_gamma_;
  double sinh_gamma_;
};

// Strategies (displacements) of firm 1 and the two types of firm 2.
struct QuantumProfile {
  double x1 = 0.0;
  double x2H = 0.0;
  double x2L = 0.0;
};

struct AverageProfits {
  double u1_bar = 0.0;
  double u2_bar = 0.0;
};

struct Quantities {
  double q1 = 0.0;
  double q2 = 0.0;
};

// Full report of one quantum equilibrium, composed from QuantumProfit.
struct QuantumReport {
  Entanglement entanglement = Entanglement::FromGamma(0.0);
  QuantumProfile profile;
  Quantities vs_high;  // measured quantities when firm 2 is the high type
  Quantities vs_low;
  double u1_vs_high = 0.0;
  double u1_vs_low = 0.0;
  double u2H = 0.0;
  double u2L = 0.0;
  AverageProfits average;
};

// s_m: above it the average profits decrease in gamma everywhere.
inline constexpr double kThresholdMax = 4.0 / 27.0;
// s_c: below it the quantum game beats the classical one for all gamma > 0.
inline constexpr double kThresholdCrossing = 1.0 / 9.0;

// Tolerance in gamma for the root finders.
inline constexpr double kDefaultGammaTol = 1e-10;

// Throws NegativeStrategy if either strategy is negative.
Quantities StrategiesToQuantities(double x1, double x2, Entanglement gamma);

// Profit of `who` when firm 1 plays x1 and firm 2 plays x2 with cost `type`.
double QuantumProfit(double x1, double x2, Entanglement gamma, CostType type,
                     const MarketParams& params, Player who);

// Closed-form quantum Bayes-Nash equilibrium. Requires k1 = k2
// (AsymmetricMargins otherwise); throws NonInteriorEquilibrium when a
// strategy comes out negative.
QuantumProfile QuantumBayesNash(const MarketParams& params, Entanglement gamma);

QuantumReport QuantumEquilibriumReport(const MarketParams& params,
                                       Entanglement gamma);

// Iterated-game average profits in reduced form. u2_bar - u1_bar = k^2 s / 4
// for every gamma.
AverageProfits ComputeAverageProfits(Entanglement gamma, double s, double k);

// Reduction from market parameters; enforces k1 = k2.
AverageProfits ComputeAverageProfits(Entanglement gamma,
                                     const MarketParams& params);

// d u_bar / d gamma, identical for both firms.
double ProfitGammaDerivative(Entanglement gamma, double s, double k);

// (s_m, s_c) = (4/27, 1/9).
std::pair<double, double> Thresholds();

// Entanglement maximizing both average profits. nullopt for s = 0 (profits
// increase forever), 0 for s = s_m. Throws OutOfRange outside [0, s_m].
std::optional<double> FindGammaM(double s, double k,
                                 double tol = kDefaultGammaTol);

// Positive gamma at which u1_bar returns to the classical k^2/9. Exists only
// for s_c < s < s_m; nullopt otherwise.
std::optional<double> FindGammaC(double s, double k,
                                 double tol = kDefaultGammaTol);

// gamma -> infinity limit: (k^2 (1 - s) / 8, k^2 (1 + s) / 8).
AverageProfits AsymptoticProfits(double s, double k);

}  // namespace cournotq

#endif  // COURNOTQ_QUANTUM_HPP_
