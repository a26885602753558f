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

#ifndef COURNOTQ_CLASSICAL_HPP_
#define COURNOTQ_CLASSICAL_HPP_

#include "cournotq/market.hpp"

namespace cournotq {

// Bayes-Nash quantities: firm 1 plays q1, firm 2 plays q2H or q2L by type.
struct ClassicalProfile {
  double q1 = 0.0;
  double q2H = 0.0;
  double q2L = 0.0;
};

struct ClassicalReport {
  ClassicalProfile profile;
  double u1_expected = 0.0;  // theta u1(q1, q2H) + (1 - theta) u1(q1, q2L)
  double u2H = 0.0;
  double u2L = 0.0;
  double u2_average = 0.0;  // theta u2H + (1 - theta) u2L
};

// Quantity and payoff of a symmetric outcome.
struct SymmetricOutcome {
  double quantity = 0.0;
  double payoff = 0.0;
};

// Closed-form Bayes-Nash equilibrium under one-sided cost uncertainty.
// Throws NonInteriorEquilibrium if a quantity is negative or total output
// in either cost realization leaves the a - Q branch of demand.
ClassicalProfile ClassicalBayesNash(const MarketParams& params);

// Profits are composed from Profit() rather than pre-simplified.
ClassicalReport ClassicalExpectedProfits(const ClassicalProfile& profile,
                                         const MarketParams& params);

// (k/3, k^2/9). Throws NonPositiveMargin for k <= 0.
SymmetricOutcome SymmetricNash(double k);

// Joint-profit maximum (k/4, k^2/8). Throws NonPositiveMargin for k <= 0.
SymmetricOutcome ParetoOptimum(double k);

}  // namespace cournotq

#endif  // COURNOTQ_CLASSICAL_HPP_
