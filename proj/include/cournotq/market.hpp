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

// Economic primitives of the Cournot duopoly with a privately known rival
// cost: inverse demand, per-firm profit and the derived margins.

#ifndef COURNOTQ_MARKET_HPP_
#define COURNOTQ_MARKET_HPP_

namespace cournotq {

// Absolute tolerance used for equality tests between derived quantities.
inline constexpr double kAbsTol = 1e-12;

// Firm 2's cost realization. Firm 1 only knows P(High) = theta.
enum class CostType { kHigh, kLow };

enum class Player { kFirm1, kFirm2 };

struct MarketParams {
  double a = 0.0;      // demand intercept
  double c1 = 0.0;     // firm 1 unit cost
  double cH = 0.0;     // firm 2 unit cost, high type
  double cL = 0.0;     // firm 2 unit cost, low type
  double theta = 0.0;  // probability that firm 2 is the high type

  double CostOf(CostType type) const { return type == CostType::kHigh ? cH : cL; }
};

struct DerivedConstants {
  double k1 = 0.0;     // a - c1
  double k2 = 0.0;     // a - E[c2]
  double delta = 0.0;  // cH - cL
  // Informational asymmetry theta (1 - theta) delta^2 / k1^2.
  double s = 0.0;
  // Set when k1 and k2 differ by more than kAbsTol * max(1, |k1|); s is then only a
  // nominal value and the reduced-form quantum results do not apply.
  bool k1_ne_k2 = false;

  // The common margin k; throws AsymmetricMargins when k1_ne_k2.
  double CommonMargin() const;
};

// Returns params unchanged, or throws InvalidParams naming the first
// violated constraint. NaN and infinite inputs are rejected.
MarketParams Validate(const MarketParams& params);

// Inverse demand: a - Q on [0, a], zero beyond the kink.
double Price(double total_quantity, double a);

// q_self * (P(q_self + q_other) - c_self). May be negative.
double Profit(double q_self, double q_other, double c_self, double a);

DerivedConstants DeriveConstants(const MarketParams& params);

// theta (1 - theta) delta^2 / k^2, shared by DeriveConstants and callers
// that already hold the reduced quantities.
double InformationalAsymmetry(double theta, double delta, double k);

}  // namespace cournotq

#endif  // COURNOTQ_MARKET_HPP_
