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

#include "cournotq/classical.hpp"

#include <sstream>

#include "cournotq/error.hpp"

namespace cournotq {

namespace {

void CheckMargin(double k) {
  if (!(k > 0.0)) {
    std::ostringstream msg;
    msg << "k must be > 0, got " << k;
    throw Error(ErrorCode::kNonPositiveMargin, msg.str());
  }
}

}  // namespace

ClassicalProfile ClassicalBayesNash(const MarketParams& params) {
  const MarketParams& p = params;
  const DerivedConstants d = DeriveConstants(p);

  ClassicalProfile eq;
  eq.q1 = (2.0 * d.k1 - d.k2) / 3.0;
  eq.q2H = (p.a + p.c1 - 2.0 * p.cH) / 3.0 + (1.0 - p.theta) * d.delta / 6.0;
  eq.q2L = (p.a + p.c1 - 2.0 * p.cL) / 3.0 - p.theta * d.delta / 6.0;

  if (eq.q1 < 0.0 || eq.q2H < 0.0 || eq.q2L < 0.0 ||
      eq.q1 + eq.q2H > p.a || eq.q1 + eq.q2L > p.a) {
    std::ostringstream msg;
    msg << "classical equilibrium (" << eq.q1 << ", " << eq.q2H << ", "
        << eq.q2L << ") is not interior";
    throw Error(ErrorCode::kNonInteriorEquilibrium, msg.str());
  }
  return eq;
}

ClassicalReport ClassicalExpectedProfits(const ClassicalProfile& profile,
                                         const MarketParams& params) {
  const MarketParams& p = params;
  ClassicalReport r;
  r.profile = profile;

  const double u1_vs_high = Profit(profile.q1, profile.q2H, p.c1, p.a);
  const double u1_vs_low = Profit(profile.q1, profile.q2L, p.c1, p.a);
  r.u1_expected = p.theta * u1_vs_high + (1.0 - p.theta) * u1_vs_low;

  r.u2H = Profit(profile.q2H, profile.q1, p.cH, p.a);
  r.u2L = Profit(profile.q2L, profile.q1, p.cL, p.a);
  r.u2_average = p.theta * r.u2H + (1.0 - p.theta) * r.u2L;
  return r;
}

SymmetricOutcome SymmetricNash(double k) {
  CheckMargin(k);
  return {k / 3.0, k * k / 9.0};
}

SymmetricOutcome ParetoOptimum(double k) {
  CheckMargin(k);
  return {k / 4.0, k * k / 8.0};
}

}  // namespace cournotq
