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

#include "cournotq/market.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cournotq/error.hpp"

namespace cournotq {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kNegativeQuantity: return "NegativeQuantity";
    case ErrorCode::kNonInteriorEquilibrium: return "NonInteriorEquilibrium";
    case ErrorCode::kNonPositiveMargin: return "NonPositiveMargin";
    case ErrorCode::kAsymmetricMargins: return "AsymmetricMargins";
    case ErrorCode::kNegativeStrategy: return "NegativeStrategy";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kNonPositiveTolerance: return "NonPositiveTolerance";
    case ErrorCode::kMultipleRoots: return "MultipleRoots";
    case ErrorCode::kEmptyInterval: return "EmptyInterval";
    case ErrorCode::kNoConvergence: return "NoConvergence";
    case ErrorCode::kStepOutOfDomain: return "StepOutOfDomain";
  }
  return "Unknown";
}

namespace {

void Require(bool ok, const char* constraint) {
  if (!ok) throw Error(ErrorCode::kInvalidParams, constraint);
}

}  // namespace

double DerivedConstants::CommonMargin() const {
  if (k1_ne_k2) {
    std::ostringstream msg;
    msg << "closed form requires k1 = k2 (k1=" << k1 << ", k2=" << k2 << ")";
    throw Error(ErrorCode::kAsymmetricMargins, msg.str());
  }
  return k1;
}

MarketParams Validate(const MarketParams& p) {
  Require(std::isfinite(p.a) && std::isfinite(p.c1) && std::isfinite(p.cH) &&
              std::isfinite(p.cL) && std::isfinite(p.theta),
          "all parameters finite");
  Require(p.a > 0.0, "a > 0");
  Require(p.theta >= 0.0, "theta >= 0");
  Require(p.theta <= 1.0, "theta <= 1");
  Require(p.c1 < p.a, "c1 < a");
  Require(p.cL <= p.cH, "cL <= cH");
  Require(p.cH < p.a, "cH < a");
  return p;
}

double Price(double total_quantity, double a) {
  if (total_quantity < 0.0) {
    throw Error(ErrorCode::kNegativeQuantity, "total quantity must be >= 0");
  }
  return total_quantity <= a ? a - total_quantity : 0.0;
}

double Profit(double q_self, double q_other, double c_self, double a) {
  if (q_self < 0.0 || q_other < 0.0) {
    throw Error(ErrorCode::kNegativeQuantity, "quantities must be >= 0");
  }
  return q_self * (Price(q_self + q_other, a) - c_self);
}

double InformationalAsymmetry(double theta, double delta, double k) {
  return theta * (1.0 - theta) * delta * delta / (k * k);
}

DerivedConstants DeriveConstants(const MarketParams& p) {
  DerivedConstants d;
  d.k1 = p.a - p.c1;
  d.k2 = p.a - (p.theta * p.cH + (1.0 - p.theta) * p.cL);
  d.delta = p.cH - p.cL;
  d.s = InformationalAsymmetry(p.theta, d.delta, d.k1);
  d.k1_ne_k2 = std::abs(d.k1 - d.k2) > kAbsTol * std::max(1.0, std::abs(d.k1));
  return d;
}

}  // namespace cournotq
