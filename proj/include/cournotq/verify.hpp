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

// Cross-checks between the closed forms and the brute-force oracle.

#ifndef COURNOTQ_VERIFY_HPP_
#define COURNOTQ_VERIFY_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cournotq/market.hpp"
#include "cournotq/oracle.hpp"

namespace cournotq::verify {

enum class Depth { kQuick, kFull };

struct Options {
  std::uint64_t seed = 20260101;
  Depth depth = Depth::kFull;
  // Replaces the tolerance of every check when set.
  std::optional<double> tol_override;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  double max_error = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct Report {
  std::vector<CheckResult> checks;

  bool AllPassed() const;
};

// Random market with k1 = k2 whose classical and quantum equilibria are
// interior for every gamma: c1 is the expected rival cost and
// delta <= (a - cL) / 4.
MarketParams RandomCommonMarginParams(std::mt19937_64& rng);

// Random market with independent c1, rejected until the classical
// equilibrium is interior. k1 != k2 almost surely.
MarketParams RandomInteriorParams(std::mt19937_64& rng);

// Fixed-point settings tight enough that the iteration error sits well
// below the final grid spacing, even where best-response slopes approach
// -1 at large gamma.
oracle::FixedPointConfig PreciseFixedPoint();

Report Run(const Options& options);

}  // namespace cournotq::verify

#endif  // COURNOTQ_VERIFY_HPP_
