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

// Brute-force counterparts of the closed forms. Nothing in here calls the
// equilibrium formulas of classical.hpp or quantum.hpp; the only shared code
// is the profit primitive and the strategy-to-quantity mapping.

#ifndef COURNOTQ_ORACLE_HPP_
#define COURNOTQ_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>

#include "cournotq/error.hpp"
#include "cournotq/market.hpp"
#include "cournotq/quantum.hpp"

namespace cournotq::oracle {

struct GridSpec {
  double lo = 0.0;
  double hi = 1.0;
  int coarse_points = 2001;
  // Each round re-grids +-2 steps around the incumbent with coarse_points
  // points, shrinking the spacing by (coarse_points - 1) / 4.
  int refine_rounds = 3;

  // Default search interval [0, a]: nothing beyond a can be a best response.
  static GridSpec Over(const MarketParams& params) {
    GridSpec g;
    g.hi = params.a;
    return g;
  }
};

struct FixedPointConfig {
  double tol = 1e-8;  // max componentwise change between sweeps
  int max_iters = 10000;
  double damping = 1.0;  // weight of the new best response, in (0, 1]
};

struct NoiseModel {
  double r = 0.0;  // measurement squeezing
  std::uint64_t seed = 0;

  // Quadrature variance of a squeezed coherent state, 1/2 at r = 0.
  double variance() const;
};

struct BestResponse {
  double argmax = 0.0;
  double value = 0.0;
  double resolution = 0.0;  // final grid spacing
};

struct FixedPointResult {
  QuantumProfile profile;
  double resolution = 0.0;  // largest final spacing over the last sweep
  int iterations = 0;
};

struct SampleStats {
  double mean = 0.0;
  double variance = 0.0;  // unbiased; 0 for a single draw
};

class NoConvergence : public Error {
 public:
  NoConvergence(int iterations, const QuantumProfile& last);

  const QuantumProfile& last_profile() const { return last_; }

 private:
  QuantumProfile last_;
};

// Maximizes `objective` over [grid.lo, grid.hi] by grid search with
// successive refinement. Plateaus resolve to the lowest index. After the
// last round the argmax is polished by the vertex of a parabola through
// the incumbent and two symmetric neighbours, widest stencil first (up to
// an eighth of the interval, down to one coarse step). A stencil is used
// only when its three points are strictly concave, the parabola predicts
// the objective at both half-way points to 1e-11 relative, and the vertex
// lies inside it and scores no worse than the grid argmax. Throws EmptyInterval unless lo < hi, and InvalidParams
// for coarse_points < 3 or refine_rounds < 0.
BestResponse FindBestResponse(const std::function<double(double)>& objective,
                              const GridSpec& grid);

// Bayes-Nash equilibrium by iterated best responses, cycling x1 against
// the theta-weighted pair (x2H, x2L), then x2H and x2L against x1. Works
// for k1 != k2. Throws NoConvergence after cfg.max_iters sweeps.
FixedPointResult FixedPointBayesNash(const MarketParams& params,
                                     Entanglement gamma, const GridSpec& grid,
                                     const FixedPointConfig& cfg = {});

// Central difference of u1_bar in gamma. Throws StepOutOfDomain unless
// h > 0 and gamma - h >= 0.
double FiniteDiffGamma(double s, double k, Entanglement gamma, double h);

// n draws of x_target + N(0, noise.variance()) from a std::mt19937_64
// seeded with noise.seed.
SampleStats SampleQuantity(double x_target, const NoiseModel& noise,
                           std::size_t n);

}  // namespace cournotq::oracle

#endif  // COURNOTQ_ORACLE_HPP_
