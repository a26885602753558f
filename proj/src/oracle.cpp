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

#include "cournotq/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <string>

namespace cournotq::oracle {

namespace {

std::string DescribeNoConvergence(int iterations, const QuantumProfile& p) {
  std::ostringstream msg;
  msg << "no fixed point after " << iterations << " sweeps, last profile ("
      << p.x1 << ", " << p.x2H << ", " << p.x2L << ")";
  return msg.str();
}

void CheckGrid(const GridSpec& grid) {
  if (!(grid.lo < grid.hi)) {
    std::ostringstream msg;
    msg << "search interval [" << grid.lo << ", " << grid.hi << "] is empty";
    throw Error(ErrorCode::kEmptyInterval, msg.str());
  }
  if (grid.coarse_points < 3) {
    throw Error(ErrorCode::kInvalidParams, "coarse_points >= 3");
  }
  if (grid.refine_rounds < 0) {
    throw Error(ErrorCode::kInvalidParams, "refine_rounds >= 0");
  }
}

}  // namespace

double NoiseModel::variance() const { return 0.5 * std::exp(-2.0 * r); }

NoConvergence::NoConvergence(int iterations, const QuantumProfile& last)
    : Error(ErrorCode::kNoConvergence, DescribeNoConvergence(iterations, last)),
      last_(last) {}

BestResponse FindBestResponse(const std::function<double(double)>& objective,
                              const GridSpec& grid) {
  CheckGrid(grid);
  const int n = grid.coarse_points;
  const double coarse_step = (grid.hi - grid.lo) / (n - 1);

  double window_lo = grid.lo;
  double window_hi = grid.hi;
  double step = coarse_step;
  double best_x = grid.lo;
  double best_v = -std::numeric_limits<double>::infinity();

  for (int round = 0; round <= grid.refine_rounds; ++round) {
    step = (window_hi - window_lo) / (n - 1);
    best_v = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      const double x = i == n - 1 ? window_hi : window_lo + i * step;
      const double v = objective(x);
      if (v > best_v) {
        best_v = v;
        best_x = x;
      }
    }
    if (round < grid.refine_rounds) {
      window_lo = std::max(grid.lo, best_x - 2.0 * step);
      window_hi = std::min(grid.hi, best_x + 2.0 * step);
    }
  }

  BestResponse br{best_x, best_v, step};

  // Parabolic polish. The last grid rounds resolve below the spacing at
  // which objective values still differ, so the refined argmax is only
  // good to about sqrt(eps). The objectives are quadratic away from the
  // price kink: fit a parabola on the widest stencil that stays quadratic
  // (checked at the two half-way points) and take its vertex.
  const double eps = std::numeric_limits<double>::epsilon();
  const double slack = 64.0 * eps * std::abs(best_v);
  const double widest = 0.125 * (grid.hi - grid.lo);
  double half = coarse_step;
  while (half * 4.0 <= widest) half *= 4.0;
  for (; half >= coarse_step * 0.5; half *= 0.25) {
    const double left = best_x - half;
    const double right = best_x + half;
    if (left < grid.lo || right > grid.hi) continue;
    const double f_left = objective(left);
    const double f_right = objective(right);
    const double curvature = f_left - 2.0 * best_v + f_right;
    if (!(curvature < 0.0)) continue;
    const double offset = 0.5 * (f_left - f_right) / curvature;
    if (!(std::abs(offset) <= 1.0)) continue;
    const double scale =
        std::max({std::abs(f_left), std::abs(best_v), std::abs(f_right)});
    const double slope_term = 0.25 * (f_right - f_left);
    const double mid_left = best_v - slope_term + 0.125 * curvature;
    const double mid_right = best_v + slope_term + 0.125 * curvature;
    if (std::abs(objective(best_x - 0.5 * half) - mid_left) > 1e-11 * scale ||
        std::abs(objective(best_x + 0.5 * half) - mid_right) > 1e-11 * scale) {
      continue;
    }
    const double vertex = best_x + half * offset;
    const double f_vertex = objective(vertex);
    if (f_vertex >= best_v - slack) {
      br.argmax = vertex;
      br.value = f_vertex;
      return br;
    }
  }
  return br;
}

FixedPointResult FixedPointBayesNash(const MarketParams& params,
                                     Entanglement gamma, const GridSpec& grid,
                                     const FixedPointConfig& cfg) {
  if (!(cfg.tol > 0.0) || cfg.max_iters < 1 ||
      !(cfg.damping > 0.0 && cfg.damping <= 1.0)) {
    throw Error(ErrorCode::kInvalidParams,
                "tol > 0, max_iters >= 1 and 0 < damping <= 1");
  }
  const double theta = params.theta;
  QuantumProfile x{grid.lo, grid.lo, grid.lo};
  const double d = cfg.damping;

  for (int iter = 1; iter <= cfg.max_iters; ++iter) {
    const QuantumProfile prev = x;

    const BestResponse br1 = FindBestResponse(
        [&](double x1) {
          return theta * QuantumProfit(x1, x.x2H, gamma, CostType::kHigh,
                                       params, Player::kFirm1) +
                 (1.0 - theta) * QuantumProfit(x1, x.x2L, gamma,
                                               CostType::kLow, params,
                                               Player::kFirm1);
        },
        grid);
    x.x1 = (1.0 - d) * x.x1 + d * br1.argmax;

    const BestResponse brH = FindBestResponse(
        [&](double x2) {
          return QuantumProfit(x.x1, x2, gamma, CostType::kHigh, params,
                               Player::kFirm2);
        },
        grid);
    x.x2H = (1.0 - d) * x.x2H + d * brH.argmax;

    const BestResponse brL = FindBestResponse(
        [&](double x2) {
          return QuantumProfit(x.x1, x2, gamma, CostType::kLow, params,
                               Player::kFirm2);
        },
        grid);
    x.x2L = (1.0 - d) * x.x2L + d * brL.argmax;

    const double change = std::max({std::abs(x.x1 - prev.x1),
                                    std::abs(x.x2H - prev.x2H),
                                    std::abs(x.x2L - prev.x2L)});
    if (change < cfg.tol) {
      return {x, std::max({br1.resolution, brH.resolution, brL.resolution}),
              iter};
    }
  }
  throw NoConvergence(cfg.max_iters, x);
}

double FiniteDiffGamma(double s, double k, Entanglement gamma, double h) {
  if (!(h > 0.0) || gamma.gamma() - h < 0.0) {
    std::ostringstream msg;
    msg << "step h=" << h << " leaves gamma >= 0 at gamma=" << gamma.gamma();
    throw Error(ErrorCode::kStepOutOfDomain, msg.str());
  }
  const double up =
      ComputeAverageProfits(Entanglement::FromGamma(gamma.gamma() + h), s, k)
          .u1_bar;
  const double down =
      ComputeAverageProfits(Entanglement::FromGamma(gamma.gamma() - h), s, k)
          .u1_bar;
  return (up - down) / (2.0 * h);
}

SampleStats SampleQuantity(double x_target, const NoiseModel& noise,
                           std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kOutOfRange, "sample count must be >= 1");
  if (!(noise.r >= 0.0)) {
    throw Error(ErrorCode::kOutOfRange, "squeezing r must be >= 0");
  }
  std::mt19937_64 rng(noise.seed);
  std::normal_distribution<double> normal(0.0, std::sqrt(noise.variance()));

  // Welford.
  double mean = 0.0;
  double m2 = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    const double draw = x_target + normal(rng);
    const double delta = draw - mean;
    mean += delta / static_cast<double>(i);
    m2 += delta * (draw - mean);
  }
  return {mean, n > 1 ? m2 / static_cast<double>(n - 1) : 0.0};
}

}  // namespace cournotq::oracle
