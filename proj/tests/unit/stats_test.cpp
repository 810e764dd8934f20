// Copyright 2026 The lclt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lclt/stats.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "lclt/errors.hpp"
#include "oracles.hpp"

namespace lclt {
namespace {

TEST(Stats, LeadingGaussianCdfIsIntegralOfDensity) {
  for (double x : {-2.0, -0.3, 0.0, 0.4, 1.7}) {
    const double want = oracle::integrate(
        [](double u) { return std::exp(-M_PI * u * u); }, -10.0, x);
    EXPECT_NEAR(leading_gaussian_cdf(x), want, 1e-13);
  }
}

TEST(Stats, KsDistanceOfSmallSample) {
  auto uniform = [](double x) { return std::clamp(x, 0.0, 1.0); };
  EXPECT_NEAR(ks_distance({0.5}, uniform), 0.5, 1e-15);
  EXPECT_NEAR(ks_distance({0.25, 0.75}, uniform), 0.25, 1e-15);
  EXPECT_NEAR(ks_distance({0.9, 0.1}, uniform), 0.4, 1e-15);
  EXPECT_THROW(ks_distance({}, uniform), ValidationError);
}

TEST(Stats, KsDistanceShrinksForMatchingSample) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> N(0.0, 1.0 / std::sqrt(2 * M_PI));
  std::vector<double> x(20000);
  for (double& v : x) v = N(rng);
  EXPECT_LT(ks_distance(x, leading_gaussian_cdf), 0.015);
}

TEST(Stats, Moments) {
  const Moments m = sample_moments({1.0, 2.0, 3.0, 10.0});
  EXPECT_DOUBLE_EQ(m.mean, 4.0);
  EXPECT_DOUBLE_EQ(m.variance, 50.0 / 3.0);
  EXPECT_GT(m.skewness, 0.0);
  EXPECT_NEAR(m.mean_std_error, std::sqrt(50.0 / 3.0 / 4.0), 1e-15);
  EXPECT_THROW(sample_moments({1.0}), ValidationError);
}

}  // namespace
}  // namespace lclt
