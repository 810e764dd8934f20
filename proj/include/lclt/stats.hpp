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

#ifndef LCLT_STATS_HPP_
#define LCLT_STATS_HPP_

#include <functional>
#include <vector>

namespace lclt {

// CDF of the normalized leading Gaussian, density e^{-pi x^2}.
double leading_gaussian_cdf(double x);

// sup_x |F_n(x) - F(x)| for the empirical CDF of `sample` (copied, sorted).
double ks_distance(std::vector<double> sample,
                   const std::function<double(double)>& cdf);

struct Moments {
  double mean = 0.0;
  double variance = 0.0;  // unbiased
  double skewness = 0.0;
  double mean_std_error = 0.0;
};
Moments sample_moments(const std::vector<double>& x);

}  // namespace lclt

#endif  // LCLT_STATS_HPP_
