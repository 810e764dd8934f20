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
#include <numbers>

#include "lclt/errors.hpp"
#include "lclt/summation.hpp"

namespace lclt {

double leading_gaussian_cdf(double x) {
  // e^{-pi x^2} is N(0, 1/(2 pi)).
  return 0.5 * std::erfc(-std::sqrt(std::numbers::pi) * x);
}

double ks_distance(std::vector<double> sample,
                   const std::function<double(double)>& cdf) {
  require(!sample.empty(), "KS distance of an empty sample");
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double F = cdf(sample[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - F,
                  F - static_cast<double>(i) / n});
  }
  return d;
}

Moments sample_moments(const std::vector<double>& x) {
  require(x.size() >= 2, "moments need at least two values");
  const double n = static_cast<double>(x.size());
  CompensatedSum s;
  for (double v : x) s.add(v);
  Moments m;
  m.mean = s.value() / n;
  CompensatedSum s2, s3;
  for (double v : x) {
    const double d = v - m.mean;
    s2.add(d * d);
    s3.add(d * d * d);
  }
  m.variance = s2.value() / (n - 1.0);
  const double pop = s2.value() / n;
  m.skewness = pop > 0.0 ? (s3.value() / n) / std::pow(pop, 1.5) : 0.0;
  m.mean_std_error = std::sqrt(m.variance / n);
  return m;
}

}  // namespace lclt
