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

// The Riemann zeta function at moderate heights (|t| <= 1e9) by
// Euler-Maclaurin summation, log zeta with a continuously tracked argument,
// and empirical statistics of log zeta(sigma_T + it) over t in [T, 2T].
//
// Branch convention: for sigma > 1, |log zeta(sigma + it)| <= log zeta(sigma),
// which is < pi once sigma >= 1.05, so the principal logarithm there already
// is the Euler-product branch. Arguments further left are obtained by
// walking horizontally and stitching principal logarithms of consecutive
// ratios, each required to move the argument by less than pi/2.

#ifndef LCLT_ZETA_HPP_
#define LCLT_ZETA_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "lclt/distribution.hpp"
#include "lclt/lfunction.hpp"

namespace lclt {

inline constexpr double kMaxZetaHeight = 1e9;

// zeta(s) to an absolute accuracy of about 10^-digits (digits <= 15; |zeta|
// is O(1) on the heights of interest, so this is also the relative
// accuracy away from zeros). Throws
// ValidationError at s = 1 or above the height envelope, NumericalError if
// the requested precision cannot be reached.
cplx zeta_eval(cplx s, int digits = 14);

// Euler-Maclaurin parameters zeta_eval would use.
struct EmParams {
  std::uint64_t N = 0;  // terms n < N summed directly
  int K = 0;            // Bernoulli corrections
};
EmParams zeta_em_params(cplx s, int digits = 14);

struct TrackedLog {
  cplx value;       // log|zeta| + i arg zeta
  bool ok = false;  // false: continuation failed (value meaningless)
};
// Walks from 3 + it to sigma + it in steps <= step, halving a step up to
// max_halvings times when the argument jumps by pi/2 or more.
TrackedLog log_zeta_tracked(double sigma, double t, double step = 0.05,
                            int max_halvings = 12);

struct ZetaRunConfig {
  double T = 1e6;
  double theta = 0.4;
  std::uint64_t n = 10000;
  std::uint64_t seed = 1;
  int workers = 1;
  double step = 0.05;  // largest sigma step of the continuation
  int digits = 10;
  // Runs with more than this fraction of flagged samples are rejected.
  double max_excluded_fraction = 0.01;
};

struct ZetaSample {
  double t = 0.0;
  double log_abs = 0.0;
  double arg = 0.0;
  bool excluded = false;
};

struct ZetaRun {
  ZetaRunConfig config;
  double sigma = 0.0;  // sigma_T for logT = log T
  double psi = 0.0;    // psi_{1,T}
  std::uint64_t em_N_max = 0;
  std::vector<double> sigma_grid;  // fused continuation grid, ascending
  std::vector<ZetaSample> samples;
  std::uint64_t excluded = 0;
};

// t uniform on [T, 2T] (Philox, keyed by seed); log zeta(sigma_T + it).
// Throws NumericalError when too many samples are flagged.
ZetaRun zeta_run(const ZetaRunConfig& config);

struct PhiEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t excluded = 0;
};
// Fraction of retained samples whose (log|zeta|, arg zeta) / sqrt(pi psi)
// lies in rect (J = 1).
PhiEstimate empirical_Phi(const ZetaRun& run, const Rectangle& rect);
PhiEstimate empirical_Phi(double T, double theta, const Rectangle& rect,
                          std::uint64_t n, std::uint64_t seed, int workers = 1);

struct ZetaSummary {
  std::uint64_t n = 0;
  std::uint64_t excluded = 0;
  double mean_log_abs = 0.0;
  double mean_std_error = 0.0;
  double var_log_abs = 0.0;
  double var_arg = 0.0;
  double psi = 0.0;
  // Kolmogorov-Smirnov distance of the normalized log|zeta| against the
  // leading Gaussian (density e^{-pi x^2}).
  double ks_real = 0.0;
};
ZetaSummary summarize(const ZetaRun& run);

// Header `t,log_abs,arg,flags` (flags: 0 ok, 1 excluded).
std::string zeta_run_csv(const ZetaRun& run);

}  // namespace lclt

#endif  // LCLT_ZETA_HPP_
