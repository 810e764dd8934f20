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

// Monte Carlo sampling of the random Euler product
//   log L_j(sigma, X) = sum_p g_{j,p}(sigma, X(p)),  X(p) iid uniform on |X|=1.
//
// Primes p <= P_MC are sampled exactly. Optionally the primes in
// (P_MC, band_to] are replaced by one circular complex Gaussian vector with
// their exact covariance ("band completion"): at sigma close to 1/2 the
// discarded variance decays only like E_1((2 sigma - 1) log P), far too
// slowly to be made negligible by sampling more primes, while the band's
// higher cumulants are tiny.
//
// Randomness: Philox4x32-10 with key = seed and counter
//   (sample lo, sample hi, prime-pair index, stream tag),
// so every value is a pure function of (seed, sample, prime) and batches
// are bit-identical for any worker count.

#ifndef LCLT_MONTECARLO_HPP_
#define LCLT_MONTECARLO_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "lclt/distribution.hpp"
#include "lclt/lfunction.hpp"

namespace lclt {

struct McOptions {
  int workers = 1;
  // 0: no band. Otherwise the Gaussian band covers (P_MC, band_to].
  std::uint64_t band_to = 0;
  // Also fold the estimated variance of p > band_to into the band.
  bool band_tail = false;
  double tol = 1e-15;
};

struct SampleBatch {
  std::string spec_label;
  int J = 1;
  double sigma = 0.0;
  std::uint64_t P_MC = 0;
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  std::uint64_t band_to = 0;
  bool band_tail = false;
  // Per-j sd of the discarded sum_{p > P_MC} g_{j,p} (before any band).
  std::vector<double> truncation_sd;
  // Row-major n x 2J: log|L_0|, arg L_0, log|L_1|, arg L_1, ...
  std::vector<double> samples;

  double log_abs(std::uint64_t i, int j) const {
    return samples[i * static_cast<std::uint64_t>(2 * J) + static_cast<std::uint64_t>(2 * j)];
  }
  double arg(std::uint64_t i, int j) const {
    return samples[i * static_cast<std::uint64_t>(2 * J) + static_cast<std::uint64_t>(2 * j + 1)];
  }
};

SampleBatch sample_logL(const LFunctionSpec& spec, double sigma,
                        std::uint64_t P_MC, std::uint64_t n,
                        std::uint64_t seed, const McOptions& options = {});

struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
};

// Fraction of samples whose normalized coordinates
// (log|L_j|, arg L_j) / sqrt(pi psi_j) lie in rect (closed windows).
Estimate empirical_probability(const SampleBatch& batch, const Rectangle& rect,
                               const std::vector<double>& psi);

// sqrt(estimated E|sum_{p > P} g_{j,p}|^2): the prime-number-theorem integral
//   xi_j E_1((2 sigma - 1) log P) + (d^2 / 4) E_1((4 sigma - 1) log P).
std::vector<double> tail_sd(const LFunctionSpec& spec, double sigma,
                            std::uint64_t P);

// Covariance E[G_j conj(G_k)] of sum_{P_lo < p <= P_hi} g_{j,p}, row-major.
std::vector<cplx> band_covariance(const LFunctionSpec& spec, double sigma,
                                  std::uint64_t P_lo, std::uint64_t P_hi,
                                  double tol = 1e-15);

struct GateReport {
  // Per-j sd of the variance one model has and the other lacks.
  std::vector<double> gap_sd;
  double limit = 0.0;  // 0.02 sqrt(psi_min)
  bool pass = false;
};
// Compares what the batch samples with what the table's expansion sums.
GateReport model_gate(const SampleBatch& batch, const CoeffTable& table);
// Throws GateError when the gate fails or the two describe different
// (spec, sigma) pairs.
void require_gate(const SampleBatch& batch, const CoeffTable& table);

void write_batch_binary(const std::string& path, const SampleBatch& b);
SampleBatch read_batch_binary(const std::string& path);
// Header `i,logabs_1,arg_1,...`.
std::string batch_csv(const SampleBatch& b);

}  // namespace lclt

#endif  // LCLT_MONTECARLO_HPP_
