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

// Global assembly: prime sums of log(1 + R_p), the quadratic part split into
// -pi^2 psi |z|^2 plus a finite-T matrix C, and the coefficient table b_{k,l}
// of exp(sum_n I_n(z) (2 pi i)^{-n}) written in the real coordinates
// z = x + i y.

#ifndef LCLT_EXPANSION_HPP_
#define LCLT_EXPANSION_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "lclt/lfunction.hpp"
#include "lclt/series.hpp"

namespace lclt {

enum class SigmaMode { kSigmaT, kHalf };

std::string to_string(SigmaMode m);
SigmaMode sigma_mode_from_string(const std::string& s);

struct ExpansionConfig {
  int N = 8;
  std::uint64_t P_max = 1'000'000;
  double tol = 1e-15;
  SigmaMode n3_sigma_mode = SigmaMode::kSigmaT;
  double delta1 = 0.05;
  double delta2 = 0.05;
  double delta3 = 0.0;  // 0: derived, 0.9 pi delta2 / sqrt(J)
  double delta4 = 0.0;  // 0: derived, min(delta2, delta3 / (4 pi))
  int workers = 1;
  // Adds the prime-number-theorem estimate of sum_{p > P_max} to the
  // diagonal of D, so the quadratic form does not freeze at P_max.
  bool tail_completion = false;

  void validate() const;
  double delta3_for(int J) const;
  double delta4_for(int J) const;
};

// Primes are processed in chunks of this many; chunk results are merged in
// chunk order, so sums do not depend on the worker count.
inline constexpr std::size_t kPrimeChunk = 2048;

struct LogCharSeries {
  TruncatedSeries series;
  // Per degree n = 0..N: bound on the omitted primes p > P_max plus the
  // per-prime degrees dropped below tol.
  std::vector<double> tail_bound;
  std::uint64_t primes = 0;
};

// sum_{p <= P_max} log(1 + R_p) at sigma, keeping degrees >= min_degree.
// Needs sigma > 1/2 when min_degree == 2, sigma >= (5 + 2 eta)/12 otherwise.
LogCharSeries log_char_series(const LFunctionSpec& spec, double sigma,
                              const ExpansionConfig& config,
                              int min_degree = 2);

// D_{j1 j2}(sigma) = sum_{p <= P_max} sum_m beta_{j1}(p^m)
// conj(beta_{j2}(p^m)) p^{-2 m sigma}, row-major J x J.
std::vector<cplx> D_matrix(const LFunctionSpec& spec, double sigma,
                           const ExpansionConfig& config);

struct QuadraticSplit {
  std::vector<double> psi;
  std::vector<cplx> C;  // row-major J x J, Hermitian
  std::vector<cplx> D;
  std::vector<double> D_tail;  // diagonal completion added to D (0 if off)
  // Rigorous bound on any entry of D left out by the prime cutoff.
  double D_tail_bound = 0.0;
  double hermiticity_residual = 0.0;
};
QuadraticSplit quadratic_split(const LFunctionSpec& spec, double theta,
                               double logT, const ExpansionConfig& config);

struct CoeffTable {
  int J = 1;
  int N = 2;
  // Real coefficients in graded basis order of MonomialBasis::get(J, N);
  // slot k holds x-exponents, slot l y-exponents.
  std::vector<double> b;
  std::vector<double> psi;
  std::vector<cplx> C;
  // Provenance.
  std::string spec_label;
  double theta = 0.0;
  double logT = 0.0;
  double sigmaT = 0.0;
  ExpansionConfig config;
  std::vector<double> tail_bounds;  // per degree, after (2 pi)^{-n} scaling
  double max_imag_residue = 0.0;
  std::uint64_t primes = 0;

  double get(const Exponents& k, const Exponents& l) const;
  void set(const Exponents& k, const Exponents& l, double v);
  const MonomialBasis& basis() const;
};

// Rewrites a series in (zbar, z) in the real coordinates z_j = x_j + i y_j
// and scales degree n by (2 pi i)^{-n}.
TruncatedSeries to_real_coordinates(const TruncatedSeries& s);

// `higher` (degrees >= 3, may be empty) lets callers inject their own I_n.
// Checks |R_{p,sigma}(z)| <= 1/2 on ||z|| <= delta1 for every p <= P_max:
// first by the bound 2 pi ||z|| ||g_p||, then, for primes where that is too
// coarse, by evaluating the local characteristic function on the sphere.
// Returns the largest |R| bound accepted; throws NumericalError on failure.
double verify_delta1(const LFunctionSpec& spec, double sigma,
                     const ExpansionConfig& config);

CoeffTable b_table_from_parts(const QuadraticSplit& q,
                              const TruncatedSeries& higher,
                              const std::vector<double>& higher_tail);

// Throws NumericalError naming the worst coefficient if any imaginary
// residue exceeds 1e-12.
CoeffTable b_table(const LFunctionSpec& spec, double theta, double logT,
                   const ExpansionConfig& config);

struct Envelope {
  bool degenerate = false;
  int points = 0;
  double fit_C = 0.0;
  double fit_r = 0.0;
  // max |b| / (fit_C fit_r^{-K}) over the fitted entries.
  double raw_violation = 0.0;
  // fit_C scaled up so every coefficient is covered; the reported violation
  // of this covering envelope is 0 by construction.
  double cover_C = 0.0;
  double max_violation = 0.0;
};
Envelope coefficient_envelope(const CoeffTable& table);

}  // namespace lclt

#endif  // LCLT_EXPANSION_HPP_
