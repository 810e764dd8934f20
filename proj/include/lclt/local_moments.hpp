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

// Per-prime pieces of the random model: the local sums
//   g_{j,p}(X) = sum_m beta_j(p^m) X^m p^{-m sigma},
// their mixed moments A(k,l) = E[prod_j g_j^{k_j} conj(g_j)^{l_j}] for X
// uniform on the unit circle, and the local remainder series
//   R_p(z) = sum_{k,l != 0} (pi i)^{|k|+|l|} A(k,l) zbar^k z^l / (k! l!).

#ifndef LCLT_LOCAL_MOMENTS_HPP_
#define LCLT_LOCAL_MOMENTS_HPP_

#include <cstdint>
#include <vector>

#include "lclt/lfunction.hpp"
#include "lclt/series.hpp"

namespace lclt {

struct LocalFactorPoly {
  std::uint64_t p = 0;
  int j = 0;
  double sigma = 0.0;
  int M = 0;
  std::vector<cplx> c;  // c[m - 1] = beta_j(p^m) p^{-m sigma}
};

// Smallest M with (d/(M+1)) p^{-(M+1)(sigma-eta)} / (1 - p^{-(sigma-eta)})
// below tol.
int g_power_cutoff(int d, double eta, std::uint64_t p, double sigma,
                   double tol);
LocalFactorPoly g_poly(const LFunctionSpec& spec, int j, std::uint64_t p,
                       double sigma, double tol);
// g evaluated by Horner at X.
cplx g_eval(const LocalFactorPoly& g, cplx X);
// sum_m max_j |c_{j,m}| over the given local sums.
double local_rho(const std::vector<LocalFactorPoly>& g);

// All moments A(k,l) with |k|, |l| <= max_power at one prime. Each
// prod_j g_j^{k_j} is expanded as a polynomial in the shared X, and
// E[X^a conj(X)^b] = [a == b] turns A into an inner product of coefficient
// vectors.
class LocalMoments {
 public:
  LocalMoments(const LFunctionSpec& spec, std::uint64_t p, double sigma,
               double tol, int max_power);
  // From already built local sums, one per component.
  LocalMoments(std::vector<LocalFactorPoly> g, int max_power);

  int J() const { return J_; }
  int max_power() const { return D_; }
  // sum_m max_j |c_{j,m}|; |A(k,l)| <= rho^{|k|+|l|}.
  double rho() const { return rho_; }
  const std::vector<LocalFactorPoly>& factors() const { return g_; }

  cplx A(const Exponents& k, const Exponents& l) const;
  // Same, addressed by tuple codes (see tuple_code).
  cplx A_code(std::size_t ck, std::size_t cl) const;
  std::size_t tuple_code(const int* k) const;

 private:
  int J_;
  int D_;
  double rho_ = 0.0;
  std::vector<LocalFactorPoly> g_;
  // Polynomial prod_j g_j^{k_j} per tuple code; low[i] is its lowest
  // X-power (= |k|).
  std::vector<std::vector<cplx>> poly_;
  std::vector<int> low_;
};

cplx A_moment(const LFunctionSpec& spec, std::uint64_t p, double sigma,
              const Exponents& k, const Exponents& l, double tol);

// R_p as a series with cutoff N; only degrees <= cap are filled.
TruncatedSeries R_series(const LocalMoments& lm, int N, int cap);
TruncatedSeries R_series(const LFunctionSpec& spec, std::uint64_t p,
                         double sigma, int N, double tol);

struct MomentEstimate {
  cplx estimate;
  double std_error = 0.0;
};

// Sample mean of prod_j g_j^{k_j} conj(g_j)^{l_j} over X = e^{i phi},
// phi uniform, drawn from Philox keyed by seed.
MomentEstimate mc_moment_oracle(const LFunctionSpec& spec, std::uint64_t p,
                                double sigma, const Exponents& k,
                                const Exponents& l, std::uint64_t n_samples,
                                std::uint64_t seed, double tol = 1e-15);

// One pass over the same draws for every (k,l) with |k|+|l| <= max_degree.
// Entry i corresponds to monomial i of MonomialBasis::get(J, max_degree).
std::vector<MomentEstimate> mc_moment_oracle_all(
    const LFunctionSpec& spec, std::uint64_t p, double sigma, int max_degree,
    std::uint64_t n_samples, std::uint64_t seed, double tol = 1e-15);

// E[exp(2 pi i sum_j (x_j Re g_j + y_j Im g_j))] by the trapezoid rule on
// the circle (exponentially convergent for this periodic analytic
// integrand). Equals 1 + R_p(x + i y) summed to all degrees.
cplx local_char_exact(const LFunctionSpec& spec, std::uint64_t p,
                      double sigma, const std::vector<double>& x,
                      const std::vector<double>& y, double tol = 1e-15,
                      int nodes = 256);

}  // namespace lclt

#endif  // LCLT_LOCAL_MOMENTS_HPP_
