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

// Hermite polynomials in the PHYSICISTS' convention:
//
//   H_n(x) = (-1)^n e^{x^2} d^n/dx^n e^{-x^2},   H_1(x) = 2x,  H_2 = 4x^2 - 2.
//
// Not the probabilists' He_n (He_1 = x, He_2 = x^2 - 1). Every Gaussian
// weight below is e^{-x^2} or e^{-pi u^2}, never e^{-x^2/2}.

#ifndef LCLT_HERMITE_HPP_
#define LCLT_HERMITE_HPP_

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lclt {

inline constexpr int kMaxHermiteDegree = 64;

// H_n(x) by the three-term recurrence H_{n+1} = 2x H_n - 2n H_{n-1}.
double hermite_eval(int n, double x);

// out[0..n] = H_0(x) .. H_n(x).
void hermite_all(int n, double x, double* out);

// Exact integer coefficients of H_n, lowest power first.
std::vector<boost::multiprecision::cpp_int> hermite_coefficients(int n);

// int_a^b e^{-pi u^2} H_k(sqrt(pi) u) du. Endpoints may be +-infinity.
// k >= 1 uses the closed form
//   -(1/sqrt(pi)) [e^{-pi u^2} H_{k-1}(sqrt(pi) u)]_a^b,
// k = 0 the error function (complementary form in the tails).
double gauss_hermite_segment(int k, double a, double b);

// int e^{-psi pi^2 x^2 - 2 pi i x u} x^k dx without its (2 pi i)^{-k} phase:
//   pi^{-1/2} psi^{-(k+1)/2} e^{-u^2/psi} H_k(u / sqrt(psi)).
double gaussian_fourier_hermite(double psi, int k, double u);

}  // namespace lclt

#endif  // LCLT_HERMITE_HPP_
