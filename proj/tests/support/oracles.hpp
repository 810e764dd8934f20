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

// Reference computations for the tests. Each one deliberately takes a
// different route from the library code it checks.

#ifndef LCLT_TESTS_ORACLES_HPP_
#define LCLT_TESTS_ORACLES_HPP_

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

namespace lclt::oracle {

// Plain sieve of Eratosthenes over a byte array.
std::vector<std::uint32_t> simple_primes(std::uint32_t limit);

// H_n(x) from the explicit sum n! sum_m (-1)^m (2x)^{n-2m} / (m! (n-2m)!).
double hermite_explicit(int n, double x);

// Adaptive Gauss-Kronrod on a finite interval or a half/whole line.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-13, unsigned max_depth = 15);
// Two-dimensional iterated quadrature.
double integrate2(const std::function<double(double, double)>& f, double a,
                  double b, double c, double d, double tol = 1e-11);

// zeta(s) by Euler-Maclaurin in 50-digit arithmetic with Bernoulli numbers
// from Boost; returned rounded to double.
std::complex<double> zeta_hp(std::complex<double> s);
// log zeta(sigma + it) - log zeta(3 + it) as minus the integral of
// zeta'/zeta along the horizontal segment (derivative by a 50-digit
// central difference), plus the principal log at 3 + it.
std::complex<double> log_zeta_by_quadrature(double sigma, double t);

// sum_{p <= P} sum_{m <= 80} p^{-2 m sigma} / m^2 in long double (zeta,
// i.e. |beta(p^m)| = 1/m).
long double zeta_psi_direct(double sigma, std::uint32_t P);

}  // namespace lclt::oracle

#endif  // LCLT_TESTS_ORACLES_HPP_
