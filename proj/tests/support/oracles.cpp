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

#include "oracles.hpp"

#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

namespace lclt::oracle {

namespace mp = boost::multiprecision;
using Real50 = mp::cpp_bin_float_50;
using Cplx50 = mp::cpp_complex_50;

std::vector<std::uint32_t> simple_primes(std::uint32_t limit) {
  std::vector<char> composite(static_cast<std::size_t>(limit) + 1, 0);
  std::vector<std::uint32_t> out;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    if (composite[n]) continue;
    out.push_back(static_cast<std::uint32_t>(n));
    for (std::uint64_t m = n * n; m <= limit; m += n) composite[m] = 1;
  }
  return out;
}

double hermite_explicit(int n, double x) {
  long double sum = 0.0L;
  for (int m = 0; 2 * m <= n; ++m) {
    const long double c = std::tgamma(static_cast<long double>(n + 1)) /
                          (std::tgamma(static_cast<long double>(m + 1)) *
                           std::tgamma(static_cast<long double>(n - 2 * m + 1)));
    sum += (m % 2 ? -c : c) * std::pow(2.0L * x, n - 2 * m);
  }
  return static_cast<double>(sum);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol, unsigned max_depth) {
  using boost::math::quadrature::gauss_kronrod;
  return gauss_kronrod<double, 61>::integrate(f, a, b, max_depth, tol);
}

double integrate2(const std::function<double(double, double)>& f, double a,
                  double b, double c, double d, double tol) {
  return integrate(
      [&](double x) {
        return integrate([&](double y) { return f(x, y); }, c, d, tol);
      },
      a, b, tol);
}

namespace {

Cplx50 zeta50(const Cplx50& s) {
  const double t = std::fabs(static_cast<double>(s.imag()));
  const int N = 40 + static_cast<int>(t / 3.0);
  Cplx50 sum = 0;
  for (int n = 1; n < N; ++n) sum += exp(-s * log(Real50(n)));
  const Real50 Nr(N);
  const Cplx50 Nms = exp(-s * log(Nr));
  sum += Nr * Nms / (s - Real50(1)) + Nms / Real50(2);
  // T_k = B_2k/(2k)! s(s+1)...(s+2k-2) N^{-s-2k+1}
  Cplx50 poch = s;
  Real50 fact = 2;  // (2k)!
  Cplx50 Npow = Nms / Nr;
  for (int k = 1; k <= 60; ++k) {
    const Real50 B = boost::math::bernoulli_b2n<Real50>(k);
    sum += B / fact * poch * Npow;
    poch *= (s + Real50(2 * k - 1)) * (s + Real50(2 * k));
    fact *= Real50(2 * k + 1) * Real50(2 * k + 2);
    Npow /= Nr * Nr;
  }
  return sum;
}

}  // namespace

std::complex<double> zeta_hp(std::complex<double> s) {
  const Cplx50 z = zeta50(Cplx50(Real50(s.real()), Real50(s.imag())));
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

std::complex<double> log_zeta_by_quadrature(double sigma, double t) {
  const Real50 h("1e-15");
  auto dlog = [&](double x) {
    const Cplx50 s{Real50(x), Real50(t)};
    const Cplx50 up = zeta50(s + Cplx50(h, 0));
    const Cplx50 dn = zeta50(s - Cplx50(h, 0));
    const Cplx50 z = zeta50(s);
    const Cplx50 v = (up - dn) / (Real50(2) * h) / z;
    return std::complex<double>(static_cast<double>(v.real()),
                                static_cast<double>(v.imag()));
  };
  const double re = integrate([&](double x) { return dlog(x).real(); }, sigma, 3.0, 1e-12);
  const double im = integrate([&](double x) { return dlog(x).imag(); }, sigma, 3.0, 1e-12);
  const std::complex<double> start = std::log(zeta_hp({3.0, t}));
  return start - std::complex<double>(re, im);
}

long double zeta_psi_direct(double sigma, std::uint32_t P) {
  long double sum = 0.0L;
  for (std::uint32_t p : simple_primes(P)) {
    const long double x = std::pow(static_cast<long double>(p), -2.0L * sigma);
    long double xm = x;
    for (int m = 1; m <= 80; ++m) {
      sum += xm / (static_cast<long double>(m) * m);
      xm *= x;
    }
  }
  return sum;
}

}  // namespace lclt::oracle
