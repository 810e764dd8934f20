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

#include "lclt/hermite.hpp"

#include <cmath>
#include <numbers>

#include "lclt/errors.hpp"

namespace lclt {
namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

void check_degree(int n) {
  require(n >= 0 && n <= kMaxHermiteDegree,
          "Hermite degree must lie in [0, 64]");
}

// e^{-pi u^2} H_{k-1}(sqrt(pi) u); zero at infinite u.
double edge(int k, double u) {
  if (std::isinf(u)) return 0.0;
  return std::exp(-std::numbers::pi * u * u) * hermite_eval(k - 1, kSqrtPi * u);
}

// int_a^b e^{-pi u^2} du for a <= b.
double gauss_mass(double a, double b) {
  const double sa = kSqrtPi * a;
  const double sb = kSqrtPi * b;
  if (a >= 0.0) return 0.5 * (std::erfc(sa) - std::erfc(sb));
  if (b <= 0.0) return 0.5 * (std::erfc(-sb) - std::erfc(-sa));
  return 0.5 * (std::erf(sb) - std::erf(sa));
}

}  // namespace

double hermite_eval(int n, double x) {
  check_degree(n);
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * x;
  for (int m = 1; m < n; ++m) {
    const double next = 2.0 * x * cur - 2.0 * m * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

void hermite_all(int n, double x, double* out) {
  check_degree(n);
  out[0] = 1.0;
  if (n == 0) return;
  out[1] = 2.0 * x;
  for (int m = 1; m < n; ++m) {
    out[m + 1] = 2.0 * x * out[m] - 2.0 * m * out[m - 1];
  }
}

std::vector<boost::multiprecision::cpp_int> hermite_coefficients(int n) {
  require(n >= 0, "Hermite degree must be nonnegative");
  using boost::multiprecision::cpp_int;
  std::vector<cpp_int> prev{1};
  if (n == 0) return prev;
  std::vector<cpp_int> cur{0, 2};
  for (int m = 1; m < n; ++m) {
    std::vector<cpp_int> next(static_cast<std::size_t>(m) + 2, 0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += 2 * cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= 2 * m * prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

double gauss_hermite_segment(int k, double a, double b) {
  check_degree(k);
  if (a == b) return 0.0;
  if (k == 0) {
    return a < b ? gauss_mass(a, b) : -gauss_mass(b, a);
  }
  return -(edge(k, b) - edge(k, a)) / kSqrtPi;
}

double gaussian_fourier_hermite(double psi, int k, double u) {
  require(psi > 0.0, "psi must be positive");
  check_degree(k);
  const double r = std::sqrt(psi);
  return std::pow(psi, -0.5 * (k + 1)) * std::exp(-u * u / psi) *
         hermite_eval(k, u / r) / kSqrtPi;
}

}  // namespace lclt
