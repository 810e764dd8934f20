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

#include "lclt/local_moments.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "lclt/lfunction.hpp"

namespace lclt {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLi2Quarter = 0.26765263908273260;

TEST(LocalMoments, ZetaLocalSumAtTwo) {
  const auto g = g_poly(builtin_spec("zeta"), 0, 2, 1.0, 1e-16);
  EXPECT_EQ(g.M, 48);
  ASSERT_EQ(g.c.size(), 48u);
  for (int m = 1; m <= 48; ++m) {
    EXPECT_NEAR(g.c[m - 1].real(), 1.0 / (m * std::pow(2.0, m)), 1e-17);
  }
  // The dropped tail really is below tol, and the kept last term is not.
  double tail = 0.0;
  for (int m = 49; m < 200; ++m) tail += 1.0 / (m * std::pow(2.0, m));
  EXPECT_LT(tail, 1e-16);
}

TEST(LocalMoments, FirstCoefficientAndDecay) {
  const auto spec = builtin_spec("chars34");
  for (std::uint64_t p : {5u, 7u, 101u}) {
    for (int j = 0; j < 2; ++j) {
      const auto g = g_poly(spec, j, p, 0.6, 1e-15);
      EXPECT_NEAR(std::abs(g.c[0] - beta(spec, j, p, 1) * std::pow(p, -0.6)), 0.0, 1e-16);
    }
  }
  const auto big = g_poly(builtin_spec("zeta"), 0, 4'000'000'007ull, 1.0, 1e-15);
  EXPECT_EQ(big.M, 1);
  EXPECT_LT(big.c[0].real(), 1e-9);
}

TEST(LocalMoments, StructuralMoments) {
  for (const char* name : {"zeta", "chars34"}) {
    const auto spec = builtin_spec(name);
    const int J = spec.J();
    const LocalMoments lm(spec, 3, 0.7, 1e-15, 4);
    EXPECT_EQ(lm.A(std::vector<int>(J, 0), std::vector<int>(J, 0)), cplx(1.0));
    std::vector<int> k(J, 0), z(J, 0);
    for (int a = 1; a <= 4; ++a) {
      k[0] = a;
      EXPECT_NEAR(std::abs(lm.A(k, z)), 0.0, 1e-16);
      EXPECT_NEAR(std::abs(lm.A(z, k)), 0.0, 1e-16);
    }
  }
}

TEST(LocalMoments, DilogarithmValue) {
  const cplx a = A_moment(builtin_spec("zeta"), 2, 1.0, {1}, {1}, 1e-16);
  EXPECT_NEAR(a.real(), kLi2Quarter, 1e-15);
  EXPECT_NEAR(a.imag(), 0.0, 1e-16);
}

TEST(LocalMoments, MonteCarloOracle) {
  const auto spec = builtin_spec("zeta");
  const auto one = mc_moment_oracle(spec, 2, 1.0, {0}, {0}, 1000, 1);
  EXPECT_EQ(one.estimate, cplx(1.0));
  EXPECT_EQ(one.std_error, 0.0);
  const auto m10 = mc_moment_oracle(spec, 2, 1.0, {1}, {0}, 200'000, 2);
  EXPECT_LE(std::abs(m10.estimate), 4 * m10.std_error);
  const auto m11 = mc_moment_oracle(spec, 2, 1.0, {1}, {1}, 1'000'000, 3);
  EXPECT_LE(std::fabs(m11.estimate.real() - kLi2Quarter), 4 * m11.std_error);
}

TEST(LocalMoments, RSeriesShape) {
  const auto spec = builtin_spec("chars34");
  const double s = sigma_T(0.4, 1e4);
  const auto R = R_series(spec, 5, s, 6, 1e-15);
  EXPECT_EQ(R.coeff(0), cplx(0.0));
  EXPECT_GE(R.min_degree(), 2);
  for (int j = 0; j < 2; ++j) {
    std::vector<int> e(2, 0);
    e[j] = 1;
    const cplx A = A_moment(spec, 5, s, e, e, 1e-15);
    EXPECT_NEAR(std::abs(R.get(e, e) - (-kPi * kPi) * A), 0.0, 1e-15);
  }
  // No pure k or pure l monomials.
  const auto& B = R.basis();
  for (std::size_t i = 0; i < B.size(); ++i) {
    const int* e = B.exponents(i);
    const bool pure = (e[0] + e[1] == 0) || (e[2] + e[3] == 0);
    if (pure) {
      EXPECT_EQ(R.coeff(i), cplx(0.0));
    }
  }
}

TEST(LocalMoments, RSeriesMatchesExactCharacteristicFunction) {
  const auto spec = builtin_spec("chars34");
  const double s = sigma_T(0.4, 1e4);
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> U(-0.035, 0.035);
  for (std::uint64_t p : {2u, 3u, 7u, 1009u}) {
    const auto R = R_series(spec, p, s, 12, 1e-15);
    for (int i = 0; i < 5; ++i) {
      const std::vector<double> x = {U(rng), U(rng)}, y = {U(rng), U(rng)};
      const std::vector<cplx> z = {{x[0], y[0]}, {x[1], y[1]}};
      const cplx exact = local_char_exact(spec, p, s, x, y);
      EXPECT_NEAR(std::abs(1.0 + R.evaluate_z(z) - exact), 0.0, 1e-13) << p;
      EXPECT_LE(std::abs(R.evaluate_z(z)), 0.5);
    }
  }
}

}  // namespace
}  // namespace lclt
