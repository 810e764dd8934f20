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

#include "lclt/expansion.hpp"

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "lclt/errors.hpp"
#include "lclt/lfunction.hpp"
#include "oracles.hpp"

namespace lclt {
namespace {

constexpr double kPi = std::numbers::pi;

ExpansionConfig small_config(int N = 6, std::uint64_t P = 100'000) {
  ExpansionConfig c;
  c.N = N;
  c.P_max = P;
  return c;
}

TEST(Expansion, ConfigValidation) {
  ExpansionConfig c;
  EXPECT_NO_THROW(c.validate());
  c.N = 1;
  EXPECT_THROW(c.validate(), ValidationError);
  c = ExpansionConfig();
  c.P_max = 10;
  EXPECT_THROW(c.validate(), ValidationError);
  c = ExpansionConfig();
  EXPECT_NEAR(c.delta3_for(2), 0.9 * kPi * 0.05 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(c.delta4_for(1), std::min(0.05, c.delta3_for(1) / (4 * kPi)), 1e-15);
}

TEST(Expansion, DeltaOneIsVerifiedForTheActiveSpec) {
  const double s = sigma_T(0.4, 1e4);
  auto cfg = small_config(4, 10'000);
  for (const char* name : {"zeta", "chars34"}) {
    const double worst = verify_delta1(builtin_spec(name), s, cfg);
    EXPECT_GT(worst, 0.0);
    EXPECT_LE(worst, 0.5);
  }
  cfg.delta1 = 0.5;
  EXPECT_THROW(verify_delta1(builtin_spec("zeta"), s, cfg), NumericalError);
  EXPECT_THROW(b_table(builtin_spec("zeta"), 0.4, 1e4, cfg), NumericalError);
}

TEST(Expansion, DegreeTwoDiagonalIsMinusPiSquaredPsi) {
  const auto spec = builtin_spec("zeta");
  const double s = 0.6;
  const auto cfg = small_config();
  const auto L = log_char_series(spec, s, cfg);
  const double psi = static_cast<double>(oracle::zeta_psi_direct(s, 100'000));
  EXPECT_NEAR(L.series.get({1}, {1}).real() / (-kPi * kPi * psi), 1.0, 1e-12);
  EXPECT_NEAR(L.series.get({1}, {1}).imag(), 0.0, 1e-14);
  EXPECT_EQ(L.series.coeff(0), cplx(0.0));
  EXPECT_EQ(L.primes, 9592u);
}

TEST(Expansion, CharacterOrthogonality) {
  ExpansionConfig cfg = small_config(2, 1'000'000);
  const auto spec = builtin_spec("chars34");
  const auto D = D_matrix(spec, sigma_T(0.4, 1e4), cfg);
  // Orthogonality is only asymptotic: the chi_3 conj(chi_4) prime sum stays
  // bounded while the diagonal grows like log log P.
  EXPECT_LT(std::abs(D[1]), std::abs(D[0]) / 5);
  EXPECT_LT(std::abs(D[2]), std::abs(D[3]) / 5);
  EXPECT_NEAR(std::abs(D[1] - std::conj(D[2])), 0.0, 1e-15);
}

TEST(Expansion, QuadraticSplitZeta) {
  const auto spec = builtin_spec("zeta");
  const auto cfg = small_config(4, 1'000'000);
  const auto q = quadratic_split(spec, 0.4, 1e4, cfg);
  const double s = sigma_T(0.4, 1e4);
  const double psiT = 0.4 * std::log(1e4);
  EXPECT_EQ(q.psi[0], psi_jT(spec, 0.4, 1e4)[0]);
  const double direct = static_cast<double>(oracle::zeta_psi_direct(s, 1'000'000));
  EXPECT_NEAR(q.C[0].real(), -kPi * kPi * (direct - psiT), 1e-11);
  EXPECT_EQ(q.C[0].imag(), 0.0);
  EXPECT_LT(q.hermiticity_residual, 1e-13);
}

TEST(Expansion, QuadraticSplitHermitianForCharacters) {
  const auto q = quadratic_split(builtin_spec("chars34"), 0.4, 1e4, small_config(4));
  EXPECT_LT(q.hermiticity_residual, 1e-13);
  EXPECT_EQ(q.C[1], std::conj(q.C[2]));
}

TEST(Expansion, StructuralCoefficients) {
  for (const char* name : {"zeta", "chars34"}) {
    const auto t = b_table(builtin_spec(name), 0.4, 1e4, small_config(6));
    const auto& B = t.basis();
    EXPECT_EQ(t.b[0], 1.0);
    for (std::size_t i = B.degree_begin(1); i < B.degree_begin(2); ++i) {
      EXPECT_LT(std::fabs(t.b[i]), 1e-12);
    }
    EXPECT_LT(t.max_imag_residue, 1e-12);
  }
}

TEST(Expansion, DegreeTwoClosedForm) {
  ExpansionConfig cfg = small_config(6, 1'000'000);
  const auto t = b_table(builtin_spec("zeta"), 0.4, 1e4, cfg);
  const double s = sigma_T(0.4, 1e4);
  const double want =
      (static_cast<double>(oracle::zeta_psi_direct(s, 1'000'000)) - 0.4 * std::log(1e4)) / 4;
  EXPECT_NEAR(t.get({2}, {0}), want, 1e-10);
  EXPECT_NEAR(t.get({0}, {2}), want, 1e-10);
  EXPECT_NEAR(t.get({1}, {1}), 0.0, 1e-12);
}

TEST(Expansion, TruncationConsistency) {
  const auto spec = builtin_spec("chars34");
  const auto t6 = b_table(spec, 0.4, 1e4, small_config(4));
  const auto t8 = b_table(spec, 0.4, 1e4, small_config(6));
  for (std::size_t i = 0; i < t6.b.size(); ++i) EXPECT_EQ(t6.b[i], t8.b[i]) << i;
}

TEST(Expansion, WorkerCountDoesNotChangeResults) {
  auto cfg = small_config(6);
  const auto a = b_table(builtin_spec("chars34"), 0.4, 1e4, cfg);
  cfg.workers = 3;
  const auto b = b_table(builtin_spec("chars34"), 0.4, 1e4, cfg);
  EXPECT_EQ(a.b, b.b);
}

TEST(Expansion, ReportsTailBounds) {
  const auto t = b_table(builtin_spec("zeta"), 0.4, 1e4, small_config(6));
  ASSERT_EQ(t.tail_bounds.size(), 7u);
  for (int n = 3; n <= 6; ++n) {
    EXPECT_TRUE(std::isfinite(t.tail_bounds[n]));
    EXPECT_GT(t.tail_bounds[n], 0.0);
  }
}

TEST(Expansion, EnvelopeDegenerateAndCovering) {
  CoeffTable t;
  t.J = 1;
  t.N = 4;
  t.b.assign(t.basis().size(), 0.0);
  t.b[0] = 1.0;
  EXPECT_TRUE(coefficient_envelope(t).degenerate);

  const auto full = b_table(builtin_spec("zeta"), 0.4, 1e4, small_config(8));
  const Envelope e = coefficient_envelope(full);
  EXPECT_FALSE(e.degenerate);
  EXPECT_EQ(e.max_violation, 0.0);
  const auto& B = full.basis();
  for (std::size_t i = 1; i < B.size(); ++i) {
    EXPECT_LE(std::fabs(full.b[i]), e.cover_C * std::pow(e.fit_r, -B.degree(i)));
  }
}

TEST(Expansion, EnvelopeStableInPrimeCutoff) {
  const auto spec = builtin_spec("zeta");
  const auto a = coefficient_envelope(b_table(spec, 0.4, 1e4, small_config(10, 100'000)));
  const auto b = coefficient_envelope(b_table(spec, 0.4, 1e4, small_config(10, 1'000'000)));
  EXPECT_NEAR(a.fit_r / b.fit_r, 1.0, 0.2);
}

TEST(Expansion, RealCoordinatesScaleByDegree) {
  // z̄ z = x^2 + y^2, then degree 2 picks up (2 pi i)^{-2}.
  TruncatedSeries s(1, 2);
  s.set({1}, {1}, 1.0);
  const auto r = to_real_coordinates(s);
  const double f = -1.0 / (4 * kPi * kPi);
  EXPECT_NEAR(r.get({2}, {0}).real(), f, 1e-16);
  EXPECT_NEAR(r.get({0}, {2}).real(), f, 1e-16);
  EXPECT_NEAR(std::abs(r.get({1}, {1})), 0.0, 1e-16);
}

}  // namespace
}  // namespace lclt
