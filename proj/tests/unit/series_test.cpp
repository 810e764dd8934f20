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

#include "lclt/series.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "lclt/errors.hpp"

namespace lclt {
namespace {

using cplx = std::complex<double>;

TruncatedSeries random_series(int J, int N, int min_deg, std::uint64_t seed,
                              double scale = 0.3) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(-scale, scale);
  TruncatedSeries s(J, N);
  const auto& B = s.basis();
  for (std::size_t i = B.degree_begin(min_deg); i < B.size(); ++i) {
    s.coeff(i) = {U(rng), U(rng)};
  }
  return s;
}

double max_diff(const TruncatedSeries& a, const TruncatedSeries& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    m = std::max(m, std::abs(a.coeff(i) - b.coeff(i)));
  }
  return m;
}

TEST(Series, BasisIsGradedAndIndexed) {
  const auto B = MonomialBasis::get(2, 5);
  EXPECT_EQ(B.get(), MonomialBasis::get(2, 5).get());
  int prev = 0;
  for (std::size_t i = 0; i < B->size(); ++i) {
    const int* e = B->exponents(i);
    const int d = e[0] + e[1] + e[2] + e[3];
    EXPECT_EQ(d, B->degree(i));
    EXPECT_GE(d, prev);
    prev = d;
    EXPECT_EQ(B->index_of({e[0], e[1]}, {e[2], e[3]}), static_cast<std::int64_t>(i));
  }
  // C(4 + 5, 5) monomials in four slots of total degree <= 5.
  EXPECT_EQ(B->size(), 126u);
  EXPECT_EQ(B->index_of({3, 0}, {0, 3}), -1);
}

TEST(Series, DifferenceOfSquares) {
  TruncatedSeries a = TruncatedSeries::constant(1, 6, 1.0);
  a.set({0}, {1}, 1.0);
  TruncatedSeries b = TruncatedSeries::constant(1, 6, 1.0);
  b.set({0}, {1}, -1.0);
  const auto p = a * b;
  EXPECT_EQ(p.get({0}, {0}), cplx(1.0));
  EXPECT_EQ(p.get({0}, {2}), cplx(-1.0));
  EXPECT_EQ(p.nonzero_count(), 2u);
  EXPECT_EQ((a * TruncatedSeries(1, 6)).nonzero_count(), 0u);
}

TEST(Series, GeometricSquare) {
  const int N = 9;
  TruncatedSeries g(1, N);
  for (int k = 0; k <= N; ++k) g.set({0}, {k}, 1.0);
  const auto sq = g * g;
  for (int m = 0; m <= N; ++m) EXPECT_EQ(sq.get({0}, {m}), cplx(m + 1.0)) << m;
}

TEST(Series, MulRespectsCap) {
  const auto a = random_series(2, 6, 1, 1);
  const auto b = random_series(2, 6, 1, 2);
  const auto full = a.mul(b);
  const auto capped = a.mul(b, 4);
  EXPECT_LE(capped.max_degree(), 4);
  EXPECT_EQ(max_diff(full.truncate(4), capped.truncate(4)), 0.0);
}

TEST(Series, LogOfOnePlusZbarZ) {
  TruncatedSeries r(1, 8);
  r.set({1}, {1}, 1.0);
  const auto L = r.log1p();
  EXPECT_NEAR(L.get({1}, {1}).real(), 1.0, 1e-15);
  EXPECT_NEAR(L.get({2}, {2}).real(), -0.5, 1e-15);
  EXPECT_NEAR(L.get({3}, {3}).real(), 1.0 / 3, 1e-15);
  EXPECT_NEAR(L.get({4}, {4}).real(), -0.25, 1e-15);
  EXPECT_EQ(TruncatedSeries(2, 5).log1p().nonzero_count(), 0u);
}

TEST(Series, ExpOfScaledZbarZ) {
  const cplx a(0.7, -0.2);
  TruncatedSeries s(1, 10);
  s.set({1}, {1}, a);
  const auto E = s.exp();
  cplx want = 1.0;
  for (int m = 0; m <= 5; ++m) {
    EXPECT_NEAR(std::abs(E.get({m}, {m}) - want), 0.0, 1e-15) << m;
    want *= a / static_cast<double>(m + 1);
  }
  const auto one = TruncatedSeries(2, 4).exp();
  EXPECT_EQ(one.coeff(0), cplx(1.0));
  EXPECT_EQ(one.nonzero_count(), 1u);
}

TEST(Series, ExpLogRoundTrips) {
  for (int J : {1, 2}) {
    const auto R = random_series(J, 7, 2, 10 + J);
    auto onep = R.log1p().exp();
    onep.coeff(0) -= 1.0;
    EXPECT_LT(max_diff(onep, R), 1e-12) << J;
    const auto S = random_series(J, 7, 1, 20 + J);
    auto em1 = S.exp();
    em1.coeff(0) -= 1.0;
    EXPECT_LT(max_diff(em1.log1p(), S), 1e-12) << J;
  }
}

TEST(Series, RejectsConstantTerm) {
  const auto c = TruncatedSeries::constant(1, 4, 0.5);
  EXPECT_THROW(c.log1p(), ValidationError);
  EXPECT_THROW(c.exp(), ValidationError);
  TruncatedSeries s(1, 3);
  EXPECT_THROW(s.set({2}, {2}, 1.0), ValidationError);
}

TEST(Series, ExtractDegree) {
  TruncatedSeries s = TruncatedSeries::constant(1, 4, 1.0);
  s.set({1}, {1}, 1.0);
  const auto d2 = s.extract_degree(2);
  EXPECT_EQ(d2.nonzero_count(), 1u);
  EXPECT_EQ(d2.get({1}, {1}), cplx(1.0));

  const auto r = random_series(2, 6, 0, 3);
  TruncatedSeries sum(2, 6);
  for (int n = 0; n <= 6; ++n) sum += r.extract_degree(n);
  EXPECT_EQ(max_diff(sum, r), 0.0);

  // Homogeneity: degree-3 part at 2z is 8 times its value at z.
  const std::vector<cplx> z = {{0.3, -0.1}, {-0.2, 0.25}};
  const std::vector<cplx> z2 = {2.0 * z[0], 2.0 * z[1]};
  const auto h = r.extract_degree(3);
  EXPECT_NEAR(std::abs(h.evaluate_z(z2) - 8.0 * h.evaluate_z(z)), 0.0, 1e-14);
}

TEST(Series, TruncateExtend) {
  const auto r = random_series(2, 6, 0, 4);
  const auto t = r.truncate(3);
  EXPECT_EQ(t.N(), 3);
  const auto e = t.extend(6);
  EXPECT_EQ(max_diff(e, r.truncate(3).extend(6)), 0.0);
  for (std::size_t i = 0; i < t.coeffs().size(); ++i) EXPECT_EQ(t.coeff(i), r.coeff(i));
}

TEST(Series, EvaluateMatchesDirectPolynomial) {
  TruncatedSeries s(1, 3);
  s.set({0}, {0}, 2.0);
  s.set({1}, {0}, cplx(0, 1));
  s.set({1}, {2}, 3.0);
  const cplx u(0.4, 0.1), w(-0.3, 0.2);
  EXPECT_NEAR(std::abs(s.evaluate({u}, {w}) - (2.0 + cplx(0, 1) * u + 3.0 * u * w * w)), 0.0,
              1e-15);
}

TEST(Series, DumpIsStable) {
  TruncatedSeries s(1, 2);
  s.set({1}, {1}, 0.5);
  EXPECT_EQ(s.dump(), s.dump());
  EXPECT_NE(s.dump().find("0.5"), std::string::npos);
}

}  // namespace
}  // namespace lclt
