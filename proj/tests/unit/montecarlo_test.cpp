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

#include "lclt/montecarlo.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <numbers>

#include <gtest/gtest.h>

#include "lclt/errors.hpp"
#include "lclt/stats.hpp"
#include "oracles.hpp"

namespace lclt {
namespace {

constexpr double kSigma = 0.6;

TEST(MonteCarlo, DeterministicAndWorkerInvariant) {
  const auto spec = builtin_spec("chars34");
  const auto a = sample_logL(spec, kSigma, 1000, 700, 42);
  McOptions o;
  o.workers = 3;
  const auto b = sample_logL(spec, kSigma, 1000, 700, 42, o);
  EXPECT_EQ(a.samples, b.samples);
  const auto c = sample_logL(spec, kSigma, 1000, 700, 43);
  EXPECT_NE(a.samples, c.samples);
}

TEST(MonteCarlo, SamplesDoNotDependOnBatchSize) {
  const auto spec = builtin_spec("zeta");
  const auto small = sample_logL(spec, kSigma, 1000, 13, 5);
  const auto big = sample_logL(spec, kSigma, 1000, 600, 5);
  for (std::size_t i = 0; i < small.samples.size(); ++i) {
    EXPECT_EQ(small.samples[i], big.samples[i]);
  }
}

TEST(MonteCarlo, MomentsMatchLocalSums) {
  // Each prime contributes mean zero and E|g_p|^2 = sum_m p^{-2 m sigma}/m^2,
  // split evenly between the real and imaginary parts.
  const std::uint32_t P = 1000;
  const std::uint64_t n = 40'000;
  const auto b = sample_logL(builtin_spec("zeta"), kSigma, P, n, 9);
  std::vector<double> re, im;
  for (std::uint64_t i = 0; i < n; ++i) {
    re.push_back(b.log_abs(i, 0));
    im.push_back(b.arg(i, 0));
  }
  const double half = static_cast<double>(oracle::zeta_psi_direct(kSigma, P)) / 2;
  const Moments mr = sample_moments(re), mi = sample_moments(im);
  EXPECT_LT(std::fabs(mr.mean), 5 * mr.mean_std_error);
  EXPECT_LT(std::fabs(mi.mean), 5 * mi.mean_std_error);
  const double var_se = half * std::sqrt(2.0 / n) * 1.5;
  EXPECT_NEAR(mr.variance, half, 5 * var_se);
  EXPECT_NEAR(mi.variance, half, 5 * var_se);
}

TEST(MonteCarlo, ArgumentsStayInsideBranch) {
  const auto b = sample_logL(builtin_spec("chars34"), kSigma, 1000, 2000, 3);
  for (std::uint64_t i = 0; i < b.n; ++i) {
    for (int j = 0; j < b.J; ++j) {
      EXPECT_TRUE(std::isfinite(b.log_abs(i, j)));
      EXPECT_TRUE(std::isfinite(b.arg(i, j)));
    }
  }
}

TEST(MonteCarlo, BandCovarianceMatchesDirectSum) {
  const auto D = band_covariance(builtin_spec("zeta"), kSigma, 1000, 20000);
  const double want = static_cast<double>(oracle::zeta_psi_direct(kSigma, 20000) -
                                          oracle::zeta_psi_direct(kSigma, 1000));
  ASSERT_EQ(D.size(), 1u);
  EXPECT_NEAR(D[0].real() / want, 1.0, 1e-12);
  EXPECT_EQ(D[0].imag(), 0.0);
  const auto E = band_covariance(builtin_spec("chars34"), kSigma, 1000, 20000);
  ASSERT_EQ(E.size(), 4u);
  EXPECT_EQ(E[1], std::conj(E[2]));
  EXPECT_GT(E[0].real(), 0.0);
}

TEST(MonteCarlo, BandRaisesVariance) {
  McOptions o;
  o.band_to = 100'000;
  const std::uint64_t n = 20'000;
  const auto b = sample_logL(builtin_spec("zeta"), kSigma, 1000, n, 11, o);
  std::vector<double> re;
  for (std::uint64_t i = 0; i < n; ++i) re.push_back(b.log_abs(i, 0));
  const double half = static_cast<double>(oracle::zeta_psi_direct(kSigma, 100'000)) / 2;
  EXPECT_NEAR(sample_moments(re).variance, half, 5 * half * std::sqrt(2.0 / n) * 1.5);
}

TEST(MonteCarlo, TailSdDecreasesAndIsRecorded) {
  const auto spec = builtin_spec("zeta");
  const auto a = tail_sd(spec, kSigma, 1000);
  const auto b = tail_sd(spec, kSigma, 100'000);
  EXPECT_GT(a[0], b[0]);
  EXPECT_GT(b[0], 0.0);
  EXPECT_EQ(sample_logL(spec, kSigma, 1000, 8, 1).truncation_sd, a);
}

TEST(MonteCarlo, EmpiricalProbabilityCountsHits) {
  SampleBatch b;
  b.J = 1;
  b.n = 4;
  b.samples = {0.0, 0.0, 10.0, 0.0, 0.1, -0.1, -10.0, 10.0};
  const auto e = empirical_probability(b, Rectangle::cube(1, -1, 1, -1, 1), {1.0});
  EXPECT_EQ(e.value, 0.5);
  EXPECT_NEAR(e.std_error, 0.25, 1e-15);
  EXPECT_THROW(empirical_probability(b, Rectangle::cube(2, 0, 1, 0, 1), {1.0}),
               ValidationError);
}

TEST(MonteCarlo, GateComparesModels) {
  ExpansionConfig c;
  c.N = 4;
  c.P_max = 100'000;
  const auto spec = builtin_spec("zeta");
  const CoeffTable t = b_table(spec, 0.4, 1e4, c);
  const auto bare = sample_logL(spec, t.sigmaT, 1000, 8, 1);
  EXPECT_FALSE(model_gate(bare, t).pass);
  EXPECT_THROW(require_gate(bare, t), GateError);
  McOptions o;
  o.band_to = 100'000;
  const auto banded = sample_logL(spec, t.sigmaT, 1000, 8, 1, o);
  const GateReport g = model_gate(banded, t);
  EXPECT_TRUE(g.pass);
  EXPECT_NEAR(g.gap_sd[0], 0.0, 1e-12);
  EXPECT_NO_THROW(require_gate(banded, t));
  const auto wrong_sigma = sample_logL(spec, 0.7, 1000, 8, 1, o);
  EXPECT_THROW(require_gate(wrong_sigma, t), GateError);
}

TEST(MonteCarlo, BinaryAndCsvOutput) {
  McOptions o;
  o.band_to = 5000;
  o.band_tail = true;
  const auto b = sample_logL(builtin_spec("chars34"), kSigma, 1000, 10, 2, o);
  const auto path =
      (std::filesystem::temp_directory_path() / "lclt_batch_test.bin").string();
  write_batch_binary(path, b);
  const auto r = read_batch_binary(path);
  std::remove(path.c_str());
  EXPECT_EQ(r.samples, b.samples);
  EXPECT_EQ(r.spec_label, b.spec_label);
  EXPECT_EQ(r.sigma, b.sigma);
  EXPECT_EQ(r.band_to, 5000u);
  EXPECT_TRUE(r.band_tail);
  EXPECT_EQ(r.truncation_sd, b.truncation_sd);
  EXPECT_THROW(read_batch_binary(path), ValidationError);
  const std::string csv = batch_csv(b);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "i,logabs_1,arg_1,logabs_2,arg_2");
}

TEST(MonteCarlo, RejectsBadArguments) {
  const auto spec = builtin_spec("zeta");
  EXPECT_THROW(sample_logL(spec, 0.4, 1000, 10, 1), ValidationError);
  EXPECT_THROW(sample_logL(spec, kSigma, 1000, 0, 1), ValidationError);
}

}  // namespace
}  // namespace lclt
