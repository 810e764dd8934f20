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

#include "lclt/primes.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace lclt {
namespace {

TEST(Primes, SmallCases) {
  EXPECT_EQ(primes_up_to(10), (std::vector<std::uint32_t>{2, 3, 5, 7}));
  EXPECT_TRUE(primes_up_to(1).empty());
  EXPECT_TRUE(primes_up_to(0).empty());
  EXPECT_EQ(primes_up_to(2), (std::vector<std::uint32_t>{2}));
}

TEST(Primes, MatchesSecondSieveToOneMillion) {
  const auto a = primes_up_to(1'000'000);
  EXPECT_EQ(a.size(), 78498u);
  EXPECT_EQ(a, oracle::simple_primes(1'000'000));
}

TEST(Primes, SegmentsCoverHalfOpenRange) {
  std::vector<std::uint32_t> got;
  for_each_prime_segment(1000, 3'000'000, [&](std::span<const std::uint32_t> s) {
    got.insert(got.end(), s.begin(), s.end());
  });
  std::vector<std::uint32_t> want;
  for (auto p : oracle::simple_primes(3'000'000)) {
    if (p > 1000) want.push_back(p);
  }
  EXPECT_EQ(got, want);
}

TEST(Primes, SmallestPrimeFactor) {
  const auto spf = smallest_prime_factors(10'000);
  for (std::uint32_t n = 2; n <= 10'000; ++n) {
    std::uint32_t f = 2;
    while (n % f) ++f;
    ASSERT_EQ(spf[n], f) << n;
  }
}

TEST(Primes, TailBoundDominatesDirectSum) {
  // sum_{1e4 < p <= 1e7} p^{-s} must sit below the bound for p > 1e4.
  const auto ps = oracle::simple_primes(10'000'000);
  for (double s : {1.2, 1.5, 2.0}) {
    long double direct = 0.0L;
    for (auto p : ps) {
      if (p > 10'000) direct += std::pow(static_cast<long double>(p), -s);
    }
    EXPECT_GT(prime_power_sum_tail_bound(s, 1e4), static_cast<double>(direct)) << s;
    // The estimate is close to the truth (it ignores p > 1e7 here, so
    // compare loosely).
    EXPECT_NEAR(prime_power_sum_tail_estimate(s, 1e4), static_cast<double>(direct),
                0.15 * static_cast<double>(direct) + prime_power_sum_tail_bound(s, 1e7))
        << s;
  }
}

TEST(Primes, RejectsHugeLimit) {
  EXPECT_ANY_THROW(primes_up_to(kMaxSieveLimit + 1));
}

}  // namespace
}  // namespace lclt
