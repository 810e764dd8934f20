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

#include <algorithm>
#include <cmath>

#include <boost/math/special_functions/expint.hpp>

#include "lclt/errors.hpp"

namespace lclt {
namespace {

constexpr std::uint64_t kSegmentBytes = 1 << 18;  // odd numbers per segment

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Plain sieve for the base primes up to sqrt(limit).
std::vector<std::uint32_t> small_primes(std::uint64_t limit) {
  std::vector<std::uint32_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

}  // namespace

void for_each_prime_segment(
    std::uint64_t lo, std::uint64_t hi,
    const std::function<void(std::span<const std::uint32_t>)>& visit) {
  require(hi <= kMaxSieveLimit, "prime sieve limit exceeds 4e9");
  if (hi < 2 || hi <= lo) return;

  std::vector<std::uint32_t> batch;
  if (lo < 2 && hi >= 2) {
    batch.push_back(2);
    visit(batch);
    batch.clear();
  }

  const auto base = small_primes(isqrt(hi));
  // Sieve odd numbers only; index i in a segment stands for start + 2 i.
  std::uint64_t start = std::max<std::uint64_t>(3, lo + 1);
  if (start % 2 == 0) ++start;
  std::vector<std::uint8_t> composite(kSegmentBytes);

  while (start <= hi) {
    const std::uint64_t span_len =
        std::min<std::uint64_t>(kSegmentBytes, (hi - start) / 2 + 1);
    const std::uint64_t end = start + 2 * (span_len - 1);  // inclusive
    std::fill(composite.begin(), composite.begin() + span_len, 0);

    for (std::uint32_t p : base) {
      if (p == 2) continue;
      const std::uint64_t pp = static_cast<std::uint64_t>(p) * p;
      if (pp > end) break;
      std::uint64_t first = std::max(pp, (start + p - 1) / p * p);
      if (first % 2 == 0) first += p;
      for (std::uint64_t m = first; m <= end; m += 2 * p) {
        composite[(m - start) / 2] = 1;
      }
    }
    batch.clear();
    for (std::uint64_t i = 0; i < span_len; ++i) {
      if (!composite[i]) batch.push_back(static_cast<std::uint32_t>(start + 2 * i));
    }
    if (!batch.empty()) visit(batch);
    start = end + 2;
  }
}

std::vector<std::uint32_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint32_t> out;
  if (limit < 2) return out;
  if (limit > 100) {
    const double x = static_cast<double>(limit);
    out.reserve(static_cast<std::size_t>(1.26 * x / std::log(x)) + 16);
  }
  for_each_prime_segment(0, limit, [&](std::span<const std::uint32_t> ps) {
    out.insert(out.end(), ps.begin(), ps.end());
  });
  return out;
}

std::vector<std::uint32_t> smallest_prime_factors(std::uint32_t limit) {
  std::vector<std::uint32_t> spf(static_cast<std::size_t>(limit) + 1, 0);
  std::vector<std::uint32_t> primes;
  // Linear sieve: every composite is struck exactly once by its spf.
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf[i] == 0) {
      spf[i] = static_cast<std::uint32_t>(i);
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : primes) {
      const std::uint64_t m = i * p;
      if (p > spf[i] || m > limit) break;
      spf[m] = p;
    }
  }
  return spf;
}

double prime_power_sum_tail_bound(double s, double P) {
  require(s > 1.0, "prime tail bound needs s > 1");
  require(P >= 2.0, "prime tail bound needs P >= 2");
  return 1.25506 * s * std::pow(P, 1.0 - s) / ((s - 1.0) * std::log(P));
}

double prime_power_sum_tail_estimate(double s, double P) {
  require(s > 1.0, "prime tail estimate needs s > 1");
  require(P >= 2.0, "prime tail estimate needs P >= 2");
  return boost::math::expint(1, (s - 1.0) * std::log(P));
}

}  // namespace lclt
