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

#ifndef LCLT_PRIMES_HPP_
#define LCLT_PRIMES_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace lclt {

// Largest cutoff accepted by the sieve routines.
inline constexpr std::uint64_t kMaxSieveLimit = 4'000'000'000ULL;

// All primes p <= limit in ascending order (segmented sieve of Eratosthenes).
std::vector<std::uint32_t> primes_up_to(std::uint64_t limit);

// Calls `visit` once per sieve segment with the primes in (lo, hi] that fall
// in that segment, in ascending order. Memory stays O(sqrt(hi) + segment).
void for_each_prime_segment(
    std::uint64_t lo, std::uint64_t hi,
    const std::function<void(std::span<const std::uint32_t>)>& visit);

// spf[n] is the smallest prime factor of n for 2 <= n <= limit; spf[0] and
// spf[1] are 0.
std::vector<std::uint32_t> smallest_prime_factors(std::uint32_t limit);

// Rigorous upper bound for sum_{p > P} p^{-s}, s > 1, P >= 2, from
// pi(x) < 1.25506 x / log x (Rosser-Schoenfeld) and partial summation.
double prime_power_sum_tail_bound(double s, double P);

// Prime-number-theorem estimate of sum_{p > P} p^{-s}:
// int_P^inf x^{-s} dx / log x = E_1((s - 1) log P).
double prime_power_sum_tail_estimate(double s, double P);

}  // namespace lclt

#endif  // LCLT_PRIMES_HPP_
