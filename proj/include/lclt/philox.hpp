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

// Philox4x32-10 counter-based generator (Salmon et al., SC'11). A draw is a
// pure function of (counter, key), so any sample can be regenerated from its
// index alone and workers never share generator state.

#ifndef LCLT_PHILOX_HPP_
#define LCLT_PHILOX_HPP_

#include <array>
#include <cstddef>
#include <cstdint>

namespace lclt {

class Philox4x32 {
 public:
  using Block = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Block generate(Block ctr, Key key) {
    for (int r = 0; r < 10; ++r) {
      if (r > 0) {
        key[0] += kW0;
        key[1] += kW1;
      }
      ctr = round(ctr, key);
    }
    return ctr;
  }

  // L independent blocks in structure-of-arrays form, identical to L calls
  // of generate(); written so the rounds vectorize across lanes. Counter
  // words 2 and 3 are shared by all lanes.
  template <std::size_t L>
  static void generate_lanes(const std::uint32_t (&c0)[L],
                             const std::uint32_t (&c1)[L], std::uint32_t c2,
                             std::uint32_t c3, Key key,
                             std::array<std::uint32_t, L> (&out)[4]) {
    std::uint32_t x0[L], x1[L], x2[L], x3[L];
    for (std::size_t l = 0; l < L; ++l) {
      x0[l] = c0[l];
      x1[l] = c1[l];
      x2[l] = c2;
      x3[l] = c3;
    }
    for (int r = 0; r < 10; ++r) {
      if (r > 0) {
        key[0] += kW0;
        key[1] += kW1;
      }
      for (std::size_t l = 0; l < L; ++l) {
        const std::uint64_t p0 = static_cast<std::uint64_t>(kM0) * x0[l];
        const std::uint64_t p1 = static_cast<std::uint64_t>(kM1) * x2[l];
        x0[l] = static_cast<std::uint32_t>(p1 >> 32) ^ x1[l] ^ key[0];
        x1[l] = static_cast<std::uint32_t>(p1);
        x2[l] = static_cast<std::uint32_t>(p0 >> 32) ^ x3[l] ^ key[1];
        x3[l] = static_cast<std::uint32_t>(p0);
      }
    }
    for (std::size_t l = 0; l < L; ++l) {
      out[0][l] = x0[l];
      out[1][l] = x1[l];
      out[2][l] = x2[l];
      out[3][l] = x3[l];
    }
  }

  static Key key_from_seed(std::uint64_t seed) {
    return {static_cast<std::uint32_t>(seed),
            static_cast<std::uint32_t>(seed >> 32)};
  }

  // Uniform double in [0, 1) with 53 random bits.
  static double to_unit(std::uint32_t hi, std::uint32_t lo) {
    const std::uint64_t bits =
        ((static_cast<std::uint64_t>(hi) << 32) | lo) >> 11;
    return static_cast<double>(bits) * 0x1.0p-53;
  }

 private:
  static constexpr std::uint32_t kM0 = 0xD2511F53;
  static constexpr std::uint32_t kM1 = 0xCD9E8D57;
  static constexpr std::uint32_t kW0 = 0x9E3779B9;
  static constexpr std::uint32_t kW1 = 0xBB67AE85;

  static Block round(const Block& c, const Key& k) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kM0) * c[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kM1) * c[2];
    const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const auto lo0 = static_cast<std::uint32_t>(p0);
    const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const auto lo1 = static_cast<std::uint32_t>(p1);
    return {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
  }
};

}  // namespace lclt

#endif  // LCLT_PHILOX_HPP_
