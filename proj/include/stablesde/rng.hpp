// Copyright 2026 the stablesde authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string_view>

namespace stablesde {

namespace detail {

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline constexpr std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace detail

// Splittable counter-based random stream (Philox4x32-10, Salmon et al. 2011).
// A stream is keyed by (master seed, purpose tag, index); streams with
// distinct keys are independent, and a stream's output sequence depends only
// on its key, never on other streams or on scheduling.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::string_view tag, std::uint64_t index = 0) {
    const std::uint64_t k = detail::splitmix64(master_seed ^ 0xd1b54a32d192ed03ULL);
    key0_ = static_cast<std::uint32_t>(k);
    key1_ = static_cast<std::uint32_t>(k >> 32);
    stream_ = detail::splitmix64(detail::fnv1a64(tag) ^ detail::splitmix64(index));
  }

  std::uint64_t next_u64() {
    if (pos_ >= 2) refill();
    return out_[pos_++];
  }

  // strictly inside (0,1)
  double uniform01() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  double exponential(double rate = 1.0) { return -std::log(uniform01()) / rate; }

  // Box-Muller; the paired draw is cached
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double r = std::sqrt(-2.0 * std::log(uniform01()));
    const double phi = 2.0 * std::numbers::pi * uniform01();
    spare_ = r * std::sin(phi);
    has_spare_ = true;
    return r * std::cos(phi);
  }

 private:
  static constexpr std::uint32_t kM0 = 0xd2511f53u;
  static constexpr std::uint32_t kM1 = 0xcd9e8d57u;
  static constexpr std::uint32_t kW0 = 0x9e3779b9u;
  static constexpr std::uint32_t kW1 = 0xbb67ae85u;

  static void round(std::array<std::uint32_t, 4>& c, std::uint32_t k0, std::uint32_t k1) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kM0) * c[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kM1) * c[2];
    const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
    const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
    c = {hi1 ^ c[1] ^ k0, lo1, hi0 ^ c[3] ^ k1, lo0};
  }

  void refill() {
    std::array<std::uint32_t, 4> c = {
        static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
        static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32)};
    std::uint32_t k0 = key0_, k1 = key1_;
    for (int r = 0; r < 10; ++r) {
      if (r > 0) {
        k0 += kW0;
        k1 += kW1;
      }
      round(c, k0, k1);
    }
    out_[0] = c[0] | (static_cast<std::uint64_t>(c[1]) << 32);
    out_[1] = c[2] | (static_cast<std::uint64_t>(c[3]) << 32);
    pos_ = 0;
    ++block_;
  }

  std::uint32_t key0_ = 0, key1_ = 0;
  std::uint64_t stream_ = 0;
  std::uint64_t block_ = 0;
  std::array<std::uint64_t, 2> out_{};
  int pos_ = 2;
  double spare_ = 0;
  bool has_spare_ = false;
};

}  // namespace stablesde
