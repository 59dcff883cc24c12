// Copyright 2026 The eldist Authors.
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

#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string_view>

namespace eldist {

// Rabin-Karp polynomial rolling hash over fixed-size byte windows:
//
//   value = sum(window[i] * base^(N-1-i)) mod modulus
//
// updated in constant time per one-byte slide. base = 257 is the first prime
// larger than any byte value; modulus = 2^61 - 1 is a Mersenne prime, so
// reduction is two shift-and-adds instead of a division. Digest streams are
// only comparable between builds using the same constants, which is why both
// are fixed at compile time rather than configurable.
//
// Not a cryptographic hash: no preimage or collision resistance is claimed.
class RabinKarpHasher {
 public:
  static constexpr std::uint64_t kBase = 257;
  static constexpr std::uint64_t kModulus = (std::uint64_t{1} << 61) - 1;

  explicit RabinKarpHasher(std::size_t window_size) : window_size_(window_size) {
    if (window_size == 0) {
      throw std::invalid_argument("rolling hash window size must be >= 1");
    }
    for (std::size_t i = 1; i < window_size; ++i) {
      leading_power_ = mul_mod(leading_power_, kBase);
    }
  }

  /// Hashes a full window from scratch. The window must have exactly the
  /// configured size.
  std::uint64_t init(std::string_view window) {
    if (window.size() != window_size_) {
      throw std::invalid_argument("window length does not match configured size");
    }
    std::uint64_t v = 0;
    for (const char byte : window) {
      v = add_small(mul_mod(v, kBase), static_cast<unsigned char>(byte));
    }
    value_ = v;
    return value_;
  }

  /// Slides the window one byte: `outgoing` leaves on the left, `incoming`
  /// enters on the right. Equivalent to re-running init() on the shifted
  /// window.
  std::uint64_t roll(unsigned char outgoing, unsigned char incoming) {
    const std::uint64_t trimmed = sub_mod(value_, mul_mod(outgoing, leading_power_));
    value_ = add_small(mul_mod(trimmed, kBase), incoming);
    return value_;
  }

  std::uint64_t value() const noexcept { return value_; }
  std::size_t window_size() const noexcept { return window_size_; }

 private:
  static std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) noexcept {
    const unsigned __int128 product = static_cast<unsigned __int128>(a) * b;
    std::uint64_t r = static_cast<std::uint64_t>(product & kModulus) +
                      static_cast<std::uint64_t>(product >> 61);
    r = (r & kModulus) + (r >> 61);
    return r == kModulus ? 0 : r;
  }

  // addend must be < 2^61; both operands reduced.
  static std::uint64_t add_small(std::uint64_t a, std::uint64_t b) noexcept {
    const std::uint64_t r = a + b;
    return r >= kModulus ? r - kModulus : r;
  }

  static std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b) noexcept {
    return a >= b ? a - b : a + (kModulus - b);
  }

  std::size_t window_size_;
  std::uint64_t leading_power_ = 1;
  std::uint64_t value_ = 0;
};

// Anything usable as the compressor's window hash: one init() over a full
// window, then O(1) roll() per slide. Only Rabin-Karp ships; the concept is
// the seam for swapping in another backend without touching the compressor.
template <typename H>
concept WindowHasher = requires(H h, std::string_view window, unsigned char byte) {
  { h.init(window) } -> std::convertible_to<std::uint64_t>;
  { h.roll(byte, byte) } -> std::convertible_to<std::uint64_t>;
  { h.window_size() } -> std::convertible_to<std::size_t>;
};

static_assert(WindowHasher<RabinKarpHasher>);

}  // namespace eldist
