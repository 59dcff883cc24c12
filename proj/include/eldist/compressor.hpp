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

#include <cstdint>
#include <string>
#include <string_view>

#include "eldist/rolling_hash.hpp"

namespace eldist {

// Default digest alphabet: ASCII 0x21..0x7E minus the CSV separator ','
// and the quoting hazards " ' \ `. That leaves 89 bytes, and 89 is prime,
// so the coprimality constraint on C holds for every C that is not itself
// a multiple of 89. Digests built from it never require CSV quoting.
inline constexpr std::string_view kDefaultAlphabet =
    "!#$%&()*+-./0123456789:;<=>?@ABCDEFGHIJKLMNOPQRSTUVWXYZ[]^_"
    "abcdefghijklmnopqrstuvwxyz{|}~";
static_assert(kDefaultAlphabet.size() == 89);

/// Compression configuration.
///
/// `c` is the nominal compression rate: each window emits a digest character
/// with probability roughly 1/c, so digests come out near 1/c of the input
/// size. `n` is the window (neighborhood) size in bytes; values from 11 to 21
/// work well for text. `alphabet` is the set of bytes digests are written in.
struct Params {
  std::uint64_t c = 101;
  std::size_t n = 11;
  std::string alphabet{kDefaultAlphabet};

  friend bool operator==(const Params&, const Params&) = default;
};

enum class ParamsError {
  None,
  BadC,                   // c == 0
  BadN,                   // n < 2
  AlphabetTooSmall,       // fewer than 2 bytes
  DuplicateAlphabetByte,  // alphabet bytes must be unique
  ForbiddenByte,          // comma or whitespace would break the CSV format
  NotCoprime,             // gcd(c, alphabet length) must be 1
};

ParamsError validate_params(const Params& params) noexcept;
std::string_view describe(ParamsError error) noexcept;

/// Throws std::invalid_argument when validate_params() rejects.
void require_valid(const Params& params);

/// Digest length a well-mixed input of this size is expected to produce:
/// one character per C windows.
double expected_digest_length(std::uint64_t input_length, const Params& params) noexcept;

/// True when a digest's length is far off the 1/C expectation (shorter than
/// max(4, expected/8) or longer than 8x expected). Highly repetitive input
/// produces such digests; comparisons involving them still run but are
/// flagged low-confidence.
bool digest_size_suspect(std::uint64_t input_length, std::uint64_t digest_length,
                         std::uint64_t c, std::uint64_t n) noexcept;

/// Lossy-compresses `input` into a digest string over `params.alphabet`.
///
/// An N-byte window slides over the input one byte at a time (L - N + 1
/// windows for an L-byte input). Whenever a window's hash T satisfies
/// T mod C == 0, the character alphabet[T mod len(alphabet)] is appended.
/// Inputs shorter than N yield the empty digest. Deterministic: identical
/// input and params give identical digests on any machine.
///
/// Because a byte only influences the N windows covering it, an edit changes
/// at most N digest characters and everything emitted by windows strictly
/// outside the edited span is preserved.
std::string compress(std::string_view input, const Params& params);

/// compress() with an alternative window hash backend.
template <WindowHasher H>
std::string compress_with(std::string_view input, const Params& params) {
  require_valid(params);
  std::string digest;
  if (input.size() < params.n) {
    return digest;
  }
  const std::uint64_t alphabet_size = params.alphabet.size();
  const std::size_t window_count = input.size() - params.n + 1;

  H hasher(params.n);
  std::uint64_t hash = hasher.init(input.substr(0, params.n));
  for (std::size_t p = 0;;) {
    if (hash % params.c == 0) {
      digest.push_back(params.alphabet[hash % alphabet_size]);
    }
    if (++p == window_count) {
      break;
    }
    hash = hasher.roll(static_cast<unsigned char>(input[p - 1]),
                       static_cast<unsigned char>(input[p + params.n - 1]));
  }
  return digest;
}

}  // namespace eldist
