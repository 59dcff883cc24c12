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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <string>

#include "eldist/compressor.hpp"
#include "oracles.hpp"

using eldist::compress;
using eldist::kDefaultAlphabet;
using eldist::Params;
using eldist::ParamsError;
using eldist::validate_params;

namespace {

std::string random_bytes(std::mt19937_64& rng, std::size_t len) {
  std::uniform_int_distribution<int> byte(0, 255);
  std::string s(len, '\0');
  for (char& c : s) c = static_cast<char>(byte(rng));
  return s;
}

std::string prime_alphabet(std::size_t size) {
  // Distinct non-forbidden bytes starting at '!' (0x21), skipping the bytes
  // the format reserves.
  std::string alphabet;
  for (int b = 0x21; alphabet.size() < size && b < 0x100; ++b) {
    if (b == ',' || b == '"') continue;
    alphabet.push_back(static_cast<char>(b));
  }
  return alphabet;
}

}  // namespace

TEST_CASE("default alphabet is well-formed") {
  CHECK(kDefaultAlphabet.size() == 89);
  Params params;
  CHECK(validate_params(params) == ParamsError::None);
  for (const char banned : {',', ' ', '\t', '\n', '\r', '"', '\'', '\\', '`'}) {
    CHECK(kDefaultAlphabet.find(banned) == std::string_view::npos);
  }
}

TEST_CASE("parameter validation") {
  SUBCASE("the reference configuration is accepted") {
    Params params{.c = 51, .n = 11, .alphabet = prime_alphabet(83)};
    REQUIRE(params.alphabet.size() == 83);
    CHECK(validate_params(params) == ParamsError::None);
  }
  SUBCASE("C sharing a factor with the alphabet length is rejected") {
    Params params{.c = 10, .n = 11, .alphabet = prime_alphabet(62)};
    CHECK(validate_params(params) == ParamsError::NotCoprime);
  }
  SUBCASE("comma and whitespace are forbidden alphabet bytes") {
    Params params;
    params.alphabet = "ab,c";
    CHECK(validate_params(params) == ParamsError::ForbiddenByte);
    params.alphabet = "ab c";
    CHECK(validate_params(params) == ParamsError::ForbiddenByte);
    params.alphabet = "ab\tc";
    CHECK(validate_params(params) == ParamsError::ForbiddenByte);
  }
  SUBCASE("duplicate alphabet bytes are rejected") {
    Params params;
    params.alphabet = "abca";
    CHECK(validate_params(params) == ParamsError::DuplicateAlphabetByte);
  }
  SUBCASE("degenerate sizes are rejected") {
    Params params;
    params.n = 1;
    CHECK(validate_params(params) == ParamsError::BadN);
    params.n = 11;
    params.c = 0;
    CHECK(validate_params(params) == ParamsError::BadC);
    params.c = 101;
    params.alphabet = "x";
    CHECK(validate_params(params) == ParamsError::AlphabetTooSmall);
  }
  SUBCASE("compress throws on invalid params") {
    Params params;
    params.n = 0;
    CHECK_THROWS_AS(compress("hello world", params), std::invalid_argument);
  }
}

TEST_CASE("inputs shorter than N compress to the empty digest") {
  Params params{.c = 3, .n = 11};
  CHECK(compress("", params).empty());
  CHECK(compress("0123456789", params).empty());  // 10 bytes < N
  // Exactly N bytes gives one window, so the digest has at most one byte.
  CHECK(compress("0123456789A", params).size() <= 1);
}

TEST_CASE("digest matches the window-by-window oracle") {
  std::mt19937_64 rng(101);
  for (const auto& [c, n] : {std::pair<std::uint64_t, std::size_t>{5, 4},
                             {11, 11},
                             {51, 21}}) {
    Params params{.c = c, .n = n};
    for (int trial = 0; trial < 10; ++trial) {
      const std::string input = random_bytes(rng, 2000);
      CHECK(compress(input, params) == oracles::digest(input, params));
    }
  }
}

TEST_CASE("determinism across repeated runs") {
  std::mt19937_64 rng(55);
  const std::string input = random_bytes(rng, 4096);
  Params params{.c = 21, .n = 11};
  const std::string first = compress(input, params);
  CHECK(compress(input, params) == first);
  CHECK(compress(input, params) == first);
}

TEST_CASE("every digest byte is an alphabet member") {
  std::mt19937_64 rng(77);
  Params params{.c = 7, .n = 5};
  const std::string input = random_bytes(rng, 5000);
  const std::string digest = compress(input, params);
  REQUIRE(!digest.empty());
  for (const char c : digest) {
    CHECK(params.alphabet.find(c) != std::string::npos);
  }
}

TEST_CASE("1 MB random input lands near the 1/C size expectation") {
  std::mt19937_64 rng(20260810);
  const std::string input = random_bytes(rng, 1 << 20);
  Params params{.c = 301, .n = 11};
  const std::string digest = compress(input, params);
  const double expected = eldist::expected_digest_length(input.size(), params);
  CHECK(static_cast<double>(digest.size()) >= expected / 2.0);
  CHECK(static_cast<double>(digest.size()) <= expected * 2.0);
  CHECK_FALSE(eldist::digest_size_suspect(input.size(), digest.size(), params.c,
                                          params.n));
  // One full cross-check against the direct simulation at this size.
  CHECK(digest == oracles::digest(input, params));
}

TEST_CASE("concatenation only disturbs the boundary region") {
  std::mt19937_64 rng(31337);
  Params params{.c = 5, .n = 11};
  std::uniform_int_distribution<std::size_t> len(0, 600);
  for (int trial = 0; trial < 50; ++trial) {
    const std::string a = random_bytes(rng, len(rng));
    const std::string b = random_bytes(rng, len(rng));
    const std::string dig_a = compress(a, params);
    const std::string dig_b = compress(b, params);
    const std::string dig_ab = compress(a + b, params);

    CAPTURE(a.size());
    CAPTURE(b.size());
    REQUIRE(dig_ab.size() >= dig_a.size() + dig_b.size());
    REQUIRE(dig_ab.size() <= dig_a.size() + dig_b.size() + params.n - 1);
    CHECK(dig_ab.substr(0, dig_a.size()) == dig_a);
    CHECK(dig_ab.substr(dig_ab.size() - dig_b.size()) == dig_b);
  }
}

TEST_CASE("a single-byte edit changes at most N emissions, all local") {
  std::mt19937_64 rng(4242);
  Params params{.c = 3, .n = 11};
  std::uniform_int_distribution<int> byte(0, 255);
  for (int trial = 0; trial < 40; ++trial) {
    std::string input = random_bytes(rng, 1500);
    std::uniform_int_distribution<std::size_t> pos_dist(0, input.size() - 1);
    const std::size_t pos = pos_dist(rng);
    std::string edited = input;
    do {
      edited[pos] = static_cast<char>(byte(rng));
    } while (edited[pos] == input[pos]);

    const auto before = oracles::emissions(input, params);
    const auto after = oracles::emissions(edited, params);
    REQUIRE(before.size() == after.size());

    // Windows not covering `pos` must emit identically.
    std::size_t changed = 0;
    for (std::size_t w = 0; w < before.size(); ++w) {
      const bool covers = w <= pos && pos < w + params.n;
      if (covers) {
        if (before[w] != after[w]) ++changed;
      } else {
        REQUIRE(before[w] == after[w]);
      }
    }
    CHECK(changed <= params.n);

    // And the realized digests differ by at most N edits.
    CHECK(compress(input, params) == oracles::digest(input, params));
    CHECK(compress(edited, params) == oracles::digest(edited, params));
  }
}

TEST_CASE("prefix digests are string prefixes of the full digest") {
  // Every window of input[0..k) reads the same bytes inside the full input,
  // so extending the input can only append digest characters.
  std::mt19937_64 rng(9001);
  Params params{.c = 5, .n = 11};
  const std::string full = random_bytes(rng, 1200);
  const std::string full_digest = compress(full, params);
  for (const std::size_t k : {0u, 10u, 200u, 600u, 1100u, 1200u}) {
    const std::string prefix_digest =
        compress(std::string_view{full}.substr(0, k), params);
    CAPTURE(k);
    CHECK(full_digest.substr(0, prefix_digest.size()) == prefix_digest);
  }
}

TEST_CASE("repetitive input is flagged by the size heuristic") {
  Params params{.c = 101, .n = 11};
  const std::string repetitive(50000, 'x');
  const std::string digest = compress(repetitive, params);
  // A constant input has one distinct window; the digest is either empty or
  // one character repeated ~50k/C times. Either way the size check fires.
  CHECK(eldist::digest_size_suspect(repetitive.size(), digest.size(), params.c,
                                    params.n));
}
