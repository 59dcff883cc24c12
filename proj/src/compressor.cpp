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

#include "eldist/compressor.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <string>

namespace eldist {

namespace {

constexpr std::string_view kForbiddenAlphabetBytes = ", \t\n\r";

}  // namespace

ParamsError validate_params(const Params& params) noexcept {
  if (params.c == 0) {
    return ParamsError::BadC;
  }
  if (params.n < 2) {
    return ParamsError::BadN;
  }
  if (params.alphabet.size() < 2) {
    return ParamsError::AlphabetTooSmall;
  }
  std::array<bool, 256> seen{};
  for (const char byte : params.alphabet) {
    if (kForbiddenAlphabetBytes.find(byte) != std::string_view::npos) {
      return ParamsError::ForbiddenByte;
    }
    auto& slot = seen[static_cast<unsigned char>(byte)];
    if (slot) {
      return ParamsError::DuplicateAlphabetByte;
    }
    slot = true;
  }
  if (std::gcd(params.c, static_cast<std::uint64_t>(params.alphabet.size())) != 1) {
    return ParamsError::NotCoprime;
  }
  return ParamsError::None;
}

std::string_view describe(ParamsError error) noexcept {
  switch (error) {
    case ParamsError::None:
      return "ok";
    case ParamsError::BadC:
      return "compression rate C must be >= 1";
    case ParamsError::BadN:
      return "neighborhood size N must be >= 2";
    case ParamsError::AlphabetTooSmall:
      return "alphabet needs at least 2 bytes";
    case ParamsError::DuplicateAlphabetByte:
      return "alphabet bytes must be unique";
    case ParamsError::ForbiddenByte:
      return "alphabet must not contain comma or whitespace";
    case ParamsError::NotCoprime:
      return "alphabet length must be coprime with C";
  }
  return "unknown parameter error";
}

void require_valid(const Params& params) {
  const ParamsError error = validate_params(params);
  if (error != ParamsError::None) {
    throw std::invalid_argument(std::string{describe(error)});
  }
}

double expected_digest_length(std::uint64_t input_length,
                              const Params& params) noexcept {
  if (input_length < params.n) {
    return 0.0;
  }
  const auto windows = static_cast<double>(input_length - params.n + 1);
  return windows / static_cast<double>(params.c);
}

bool digest_size_suspect(std::uint64_t input_length, std::uint64_t digest_length,
                         std::uint64_t c, std::uint64_t n) noexcept {
  double expected = 0.0;
  if (c > 0 && input_length >= n && n > 0) {
    expected = static_cast<double>(input_length - n + 1) / static_cast<double>(c);
  }
  const double lower = std::max(4.0, expected / 8.0);
  const auto actual = static_cast<double>(digest_length);
  return actual < lower || actual > 8.0 * expected;
}

std::string compress(std::string_view input, const Params& params) {
  return compress_with<RabinKarpHasher>(input, params);
}

}  // namespace eldist
