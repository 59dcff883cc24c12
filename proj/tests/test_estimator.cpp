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

#include <cmath>
#include <random>
#include <string>

#include "eldist/calibration.hpp"
#include "eldist/estimator.hpp"
#include "eldist/levenshtein.hpp"

using eldist::build_signature;
using eldist::error_rate;
using eldist::estimate;
using eldist::EstimateError;
using eldist::EstimateErrorCode;
using eldist::EstimateResult;
using eldist::Params;
using eldist::parse_signature;
using eldist::significance;
using eldist::Signature;

namespace {

Signature stub(std::string path, std::uint64_t file_length, std::size_t digest_length,
               char fill = 'x') {
  Signature sig;
  sig.path = std::move(path);
  sig.file_length = file_length;
  sig.c = 51;
  sig.n = 20;
  sig.digest = std::string(digest_length, fill);
  sig.digest_length = digest_length;
  return sig;
}

}  // namespace

TEST_CASE("reference pair reproduces every intermediate term") {
  const Signature a = parse_signature("docA,700,51,20,15,AABBCFF00192192");
  const Signature b = parse_signature("docB,500,51,20,10,AABBCCDDEE");
  const EstimateResult result = estimate(a, b, 0.19);

  CHECK(result.dig_diff == 5);
  CHECK(result.effective_c == doctest::Approx(48.0));
  CHECK(result.dig_ld == 10);
  CHECK(result.scaled_dig_ld == doctest::Approx(201.68).epsilon(0.0001));
  CHECK(result.file_length_diff == 200);
  CHECK(result.eld == 402);
}

TEST_CASE("estimation is symmetric in its arguments") {
  const Signature a = parse_signature("docA,700,51,20,15,AABBCFF00192192");
  const Signature b = parse_signature("docB,500,51,20,10,AABBCCDDEE");
  const EstimateResult ab = estimate(a, b, 0.19);
  const EstimateResult ba = estimate(b, a, 0.19);
  CHECK(ab.eld == ba.eld);
  CHECK(ab.dig_ld == ba.dig_ld);
  CHECK(ab.dig_diff == ba.dig_diff);
  CHECK(ab.effective_c == ba.effective_c);
  CHECK(ab.delta == ba.delta);
}

TEST_CASE("identical signatures estimate zero") {
  const Signature a = parse_signature("docA,700,51,20,15,AABBCFF00192192");
  const EstimateResult result = estimate(a, a);
  CHECK(result.eld == 0);
  CHECK(result.dig_ld == 0);
  CHECK(result.dig_diff == 0);
  CHECK(result.file_length_diff == 0);
  CHECK(result.delta.applicable);
  CHECK(result.delta.value == doctest::Approx(1.0));
}

TEST_CASE("incompatible parameters are refused") {
  const Signature a = parse_signature("docA,700,51,20,15,AABBCFF00192192");
  const Signature b = parse_signature("docB,500,101,20,10,AABBCCDDEE");
  try {
    estimate(a, b);
    FAIL("expected EstimateError");
  } catch (const EstimateError& e) {
    CHECK(e.code() == EstimateErrorCode::IncompatibleParams);
  }
}

TEST_CASE("two empty digests cannot be estimated") {
  const Signature a = stub("a", 5, 0);
  const Signature b = stub("b", 9, 0);
  try {
    estimate(a, b);
    FAIL("expected EstimateError");
  } catch (const EstimateError& e) {
    CHECK(e.code() == EstimateErrorCode::EmptyDigests);
  }
}

TEST_CASE("one empty digest still yields the length floor") {
  const Signature a = stub("a", 5000, 90);
  const Signature b = stub("b", 40, 0);
  const EstimateResult result = estimate(a, b);
  CHECK(result.eld >= result.file_length_diff);
  CHECK_FALSE(result.delta.applicable);
}

TEST_CASE("significance sample values") {
  struct Row {
    std::uint64_t len_a, len_b, ld;
    double expected;
  };
  // Equal-ish digests first, then the degenerate large-ratio rows.
  const Row rows[] = {
      {700, 700, 0, 1.000},  {700, 700, 10, 0.986}, {700, 350, 400, 0.857},
      {700, 100, 600, 1.000}, {700, 700, 600, 0.143}, {700, 350, 650, 0.143},
      {700, 100, 696, 0.040}, {700, 200, 700, 0.000},
  };
  for (const Row& row : rows) {
    const Signature a = stub("a", row.len_a * 50, row.len_a);
    const Signature b = stub("b", row.len_b * 50, row.len_b);
    const auto sig = significance(a, b, row.ld);
    CAPTURE(row.len_a);
    CAPTURE(row.len_b);
    CAPTURE(row.ld);
    REQUIRE(sig.applicable);
    CHECK(std::abs(sig.value - row.expected) < 0.0005);
  }
}

TEST_CASE("ratio guard suppresses degenerate scores") {
  // At a 100:1 digest ratio, plain deletion makes delta look perfect; the
  // guard withholds the score instead.
  const Signature a = stub("a", 70000 * 50, 70000);
  const Signature b = stub("b", 700 * 50, 700);
  CHECK_FALSE(significance(a, b, 69300).applicable);
  CHECK_FALSE(significance(a, b, 69650).applicable);
  CHECK_FALSE(significance(a, b, 70000).applicable);
  // A custom wider guard admits them again.
  CHECK(significance(a, b, 69300, 100.0).applicable);
}

TEST_CASE("empty shorter digest is never scored") {
  const Signature a = stub("a", 5000, 90);
  const Signature b = stub("b", 40, 0);
  CHECK_FALSE(significance(a, b, 90).applicable);
}

TEST_CASE("random related digests keep delta within bounds") {
  std::mt19937_64 rng(20260810);
  const eldist::AlphabetModel model = eldist::random_chars_model();
  Params params{.c = 11, .n = 11};
  for (int trial = 0; trial < 30; ++trial) {
    const std::string text_a = eldist::sample_string(model, 4000 + trial * 101, rng);
    std::string text_b = text_a;
    text_b.erase(text_b.size() / 3, trial * 7);  // chop a block
    const Signature a = build_signature("a", text_a, params);
    const Signature b = build_signature("b", text_b, params);
    const EstimateResult result = estimate(a, b);

    CHECK(result.eld >= result.file_length_diff);
    if (result.delta.applicable) {
      CHECK(result.delta.value >= 0.0);
      CHECK(result.delta.value <= 1.0);
    }
    // Cross-argument symmetry on real digests.
    const EstimateResult swapped = estimate(b, a);
    CHECK(swapped.eld == result.eld);
    CHECK(swapped.delta == result.delta);
  }
}

TEST_CASE("error rate reference values") {
  CHECK(error_rate(1, 2, 32000, 32000) == doctest::Approx(1.0 / 32000.0));
  CHECK(error_rate(1000, 2000, 32000, 32000) == doctest::Approx(0.03125));
  CHECK(error_rate(15000, 30000, 32000, 32000) == doctest::Approx(0.46875));
  CHECK(error_rate(123, 123, 5000, 700) == 0.0);
  CHECK(error_rate(2, 1, 100, 400) == doctest::Approx(0.0025));
}

TEST_CASE("error rate refuses zero-length documents") {
  try {
    error_rate(1, 2, 0, 0);
    FAIL("expected EstimateError");
  } catch (const EstimateError& e) {
    CHECK(e.code() == EstimateErrorCode::ZeroLength);
  }
}
