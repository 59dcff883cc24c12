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

#include "eldist/estimator.hpp"

#include <cassert>
#include <cmath>

#include "eldist/levenshtein.hpp"

namespace eldist {

EstimateResult estimate(const Signature& a, const Signature& b, double r,
                        double max_ratio) {
  if (!compatible(a, b)) {
    throw EstimateError(EstimateErrorCode::IncompatibleParams,
                        "signatures use different C or N and cannot be compared");
  }
  // Order by original length so file_length_diff is |A| - |B| with |A| >= |B|.
  const Signature& big = a.file_length >= b.file_length ? a : b;
  const Signature& small = (&big == &a) ? b : a;

  const std::uint64_t dig_big = big.digest.size();
  const std::uint64_t dig_small = small.digest.size();
  if (dig_big + dig_small == 0) {
    throw EstimateError(EstimateErrorCode::EmptyDigests,
                        "both digests are empty; compare the originals instead");
  }

  EstimateResult result;
  result.dig_diff = dig_big >= dig_small ? dig_big - dig_small : dig_small - dig_big;
  result.effective_c = static_cast<double>(big.file_length + small.file_length) /
                       static_cast<double>(dig_big + dig_small);
  result.dig_ld = levenshtein(big.digest, small.digest);
  result.scaled_dig_ld =
      static_cast<double>(result.dig_ld - result.dig_diff) * result.effective_c /
      (1.0 + r);
  result.file_length_diff = big.file_length - small.file_length;
  result.eld = static_cast<std::uint64_t>(std::llround(
      result.scaled_dig_ld + static_cast<double>(result.file_length_diff)));
  result.delta = significance(a, b, result.dig_ld, max_ratio);
  result.low_confidence =
      digest_size_suspect(a.file_length, a.digest_length, a.c, a.n) ||
      digest_size_suspect(b.file_length, b.digest_length, b.c, b.n);
  return result;
}

Significance significance(const Signature& a, const Signature& b,
                          std::uint64_t dig_ld, double max_ratio) {
  // Ordered by digest length here, independently of the file lengths.
  const std::uint64_t longer = std::max(a.digest.size(), b.digest.size());
  const std::uint64_t shorter = std::min(a.digest.size(), b.digest.size());
  if (shorter == 0) {
    return {0.0, false};
  }
  if (static_cast<double>(longer) > max_ratio * static_cast<double>(shorter)) {
    // At extreme ratios deleting the surplus alone yields a perfect-looking
    // score; report nothing instead of a misleading 1.0.
    return {0.0, false};
  }
  const double delta = (static_cast<double>(longer) - static_cast<double>(dig_ld)) /
                       static_cast<double>(shorter);
  assert(delta >= 0.0 && delta <= 1.0);
  return {delta, true};
}

double error_rate(std::uint64_t ld, std::uint64_t eld, std::uint64_t len_a,
                  std::uint64_t len_b) {
  const std::uint64_t longer = std::max(len_a, len_b);
  if (longer == 0) {
    throw EstimateError(EstimateErrorCode::ZeroLength,
                        "error rate needs a nonzero document length");
  }
  const std::uint64_t gap = ld >= eld ? ld - eld : eld - ld;
  return static_cast<double>(gap) / static_cast<double>(longer);
}

}  // namespace eldist
