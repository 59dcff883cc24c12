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
#include <stdexcept>
#include <string>

#include "eldist/signature.hpp"

namespace eldist {

// Stock chance-overlap ratios of random string pairs, per alphabet model.
inline constexpr double kOverlapRandomChars = 0.0417;
inline constexpr double kOverlapEnglishChars = 0.1593;
inline constexpr double kOverlapEnglishWords = 0.1902;

/// Expected chance-overlap ratios per alphabet model. The defaults are the
/// stock calibration values; `calibrate` recomputes them for a specific
/// corpus.
struct OverlapRatios {
  double r_random = kOverlapRandomChars;
  double r_chars = kOverlapEnglishChars;
  double r_words = kOverlapEnglishWords;
};

/// Default scaling overlap for text workloads (the word-model ratio).
inline constexpr double kDefaultOverlap = kOverlapEnglishWords;

/// Digest pairs whose lengths differ by more than this factor get no
/// significance score; the formula degenerates for such pairs.
inline constexpr double kDefaultMaxRatio = 10.0;

/// Significance score: `value` is meaningful only when `applicable`.
/// Not applicable when the shorter digest is empty or the length ratio
/// exceeds the guard; value is 0 in both cases.
struct Significance {
  double value = 0.0;
  bool applicable = false;

  friend bool operator==(const Significance&, const Significance&) = default;
};

/// Everything estimate() derives for one signature pair. `eld` is the final
/// estimate; the intermediate terms are exposed for reporting and debugging.
struct EstimateResult {
  std::uint64_t eld = 0;              // round(scaled_dig_ld + file_length_diff)
  std::uint64_t dig_ld = 0;           // exact LD of the two digests
  std::uint64_t dig_diff = 0;         // |len(dig_a) - len(dig_b)|
  double effective_c = 0.0;           // (|A| + |B|) / (|dig_a| + |dig_b|)
  double scaled_dig_ld = 0.0;         // (dig_ld - dig_diff) * effective_c / (1 + r)
  std::uint64_t file_length_diff = 0; // | |A| - |B| |
  Significance delta;
  bool low_confidence = false;        // either digest size was suspect
};

enum class EstimateErrorCode {
  IncompatibleParams,  // C or N differ between the signatures
  EmptyDigests,        // both digests empty: effective C undefined
  ZeroLength,          // error_rate() with max(len_a, len_b) == 0
};

class EstimateError : public std::runtime_error {
 public:
  EstimateError(EstimateErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  EstimateErrorCode code() const noexcept { return code_; }

 private:
  EstimateErrorCode code_;
};

/// Estimates the Levenshtein distance of the two original documents from
/// their signatures:
///
///   dig_diff        = |len(dig_A)| - |len(dig_B)|
///   effective_c     = (|A| + |B|) / (|dig_A| + |dig_B|)
///   dig_ld          = LD(dig_A, dig_B)
///   scaled_dig_ld   = (dig_ld - dig_diff) * effective_c / (1 + r)
///   file_length_diff= |A| - |B|
///   eld             = round(scaled_dig_ld + file_length_diff)
///
/// with inputs ordered internally so |A| >= |B|. Rounding is half away from
/// zero. `r` discounts the overlap two unrelated strings share by chance.
/// Also computes the significance score from the same digest LD.
///
/// Throws EstimateError{IncompatibleParams} when C/N differ and
/// EstimateError{EmptyDigests} when both digests are empty (callers should
/// fall back to exact LD on the originals in that case).
EstimateResult estimate(const Signature& a, const Signature& b,
                        double r = kDefaultOverlap,
                        double max_ratio = kDefaultMaxRatio);

/// Significance of a digest pair given their already-computed LD, with the
/// digests ordered internally so len(dig_A) >= len(dig_B):
///
///   delta = (len(dig_A) - dig_ld) / len(dig_B)
///
/// delta is 1.0 when the digests match (or the shorter is contained in the
/// longer) and 0.0 when they are unrelated. Pairs whose digest lengths differ
/// by more than `max_ratio`, or where the shorter digest is empty, come back
/// not-applicable: the formula rewards pure deletion at extreme ratios.
Significance significance(const Signature& a, const Signature& b,
                          std::uint64_t dig_ld,
                          double max_ratio = kDefaultMaxRatio);

/// |ld - eld| / max(len_a, len_b): estimation error in proportion to the
/// longer original. Throws EstimateError{ZeroLength} when both lengths are 0.
double error_rate(std::uint64_t ld, std::uint64_t eld, std::uint64_t len_a,
                  std::uint64_t len_b);

}  // namespace eldist
