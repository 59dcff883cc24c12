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
#include <filesystem>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace eldist {

enum class ModelKind {
  RandomChars,    // uniform draws from a fixed 83-symbol set
  CharFrequency,  // draws single bytes from a corpus, frequency-weighted
  WordList,       // draws whole corpus words, a space after each
};

std::string_view to_string(ModelKind kind) noexcept;

/// Sampling model for calibration strings. Elements are single characters for
/// the char-based kinds and words for WordList; repeated elements carry the
/// corpus frequency weighting, since sampling is uniform over positions.
struct AlphabetModel {
  ModelKind kind = ModelKind::RandomChars;
  std::vector<std::string> elements;
};

enum class CalibrationErrorCode {
  EmptyModel,
  CorpusUnreadable,
  EmptyCorpus,
};

class CalibrationError : public std::runtime_error {
 public:
  CalibrationError(CalibrationErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  CalibrationErrorCode code() const noexcept { return code_; }

 private:
  CalibrationErrorCode code_;
};

/// The fixed RandomChars set: ASCII letters, digits, and ()[]+#_-!?%<>@.:;&/{}
/// -- 83 symbols.
AlphabetModel random_chars_model();

/// Builds a model from a corpus file. CharFrequency strips newlines and keeps
/// every remaining byte as an element; WordList splits on whitespace.
/// RandomChars ignores the corpus. Throws CalibrationError on unreadable or
/// empty corpora.
AlphabetModel load_model(ModelKind kind, const std::filesystem::path& corpus);

/// Draws elements uniformly until `length` bytes accumulate, then truncates to
/// exactly `length`. WordList draws append one space after each word.
std::string sample_string(const AlphabetModel& model, std::size_t length,
                          std::mt19937_64& rng);

/// Measured chance-overlap ratio R for the model: generates `runs` independent
/// string pairs of `length` bytes and averages 1 - LD(s1, s2) / length.
/// Deterministic for a fixed seed. `length` below 1000 is rejected as too
/// noisy to mean anything.
double expected_overlap(const AlphabetModel& model, std::size_t length,
                        unsigned runs, std::uint64_t seed);

}  // namespace eldist
