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

#include "eldist/calibration.hpp"

#include <fstream>
#include <sstream>

#include "eldist/levenshtein.hpp"

namespace eldist {

namespace {

constexpr std::string_view kRandomCharsLetters =
    "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
constexpr std::string_view kRandomCharsDigits = "0123456789";
constexpr std::string_view kRandomCharsPunct = "()[]+#_-!?%<>@.:;&/{}";

std::string read_corpus(const std::filesystem::path& corpus) {
  std::ifstream in(corpus, std::ios::binary);
  if (!in) {
    throw CalibrationError(CalibrationErrorCode::CorpusUnreadable,
                           "cannot read corpus: " + corpus.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return std::move(buffer).str();
}

// Distinct streams per run from one user seed, so runs stay independent and
// reorderable without losing reproducibility.
std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

std::string_view to_string(ModelKind kind) noexcept {
  switch (kind) {
    case ModelKind::RandomChars:
      return "random";
    case ModelKind::CharFrequency:
      return "chars";
    case ModelKind::WordList:
      return "words";
  }
  return "unknown";
}

AlphabetModel random_chars_model() {
  AlphabetModel model;
  model.kind = ModelKind::RandomChars;
  model.elements.reserve(kRandomCharsLetters.size() + kRandomCharsDigits.size() +
                         kRandomCharsPunct.size());
  for (const std::string_view group :
       {kRandomCharsLetters, kRandomCharsDigits, kRandomCharsPunct}) {
    for (const char c : group) {
      model.elements.emplace_back(1, c);
    }
  }
  return model;
}

AlphabetModel load_model(ModelKind kind, const std::filesystem::path& corpus) {
  if (kind == ModelKind::RandomChars) {
    return random_chars_model();
  }

  const std::string text = read_corpus(corpus);
  AlphabetModel model;
  model.kind = kind;

  if (kind == ModelKind::CharFrequency) {
    for (const char c : text) {
      if (c != '\n' && c != '\r') {
        model.elements.emplace_back(1, c);
      }
    }
  } else {
    std::string word;
    for (const char c : text) {
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        if (!word.empty()) {
          model.elements.push_back(std::move(word));
          word.clear();
        }
      } else {
        word.push_back(c);
      }
    }
    if (!word.empty()) {
      model.elements.push_back(std::move(word));
    }
  }

  if (model.elements.empty()) {
    throw CalibrationError(CalibrationErrorCode::EmptyCorpus,
                           "corpus has no usable elements: " + corpus.string());
  }
  return model;
}

std::string sample_string(const AlphabetModel& model, std::size_t length,
                          std::mt19937_64& rng) {
  if (model.elements.empty()) {
    throw CalibrationError(CalibrationErrorCode::EmptyModel,
                           "sampling from an empty model");
  }
  std::uniform_int_distribution<std::size_t> pick(0, model.elements.size() - 1);
  std::string out;
  out.reserve(length + 16);
  while (out.size() < length) {
    out += model.elements[pick(rng)];
    if (model.kind == ModelKind::WordList) {
      out += ' ';
    }
  }
  out.resize(length);
  return out;
}

double expected_overlap(const AlphabetModel& model, std::size_t length,
                        unsigned runs, std::uint64_t seed) {
  if (length < 1000) {
    throw std::invalid_argument("calibration length below 1000 is too noisy");
  }
  if (runs < 1) {
    throw std::invalid_argument("at least one calibration run is required");
  }
  if (model.elements.empty()) {
    throw CalibrationError(CalibrationErrorCode::EmptyModel,
                           "calibrating an empty model");
  }

  double total = 0.0;
  for (unsigned run = 0; run < runs; ++run) {
    std::mt19937_64 rng(splitmix64(seed + run));
    const std::string ts1 = sample_string(model, length, rng);
    const std::string ts2 = sample_string(model, length, rng);
    total += 1.0 - static_cast<double>(levenshtein(ts1, ts2)) /
                       static_cast<double>(length);
  }
  return total / runs;
}

}  // namespace eldist
