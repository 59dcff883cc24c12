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
#include <iosfwd>
#include <string>
#include <vector>

#include "eldist/calibration.hpp"
#include "eldist/compressor.hpp"
#include "eldist/estimator.hpp"

namespace eldist {

// Exit codes shared by every batch operation.
inline constexpr int kExitOk = 0;       // everything processed
inline constexpr int kExitPartial = 1;  // some inputs skipped, see diagnostics
inline constexpr int kExitFatal = 2;    // bad configuration or unparsable input

enum class Mode { Gen, Compare, Search, Exact, Calibrate };

/// One batch invocation. Fields irrelevant to the selected mode are ignored.
struct RunConfig {
  Mode mode = Mode::Gen;

  std::vector<std::filesystem::path> inputs;  // gen: files/dirs; exact: 2 files
  std::filesystem::path signature_file;       // cmp
  std::filesystem::path source_file;          // search
  std::filesystem::path dest_file;            // search

  Params params;
  double r = kDefaultOverlap;
  double threshold = 0.0;  // minimum delta for a pair to be reported
  double max_ratio = kDefaultMaxRatio;
  bool include_self = false;  // cmp: also score each record against itself
  bool show_all = false;      // report every pair regardless of threshold
  bool lowercase = false;
  bool collapse_ws = false;
  unsigned workers = 1;

  // calibrate
  ModelKind kind = ModelKind::RandomChars;
  std::filesystem::path corpus;
  std::size_t length = 30000;
  unsigned runs = 10;
  std::uint64_t seed = 42;
};

/// Optional normalization applied to file contents before compression or
/// exact comparison: ASCII lowercasing and/or collapsing whitespace runs to a
/// single space.
std::string preprocess(std::string text, bool lowercase, bool collapse_ws);

/// Signature generation: one CSV record per regular file under the input
/// paths, in lexicographic path order. Unreadable, empty, or unserializable
/// files are reported on `diag` and skipped.
int run_gen(const RunConfig& config, std::ostream& out, std::ostream& diag);

/// All-vs-all comparison of one signature file. Self-pairs are excluded
/// unless `include_self`. Pairs below the delta threshold are suppressed
/// unless `show_all`; threshold 1.0 reports exactly the eld == 0 pairs.
int run_compare(const RunConfig& config, std::ostream& out, std::ostream& diag);

/// Scores every source signature against every destination signature and
/// appends a '# best' comment line per source naming its strongest match.
int run_search(const RunConfig& config, std::ostream& out, std::ostream& diag);

/// Exact Levenshtein distance of two files, printed as a bare integer.
int run_exact(const RunConfig& config, std::ostream& out, std::ostream& diag);

/// Measures the expected overlap ratio R for the configured model and emits
/// one `kind,length,runs,seed,R` line.
int run_calibrate(const RunConfig& config, std::ostream& out, std::ostream& diag);

/// Dispatches on config.mode.
int run(const RunConfig& config, std::ostream& out, std::ostream& diag);

}  // namespace eldist
