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

#include <cstddef>
#include <string_view>

namespace eldist {

/// Exact Levenshtein distance between two byte sequences: the minimum number
/// of single-byte insertions, deletions, and substitutions turning one into
/// the other. Operates on raw bytes; multi-byte encodings are not decoded.
///
/// Runs the classic dynamic program with a single rolling row, so memory is
/// proportional to the shorter input. Total function: empty inputs are fine.
std::size_t levenshtein(std::string_view a, std::string_view b);

}  // namespace eldist
