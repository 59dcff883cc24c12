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

#include "eldist/levenshtein.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace eldist {

std::size_t levenshtein(std::string_view a, std::string_view b) {
  if (a.size() < b.size()) {
    std::swap(a, b);  // keep the row buffer on the shorter input
  }
  if (b.empty()) {
    return a.size();
  }
  // Cell values fit in 32 bits; quadratic time rules out longer inputs anyway.
  if (a.size() >= UINT32_MAX) {
    throw std::length_error("levenshtein: input too long");
  }

  std::vector<std::uint32_t> row(b.size() + 1);
  std::iota(row.begin(), row.end(), 0u);

  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint32_t diag = row[0];
    std::uint32_t left = row[0] = static_cast<std::uint32_t>(i) + 1;
    const char ai = a[i];
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::uint32_t up = row[j];
      const std::uint32_t cur =
          std::min({up + 1, left + 1, diag + (ai != b[j - 1] ? 1u : 0u)});
      row[j] = cur;
      left = cur;
      diag = up;
    }
  }
  return row[b.size()];
}

}  // namespace eldist
