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

#include "eldist/signature.hpp"

#include <array>
#include <charconv>
#include <istream>
#include <ostream>
#include <string>

namespace eldist {

namespace {

bool path_serializable(std::string_view path) {
  return path.find_first_of(",\n\r") == std::string_view::npos;
}

std::uint64_t parse_u64(std::string_view field, std::string_view name) {
  std::uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty()) {
    throw SignatureError(SignatureErrorCode::NonNumericField,
                         "field '" + std::string{name} + "' is not a base-10 integer: '" +
                             std::string{field} + "'");
  }
  return value;
}

bool blank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

Signature build_signature(std::string path, std::string_view content,
                          const Params& params) {
  if (!path_serializable(path)) {
    throw SignatureError(SignatureErrorCode::PathNotSerializable,
                         "path contains comma or line break: '" + path + "'");
  }
  Signature sig;
  sig.path = std::move(path);
  sig.file_length = content.size();
  sig.c = params.c;
  sig.n = params.n;
  sig.digest = compress(content, params);
  sig.digest_length = sig.digest.size();
  return sig;
}

std::string serialize(const Signature& sig) {
  if (!path_serializable(sig.path)) {
    throw SignatureError(SignatureErrorCode::PathNotSerializable,
                         "path contains comma or line break: '" + sig.path + "'");
  }
  std::string line;
  line.reserve(sig.path.size() + sig.digest.size() + 48);
  line += sig.path;
  line += ',';
  line += std::to_string(sig.file_length);
  line += ',';
  line += std::to_string(sig.c);
  line += ',';
  line += std::to_string(sig.n);
  line += ',';
  line += std::to_string(sig.digest_length);
  line += ',';
  line += sig.digest;
  line += '\n';
  return line;
}

Signature parse_signature(std::string_view line) {
  if (line.ends_with('\n')) {
    line.remove_suffix(1);
  }
  if (line.ends_with('\r')) {
    line.remove_suffix(1);
  }

  std::array<std::string_view, 5> head;
  std::string_view rest = line;
  for (auto& field : head) {
    const std::size_t comma = rest.find(',');
    if (comma == std::string_view::npos) {
      throw SignatureError(SignatureErrorCode::FieldCount,
                           "expected 6 comma-separated fields");
    }
    field = rest.substr(0, comma);
    rest.remove_prefix(comma + 1);
  }

  Signature sig;
  sig.path = std::string{head[0]};
  sig.file_length = parse_u64(head[1], "file_length");
  sig.c = parse_u64(head[2], "C");
  sig.n = parse_u64(head[3], "N");
  sig.digest_length = parse_u64(head[4], "digest_length");
  sig.digest = std::string{rest};
  if (sig.digest_length != sig.digest.size()) {
    throw SignatureError(SignatureErrorCode::LengthMismatch,
                         "declared digest_length " + std::to_string(sig.digest_length) +
                             " but digest has " + std::to_string(sig.digest.size()) +
                             " bytes");
  }
  return sig;
}

bool compatible(const Signature& a, const Signature& b) noexcept {
  return a.c == b.c && a.n == b.n;
}

std::vector<Signature> read_signatures(std::istream& in) {
  std::vector<Signature> sigs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line) || line.starts_with('#')) {
      continue;
    }
    try {
      sigs.push_back(parse_signature(line));
    } catch (const SignatureError& e) {
      throw SignatureError(e.code(),
                           "line " + std::to_string(line_no) + ": " + e.what(),
                           line_no);
    }
  }
  return sigs;
}

void write_signatures(std::ostream& out, std::span<const Signature> sigs) {
  for (const Signature& sig : sigs) {
    out << serialize(sig);
  }
}

}  // namespace eldist
