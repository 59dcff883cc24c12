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
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eldist/compressor.hpp"

namespace eldist {

/// One signature record: the header fields plus the digest. Persisted as a
/// single CSV line `path,file_length,C,N,digest_length,digest`. Records are
/// only comparable when C and N match.
struct Signature {
  std::string path;
  std::uint64_t file_length = 0;
  std::uint64_t c = 0;
  std::uint64_t n = 0;
  std::uint64_t digest_length = 0;
  std::string digest;

  friend bool operator==(const Signature&, const Signature&) = default;
};

enum class SignatureErrorCode {
  PathNotSerializable,  // path contains comma, LF, or CR
  FieldCount,           // line does not split into six fields
  NonNumericField,      // a numeric header field fails to parse
  LengthMismatch,       // declared digest_length differs from the digest
};

class SignatureError : public std::runtime_error {
 public:
  SignatureError(SignatureErrorCode code, const std::string& message,
                 std::size_t line = 0)
      : std::runtime_error(message), code_(code), line_(line) {}

  SignatureErrorCode code() const noexcept { return code_; }

  /// 1-based line number when the error came from a signature file; 0 when
  /// parsing a bare line.
  std::size_t line() const noexcept { return line_; }

 private:
  SignatureErrorCode code_;
  std::size_t line_;
};

/// Compresses `content` and assembles the signature record for it.
/// Throws SignatureError{PathNotSerializable} for paths the CSV format cannot
/// carry, std::invalid_argument for invalid params.
Signature build_signature(std::string path, std::string_view content,
                          const Params& params);

/// Exactly `path,file_length,c,n,digest_length,digest` plus a trailing LF.
/// No spaces, base-10 integers without leading zeros.
std::string serialize(const Signature& sig);

/// Inverse of serialize(). Accepts an optional trailing newline. Splits on the
/// first five commas, so a (format-violating) comma inside the digest is still
/// caught by the length check.
Signature parse_signature(std::string_view line);

/// True when the records were generated with the same C and N and may be
/// compared.
bool compatible(const Signature& a, const Signature& b) noexcept;

/// Reads a signature file: one record per line, '#' comment lines and blank
/// lines skipped. Parse failures carry the 1-based line number.
std::vector<Signature> read_signatures(std::istream& in);

void write_signatures(std::ostream& out, std::span<const Signature> sigs);

}  // namespace eldist
