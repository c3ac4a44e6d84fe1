// Copyright 2026 The ontoaudit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ONTOAUDIT_COMMON_ERROR_H_
#define ONTOAUDIT_COMMON_ERROR_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ontoaudit {

enum class ErrorCode {
  kMalformedSyntax,
  kUnsupportedConstruct,
  kEncodingError,
  kUndecidableFormat,
  kDocumentTooLarge,
  kIoError,
  kDegenerateCoverage,
  kDegenerateProfile,
  kEmptyInput,
  kInvalidSpec,
  kInvalidArgument,
  kAuthError,
  kRateLimited,
  kTransportError,
  kMalformedPayload,
  kUnknownKind,
  kConfigError,
};

// Stable kebab-case name, used in JSON output and CLI messages.
std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Syntax error with a 1-based source position. Line 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, const std::string& message, std::uint64_t line,
             std::uint64_t column);

  std::uint64_t line() const { return line_; }
  std::uint64_t column() const { return column_; }

 private:
  std::uint64_t line_;
  std::uint64_t column_;
};

}  // namespace ontoaudit

#endif  // ONTOAUDIT_COMMON_ERROR_H_
