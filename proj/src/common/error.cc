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

#include "ontoaudit/common/error.h"

namespace ontoaudit {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedSyntax: return "malformed-syntax";
    case ErrorCode::kUnsupportedConstruct: return "unsupported-construct";
    case ErrorCode::kEncodingError: return "encoding-error";
    case ErrorCode::kUndecidableFormat: return "undecidable-format";
    case ErrorCode::kDocumentTooLarge: return "document-too-large";
    case ErrorCode::kIoError: return "io-error";
    case ErrorCode::kDegenerateCoverage: return "degenerate-coverage";
    case ErrorCode::kDegenerateProfile: return "degenerate-profile";
    case ErrorCode::kEmptyInput: return "empty-input";
    case ErrorCode::kInvalidSpec: return "invalid-spec";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kAuthError: return "auth-error";
    case ErrorCode::kRateLimited: return "rate-limited";
    case ErrorCode::kTransportError: return "transport-error";
    case ErrorCode::kMalformedPayload: return "malformed-payload";
    case ErrorCode::kUnknownKind: return "unknown-kind";
    case ErrorCode::kConfigError: return "config-error";
  }
  return "unknown";
}

namespace {

std::string WithPosition(const std::string& message, std::uint64_t line,
                         std::uint64_t column) {
  if (line == 0) return message;
  return "line " + std::to_string(line) + ", column " + std::to_string(column) +
         ": " + message;
}

}  // namespace

ParseError::ParseError(ErrorCode code, const std::string& message,
                       std::uint64_t line, std::uint64_t column)
    : Error(code, WithPosition(message, line, column)),
      line_(line),
      column_(column) {}

}  // namespace ontoaudit
