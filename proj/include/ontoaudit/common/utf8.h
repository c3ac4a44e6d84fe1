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

#ifndef ONTOAUDIT_COMMON_UTF8_H_
#define ONTOAUDIT_COMMON_UTF8_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace ontoaudit::utf8 {

// Offset of the first invalid byte, or nullopt when `text` is valid UTF-8.
std::optional<std::size_t> FindInvalid(std::string_view text);

void Append(std::string& out, char32_t code_point);

// Decodes the code point starting at `pos` and advances `pos`. Invalid input
// yields U+FFFD and advances one byte.
char32_t Next(std::string_view text, std::size_t& pos);

// Strips a leading byte order mark.
std::string_view SkipBom(std::string_view text);

}  // namespace ontoaudit::utf8

#endif  // ONTOAUDIT_COMMON_UTF8_H_
