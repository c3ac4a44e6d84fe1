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

#ifndef ONTOAUDIT_LANG_LANGUAGE_TAG_H_
#define ONTOAUDIT_LANG_LANGUAGE_TAG_H_

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace ontoaudit::lang {

// Display form of the pseudo-tag assigned to literals without a language.
inline constexpr std::string_view kUntaggedDisplay = "und:untagged";

// A BCP 47 tag split into normalized subtags. Only the syntax is checked;
// subtags are not looked up in the IANA registry.
struct LanguageTag {
  std::string raw;
  std::string language;               // lowercase
  std::vector<std::string> extlangs;  // lowercase
  std::string script;                 // title case
  std::string region;                 // uppercase
  std::vector<std::string> variants;  // lowercase
  // Extensions and private use, lowercase, e.g. "u-co-phonebk-x-foo".
  std::string extensions;
  bool well_formed = false;
  bool grandfathered = false;
  // True only for the pseudo-tag returned by Untagged().
  bool untagged = false;

  // Normalized tag for well-formed input, the raw string otherwise, and
  // kUntaggedDisplay for the pseudo-tag.
  std::string Display() const;

  // Identity key: two tags are the same language iff their keys match.
  std::string Key() const;

  bool operator==(const LanguageTag& other) const {
    return Key() == other.Key();
  }
  std::strong_ordering operator<=>(const LanguageTag& other) const {
    return Key() <=> other.Key();
  }
};

LanguageTag ParseTag(std::string_view raw);

LanguageTag Untagged();

bool SameLanguage(const LanguageTag& a, const LanguageTag& b);

}  // namespace ontoaudit::lang

#endif  // ONTOAUDIT_LANG_LANGUAGE_TAG_H_
