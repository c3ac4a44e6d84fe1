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

#include "ontoaudit/lang/language_tag.h"

#include <algorithm>
#include <array>
#include <cctype>

namespace ontoaudit::lang {
namespace {

// Irregular grandfathered tags in their registered casing. The regular ones
// already match the langtag production.
constexpr std::array<std::string_view, 17> kIrregular = {
    "en-GB-oed", "i-ami",     "i-bnn",     "i-default", "i-enochian",
    "i-hak",     "i-klingon", "i-lux",     "i-mingo",   "i-navajo",
    "i-pwn",     "i-tao",     "i-tay",     "i-tsu",     "sgn-BE-FR",
    "sgn-BE-NL", "sgn-CH-DE"};

bool IsAlpha(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool IsDigit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }
bool IsAlnum(char c) { return IsAlpha(c) || IsDigit(c); }

bool AllOf(std::string_view s, bool (*pred)(char)) {
  return std::all_of(s.begin(), s.end(), pred);
}

std::string ToLower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

std::string ToUpper(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  return out;
}

std::string ToTitle(std::string_view s) {
  std::string out = ToLower(s);
  if (!out.empty()) {
    out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  }
  return out;
}

std::vector<std::string_view> Split(std::string_view s) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t dash = s.find('-', start);
    parts.push_back(s.substr(start, dash - start));
    if (dash == std::string_view::npos) break;
    start = dash + 1;
  }
  return parts;
}

bool IsVariant(std::string_view s) {
  if (!AllOf(s, IsAlnum)) return false;
  return (s.size() >= 5 && s.size() <= 8) || (s.size() == 4 && IsDigit(s[0]));
}

// Parses the langtag production into `tag`; returns false if ill-formed.
bool ParseLangtag(const std::vector<std::string_view>& parts,
                  LanguageTag& tag) {
  const std::size_t n = parts.size();
  for (std::string_view part : parts) {
    if (part.empty() || part.size() > 8 || !AllOf(part, IsAlnum)) return false;
  }

  // Whole-tag private use.
  if (parts[0].size() == 1 && (parts[0][0] == 'x' || parts[0][0] == 'X')) {
    if (n < 2) return false;
    std::string ext = "x";
    for (std::size_t i = 1; i < n; ++i) ext += "-" + ToLower(parts[i]);
    tag.extensions = ext;
    return true;
  }

  std::size_t i = 0;
  const std::string_view language = parts[i++];
  if (!AllOf(language, IsAlpha) || language.size() < 2) return false;
  tag.language = ToLower(language);
  if (language.size() <= 3) {
    while (i < n && tag.extlangs.size() < 3 && parts[i].size() == 3 &&
           AllOf(parts[i], IsAlpha)) {
      tag.extlangs.push_back(ToLower(parts[i]));
      ++i;
    }
  }
  if (i < n && parts[i].size() == 4 && AllOf(parts[i], IsAlpha)) {
    tag.script = ToTitle(parts[i]);
    ++i;
  }
  if (i < n && ((parts[i].size() == 2 && AllOf(parts[i], IsAlpha)) ||
                (parts[i].size() == 3 && AllOf(parts[i], IsDigit)))) {
    tag.region = ToUpper(parts[i]);
    ++i;
  }
  while (i < n && IsVariant(parts[i])) {
    tag.variants.push_back(ToLower(parts[i]));
    ++i;
  }
  std::string ext;
  while (i < n && parts[i].size() == 1) {
    const char singleton = static_cast<char>(
        std::tolower(static_cast<unsigned char>(parts[i][0])));
    if (singleton == 'x') break;
    ++i;
    if (!ext.empty()) ext += "-";
    ext += singleton;
    std::size_t count = 0;
    while (i < n && parts[i].size() >= 2) {
      ext += "-" + ToLower(parts[i]);
      ++i;
      ++count;
    }
    if (count == 0) return false;
  }
  if (i < n && parts[i].size() == 1) {
    ++i;
    if (i == n) return false;
    if (!ext.empty()) ext += "-";
    ext += "x";
    while (i < n) {
      ext += "-" + ToLower(parts[i]);
      ++i;
    }
  }
  tag.extensions = ext;
  return i == n;
}

}  // namespace

std::string LanguageTag::Display() const {
  if (untagged) return std::string(kUntaggedDisplay);
  if (!well_formed) return raw;
  if (grandfathered) {
    for (std::string_view g : kIrregular) {
      if (ToLower(g) == ToLower(raw)) return std::string(g);
    }
  }
  std::string out = language;
  auto append = [&out](std::string_view part) {
    if (part.empty()) return;
    if (!out.empty()) out += '-';
    out += part;
  };
  for (const auto& e : extlangs) append(e);
  append(script);
  append(region);
  for (const auto& v : variants) append(v);
  append(extensions);
  return out;
}

std::string LanguageTag::Key() const {
  if (untagged) return "u:";
  if (!well_formed) return "r:" + raw;
  return "w:" + Display();
}

LanguageTag ParseTag(std::string_view raw) {
  LanguageTag tag;
  tag.raw = std::string(raw);
  if (raw.empty()) return tag;
  for (std::string_view g : kIrregular) {
    if (ToLower(g) == ToLower(raw)) {
      tag.well_formed = true;
      tag.grandfathered = true;
      return tag;
    }
  }
  LanguageTag parsed;
  parsed.raw = tag.raw;
  if (ParseLangtag(Split(raw), parsed)) {
    parsed.well_formed = true;
    return parsed;
  }
  return tag;
}

LanguageTag Untagged() {
  LanguageTag tag;
  tag.raw = std::string(kUntaggedDisplay);
  tag.untagged = true;
  return tag;
}

bool SameLanguage(const LanguageTag& a, const LanguageTag& b) {
  return a.Key() == b.Key();
}

}  // namespace ontoaudit::lang
