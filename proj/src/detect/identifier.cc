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

#include <cctype>
#include <string>

#include "ontoaudit/common/utf8.h"
#include "ontoaudit/detect/approach.h"
#include "ontoaudit/rdf/iri.h"

namespace ontoaudit::detect {
namespace {

enum class Script { kNone, kLatin, kGreek, kCyrillic, kArmenian, kHebrew,
                    kArabic, kDevanagari, kThai, kGeorgian, kHangul, kKana,
                    kHan, kOther };

Script ScriptOf(char32_t c) {
  if ((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z')) return Script::kLatin;
  if (c == 0xAA || c == 0xBA) return Script::kLatin;
  if (c >= 0xC0 && c <= 0x24F && c != 0xD7 && c != 0xF7) return Script::kLatin;
  if (c >= 0x1E00 && c <= 0x1EFF) return Script::kLatin;
  if (c >= 0x370 && c <= 0x3FF && c != 0x37E && c != 0x387) {
    return Script::kGreek;
  }
  if (c >= 0x1F00 && c <= 0x1FFF) return Script::kGreek;
  if (c >= 0x400 && c <= 0x52F) return Script::kCyrillic;
  if (c >= 0x531 && c <= 0x587) return Script::kArmenian;
  if (c >= 0x5D0 && c <= 0x5EA) return Script::kHebrew;
  if (c >= 0x620 && c <= 0x64A) return Script::kArabic;
  if (c >= 0x671 && c <= 0x6D3) return Script::kArabic;
  if (c >= 0x904 && c <= 0x939) return Script::kDevanagari;
  if (c >= 0xE01 && c <= 0xE30) return Script::kThai;
  if (c >= 0x10A0 && c <= 0x10FF) return Script::kGeorgian;
  if ((c >= 0xAC00 && c <= 0xD7A3) || (c >= 0x1100 && c <= 0x11FF)) {
    return Script::kHangul;
  }
  if (c >= 0x3041 && c <= 0x30FF && c != 0x30FB) return Script::kKana;
  if ((c >= 0x4E00 && c <= 0x9FFF) || (c >= 0x3400 && c <= 0x4DBF)) {
    return Script::kHan;
  }
  if (c >= 0x20000 && c <= 0x2FFFF) return Script::kHan;
  return Script::kNone;
}

char32_t ToLower(char32_t c) {
  if (c >= 'A' && c <= 'Z') return c + 32;
  if (c >= 0xC0 && c <= 0xDE && c != 0xD7) return c + 32;
  if (c == 0x178) return 0xFF;
  if (c >= 0x100 && c <= 0x17F && c != 0x130 && c != 0x138 && c != 0x149 &&
      c != 0x17F) {
    // Latin Extended-A alternates upper/lower, with a parity shift after
    // U+0138 and again after U+0148.
    const bool shifted = (c >= 0x139 && c <= 0x148) || (c >= 0x179);
    const bool upper = shifted ? (c % 2 == 1) : (c % 2 == 0);
    return upper ? c + 1 : c;
  }
  if (c >= 0x391 && c <= 0x3AB && c != 0x3A2) return c + 32;
  if (c >= 0x410 && c <= 0x42F) return c + 32;
  if (c >= 0x400 && c <= 0x40F) return c + 80;
  return c;
}

std::string PercentDecode(std::string_view text) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '%' && i + 2 < text.size() &&
        std::isxdigit(static_cast<unsigned char>(text[i + 1])) &&
        std::isxdigit(static_cast<unsigned char>(text[i + 2]))) {
      out += static_cast<char>(std::stoi(std::string(text.substr(i + 1, 2)),
                                         nullptr, 16));
      i += 2;
    } else {
      out += text[i];
    }
  }
  return out;
}

}  // namespace

std::string_view VerdictName(Verdict verdict) {
  switch (verdict) {
    case Verdict::kOpaque: return "opaque";
    case Verdict::kDescriptive: return "descriptive";
    case Verdict::kUnknown: return "unknown";
  }
  return "unknown";
}

std::string NormalizeForComparison(std::string_view text) {
  std::string out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char32_t c = utf8::Next(text, pos);
    if (ScriptOf(c) == Script::kNone) continue;
    utf8::Append(out, ToLower(c));
  }
  return out;
}

IdentifierJudgment ClassifyIdentifier(std::string_view entity,
                                      const std::vector<std::string>& labels) {
  IdentifierJudgment judgment;
  judgment.entity = std::string(entity);
  std::string local = PercentDecode(rdf::LocalName(entity));
  if (utf8::FindInvalid(local)) local = std::string(rdf::LocalName(entity));

  std::size_t characters = 0;
  std::size_t letters = 0;
  bool has_digit = false;
  Script script = Script::kNone;
  bool single_script = true;
  std::size_t pos = 0;
  while (pos < local.size()) {
    const char32_t c = utf8::Next(local, pos);
    ++characters;
    if (c >= '0' && c <= '9') has_digit = true;
    const Script s = ScriptOf(c);
    if (s == Script::kNone) continue;
    ++letters;
    if (script == Script::kNone) {
      script = s;
    } else if (s != script) {
      single_script = false;
    }
  }

  if (has_digit) {
    judgment.verdict = Verdict::kOpaque;
    judgment.basis = "local name contains a digit";
    return judgment;
  }
  const std::string normalized = NormalizeForComparison(local);
  if (!normalized.empty()) {
    for (const std::string& label : labels) {
      if (NormalizeForComparison(label) == normalized) {
        judgment.verdict = Verdict::kDescriptive;
        judgment.basis = "local name matches label \"" + label + "\"";
        return judgment;
      }
    }
  }
  if (letters >= 3 && single_script) {
    judgment.verdict = Verdict::kDescriptive;
    judgment.basis = "local name is a digit-free word in one script";
    return judgment;
  }
  if (characters <= 2) {
    judgment.verdict = Verdict::kOpaque;
    judgment.basis = "local name has at most two characters";
    return judgment;
  }
  judgment.verdict = Verdict::kUnknown;
  judgment.basis = letters < 3 ? "too few letters to judge"
                               : "local name mixes scripts";
  return judgment;
}

}  // namespace ontoaudit::detect
