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

#include <random>
#include <regex>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "ontoaudit/lang/language_tag.h"

namespace ontoaudit::lang {
namespace {

// The RFC 5646 ABNF transcribed as a regular expression; used as an
// independent oracle for well-formedness.
const std::regex& Rfc5646() {
  static const std::regex re(
      "^(?:"
      "(?:en-GB-oed|i-ami|i-bnn|i-default|i-enochian|i-hak|i-klingon|i-lux|"
      "i-mingo|i-navajo|i-pwn|i-tao|i-tay|i-tsu|sgn-BE-FR|sgn-BE-NL|sgn-CH-DE)"
      "|(?:(?:[a-z]{2,3}(?:-[a-z]{3}){0,3}|[a-z]{4}|[a-z]{5,8})"
      "(?:-[a-z]{4})?"
      "(?:-(?:[a-z]{2}|[0-9]{3}))?"
      "(?:-(?:[a-z0-9]{5,8}|[0-9][a-z0-9]{3}))*"
      "(?:-[a-wyz0-9](?:-[a-z0-9]{2,8})+)*"
      "(?:-x(?:-[a-z0-9]{1,8})+)?)"
      "|x(?:-[a-z0-9]{1,8})+"
      ")$",
      std::regex::icase | std::regex::ECMAScript);
  return re;
}

TEST(LanguageTagTest, NormalizesCase) {
  const LanguageTag tag = ParseTag("PT-br");
  EXPECT_TRUE(tag.well_formed);
  EXPECT_EQ(tag.language, "pt");
  EXPECT_EQ(tag.region, "BR");
  EXPECT_EQ(tag.Display(), "pt-BR");
  EXPECT_EQ(tag.raw, "PT-br");

  const LanguageTag full = ParseTag("ZH-hant-tw-X-Private");
  EXPECT_EQ(full.script, "Hant");
  EXPECT_EQ(full.Display(), "zh-Hant-TW-x-private");
}

TEST(LanguageTagTest, SimpleTag) {
  const LanguageTag tag = ParseTag("en");
  EXPECT_TRUE(tag.well_formed);
  EXPECT_EQ(tag.language, "en");
  EXPECT_TRUE(tag.script.empty());
  EXPECT_TRUE(tag.region.empty());
}

TEST(LanguageTagTest, IllFormedKeepsRaw) {
  const LanguageTag tag = ParseTag("x123!");
  EXPECT_FALSE(tag.well_formed);
  EXPECT_EQ(tag.raw, "x123!");
  EXPECT_EQ(tag.Display(), "x123!");
  EXPECT_FALSE(ParseTag("").well_formed);
  EXPECT_FALSE(ParseTag("en-").well_formed);
  EXPECT_FALSE(ParseTag("en--us").well_formed);
  EXPECT_FALSE(ParseTag("toolongtag").well_formed);
  EXPECT_FALSE(ParseTag("en-a").well_formed);
  EXPECT_FALSE(ParseTag("en-x").well_formed);
}

TEST(LanguageTagTest, Subtags) {
  const LanguageTag tag = ParseTag("zh-yue-HK");
  EXPECT_EQ(tag.extlangs, std::vector<std::string>{"yue"});
  EXPECT_EQ(tag.region, "HK");
  const LanguageTag variant = ParseTag("sl-rozaj-biske-1994");
  EXPECT_EQ(variant.variants,
            (std::vector<std::string>{"rozaj", "biske", "1994"}));
  const LanguageTag ext = ParseTag("de-DE-u-co-phonebk");
  EXPECT_EQ(ext.extensions, "u-co-phonebk");
  EXPECT_TRUE(ParseTag("es-419").well_formed);
  EXPECT_EQ(ParseTag("es-419").region, "419");
  const LanguageTag grandfathered = ParseTag("I-KLINGON");
  EXPECT_TRUE(grandfathered.well_formed);
  EXPECT_EQ(grandfathered.Display(), "i-klingon");
  EXPECT_TRUE(ParseTag("x-whatever").well_formed);
}

TEST(LanguageTagTest, SameLanguage) {
  EXPECT_FALSE(SameLanguage(ParseTag("pt"), ParseTag("pt-br")));
  EXPECT_TRUE(SameLanguage(ParseTag("EN"), ParseTag("en")));
  EXPECT_TRUE(SameLanguage(ParseTag("qq-zz-!!"), ParseTag("qq-zz-!!")));
  EXPECT_FALSE(SameLanguage(ParseTag("qq-zz-!!"), ParseTag("QQ-zz-!!")));
  // The pseudo-tag cannot be produced from user input.
  EXPECT_FALSE(SameLanguage(ParseTag("und:untagged"), Untagged()));
  EXPECT_TRUE(SameLanguage(Untagged(), Untagged()));
  EXPECT_EQ(Untagged().Display(), "und:untagged");
}

TEST(LanguageTagTest, TableHeaderTagsAreWellFormed) {
  for (const char* raw : {"ar", "cs", "da", "de", "el", "en", "es", "fr", "it",
                          "ja", "pt", "pt-br", "ru", "zh"}) {
    EXPECT_TRUE(ParseTag(raw).well_formed) << raw;
  }
}

std::vector<std::string> RandomTags(int count) {
  static const std::vector<std::string> kParts = {
      "en", "EN", "zh", "yue", "cmn", "Hant", "latn", "US", "gb", "419",
      "1996", "rozaj", "fonipa", "a", "u", "x", "co", "phonebk", "abc",
      "abcd", "abcdefgh", "abcdefghi", "1", "12", "a1b2c", "!", "", "de",
      "sgn", "BE", "FR", "i", "ami", "qaa", "9x", "hk"};
  std::mt19937_64 rng(20221);
  std::uniform_int_distribution<int> length(1, 6);
  std::uniform_int_distribution<std::size_t> pick(0, kParts.size() - 1);
  std::vector<std::string> tags;
  for (int i = 0; i < count; ++i) {
    std::string tag;
    const int n = length(rng);
    for (int j = 0; j < n; ++j) {
      if (j > 0) tag += "-";
      tag += kParts[pick(rng)];
    }
    tags.push_back(tag);
  }
  return tags;
}

TEST(LanguageTagTest, WellFormednessMatchesAbnfOracle) {
  int well_formed = 0;
  for (const std::string& raw : RandomTags(5000)) {
    const bool expected = std::regex_match(raw, Rfc5646());
    EXPECT_EQ(ParseTag(raw).well_formed, expected) << raw;
    well_formed += expected;
  }
  // The generator must exercise both outcomes.
  EXPECT_GT(well_formed, 200);
  EXPECT_LT(well_formed, 4800);
}

TEST(LanguageTagTest, NormalizationIsIdempotent) {
  for (const std::string& raw : RandomTags(2000)) {
    const LanguageTag tag = ParseTag(raw);
    const LanguageTag again = ParseTag(tag.Display());
    EXPECT_EQ(again.Display(), tag.Display()) << raw;
    EXPECT_TRUE(SameLanguage(again, tag)) << raw;
  }
}

TEST(LanguageTagTest, SameLanguageIsAnEquivalence) {
  const std::vector<std::string> raws = RandomTags(150);
  std::vector<LanguageTag> tags;
  for (const auto& raw : raws) tags.push_back(ParseTag(raw));
  tags.push_back(Untagged());
  for (const auto& a : tags) {
    EXPECT_TRUE(SameLanguage(a, a));
    for (const auto& b : tags) {
      EXPECT_EQ(SameLanguage(a, b), SameLanguage(b, a));
      if (!SameLanguage(a, b)) continue;
      for (const auto& c : tags) {
        if (SameLanguage(b, c)) EXPECT_TRUE(SameLanguage(a, c));
      }
    }
  }
}

}  // namespace
}  // namespace ontoaudit::lang
