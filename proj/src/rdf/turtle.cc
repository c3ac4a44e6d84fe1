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

#include "src/rdf/readers.h"

#include <cctype>
#include <string>
#include <unordered_map>

#include "ontoaudit/common/error.h"
#include "ontoaudit/common/utf8.h"
#include "ontoaudit/rdf/iri.h"
#include "ontoaudit/rdf/vocab.h"

namespace ontoaudit::rdf::internal {
namespace {

bool IsPnCharsBase(char32_t c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
         (c >= 0xC0 && c <= 0xD6) || (c >= 0xD8 && c <= 0xF6) ||
         (c >= 0xF8 && c <= 0x2FF) || (c >= 0x370 && c <= 0x37D) ||
         (c >= 0x37F && c <= 0x1FFF) || (c >= 0x200C && c <= 0x200D) ||
         (c >= 0x2070 && c <= 0x218F) || (c >= 0x2C00 && c <= 0x2FEF) ||
         (c >= 0x3001 && c <= 0xD7FF) || (c >= 0xF900 && c <= 0xFDCF) ||
         (c >= 0xFDF0 && c <= 0xFFFD) || (c >= 0x10000 && c <= 0xEFFFF);
}

bool IsPnCharsU(char32_t c) { return IsPnCharsBase(c) || c == '_'; }

bool IsPnChars(char32_t c) {
  return IsPnCharsU(c) || c == '-' || (c >= '0' && c <= '9') || c == 0xB7 ||
         (c >= 0x300 && c <= 0x36F) || (c >= 0x203F && c <= 0x2040);
}

bool IsLocalEscapable(char c) {
  static constexpr std::string_view kChars = "_~.-!$&'()*+,;=/?#@%";
  return kChars.find(c) != std::string_view::npos;
}

bool IsHex(char c) { return std::isxdigit(static_cast<unsigned char>(c)); }

class TurtleParser {
 public:
  TurtleParser(std::string_view text, const ParseOptions& options)
      : text_(text) {
    if (options.base) {
      base_ = *options.base;
      builder_.SetBase(*options.base);
    }
  }

  Graph Parse() && {
    SkipWs();
    while (!AtEnd()) {
      ParseStatement();
      SkipWs();
    }
    return std::move(builder_).Build();
  }

 private:
  bool AtEnd() const { return pos_ >= text_.size(); }
  char Peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  [[noreturn]] void Fail(const std::string& message) const {
    FailAt(pos_, message);
  }

  [[noreturn]] void FailAt(std::size_t at, const std::string& message) const {
    std::uint64_t line = 1;
    std::size_t line_start = 0;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        line_start = i + 1;
      }
    }
    throw ParseError(ErrorCode::kMalformedSyntax, message, line,
                     at - line_start + 1);
  }

  void SkipWs() {
    while (!AtEnd()) {
      const char c = Peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        ++pos_;
      } else if (c == '#') {
        while (!AtEnd() && Peek() != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  void Expect(char c) {
    SkipWs();
    if (Peek() != c || AtEnd()) Fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool MatchKeywordCi(std::string_view keyword) const {
    if (text_.size() - pos_ < keyword.size()) return false;
    for (std::size_t i = 0; i < keyword.size(); ++i) {
      if (std::tolower(static_cast<unsigned char>(text_[pos_ + i])) !=
          keyword[i]) {
        return false;
      }
    }
    const char after = Peek(keyword.size());
    return after == '\0' || after == ' ' || after == '\t' || after == '\n' ||
           after == '\r' || after == '<' || after == '#';
  }

  void ParseStatement() {
    if (Peek() == '@') {
      if (text_.substr(pos_, 7) == "@prefix") {
        pos_ += 7;
        ParsePrefixBody();
        Expect('.');
        return;
      }
      if (text_.substr(pos_, 5) == "@base") {
        pos_ += 5;
        ParseBaseBody();
        Expect('.');
        return;
      }
      Fail("unknown directive");
    }
    if (MatchKeywordCi("prefix")) {
      pos_ += 6;
      ParsePrefixBody();
      return;
    }
    if (MatchKeywordCi("base")) {
      pos_ += 4;
      ParseBaseBody();
      return;
    }
    ParseTriples();
    Expect('.');
  }

  void ParsePrefixBody() {
    SkipWs();
    const std::size_t start = pos_;
    std::string prefix;
    if (Peek() != ':') prefix = ReadPnPrefix();
    if (Peek() != ':') FailAt(start, "expected prefix name ending in ':'");
    ++pos_;
    SkipWs();
    std::string ns = ParseIriRef();
    prefixes_[prefix] = ns;
    builder_.AddPrefix(std::move(prefix), std::move(ns));
  }

  void ParseBaseBody() {
    SkipWs();
    base_ = ParseIriRef();
    builder_.SetBase(*base_);
  }

  void ParseTriples() {
    SkipWs();
    if (Peek() == '[') {
      const Term subject = ParseBlankNodePropertyList();
      SkipWs();
      if (Peek() != '.') ParsePredicateObjectList(subject);
      return;
    }
    const Term subject = ParseSubject();
    ParsePredicateObjectList(subject);
  }

  Term ParseSubject() {
    SkipWs();
    const char c = Peek();
    if (c == '<') return Term::Iri(ParseIriRef());
    if (c == '_' && Peek(1) == ':') return ParseBlankLabel();
    if (c == '(') return ParseCollection();
    if (c == '[') return ParseBlankNodePropertyList();
    return Term::Iri(ParsePrefixedName());
  }

  void ParsePredicateObjectList(const Term& subject) {
    while (true) {
      SkipWs();
      const Term predicate = ParseVerb();
      ParseObjectList(subject, predicate);
      SkipWs();
      if (Peek() != ';') return;
      while (Peek() == ';') {
        ++pos_;
        SkipWs();
      }
      const char c = Peek();
      if (c == '.' || c == ']' || AtEnd()) return;
    }
  }

  Term ParseVerb() {
    if (Peek() == 'a') {
      const char next = Peek(1);
      if (next == ' ' || next == '\t' || next == '\n' || next == '\r' ||
          next == '<' || next == '"' || next == '[' || next == '(' ||
          next == '#') {
        ++pos_;
        return Term::Iri(std::string(vocab::kRdfType));
      }
    }
    if (Peek() == '<') return Term::Iri(ParseIriRef());
    return Term::Iri(ParsePrefixedName());
  }

  void ParseObjectList(const Term& subject, const Term& predicate) {
    while (true) {
      SkipWs();
      const Term object = ParseObject();
      Emit(subject, predicate, object);
      SkipWs();
      if (Peek() != ',') return;
      ++pos_;
    }
  }

  void Emit(const Term& s, const Term& p, const Term& o) {
    if (o.has_language()) ++builder_.diagnostics().tagged_literals;
    builder_.Add(s, p, o);
  }

  Term ParseObject() {
    SkipWs();
    const char c = Peek();
    if (AtEnd()) Fail("unexpected end of input, expected object");
    if (c == '<') return Term::Iri(ParseIriRef());
    if (c == '_' && Peek(1) == ':') return ParseBlankLabel();
    if (c == '(') return ParseCollection();
    if (c == '[') return ParseBlankNodePropertyList();
    if (c == '"' || c == '\'') return ParseRdfLiteral();
    if (c == '+' || c == '-' || c == '.' || (c >= '0' && c <= '9')) {
      return ParseNumber();
    }
    if (text_.substr(pos_, 4) == "true" && !ContinuesName(pos_ + 4)) {
      pos_ += 4;
      return Term::Literal("true", std::string(vocab::kXsdBoolean));
    }
    if (text_.substr(pos_, 5) == "false" && !ContinuesName(pos_ + 5)) {
      pos_ += 5;
      return Term::Literal("false", std::string(vocab::kXsdBoolean));
    }
    return Term::Iri(ParsePrefixedName());
  }

  bool ContinuesName(std::size_t at) const {
    if (at >= text_.size()) return false;
    const char c = text_[at];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
           c == '-' || c == ':' || static_cast<unsigned char>(c) >= 0x80;
  }

  Term NewBlank() { return Term::Blank("b" + std::to_string(next_blank_++)); }

  Term ParseBlankLabel() {
    const std::size_t start = pos_;
    pos_ += 2;
    const std::size_t label_start = pos_;
    std::size_t last_good = pos_;
    bool first = true;
    while (!AtEnd()) {
      std::size_t next = pos_;
      const char32_t c = utf8::Next(text_, next);
      const bool ok = first ? (IsPnCharsU(c) || (c >= '0' && c <= '9'))
                            : (IsPnChars(c) || c == '.');
      if (!ok) break;
      pos_ = next;
      if (c != '.') last_good = pos_;
      first = false;
    }
    if (first) FailAt(start, "invalid blank node label");
    pos_ = last_good;
    const std::string label(text_.substr(label_start, pos_ - label_start));
    auto it = blank_labels_.find(label);
    if (it == blank_labels_.end()) {
      it = blank_labels_.emplace(label, NewBlank()).first;
    }
    return it->second;
  }

  Term ParseBlankNodePropertyList() {
    Expect('[');
    const Term node = NewBlank();
    SkipWs();
    if (Peek() == ']') {
      ++pos_;
      return node;
    }
    ParsePredicateObjectList(node);
    Expect(']');
    return node;
  }

  Term ParseCollection() {
    Expect('(');
    std::vector<Term> items;
    std::vector<Term> cells;
    while (true) {
      SkipWs();
      if (AtEnd()) Fail("unterminated collection");
      if (Peek() == ')') {
        ++pos_;
        break;
      }
      cells.push_back(NewBlank());
      items.push_back(ParseObject());
    }
    if (items.empty()) return Term::Iri(std::string(vocab::kRdfNil));
    const Term first = Term::Iri(std::string(vocab::kRdfFirst));
    const Term rest = Term::Iri(std::string(vocab::kRdfRest));
    for (std::size_t i = 0; i < items.size(); ++i) {
      Emit(cells[i], first, items[i]);
      Emit(cells[i], rest,
           i + 1 < items.size() ? cells[i + 1]
                                : Term::Iri(std::string(vocab::kRdfNil)));
    }
    return cells.front();
  }

  char32_t ReadHex(int digits) {
    char32_t value = 0;
    for (int i = 0; i < digits; ++i) {
      const char c = Peek();
      if (AtEnd() || !IsHex(c)) Fail("invalid hex digit in escape");
      ++pos_;
      value = value * 16 + static_cast<char32_t>(
                               std::isdigit(static_cast<unsigned char>(c))
                                   ? c - '0'
                                   : std::tolower(static_cast<unsigned char>(c)) -
                                         'a' + 10);
    }
    if (value > 0x10FFFF || (value >= 0xD800 && value <= 0xDFFF)) {
      Fail("escape is not a Unicode scalar value");
    }
    return value;
  }

  std::string ParseIriRef() {
    SkipWs();
    const std::size_t start = pos_;
    if (Peek() != '<') Fail("expected IRI");
    ++pos_;
    std::string iri;
    while (true) {
      if (AtEnd()) FailAt(start, "unterminated IRI");
      const char c = Peek();
      if (c == '>') {
        ++pos_;
        break;
      }
      if (c == '\\') {
        ++pos_;
        const char kind = Peek();
        ++pos_;
        if (kind == 'u') {
          utf8::Append(iri, ReadHex(4));
        } else if (kind == 'U') {
          utf8::Append(iri, ReadHex(8));
        } else {
          Fail("only \\u and \\U escapes are allowed in IRIs");
        }
        continue;
      }
      if (static_cast<unsigned char>(c) <= 0x20 || c == '<' || c == '"' ||
          c == '{' || c == '}' || c == '|' || c == '^' || c == '`') {
        Fail("illegal character in IRI");
      }
      iri += c;
      ++pos_;
    }
    return Resolve(iri, start);
  }

  std::string Resolve(const std::string& iri, std::size_t at) const {
    if (IsAbsoluteIri(iri)) return iri;
    if (!base_) FailAt(at, "relative IRI <" + iri + "> without a base");
    return ResolveIri(*base_, iri);
  }

  std::string ReadPnPrefix() {
    const std::size_t start = pos_;
    std::size_t next = pos_;
    if (AtEnd() || !IsPnCharsBase(utf8::Next(text_, next))) {
      Fail("invalid prefix name");
    }
    pos_ = next;
    std::size_t last_good = pos_;
    while (!AtEnd()) {
      next = pos_;
      const char32_t c = utf8::Next(text_, next);
      if (!IsPnChars(c) && c != '.') break;
      pos_ = next;
      if (c != '.') last_good = pos_;
    }
    pos_ = last_good;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string ParsePrefixedName() {
    const std::size_t start = pos_;
    std::string prefix;
    if (Peek() != ':') {
      std::size_t probe = pos_;
      if (AtEnd() || !IsPnCharsBase(utf8::Next(text_, probe))) {
        Fail("expected IRI, prefixed name or literal");
      }
      prefix = ReadPnPrefix();
    }
    if (Peek() != ':') FailAt(start, "expected ':' in prefixed name");
    ++pos_;
    const auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) FailAt(start, "undeclared prefix '" + prefix + "'");
    std::string local;
    std::size_t good_length = 0;
    std::size_t good_pos = pos_;
    bool first = true;
    while (!AtEnd()) {
      const char c = Peek();
      if (c == '%') {
        if (!IsHex(Peek(1)) || !IsHex(Peek(2))) Fail("invalid percent escape");
        local.append(text_.substr(pos_, 3));
        pos_ += 3;
      } else if (c == '\\') {
        if (!IsLocalEscapable(Peek(1))) Fail("invalid local name escape");
        local += Peek(1);
        pos_ += 2;
      } else {
        std::size_t next = pos_;
        const char32_t u = utf8::Next(text_, next);
        const bool ok = first ? (IsPnCharsU(u) || u == ':' ||
                                 (u >= '0' && u <= '9'))
                              : (IsPnChars(u) || u == ':' || u == '.');
        if (!ok) break;
        local.append(text_.substr(pos_, next - pos_));
        pos_ = next;
        if (u == '.') {
          first = false;
          continue;
        }
      }
      first = false;
      good_length = local.size();
      good_pos = pos_;
    }
    local.resize(good_length);
    pos_ = good_pos;
    return it->second + local;
  }

  Term ParseRdfLiteral() {
    const char quote = Peek();
    const bool long_form =
        Peek(1) == quote && Peek(2) == quote;
    const std::size_t start = pos_;
    pos_ += long_form ? 3 : 1;
    std::string lexical;
    while (true) {
      if (AtEnd()) FailAt(start, "unterminated string literal");
      const char c = Peek();
      if (c == quote) {
        if (!long_form) {
          ++pos_;
          break;
        }
        if (Peek(1) == quote && Peek(2) == quote) {
          // Up to two extra quotes may precede the closing delimiter.
          std::size_t run = 3;
          while (Peek(run) == quote && run < 5) ++run;
          lexical.append(run - 3, quote);
          pos_ += run;
          break;
        }
        lexical += c;
        ++pos_;
        continue;
      }
      if (!long_form && (c == '\n' || c == '\r')) {
        FailAt(start, "unterminated string literal");
      }
      if (c == '\\') {
        ++pos_;
        const char e = Peek();
        ++pos_;
        switch (e) {
          case 't': lexical += '\t'; break;
          case 'b': lexical += '\b'; break;
          case 'n': lexical += '\n'; break;
          case 'r': lexical += '\r'; break;
          case 'f': lexical += '\f'; break;
          case '"': lexical += '"'; break;
          case '\'': lexical += '\''; break;
          case '\\': lexical += '\\'; break;
          case 'u': utf8::Append(lexical, ReadHex(4)); break;
          case 'U': utf8::Append(lexical, ReadHex(8)); break;
          default: Fail(std::string("unknown escape \\") + e);
        }
        continue;
      }
      lexical += c;
      ++pos_;
    }
    if (Peek() == '@') {
      ++pos_;
      const std::size_t tag_start = pos_;
      while (std::isalpha(static_cast<unsigned char>(Peek()))) ++pos_;
      if (pos_ == tag_start) Fail("empty language tag");
      while (Peek() == '-' &&
             std::isalnum(static_cast<unsigned char>(Peek(1)))) {
        ++pos_;
        while (std::isalnum(static_cast<unsigned char>(Peek()))) ++pos_;
      }
      return Term::LangLiteral(
          std::move(lexical),
          std::string(text_.substr(tag_start, pos_ - tag_start)));
    }
    if (Peek() == '^' && Peek(1) == '^') {
      pos_ += 2;
      std::string datatype =
          Peek() == '<' ? ParseIriRef() : ParsePrefixedName();
      if (datatype == vocab::kRdfLangString) {
        Fail("rdf:langString literal without a language tag");
      }
      return Term::Literal(std::move(lexical), std::move(datatype));
    }
    return Term::Literal(std::move(lexical));
  }

  Term ParseNumber() {
    const std::size_t start = pos_;
    if (Peek() == '+' || Peek() == '-') ++pos_;
    std::size_t int_digits = 0;
    while (std::isdigit(static_cast<unsigned char>(Peek()))) {
      ++pos_;
      ++int_digits;
    }
    std::size_t frac_digits = 0;
    bool has_dot = false;
    if (Peek() == '.' && std::isdigit(static_cast<unsigned char>(Peek(1)))) {
      has_dot = true;
      ++pos_;
      while (std::isdigit(static_cast<unsigned char>(Peek()))) {
        ++pos_;
        ++frac_digits;
      }
    } else if (Peek() == '.' && int_digits > 0 &&
               (Peek(1) == 'e' || Peek(1) == 'E')) {
      has_dot = true;
      ++pos_;
    }
    bool has_exp = false;
    if (Peek() == 'e' || Peek() == 'E') {
      has_exp = true;
      ++pos_;
      if (Peek() == '+' || Peek() == '-') ++pos_;
      std::size_t exp_digits = 0;
      while (std::isdigit(static_cast<unsigned char>(Peek()))) {
        ++pos_;
        ++exp_digits;
      }
      if (exp_digits == 0) FailAt(start, "malformed exponent");
    }
    if (int_digits + frac_digits == 0) FailAt(start, "malformed number");
    const std::string lexical(text_.substr(start, pos_ - start));
    std::string_view datatype = vocab::kXsdInteger;
    if (has_exp) {
      datatype = vocab::kXsdDouble;
    } else if (has_dot) {
      datatype = vocab::kXsdDecimal;
    }
    return Term::Literal(lexical, std::string(datatype));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  GraphBuilder builder_;
  std::optional<std::string> base_;
  std::unordered_map<std::string, std::string> prefixes_;
  std::unordered_map<std::string, Term> blank_labels_;
  std::uint64_t next_blank_ = 0;
};

}  // namespace

Graph ParseTurtle(std::string_view text, const ParseOptions& options) {
  return TurtleParser(text, options).Parse();
}

}  // namespace ontoaudit::rdf::internal
