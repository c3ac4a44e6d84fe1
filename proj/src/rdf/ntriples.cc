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

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ontoaudit/common/error.h"
#include "ontoaudit/common/utf8.h"
#include "ontoaudit/rdf/iri.h"
#include "ontoaudit/rdf/parser.h"
#include "ontoaudit/rdf/vocab.h"
#include "src/rdf/ntriples_line.h"

namespace ontoaudit::rdf {
namespace internal {

namespace {

class LineParser {
 public:
  LineParser(std::string_view line, std::uint64_t line_number)
      : line_(line), line_number_(line_number) {}

  std::optional<Triple> Parse() {
    SkipSpace();
    if (AtEnd() || Peek() == '#') return std::nullopt;
    Triple triple;
    triple.subject = ParseSubject();
    SkipSpace();
    triple.predicate = Term::Iri(ParseIriRef());
    SkipSpace();
    triple.object = ParseObject();
    SkipSpace();
    Expect('.');
    SkipSpace();
    if (!AtEnd() && Peek() != '#') Fail("unexpected text after '.'");
    return triple;
  }

 private:
  bool AtEnd() const { return pos_ >= line_.size(); }
  char Peek() const { return line_[pos_]; }

  [[noreturn]] void Fail(const std::string& message) const {
    throw ParseError(ErrorCode::kMalformedSyntax, message, line_number_,
                     pos_ + 1);
  }

  void SkipSpace() {
    while (!AtEnd() && (Peek() == ' ' || Peek() == '\t' || Peek() == '\r')) {
      ++pos_;
    }
  }

  void Expect(char c) {
    if (AtEnd() || Peek() != c) Fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Term ParseSubject() {
    if (AtEnd()) Fail("missing subject");
    if (Peek() == '<') return Term::Iri(ParseIriRef());
    if (Peek() == '_') return Term::Blank(ParseBlankLabel());
    Fail("subject must be an IRI or blank node");
  }

  Term ParseObject() {
    if (AtEnd()) Fail("missing object");
    if (Peek() == '<') return Term::Iri(ParseIriRef());
    if (Peek() == '_') return Term::Blank(ParseBlankLabel());
    if (Peek() == '"') return ParseLiteral();
    Fail("object must be an IRI, blank node or literal");
  }

  char32_t ParseHex(int digits) {
    if (pos_ + digits > line_.size()) Fail("truncated \\u escape");
    char32_t value = 0;
    for (int i = 0; i < digits; ++i) {
      const char c = line_[pos_++];
      value <<= 4;
      if (c >= '0' && c <= '9') {
        value |= static_cast<char32_t>(c - '0');
      } else if (c >= 'a' && c <= 'f') {
        value |= static_cast<char32_t>(c - 'a' + 10);
      } else if (c >= 'A' && c <= 'F') {
        value |= static_cast<char32_t>(c - 'A' + 10);
      } else {
        Fail("invalid hex digit in escape");
      }
    }
    if (value > 0x10FFFF || (value >= 0xD800 && value <= 0xDFFF)) {
      Fail("escape is not a Unicode scalar value");
    }
    return value;
  }

  std::string ParseIriRef() {
    Expect('<');
    std::string iri;
    while (true) {
      if (AtEnd()) Fail("unterminated IRI");
      const char c = line_[pos_];
      if (c == '>') {
        ++pos_;
        break;
      }
      if (c == '\\') {
        ++pos_;
        if (AtEnd()) Fail("dangling escape in IRI");
        const char kind = line_[pos_++];
        if (kind == 'u') {
          utf8::Append(iri, ParseHex(4));
        } else if (kind == 'U') {
          utf8::Append(iri, ParseHex(8));
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
    if (!IsAbsoluteIri(iri)) Fail("relative IRI <" + iri + "> in N-Triples");
    return iri;
  }

  static bool IsLabelChar(char c) {
    const auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || c == '_' || c == '-' || c == '.' || u >= 0x80;
  }

  std::string ParseBlankLabel() {
    if (line_.substr(pos_, 2) != "_:") Fail("expected '_:'");
    pos_ += 2;
    const std::size_t start = pos_;
    while (!AtEnd() && IsLabelChar(Peek())) ++pos_;
    // A trailing '.' terminates the statement rather than the label.
    while (pos_ > start && line_[pos_ - 1] == '.') --pos_;
    if (pos_ == start || line_[start] == '-' || line_[start] == '.') {
      Fail("invalid blank node label");
    }
    return std::string(line_.substr(start, pos_ - start));
  }

  Term ParseLiteral() {
    Expect('"');
    std::string lexical;
    while (true) {
      if (AtEnd()) Fail("unterminated string literal");
      const char c = line_[pos_++];
      if (c == '"') break;
      if (c == '\n' || c == '\r') Fail("raw line break in string literal");
      if (c != '\\') {
        lexical += c;
        continue;
      }
      if (AtEnd()) Fail("dangling escape in string literal");
      const char e = line_[pos_++];
      switch (e) {
        case 't': lexical += '\t'; break;
        case 'b': lexical += '\b'; break;
        case 'n': lexical += '\n'; break;
        case 'r': lexical += '\r'; break;
        case 'f': lexical += '\f'; break;
        case '"': lexical += '"'; break;
        case '\'': lexical += '\''; break;
        case '\\': lexical += '\\'; break;
        case 'u': utf8::Append(lexical, ParseHex(4)); break;
        case 'U': utf8::Append(lexical, ParseHex(8)); break;
        default: Fail(std::string("unknown escape \\") + e);
      }
    }
    if (!AtEnd() && Peek() == '@') {
      ++pos_;
      const std::size_t start = pos_;
      while (!AtEnd() && std::isalpha(static_cast<unsigned char>(Peek()))) {
        ++pos_;
      }
      if (pos_ == start) Fail("empty language tag");
      while (!AtEnd() && Peek() == '-') {
        ++pos_;
        const std::size_t sub = pos_;
        while (!AtEnd() && std::isalnum(static_cast<unsigned char>(Peek()))) {
          ++pos_;
        }
        if (pos_ == sub) Fail("empty language subtag");
      }
      return Term::LangLiteral(std::move(lexical),
                               std::string(line_.substr(start, pos_ - start)));
    }
    if (line_.substr(pos_, 2) == "^^") {
      pos_ += 2;
      std::string datatype = ParseIriRef();
      if (datatype == vocab::kRdfLangString) {
        Fail("rdf:langString literal without a language tag");
      }
      return Term::Literal(std::move(lexical), std::move(datatype));
    }
    return Term::Literal(std::move(lexical));
  }

  std::string_view line_;
  std::uint64_t line_number_;
  std::size_t pos_ = 0;
};

}  // namespace

std::optional<Triple> ParseNTriplesLine(std::string_view line,
                                        std::uint64_t line_number) {
  return LineParser(line, line_number).Parse();
}

}  // namespace internal

ScanSummary ScanStream(std::istream& input,
                       const std::function<void(const Triple&)>& callback,
                       bool strict) {
  ScanSummary summary;
  std::string line;
  std::uint64_t line_number = 0;
  while (std::getline(input, line)) {
    ++line_number;
    std::string_view view = line;
    if (line_number == 1) view = utf8::SkipBom(view);
    if (const auto bad = utf8::FindInvalid(view)) {
      if (strict) {
        throw ParseError(ErrorCode::kEncodingError, "invalid UTF-8",
                         line_number, *bad + 1);
      }
      ++summary.error_count;
      continue;
    }
    std::optional<Triple> triple;
    try {
      triple = internal::ParseNTriplesLine(view, line_number);
    } catch (const ParseError&) {
      if (strict) throw;
      ++summary.error_count;
      continue;
    }
    if (!triple) continue;
    ++summary.count;
    callback(*triple);
  }
  if (input.bad()) throw Error(ErrorCode::kIoError, "read error on input");
  return summary;
}

namespace {

// Relabels blank nodes from the structure around them so that isomorphic
// graphs serialize identically whatever labels the parser handed out. Colors
// are refined from incident triples until stable; remaining ties are broken
// by individualizing one member of the smallest tied class.
void LabelBlankNodes(const Graph& graph, std::vector<std::string>& rendered) {
  std::vector<std::size_t> index(graph.term_count(), SIZE_MAX);
  std::vector<TermId> blanks;
  for (std::size_t i = 0; i < graph.term_count(); ++i) {
    if (graph.term(static_cast<TermId>(i)).is_blank()) {
      index[i] = blanks.size();
      blanks.push_back(static_cast<TermId>(i));
    }
  }
  if (blanks.empty()) return;
  std::vector<std::vector<const TripleIds*>> incident(blanks.size());
  for (const TripleIds& t : graph.triples()) {
    if (index[t.subject] != SIZE_MAX) incident[index[t.subject]].push_back(&t);
    if (index[t.object] != SIZE_MAX && t.object != t.subject) {
      incident[index[t.object]].push_back(&t);
    }
  }

  std::vector<std::size_t> color(blanks.size(), 0);
  auto show = [&](TermId id) {
    return index[id] == SIZE_MAX ? rendered[id]
                                 : "_:" + std::to_string(color[index[id]]);
  };
  auto classes = [&] {
    return std::set<std::size_t>(color.begin(), color.end()).size();
  };
  // One refinement round; returns the new number of classes.
  auto refine = [&] {
    std::vector<std::pair<std::size_t, std::string>> signature(blanks.size());
    for (std::size_t b = 0; b < blanks.size(); ++b) {
      std::vector<std::string> parts;
      for (const TripleIds* t : incident[b]) {
        const std::string p = rendered[t->predicate];
        if (t->subject == blanks[b]) {
          parts.push_back("s " + p + " " +
                          (t->object == blanks[b] ? "self" : show(t->object)));
        } else {
          parts.push_back("o " + show(t->subject) + " " + p);
        }
      }
      std::sort(parts.begin(), parts.end());
      std::string joined;
      for (const std::string& part : parts) joined += part + "\n";
      signature[b] = {color[b], std::move(joined)};
    }
    std::vector<std::pair<std::size_t, std::string>> distinct = signature;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()),
                   distinct.end());
    for (std::size_t b = 0; b < blanks.size(); ++b) {
      color[b] = static_cast<std::size_t>(
          std::lower_bound(distinct.begin(), distinct.end(), signature[b]) -
          distinct.begin());
    }
    return distinct.size();
  };
  auto stabilize = [&] {
    std::size_t before = classes();
    for (;;) {
      const std::size_t after = refine();
      if (after == before) return after;
      before = after;
    }
  };

  std::size_t count = stabilize();
  while (count < blanks.size()) {
    std::vector<std::size_t> size(blanks.size(), 0);
    for (const std::size_t c : color) ++size[c];
    std::size_t tied = 0;
    while (size[tied] < 2) ++tied;
    std::size_t chosen = SIZE_MAX;
    for (std::size_t b = 0; b < blanks.size(); ++b) {
      if (color[b] == tied && (chosen == SIZE_MAX || blanks[b] < blanks[chosen])) {
        chosen = b;
      }
    }
    for (std::size_t b = 0; b < blanks.size(); ++b) {
      if (color[b] > tied || (color[b] == tied && b != chosen)) ++color[b];
    }
    count = stabilize();
  }
  for (std::size_t b = 0; b < blanks.size(); ++b) {
    rendered[blanks[b]] = "_:b" + std::to_string(color[b]);
  }
}

}  // namespace

std::string SerializeNTriples(const Graph& graph) {
  std::vector<std::string> rendered(graph.term_count());
  for (std::size_t i = 0; i < graph.term_count(); ++i) {
    rendered[i] = ToNTriples(graph.term(static_cast<TermId>(i)));
  }
  LabelBlankNodes(graph, rendered);
  std::vector<const TripleIds*> order;
  order.reserve(graph.size());
  for (const TripleIds& t : graph.triples()) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [&rendered](const TripleIds* a, const TripleIds* b) {
              const std::string& as = rendered[a->subject];
              const std::string& bs = rendered[b->subject];
              if (as != bs) return as < bs;
              const std::string& ap = rendered[a->predicate];
              const std::string& bp = rendered[b->predicate];
              if (ap != bp) return ap < bp;
              return rendered[a->object] < rendered[b->object];
            });
  std::string out;
  for (const TripleIds* t : order) {
    out += rendered[t->subject];
    out += ' ';
    out += rendered[t->predicate];
    out += ' ';
    out += rendered[t->object];
    out += " .\n";
  }
  return out;
}

}  // namespace ontoaudit::rdf
