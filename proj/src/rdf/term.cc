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

#include "ontoaudit/rdf/term.h"

#include <cstdio>
#include <functional>

#include "ontoaudit/rdf/vocab.h"

namespace ontoaudit::rdf {

Term Term::Iri(std::string iri) {
  return Term{TermKind::kIri, std::move(iri), {}, {}};
}

Term Term::Blank(std::string label) {
  return Term{TermKind::kBlankNode, std::move(label), {}, {}};
}

Term Term::Literal(std::string lexical, std::string datatype) {
  if (datatype.empty()) datatype = std::string(vocab::kXsdString);
  return Term{TermKind::kLiteral, std::move(lexical), std::move(datatype), {}};
}

Term Term::LangLiteral(std::string lexical, std::string language) {
  return Term{TermKind::kLiteral, std::move(lexical),
              std::string(vocab::kRdfLangString), std::move(language)};
}

std::size_t TermHash::operator()(const Term& term) const noexcept {
  std::size_t h = std::hash<std::string>{}(term.value);
  h ^= static_cast<std::size_t>(term.kind) + 0x9e3779b97f4a7c15ULL + (h << 6) +
       (h >> 2);
  if (term.is_literal()) {
    h ^= std::hash<std::string>{}(term.datatype) + (h << 6) + (h >> 2);
    h ^= std::hash<std::string>{}(term.language) + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

void AppendEscapedIri(std::string& out, const std::string& iri) {
  for (const char c : iri) {
    const auto u = static_cast<unsigned char>(c);
    if (u <= 0x20 || c == '<' || c == '>' || c == '"' || c == '{' || c == '}' ||
        c == '|' || c == '^' || c == '`' || c == '\\') {
      char buf[12];
      std::snprintf(buf, sizeof(buf), "\\u%04X", u);
      out += buf;
    } else {
      out += c;
    }
  }
}

void AppendEscapedString(std::string& out, const std::string& text) {
  for (const char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20 || c == 0x7F) {
          char buf[12];
          std::snprintf(buf, sizeof(buf), "\\u%04X",
                        static_cast<unsigned char>(c));
          out += buf;
        } else {
          out += c;
        }
    }
  }
}

}  // namespace

std::string ToNTriples(const Term& term) {
  std::string out;
  switch (term.kind) {
    case TermKind::kIri:
      out += '<';
      AppendEscapedIri(out, term.value);
      out += '>';
      break;
    case TermKind::kBlankNode:
      out += "_:";
      out += term.value;
      break;
    case TermKind::kLiteral:
      out += '"';
      AppendEscapedString(out, term.value);
      out += '"';
      if (term.has_language()) {
        out += '@';
        out += term.language;
      } else if (term.datatype != vocab::kXsdString) {
        out += "^^<";
        AppendEscapedIri(out, term.datatype);
        out += '>';
      }
      break;
  }
  return out;
}

std::string ToNTriples(const Triple& triple) {
  return ToNTriples(triple.subject) + ' ' + ToNTriples(triple.predicate) + ' ' +
         ToNTriples(triple.object) + " .";
}

}  // namespace ontoaudit::rdf
