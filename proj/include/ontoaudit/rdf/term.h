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

#ifndef ONTOAUDIT_RDF_TERM_H_
#define ONTOAUDIT_RDF_TERM_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace ontoaudit::rdf {

enum class TermKind : std::uint8_t { kIri, kBlankNode, kLiteral };

// An RDF term. `value` holds the IRI, the blank node label, or the lexical
// form depending on `kind`. A literal carries a language tag iff its datatype
// is rdf:langString; the tag is kept as written in the source document.
struct Term {
  TermKind kind = TermKind::kIri;
  std::string value;
  std::string datatype;
  std::string language;

  static Term Iri(std::string iri);
  static Term Blank(std::string label);
  static Term Literal(std::string lexical, std::string datatype = {});
  static Term LangLiteral(std::string lexical, std::string language);

  bool is_iri() const { return kind == TermKind::kIri; }
  bool is_blank() const { return kind == TermKind::kBlankNode; }
  bool is_literal() const { return kind == TermKind::kLiteral; }
  bool has_language() const { return !language.empty(); }

  auto operator<=>(const Term&) const = default;
};

struct TermHash {
  std::size_t operator()(const Term& term) const noexcept;
};

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  auto operator<=>(const Triple&) const = default;
};

// N-Triples rendering of a single term.
std::string ToNTriples(const Term& term);
std::string ToNTriples(const Triple& triple);

}  // namespace ontoaudit::rdf

#endif  // ONTOAUDIT_RDF_TERM_H_
