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

#ifndef ONTOAUDIT_RDF_GRAPH_H_
#define ONTOAUDIT_RDF_GRAPH_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ontoaudit/rdf/term.h"

namespace ontoaudit::rdf {

using TermId = std::uint32_t;

struct TripleIds {
  TermId subject;
  TermId predicate;
  TermId object;

  auto operator<=>(const TripleIds&) const = default;
};

// Counters collected while parsing, reported but not used by the metrics.
struct ParseDiagnostics {
  // Literals whose language came from an inherited xml:lang attribute.
  std::uint64_t xml_lang_literals = 0;
  // Literals written with an explicit language tag (Turtle/N-Triples).
  std::uint64_t tagged_literals = 0;
};

// An immutable set of triples with interned terms. Built by GraphBuilder;
// safe to share across threads once constructed.
class Graph {
 public:
  Graph() = default;
  Graph(Graph&&) noexcept = default;
  Graph& operator=(Graph&&) noexcept = default;
  Graph(const Graph&) = delete;
  Graph& operator=(const Graph&) = delete;

  std::span<const TripleIds> triples() const { return triples_; }
  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }

  const Term& term(TermId id) const { return *terms_[id]; }
  std::size_t term_count() const { return terms_.size(); }
  std::optional<TermId> Find(const Term& term) const;
  std::optional<TermId> FindIri(std::string_view iri) const;

  const std::optional<std::string>& base_iri() const { return base_iri_; }
  // Prefix declarations in document order; a redeclared prefix keeps its
  // first position and takes the last namespace.
  const std::vector<std::pair<std::string, std::string>>& prefixes() const {
    return prefixes_;
  }
  const ParseDiagnostics& diagnostics() const { return diagnostics_; }

  bool Contains(const Triple& triple) const;

  // All triples as values, sorted.
  std::vector<Triple> Materialize() const;

  // Invokes fn(subject, predicate, object) for every triple.
  template <typename Fn>
  void ForEach(Fn&& fn) const {
    for (const TripleIds& t : triples_) {
      fn(term(t.subject), term(t.predicate), term(t.object));
    }
  }

  Graph Clone() const;

 private:
  friend class GraphBuilder;

  std::unordered_map<Term, TermId, TermHash> index_;
  std::vector<const Term*> terms_;
  std::vector<TripleIds> triples_;
  std::optional<std::string> base_iri_;
  std::vector<std::pair<std::string, std::string>> prefixes_;
  ParseDiagnostics diagnostics_;
};

class GraphBuilder {
 public:
  GraphBuilder() = default;

  // Throws Error(kMalformedSyntax) if the triple violates the RDF term
  // position rules.
  void Add(const Term& subject, const Term& predicate, const Term& object);
  void Add(const Triple& triple) {
    Add(triple.subject, triple.predicate, triple.object);
  }
  void AddAll(const Graph& graph);

  void AddPrefix(std::string prefix, std::string ns);
  void SetBase(std::string base) { graph_.base_iri_ = std::move(base); }
  ParseDiagnostics& diagnostics() { return graph_.diagnostics_; }
  std::size_t pending() const { return graph_.triples_.size(); }

  Graph Build() &&;

 private:
  TermId Intern(const Term& term);

  Graph graph_;
};

}  // namespace ontoaudit::rdf

#endif  // ONTOAUDIT_RDF_GRAPH_H_
