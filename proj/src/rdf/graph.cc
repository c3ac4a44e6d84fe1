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

#include "ontoaudit/rdf/graph.h"

#include <algorithm>

#include "ontoaudit/common/error.h"
#include "ontoaudit/rdf/vocab.h"

namespace ontoaudit::rdf {

std::optional<TermId> Graph::Find(const Term& term) const {
  const auto it = index_.find(term);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<TermId> Graph::FindIri(std::string_view iri) const {
  return Find(Term::Iri(std::string(iri)));
}

bool Graph::Contains(const Triple& triple) const {
  const auto s = Find(triple.subject);
  const auto p = Find(triple.predicate);
  const auto o = Find(triple.object);
  if (!s || !p || !o) return false;
  // Triples are sorted by id; binary search works.
  return std::binary_search(triples_.begin(), triples_.end(),
                            TripleIds{*s, *p, *o});
}

std::vector<Triple> Graph::Materialize() const {
  std::vector<Triple> out;
  out.reserve(triples_.size());
  for (const TripleIds& t : triples_) {
    out.push_back({term(t.subject), term(t.predicate), term(t.object)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph Graph::Clone() const {
  GraphBuilder builder;
  builder.AddAll(*this);
  if (base_iri_) builder.SetBase(*base_iri_);
  for (const auto& [prefix, ns] : prefixes_) builder.AddPrefix(prefix, ns);
  builder.diagnostics() = diagnostics_;
  return std::move(builder).Build();
}

TermId GraphBuilder::Intern(const Term& term) {
  const auto [it, inserted] = graph_.index_.try_emplace(
      term, static_cast<TermId>(graph_.terms_.size()));
  if (inserted) graph_.terms_.push_back(&it->first);
  return it->second;
}

void GraphBuilder::Add(const Term& subject, const Term& predicate,
                       const Term& object) {
  if (subject.is_literal()) {
    throw Error(ErrorCode::kMalformedSyntax, "literal in subject position");
  }
  if (!predicate.is_iri()) {
    throw Error(ErrorCode::kMalformedSyntax, "predicate is not an IRI");
  }
  if (object.is_literal() &&
      object.has_language() != (object.datatype == vocab::kRdfLangString)) {
    throw Error(ErrorCode::kMalformedSyntax,
                "language tag and rdf:langString datatype disagree");
  }
  const TermId s = Intern(subject);
  const TermId p = Intern(predicate);
  const TermId o = Intern(object);
  graph_.triples_.push_back({s, p, o});
}

void GraphBuilder::AddAll(const Graph& graph) {
  graph.ForEach([this](const Term& s, const Term& p, const Term& o) {
    graph_.triples_.push_back({Intern(s), Intern(p), Intern(o)});
  });
}

void GraphBuilder::AddPrefix(std::string prefix, std::string ns) {
  for (auto& entry : graph_.prefixes_) {
    if (entry.first == prefix) {
      entry.second = std::move(ns);
      return;
    }
  }
  graph_.prefixes_.emplace_back(std::move(prefix), std::move(ns));
}

Graph GraphBuilder::Build() && {
  auto& triples = graph_.triples_;
  std::sort(triples.begin(), triples.end());
  triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
  triples.shrink_to_fit();
  return std::move(graph_);
}

}  // namespace ontoaudit::rdf
