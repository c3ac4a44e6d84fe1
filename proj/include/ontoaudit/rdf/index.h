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

#ifndef ONTOAUDIT_RDF_INDEX_H_
#define ONTOAUDIT_RDF_INDEX_H_

#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ontoaudit/rdf/graph.h"

namespace ontoaudit::rdf {

// Read-only lookup structure over a Graph. The graph must outlive the index.
class GraphIndex {
 public:
  using Pair = std::pair<TermId, TermId>;

  explicit GraphIndex(const Graph& graph);

  const Graph& graph() const { return graph_; }
  const Term& term(TermId id) const { return graph_.term(id); }
  std::optional<TermId> Id(std::string_view iri) const {
    return graph_.FindIri(iri);
  }

  // (subject, object) pairs for a predicate, sorted by subject.
  std::span<const Pair> WithPredicate(std::string_view predicate) const;

  std::vector<TermId> Objects(TermId subject, std::string_view predicate) const;
  std::vector<TermId> Subjects(std::string_view predicate, TermId object) const;
  std::vector<TermId> Subjects(std::string_view predicate,
                               std::string_view object_iri) const;
  bool Has(TermId subject, std::string_view predicate, TermId object) const;
  bool HasType(TermId subject, std::string_view type) const;

 private:
  struct Entry {
    std::vector<Pair> by_subject;
    std::vector<Pair> by_object;  // (object, subject)
  };

  const Entry* Find(std::string_view predicate) const;

  const Graph& graph_;
  std::unordered_map<TermId, Entry> by_predicate_;
};

}  // namespace ontoaudit::rdf

#endif  // ONTOAUDIT_RDF_INDEX_H_
