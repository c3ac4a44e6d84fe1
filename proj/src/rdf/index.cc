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

#include "ontoaudit/rdf/index.h"

#include <algorithm>

#include "ontoaudit/rdf/vocab.h"

namespace ontoaudit::rdf {

GraphIndex::GraphIndex(const Graph& graph) : graph_(graph) {
  for (const TripleIds& t : graph.triples()) {
    Entry& entry = by_predicate_[t.predicate];
    entry.by_subject.emplace_back(t.subject, t.object);
    entry.by_object.emplace_back(t.object, t.subject);
  }
  for (auto& [predicate, entry] : by_predicate_) {
    std::sort(entry.by_subject.begin(), entry.by_subject.end());
    std::sort(entry.by_object.begin(), entry.by_object.end());
  }
}

const GraphIndex::Entry* GraphIndex::Find(std::string_view predicate) const {
  const auto id = graph_.FindIri(predicate);
  if (!id) return nullptr;
  const auto it = by_predicate_.find(*id);
  return it == by_predicate_.end() ? nullptr : &it->second;
}

std::span<const GraphIndex::Pair> GraphIndex::WithPredicate(
    std::string_view predicate) const {
  const Entry* entry = Find(predicate);
  if (entry == nullptr) return {};
  return entry->by_subject;
}

namespace {

std::vector<TermId> Range(const std::vector<GraphIndex::Pair>& pairs,
                          TermId key) {
  std::vector<TermId> out;
  auto it = std::lower_bound(pairs.begin(), pairs.end(),
                             GraphIndex::Pair{key, 0});
  for (; it != pairs.end() && it->first == key; ++it) out.push_back(it->second);
  return out;
}

}  // namespace

std::vector<TermId> GraphIndex::Objects(TermId subject,
                                        std::string_view predicate) const {
  const Entry* entry = Find(predicate);
  if (entry == nullptr) return {};
  return Range(entry->by_subject, subject);
}

std::vector<TermId> GraphIndex::Subjects(std::string_view predicate,
                                         TermId object) const {
  const Entry* entry = Find(predicate);
  if (entry == nullptr) return {};
  return Range(entry->by_object, object);
}

std::vector<TermId> GraphIndex::Subjects(std::string_view predicate,
                                         std::string_view object_iri) const {
  const auto object = graph_.FindIri(object_iri);
  if (!object) return {};
  return Subjects(predicate, *object);
}

bool GraphIndex::Has(TermId subject, std::string_view predicate,
                     TermId object) const {
  const Entry* entry = Find(predicate);
  if (entry == nullptr) return false;
  return std::binary_search(entry->by_subject.begin(), entry->by_subject.end(),
                            Pair{subject, object});
}

bool GraphIndex::HasType(TermId subject, std::string_view type) const {
  const auto type_id = graph_.FindIri(type);
  return type_id && Has(subject, vocab::kRdfType, *type_id);
}

}  // namespace ontoaudit::rdf
