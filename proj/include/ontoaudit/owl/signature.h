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

#ifndef ONTOAUDIT_OWL_SIGNATURE_H_
#define ONTOAUDIT_OWL_SIGNATURE_H_

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ontoaudit/lang/language_tag.h"
#include "ontoaudit/rdf/graph.h"
#include "ontoaudit/rdf/term.h"

namespace ontoaudit::owl {

// V_C, V_OP and V_DP of one ontology document, without following imports.
struct Signature {
  std::set<std::string> classes;
  std::set<std::string> object_properties;
  std::set<std::string> data_properties;
  std::set<std::string> imports;
  std::optional<std::string> ontology_iri;
  std::set<std::string> local_namespaces;
  // Blank-node class expressions (restrictions, boolean combinations).
  std::uint64_t anonymous_expressions = 0;

  // |V_C| + |V_OP| + |V_DP|; a punned IRI counts once per set.
  std::size_t Coverage() const {
    return classes.size() + object_properties.size() + data_properties.size();
  }
  bool Contains(std::string_view iri) const;
  // Number of the three sets containing `iri`.
  int Multiplicity(std::string_view iri) const;
  // IRIs that belong to more than one set.
  std::set<std::string> Punned() const;
  std::set<std::string> Entities() const;
  bool IsLocal(std::string_view iri) const;
};

bool IsReservedIri(std::string_view iri);

Signature ExtractSignature(const rdf::Graph& graph);

std::set<std::string> LocalNamespaces(const rdf::Graph& graph);

enum class RowSource {
  kAnnotation,      // direct annotation triple on the entity
  kLabelResource,   // literal reached through an IRI-valued label
  kLexicalization,  // written form of a lexical entry linked to the entity
};

struct AnnotationRow {
  std::string entity;
  std::string property;
  rdf::Term value;
  // Unset for IRI and blank node values.
  std::optional<lang::LanguageTag> language;
  // For IRI values: whether the IRI is in a local namespace.
  bool local = false;
  RowSource source = RowSource::kAnnotation;
};

struct AnnotationInventory {
  std::vector<AnnotationRow> rows;
};

std::vector<std::string> DefaultLabelProperties();

// Inventories every (entity, property, value) triple of the signature for
// the given properties, plus derived rows for IRI-valued labels and for
// OntoLex lexicalizations of signature entities.
AnnotationInventory CollectAnnotations(
    const rdf::Graph& graph, const Signature& signature,
    const std::vector<std::string>& properties = DefaultLabelProperties());

}  // namespace ontoaudit::owl

#endif  // ONTOAUDIT_OWL_SIGNATURE_H_
