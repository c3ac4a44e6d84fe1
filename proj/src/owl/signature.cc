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

#include "ontoaudit/owl/signature.h"

#include <algorithm>
#include <array>
#include <map>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "ontoaudit/rdf/index.h"
#include "ontoaudit/rdf/iri.h"
#include "ontoaudit/rdf/vocab.h"

namespace ontoaudit::owl {
namespace {

using rdf::GraphIndex;
using rdf::Term;
using rdf::TermId;

constexpr std::array<std::string_view, 4> kReservedNamespaces = {
    vocab::kRdfNs, vocab::kRdfsNs, vocab::kOwlNs, vocab::kXsdNs};

constexpr std::array<std::string_view, 7> kObjectPropertyTypes = {
    vocab::kOwlObjectProperty,        vocab::kOwlTransitiveProperty,
    vocab::kOwlSymmetricProperty,     vocab::kOwlAsymmetricProperty,
    vocab::kOwlReflexiveProperty,     vocab::kOwlIrreflexiveProperty,
    vocab::kOwlInverseFunctionalProperty};

constexpr std::string_view kSkosxlLiteralForm =
    "http://www.w3.org/2008/05/skos-xl#literalForm";
constexpr std::string_view kRdfValue =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#value";

bool IsEntityTerm(const Term& term) {
  return term.is_iri() && !term.value.empty() && !IsReservedIri(term.value);
}

void AddTypedSubjects(const GraphIndex& index, std::string_view type,
                      std::set<std::string>& out) {
  for (const TermId s : index.Subjects(vocab::kRdfType, type)) {
    const Term& term = index.term(s);
    if (IsEntityTerm(term)) out.insert(term.value);
  }
}

void AddPairMembers(const GraphIndex& index, std::string_view predicate,
                    std::set<std::string>& out) {
  for (const auto& [s, o] : index.WithPredicate(predicate)) {
    if (IsEntityTerm(index.term(s))) out.insert(index.term(s).value);
    if (IsEntityTerm(index.term(o))) out.insert(index.term(o).value);
  }
}

// Grows `set` along property axioms until no member is added.
void Propagate(const GraphIndex& index, std::set<std::string>& set) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (const std::string_view predicate :
       {vocab::kRdfsSubPropertyOf, vocab::kOwlEquivalentProperty}) {
    for (const auto& [s, o] : index.WithPredicate(predicate)) {
      if (IsEntityTerm(index.term(s)) && IsEntityTerm(index.term(o))) {
        edges.emplace_back(index.term(s).value, index.term(o).value);
      }
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [a, b] : edges) {
      const bool has_a = set.contains(a);
      const bool has_b = set.contains(b);
      if (has_a != has_b) {
        set.insert(has_a ? b : a);
        changed = true;
      }
    }
  }
}

std::optional<std::string> OntologyIri(const GraphIndex& index) {
  std::optional<std::string> best;
  for (const TermId s : index.Subjects(vocab::kRdfType, vocab::kOwlOntology)) {
    const Term& term = index.term(s);
    if (!term.is_iri()) continue;
    if (!best || term.value < *best) best = term.value;
  }
  return best;
}

void AddNamespaceVariants(std::string_view iri, std::set<std::string>& out) {
  if (iri.empty()) return;
  const char last = iri.back();
  if (last == '#' || last == '/') {
    out.insert(std::string(iri));
    return;
  }
  out.insert(std::string(iri) + "#");
  out.insert(std::string(iri) + "/");
}

std::set<std::string> LocalNamespacesFrom(const GraphIndex& index) {
  std::set<std::string> out;
  if (const auto ontology = OntologyIri(index)) {
    AddNamespaceVariants(*ontology, out);
  }
  for (const auto& [prefix, ns] : index.graph().prefixes()) {
    if (prefix.empty() && !ns.empty()) out.insert(ns);
  }
  if (const auto& base = index.graph().base_iri()) {
    AddNamespaceVariants(*base, out);
  }
  return out;
}

std::optional<lang::LanguageTag> LanguageOf(const Term& value) {
  if (!value.is_literal()) return std::nullopt;
  if (value.has_language()) return lang::ParseTag(value.language);
  return lang::Untagged();
}

class Collector {
 public:
  Collector(const rdf::Graph& graph, const Signature& signature)
      : index_(graph), signature_(signature) {
    for (const std::string& iri : signature.Entities()) {
      if (const auto id = graph.FindIri(iri)) entities_.insert(*id);
    }
  }

  AnnotationInventory Run(const std::vector<std::string>& properties) {
    std::vector<AnnotationRow> rows;
    for (const std::string& property : properties) {
      for (const auto& [s, o] : index_.WithPredicate(property)) {
        if (!entities_.contains(s)) continue;
        const Term& value = index_.term(o);
        AnnotationRow row{index_.term(s).value, property, value,
                          LanguageOf(value), false, RowSource::kAnnotation};
        if (value.is_iri()) {
          row.local = signature_.IsLocal(value.value);
          ResolveLabelResource(row, o, rows);
        }
        rows.push_back(std::move(row));
      }
    }
    AddLexicalizations(rows);
    std::sort(rows.begin(), rows.end(),
              [](const AnnotationRow& a, const AnnotationRow& b) {
                return std::tie(a.entity, a.property, a.source, a.value) <
                       std::tie(b.entity, b.property, b.source, b.value);
              });
    return AnnotationInventory{std::move(rows)};
  }

 private:
  void ResolveLabelResource(const AnnotationRow& row, TermId resource,
                            std::vector<AnnotationRow>& rows) {
    for (const std::string_view p :
         {vocab::kRdfsLabel, vocab::kSkosPrefLabel, vocab::kSkosAltLabel,
          vocab::kOntolexWrittenRep, kSkosxlLiteralForm, kRdfValue}) {
      for (const TermId o : index_.Objects(resource, p)) {
        const Term& literal = index_.term(o);
        if (!literal.is_literal()) continue;
        rows.push_back(AnnotationRow{row.entity, row.property, literal,
                                     LanguageOf(literal), false,
                                     RowSource::kLabelResource});
      }
    }
  }

  std::vector<TermId> Both(TermId node, std::string_view forward,
                           std::string_view inverse) const {
    std::vector<TermId> out = index_.Objects(node, forward);
    const std::vector<TermId> more = index_.Subjects(inverse, node);
    out.insert(out.end(), more.begin(), more.end());
    return out;
  }

  std::vector<TermId> EntriesOfSense(TermId sense) const {
    return Both(sense, vocab::kOntolexIsSenseOf, vocab::kOntolexSense);
  }

  const std::vector<Term>& EntryForms(TermId entry) {
    auto it = entry_forms_.find(entry);
    if (it != entry_forms_.end()) return it->second;
    std::vector<Term> forms;
    for (const std::string_view p :
         {vocab::kOntolexCanonicalForm, vocab::kOntolexLexicalForm}) {
      for (const TermId form : index_.Objects(entry, p)) {
        for (const TermId rep :
             index_.Objects(form, vocab::kOntolexWrittenRep)) {
          if (index_.term(rep).has_language()) forms.push_back(index_.term(rep));
        }
      }
    }
    if (forms.empty()) {
      for (const TermId label : index_.Objects(entry, vocab::kRdfsLabel)) {
        if (index_.term(label).has_language()) {
          forms.push_back(index_.term(label));
        }
      }
    }
    if (forms.empty()) {
      for (const TermId lexicon : index_.Subjects(vocab::kLimeEntry, entry)) {
        for (const TermId language :
             index_.Objects(lexicon, vocab::kLimeLanguage)) {
          const Term& code = index_.term(language);
          if (code.is_literal() && !code.value.empty()) {
            forms.push_back(Term::LangLiteral(code.value, code.value));
          }
        }
      }
    }
    std::sort(forms.begin(), forms.end());
    forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
    return entry_forms_.emplace(entry, std::move(forms)).first->second;
  }

  void AddLexicalizations(std::vector<AnnotationRow>& rows) {
    // (entity, entry, linking predicate)
    std::set<std::tuple<TermId, TermId, std::string_view>> links;
    auto link_pairs = [&](std::string_view predicate, bool entity_is_subject,
                          auto&& entries_of) {
      for (const auto& [s, o] : index_.WithPredicate(predicate)) {
        const TermId entity = entity_is_subject ? s : o;
        const TermId other = entity_is_subject ? o : s;
        if (!entities_.contains(entity)) continue;
        for (const TermId entry : entries_of(other)) {
          links.emplace(entity, entry, predicate);
        }
      }
    };
    auto self = [](TermId id) { return std::vector<TermId>{id}; };
    auto via_sense = [this](TermId sense) { return EntriesOfSense(sense); };
    auto via_concept = [this](TermId hub) {
      std::vector<TermId> out =
          Both(hub, vocab::kOntolexIsEvokedBy, vocab::kOntolexEvokes);
      for (const TermId sense : Both(hub, vocab::kOntolexLexicalizedSense,
                                     vocab::kOntolexIsLexicalizedSenseOf)) {
        const std::vector<TermId> entries = EntriesOfSense(sense);
        out.insert(out.end(), entries.begin(), entries.end());
      }
      return out;
    };
    link_pairs(vocab::kOntolexIsDenotedBy, true, self);
    link_pairs(vocab::kOntolexDenotes, false, self);
    link_pairs(vocab::kOntolexReference, false, via_sense);
    link_pairs(vocab::kOntolexIsReferenceOf, true, via_sense);
    link_pairs(vocab::kOntolexConcept, true, via_concept);
    link_pairs(vocab::kOntolexIsConceptOf, false, via_concept);

    for (const auto& [entity, entry, predicate] : links) {
      for (const Term& form : EntryForms(entry)) {
        rows.push_back(AnnotationRow{index_.term(entity).value,
                                     std::string(predicate), form,
                                     LanguageOf(form), false,
                                     RowSource::kLexicalization});
      }
    }
  }

  GraphIndex index_;
  const Signature& signature_;
  std::unordered_set<TermId> entities_;
  std::unordered_map<TermId, std::vector<Term>> entry_forms_;
};

}  // namespace

bool IsReservedIri(std::string_view iri) {
  return std::any_of(kReservedNamespaces.begin(), kReservedNamespaces.end(),
                     [iri](std::string_view ns) { return iri.starts_with(ns); });
}

bool Signature::Contains(std::string_view iri) const {
  return Multiplicity(iri) > 0;
}

int Signature::Multiplicity(std::string_view iri) const {
  const std::string key(iri);
  return static_cast<int>(classes.contains(key)) +
         static_cast<int>(object_properties.contains(key)) +
         static_cast<int>(data_properties.contains(key));
}

std::set<std::string> Signature::Punned() const {
  std::set<std::string> out;
  for (const std::string& iri : Entities()) {
    if (Multiplicity(iri) > 1) out.insert(iri);
  }
  return out;
}

std::set<std::string> Signature::Entities() const {
  std::set<std::string> out = classes;
  out.insert(object_properties.begin(), object_properties.end());
  out.insert(data_properties.begin(), data_properties.end());
  return out;
}

bool Signature::IsLocal(std::string_view iri) const {
  return std::any_of(local_namespaces.begin(), local_namespaces.end(),
                     [iri](const std::string& ns) { return iri.starts_with(ns); });
}

Signature ExtractSignature(const rdf::Graph& graph) {
  const GraphIndex index(graph);
  Signature sig;

  AddTypedSubjects(index, vocab::kOwlClass, sig.classes);
  AddPairMembers(index, vocab::kRdfsSubClassOf, sig.classes);
  AddPairMembers(index, vocab::kOwlEquivalentClass, sig.classes);
  AddPairMembers(index, vocab::kOwlDisjointWith, sig.classes);

  for (const std::string_view type : kObjectPropertyTypes) {
    AddTypedSubjects(index, type, sig.object_properties);
  }
  AddPairMembers(index, vocab::kOwlInverseOf, sig.object_properties);
  Propagate(index, sig.object_properties);

  AddTypedSubjects(index, vocab::kOwlDatatypeProperty, sig.data_properties);
  Propagate(index, sig.data_properties);

  for (const auto& [s, o] : index.WithPredicate(vocab::kOwlImports)) {
    if (index.term(o).is_iri()) sig.imports.insert(index.term(o).value);
  }

  std::unordered_set<TermId> anonymous;
  for (const TermId s :
       index.Subjects(vocab::kRdfType, vocab::kOwlRestriction)) {
    if (index.term(s).is_blank()) anonymous.insert(s);
  }
  for (const std::string_view p :
       {vocab::kOwlUnionOf, vocab::kOwlIntersectionOf, vocab::kOwlComplementOf,
        vocab::kOwlOneOf}) {
    for (const auto& [s, o] : index.WithPredicate(p)) {
      if (index.term(s).is_blank()) anonymous.insert(s);
    }
  }
  sig.anonymous_expressions = anonymous.size();

  sig.ontology_iri = OntologyIri(index);
  sig.local_namespaces = LocalNamespacesFrom(index);
  return sig;
}

std::set<std::string> LocalNamespaces(const rdf::Graph& graph) {
  return LocalNamespacesFrom(GraphIndex(graph));
}

std::vector<std::string> DefaultLabelProperties() {
  return {std::string(vocab::kRdfsLabel), std::string(vocab::kSkosPrefLabel),
          std::string(vocab::kSkosAltLabel)};
}

AnnotationInventory CollectAnnotations(const rdf::Graph& graph,
                                       const Signature& signature,
                                       const std::vector<std::string>& properties) {
  return Collector(graph, signature).Run(properties);
}

}  // namespace ontoaudit::owl
