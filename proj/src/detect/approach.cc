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

#include "ontoaudit/detect/approach.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "ontoaudit/common/error.h"
#include "ontoaudit/metrics/metrics.h"
#include "ontoaudit/rdf/index.h"
#include "ontoaudit/rdf/iri.h"
#include "ontoaudit/rdf/vocab.h"

namespace ontoaudit::detect {
namespace {

using rdf::GraphIndex;
using rdf::Term;
using rdf::TermId;

constexpr std::string_view kLemonNs = "http://lemon-model.net/lemon#";
constexpr std::string_view kMonnetLemonNs = "http://www.monnet-project.eu/lemon#";

constexpr std::string_view kHubPredicates[] = {
    vocab::kOntolexConcept,    vocab::kOntolexIsConceptOf,
    vocab::kOntolexEvokes,     vocab::kOntolexIsEvokedBy,
    vocab::kOntolexLexicalizedSense, vocab::kOntolexIsLexicalizedSenseOf};

constexpr std::string_view kSkosMappingPredicates[] = {
    vocab::kSkosMappingRelation, vocab::kSkosExactMatch,
    vocab::kSkosCloseMatch,      vocab::kSkosBroadMatch,
    vocab::kSkosNarrowMatch,     vocab::kSkosRelatedMatch};

std::string Compact(std::string_view iri) {
  static const std::pair<std::string_view, std::string_view> kPrefixes[] = {
      {"rdf:", vocab::kRdfNs},         {"rdfs:", vocab::kRdfsNs},
      {"owl:", vocab::kOwlNs},         {"skos:", vocab::kSkosNs},
      {"ontolex:", vocab::kOntolexNs}, {"lime:", vocab::kLimeNs},
      {"lemon:", kLemonNs}};
  for (const auto& [prefix, ns] : kPrefixes) {
    if (iri.starts_with(ns)) {
      return std::string(prefix) + std::string(iri.substr(ns.size()));
    }
  }
  return std::string(iri);
}

bool IsLemonLocal(std::string_view iri, std::string_view local) {
  for (const std::string_view ns : {kLemonNs, kMonnetLemonNs}) {
    if (iri.size() == ns.size() + local.size() && iri.starts_with(ns) &&
        iri.ends_with(local)) {
      return true;
    }
  }
  return false;
}

std::string Percent(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f%%", value);
  return buf;
}

bool LooksLikeIliId(std::string_view iri) {
  const std::string_view local = rdf::LocalName(iri);
  if (local.size() < 2 || local[0] != 'i') return false;
  return std::all_of(local.begin() + 1, local.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

// Signature entities linked to a lexical-concept hub.
std::size_t CountHubLinks(const GraphIndex& index,
                          const owl::Signature& signature) {
  std::size_t links = 0;
  for (const auto& [s, o] : index.WithPredicate(vocab::kOntolexConcept)) {
    if (index.term(s).is_iri() && signature.Contains(index.term(s).value)) {
      ++links;
    }
  }
  for (const auto& [s, o] : index.WithPredicate(vocab::kOntolexIsConceptOf)) {
    if (index.term(o).is_iri() && signature.Contains(index.term(o).value)) {
      ++links;
    }
  }
  return links;
}

}  // namespace

std::string_view FamilyName(Family family) {
  switch (family) {
    case Family::kLabels: return "labels";
    case Family::kLinguisticModel: return "linguistic-model";
    case Family::kMappingModel: return "mapping-model";
    case Family::kNone: return "none";
  }
  return "none";
}

std::optional<Family> FamilyFromName(std::string_view name) {
  for (const Family f : {Family::kLabels, Family::kLinguisticModel,
                         Family::kMappingModel, Family::kNone}) {
    if (FamilyName(f) == name) return f;
  }
  return std::nullopt;
}

std::string_view VariantName(Variant variant) {
  switch (variant) {
    case Variant::kLabelsLanguageIndependent: return "labels-language-independent";
    case Variant::kLabelsPrimaryDescriptive: return "labels-primary-descriptive";
    case Variant::kLabelsPrimaryOpaque: return "labels-primary-opaque";
    case Variant::kLinguisticEntries: return "linguistic-entries";
    case Variant::kLinguisticSenses: return "linguistic-senses";
    case Variant::kMappingTbox: return "mapping-tbox";
    case Variant::kMappingAnnotation: return "mapping-annotation";
    case Variant::kMappingIli: return "mapping-ili";
    case Variant::kMappingLexicalConcepts: return "mapping-lexical-concepts";
    case Variant::kUndetermined: return "undetermined";
  }
  return "undetermined";
}

std::optional<Variant> VariantFromName(std::string_view name) {
  if (name == "O_LI" || name == "labels-O_LI") {
    return Variant::kLabelsLanguageIndependent;
  }
  if (name == "O_PLD" || name == "labels-O_PLD") {
    return Variant::kLabelsPrimaryDescriptive;
  }
  if (name == "O_PLO" || name == "labels-O_PLO") {
    return Variant::kLabelsPrimaryOpaque;
  }
  for (const Variant v : kAllVariants) {
    if (VariantName(v) == name) return v;
  }
  if (name == VariantName(Variant::kUndetermined)) return Variant::kUndetermined;
  return std::nullopt;
}

Family FamilyOf(Variant variant) {
  switch (variant) {
    case Variant::kLabelsLanguageIndependent:
    case Variant::kLabelsPrimaryDescriptive:
    case Variant::kLabelsPrimaryOpaque:
      return Family::kLabels;
    case Variant::kLinguisticEntries:
    case Variant::kLinguisticSenses:
      return Family::kLinguisticModel;
    case Variant::kMappingTbox:
    case Variant::kMappingAnnotation:
    case Variant::kMappingIli:
    case Variant::kMappingLexicalConcepts:
      return Family::kMappingModel;
    case Variant::kUndetermined:
      return Family::kNone;
  }
  return Family::kNone;
}

Watchlist Watchlist::Default() {
  Watchlist w;
  w.Add("ontolex", std::string(vocab::kOntolexNs));
  w.Add("ontolex", "http://www.w3.org/ns/lemon/lime#");
  w.Add("ontolex", "http://www.w3.org/ns/lemon/synsem#");
  w.Add("ontolex", "http://www.w3.org/ns/lemon/decomp#");
  w.Add("ontolex", "http://www.w3.org/ns/lemon/vartrans#");
  w.Add("lemon", std::string(kLemonNs));
  w.Add("lemon", std::string(kMonnetLemonNs));
  w.Add("lexinfo", "http://www.lexinfo.net/ontology/2.0/lexinfo#");
  w.Add("lexinfo", "http://www.lexinfo.net/ontology/3.0/lexinfo#");
  w.Add("linginfo", "http://olp.dfki.de/ontologies/linginfo.owl#");
  w.Add("lexonto", "http://www.cimiano.de/ontologies/lexonto/0.1#");
  w.Add("gold", "http://purl.org/linguistics/gold/");
  return w;
}

Watchlist Watchlist::Load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kConfigError,
                "cannot read watchlist '" + path.string() + "'");
  }
  Watchlist w;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::istringstream fields(line);
    std::string name;
    std::string ns;
    if (!(fields >> name) || name[0] == '#') continue;
    if (!(fields >> ns) || !rdf::IsAbsoluteIri(ns)) {
      throw Error(ErrorCode::kConfigError,
                  path.string() + ":" + std::to_string(line_number) +
                      ": expected '<name> <namespace IRI>'");
    }
    w.Add(std::move(name), std::move(ns));
  }
  return w;
}

void Watchlist::Add(std::string name, std::string ns) {
  entries_.emplace_back(std::move(name), std::move(ns));
}

std::optional<std::string> Watchlist::Match(std::string_view iri) const {
  for (const auto& [name, ns] : entries_) {
    if (iri.starts_with(ns)) return name;
  }
  return std::nullopt;
}

std::vector<std::string> DefaultIliNamespaces() {
  return {"http://globalwordnet.org/ili/", "http://ili.globalwordnet.org/ili/",
          "http://ili.example.org/ili/"};
}

Evidence DetectFamily(const rdf::Graph& graph, const owl::Signature& signature,
                      const owl::AnnotationInventory& inventory,
                      const DetectOptions& options) {
  Evidence evidence;
  const GraphIndex index(graph);

  // Labels: a language-tagged label on a signature entity.
  std::size_t iri_labels = 0;
  std::size_t local_iri_labels = 0;
  for (const owl::AnnotationRow& row : inventory.rows) {
    if (row.source == owl::RowSource::kLexicalization) continue;
    if (row.source == owl::RowSource::kAnnotation && row.value.is_iri()) {
      ++iri_labels;
      if (row.local) ++local_iri_labels;
    }
    if (row.language && !row.language->untagged) {
      evidence.families_matched.insert(Family::kLabels);
      evidence.matched_predicates.insert(Compact(row.property));
    }
  }
  if (iri_labels > 0) {
    evidence.notes.push_back(std::to_string(iri_labels) +
                             " IRI-valued label(s), " +
                             std::to_string(local_iri_labels) + " local");
  }

  // Linguistic model: a watched namespace in predicate or object position.
  std::unordered_map<TermId, std::optional<std::string>> cache;
  auto watched = [&](TermId id) -> const std::optional<std::string>& {
    auto it = cache.find(id);
    if (it != cache.end()) return it->second;
    const Term& term = graph.term(id);
    std::optional<std::string> match;
    if (term.is_iri()) match = options.watchlist.Match(term.value);
    return cache.emplace(id, std::move(match)).first->second;
  };
  for (const rdf::TripleIds& t : graph.triples()) {
    for (const TermId id : {t.predicate, t.object}) {
      if (const auto& name = watched(id)) {
        evidence.families_matched.insert(Family::kLinguisticModel);
        evidence.matched_namespaces.insert(*name);
      }
    }
  }

  // Mapping model.
  bool mapping = false;
  if (!index.WithPredicate(vocab::kOwlSameAs).empty()) {
    mapping = true;
    evidence.matched_predicates.insert(Compact(vocab::kOwlSameAs));
  }
  for (const auto& [s, o] : index.WithPredicate(vocab::kOwlEquivalentClass)) {
    const Term& a = index.term(s);
    const Term& b = index.term(o);
    if (a.is_iri() && b.is_iri() &&
        rdf::NamespaceOf(a.value) != rdf::NamespaceOf(b.value)) {
      mapping = true;
      evidence.matched_predicates.insert(Compact(vocab::kOwlEquivalentClass));
      break;
    }
  }
  for (const std::string_view p : kSkosMappingPredicates) {
    if (!index.WithPredicate(p).empty()) {
      mapping = true;
      evidence.matched_predicates.insert(Compact(p));
    }
  }
  const std::size_t hub_links = CountHubLinks(index, signature);
  if (hub_links > 0) {
    mapping = true;
    for (const std::string_view p : kHubPredicates) {
      if (!index.WithPredicate(p).empty()) {
        evidence.matched_predicates.insert(Compact(p));
      }
    }
  }
  if (mapping) evidence.families_matched.insert(Family::kMappingModel);

  const auto& matched = evidence.families_matched;
  if (hub_links > 0) {
    // Lexical concepts act as an interlingua between lexicons, so the hub
    // pattern is reported as a mapping even though it uses OntoLex terms.
    evidence.family = Family::kMappingModel;
  } else if (matched.contains(Family::kLinguisticModel)) {
    evidence.family = Family::kLinguisticModel;
  } else if (matched.contains(Family::kMappingModel)) {
    evidence.family = Family::kMappingModel;
  } else if (matched.contains(Family::kLabels)) {
    evidence.family = Family::kLabels;
  }
  return evidence;
}

namespace {

Variant LinguisticVariant(const GraphIndex& index, Evidence& evidence) {
  bool senses = false;
  for (const std::string_view p :
       {vocab::kOntolexSense, vocab::kOntolexIsSenseOf, vocab::kOntolexReference,
        vocab::kOntolexIsReferenceOf}) {
    if (!index.WithPredicate(p).empty()) senses = true;
  }
  if (!index.Subjects(vocab::kRdfType, vocab::kOntolexLexicalSense).empty()) {
    senses = true;
  }
  bool entries = !index.WithPredicate(vocab::kOntolexIsDenotedBy).empty() ||
                 !index.WithPredicate(vocab::kOntolexDenotes).empty();
  if (!senses) {
    for (const rdf::TripleIds& t : index.graph().triples()) {
      const std::string& p = index.term(t.predicate).value;
      if (IsLemonLocal(p, "sense") || IsLemonLocal(p, "reference")) {
        senses = true;
        break;
      }
    }
  }
  if (senses) return Variant::kLinguisticSenses;
  if (entries) return Variant::kLinguisticEntries;
  evidence.notes.push_back(
      "linguistic namespace present without entry or sense links");
  return Variant::kUndetermined;
}

Variant MappingVariant(const GraphIndex& index, const owl::Signature& signature,
                       const owl::AnnotationInventory& inventory,
                       const DetectOptions& options, Evidence& evidence) {
  if (CountHubLinks(index, signature) > 0) {
    return Variant::kMappingLexicalConcepts;
  }
  const auto same_as = index.WithPredicate(vocab::kOwlSameAs);
  auto in_ili = [&](const Term& term) {
    if (!term.is_iri()) return false;
    for (const std::string& ns : options.ili_namespaces) {
      if (term.value.starts_with(ns)) return true;
    }
    return LooksLikeIliId(term.value);
  };
  for (const auto& [s, o] : same_as) {
    if (in_ili(index.term(s)) || in_ili(index.term(o))) {
      return Variant::kMappingIli;
    }
  }
  std::unordered_set<std::string> annotation_values;
  for (const owl::AnnotationRow& row : inventory.rows) {
    if (row.source == owl::RowSource::kAnnotation && row.value.is_iri()) {
      annotation_values.insert(row.value.value);
    }
  }
  for (const auto& [s, o] : same_as) {
    if (annotation_values.contains(index.term(s).value) &&
        annotation_values.contains(index.term(o).value)) {
      return Variant::kMappingAnnotation;
    }
  }
  auto across = [&](std::string_view predicate) {
    for (const auto& [s, o] : index.WithPredicate(predicate)) {
      const Term& a = index.term(s);
      const Term& b = index.term(o);
      if (a.is_iri() && b.is_iri() && signature.Contains(a.value) &&
          signature.Contains(b.value) &&
          rdf::NamespaceOf(a.value) != rdf::NamespaceOf(b.value)) {
        return true;
      }
    }
    return false;
  };
  if (across(vocab::kOwlEquivalentClass) ||
      across(vocab::kOwlEquivalentProperty) || across(vocab::kOwlSameAs) ||
      across(vocab::kRdfsSubClassOf)) {
    return Variant::kMappingTbox;
  }
  for (const std::string_view p : kSkosMappingPredicates) {
    if (across(p)) return Variant::kMappingTbox;
  }
  evidence.notes.push_back("mapping predicates do not link ontology entities");
  return Variant::kUndetermined;
}

Variant LabelsVariant(const owl::Signature& signature,
                      const owl::AnnotationInventory& inventory,
                      const DetectOptions& options, Evidence& evidence) {
  const metrics::CompletenessProfile profile =
      metrics::ComputeProfile(signature, inventory);
  bool dominant = false;
  if (!profile.degenerate && profile.languages.size() >= 2) {
    dominant =
        metrics::PrimaryLanguages(profile, options.tie_epsilon).size() == 1;
  }

  std::map<std::string, std::vector<std::string>> labels;
  for (const owl::AnnotationRow& row : inventory.rows) {
    if (row.source == owl::RowSource::kLexicalization) continue;
    if (row.value.is_literal()) labels[row.entity].push_back(row.value.value);
  }
  std::size_t opaque = 0;
  std::size_t descriptive = 0;
  std::size_t unknown = 0;
  bool all_labeled = true;
  const std::set<std::string> entities = signature.Entities();
  for (const std::string& entity : entities) {
    const auto it = labels.find(entity);
    static const std::vector<std::string> kNone;
    const std::vector<std::string>& values =
        it == labels.end() ? kNone : it->second;
    if (values.empty()) all_labeled = false;
    switch (ClassifyIdentifier(entity, values).verdict) {
      case Verdict::kOpaque: ++opaque; break;
      case Verdict::kDescriptive: ++descriptive; break;
      case Verdict::kUnknown: ++unknown; break;
    }
  }
  if (entities.empty()) return Variant::kUndetermined;
  const double total = static_cast<double>(entities.size());
  const double opaque_share = static_cast<double>(opaque) / total;
  const double descriptive_share = static_cast<double>(descriptive) / total;
  evidence.notes.push_back(
      "identifiers: " + Percent(100 * opaque_share) + " opaque, " +
      Percent(100 * descriptive_share) + " descriptive, " +
      std::to_string(unknown) + " unknown (dominance threshold " +
      Percent(100 * options.dominance) + ")");
  if (unknown > 0) evidence.needs_human_review = true;

  constexpr double kSlack = 1e-9;
  if (opaque_share + kSlack >= options.dominance) {
    if (dominant) return Variant::kLabelsPrimaryOpaque;
    if (all_labeled) return Variant::kLabelsLanguageIndependent;
    evidence.notes.push_back(
        "opaque identifiers without a label on every entity");
    return Variant::kUndetermined;
  }
  if (descriptive_share + kSlack >= options.dominance && dominant) {
    return Variant::kLabelsPrimaryDescriptive;
  }
  evidence.notes.push_back("no identifier style and language pattern dominates");
  return Variant::kUndetermined;
}

}  // namespace

Evidence DetectVariant(const rdf::Graph& graph, const owl::Signature& signature,
                       const owl::AnnotationInventory& inventory,
                       Evidence evidence, const DetectOptions& options) {
  const GraphIndex index(graph);
  evidence.needs_human_review = false;
  switch (evidence.family) {
    case Family::kLabels:
      evidence.variant =
          LabelsVariant(signature, inventory, options, evidence);
      break;
    case Family::kLinguisticModel:
      evidence.variant = LinguisticVariant(index, evidence);
      break;
    case Family::kMappingModel:
      evidence.variant =
          MappingVariant(index, signature, inventory, options, evidence);
      break;
    case Family::kNone:
      evidence.variant = Variant::kUndetermined;
      break;
  }
  if (evidence.variant == Variant::kUndetermined) {
    evidence.needs_human_review = true;
  }
  if (signature.Entities().size() < 2) {
    evidence.needs_human_review = true;
    evidence.notes.push_back("signature has fewer than two entities");
  }
  return evidence;
}

Evidence Detect(const rdf::Graph& graph, const owl::Signature& signature,
                const owl::AnnotationInventory& inventory,
                const DetectOptions& options) {
  return DetectVariant(graph, signature, inventory,
                       DetectFamily(graph, signature, inventory, options),
                       options);
}

}  // namespace ontoaudit::detect
