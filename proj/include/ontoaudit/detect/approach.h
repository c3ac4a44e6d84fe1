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

#ifndef ONTOAUDIT_DETECT_APPROACH_H_
#define ONTOAUDIT_DETECT_APPROACH_H_

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ontoaudit/owl/signature.h"
#include "ontoaudit/rdf/graph.h"

namespace ontoaudit::detect {

enum class Family { kLabels, kLinguisticModel, kMappingModel, kNone };

enum class Variant {
  kLabelsLanguageIndependent,  // O_LI
  kLabelsPrimaryDescriptive,   // O_PLD
  kLabelsPrimaryOpaque,        // O_PLO
  kLinguisticEntries,
  kLinguisticSenses,
  kMappingTbox,
  kMappingAnnotation,
  kMappingIli,
  kMappingLexicalConcepts,
  kUndetermined,
};

std::string_view FamilyName(Family family);
std::optional<Family> FamilyFromName(std::string_view name);
std::string_view VariantName(Variant variant);
// Accepts the long names plus the short forms O_LI, O_PLD and O_PLO.
std::optional<Variant> VariantFromName(std::string_view name);
Family FamilyOf(Variant variant);

inline constexpr Variant kAllVariants[] = {
    Variant::kLabelsLanguageIndependent, Variant::kLabelsPrimaryDescriptive,
    Variant::kLabelsPrimaryOpaque,       Variant::kLinguisticEntries,
    Variant::kLinguisticSenses,          Variant::kMappingTbox,
    Variant::kMappingAnnotation,         Variant::kMappingIli,
    Variant::kMappingLexicalConcepts};

// Linguistic-model namespaces, each under a short name.
class Watchlist {
 public:
  static Watchlist Default();
  // Reads "name IRI" lines; '#' starts a comment. Throws Error(kConfigError).
  static Watchlist Load(const std::filesystem::path& path);

  void Add(std::string name, std::string ns);
  // Name of the first entry whose namespace prefixes `iri`.
  std::optional<std::string> Match(std::string_view iri) const;
  const std::vector<std::pair<std::string, std::string>>& entries() const {
    return entries_;
  }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

std::vector<std::string> DefaultIliNamespaces();

struct DetectOptions {
  Watchlist watchlist = Watchlist::Default();
  std::vector<std::string> ili_namespaces = DefaultIliNamespaces();
  // Share of entities that must be judged opaque (or descriptive) before a
  // labels variant is chosen.
  double dominance = 0.8;
  double tie_epsilon = 1.0;
};

struct Evidence {
  Family family = Family::kNone;
  Variant variant = Variant::kUndetermined;
  std::set<Family> families_matched;
  std::set<std::string> matched_namespaces;
  std::set<std::string> matched_predicates;
  bool needs_human_review = true;
  std::vector<std::string> notes;
};

enum class Verdict { kOpaque, kDescriptive, kUnknown };
std::string_view VerdictName(Verdict verdict);

struct IdentifierJudgment {
  std::string entity;
  Verdict verdict = Verdict::kUnknown;
  std::string basis;
};

IdentifierJudgment ClassifyIdentifier(std::string_view entity,
                                      const std::vector<std::string>& labels);

// Lowercase letters of `text` with everything else removed.
std::string NormalizeForComparison(std::string_view text);

// Runs all three family tests and picks the headline family.
Evidence DetectFamily(const rdf::Graph& graph, const owl::Signature& signature,
                      const owl::AnnotationInventory& inventory,
                      const DetectOptions& options = {});

// Refines `evidence` (from DetectFamily) with a variant.
Evidence DetectVariant(const rdf::Graph& graph, const owl::Signature& signature,
                       const owl::AnnotationInventory& inventory,
                       Evidence evidence, const DetectOptions& options = {});

Evidence Detect(const rdf::Graph& graph, const owl::Signature& signature,
                const owl::AnnotationInventory& inventory,
                const DetectOptions& options = {});

}  // namespace ontoaudit::detect

#endif  // ONTOAUDIT_DETECT_APPROACH_H_
