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

#ifndef ONTOAUDIT_GEN_GENERATOR_H_
#define ONTOAUDIT_GEN_GENERATOR_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ontoaudit/detect/approach.h"
#include "ontoaudit/rdf/graph.h"

namespace ontoaudit::gen {

enum class MappingMode { kPairwise, kNary };

// Share of entities labeled in one language, either as a fraction of Cov
// (rounded up) or as an exact entity count.
struct Completeness {
  double fraction = 1.0;
  std::optional<std::size_t> entities;
};

struct GenerationSpec {
  std::string name;
  detect::Variant variant = detect::Variant::kLabelsLanguageIndependent;
  std::vector<std::string> languages;
  std::size_t classes = 0;
  std::size_t object_properties = 0;
  std::size_t data_properties = 0;
  // Languages without an entry are complete.
  std::map<std::string, Completeness> completeness;
  std::uint64_t seed = 1;
  std::string base_iri = "http://example.org/generated/";
  MappingMode mapping_mode = MappingMode::kPairwise;
};

struct Document {
  std::string name;  // file stem, e.g. "ontology" or "lexicon-en"
  rdf::Graph graph;
};

// Expected audit values, derived from the construction alone.
struct Manifest {
  std::string name;
  detect::Variant variant = detect::Variant::kUndetermined;
  std::uint64_t seed = 0;
  std::size_t cov = 0;
  std::size_t classes = 0;
  std::size_t object_properties = 0;
  std::size_t data_properties = 0;
  // Entities labeled per language, in spec order.
  std::vector<std::pair<std::string, std::size_t>> labeled;
  std::vector<std::string> primary_languages;
  std::vector<std::pair<std::string, std::size_t>> triples_per_document;
  // Label assertions on the first class (labels variants).
  std::size_t annotation_assertions_per_class = 0;
  // Bridge axioms relating one class across all languages (mapping variants).
  std::size_t mapping_axioms_per_class = 0;
  std::size_t mapping_triples_per_class = 0;
  std::string mapping_mode;

  double Lcom(std::size_t index) const;
};

struct Corpus {
  std::vector<Document> documents;
  Manifest manifest;
};

// Throws Error(kInvalidSpec) naming the offending field.
void ValidateSpec(const GenerationSpec& spec);

Corpus Generate(const GenerationSpec& spec);

// Fixed fixtures for inflection and for a French river/fleuve distinction
// expressed with restrictions and unions.
Corpus GenerateInflectionShowcase();
Corpus GenerateRiverShowcase();

// Writes one sorted N-Triples file per document plus manifest.json.
std::vector<std::filesystem::path> EmitNTriples(
    const Corpus& corpus, const std::filesystem::path& directory);

// The JSON written to manifest.json.
std::string ManifestJson(const Manifest& manifest);

// Parses one spec object or a batch {"corpora": [...]}.
std::vector<GenerationSpec> ParseSpecs(std::string_view json_text);
std::vector<GenerationSpec> LoadSpecs(const std::filesystem::path& path);

struct ManifestInfo {
  std::string name;
  std::string variant;
  std::size_t cov = 0;
  std::vector<std::pair<std::string, std::size_t>> labeled;
};
std::optional<ManifestInfo> ReadManifest(const std::filesystem::path& path);

// Structural validators; each returns one message per violation.
std::vector<std::string> ValidateSenseCardinality(const rdf::Graph& graph);
std::vector<std::string> ValidatePrefLabelUniqueness(const rdf::Graph& graph);

// One spec per variant, sized so that detection needs no human review.
std::vector<GenerationSpec> ReferenceSpecs(std::uint64_t seed = 7);

// Example 1: 50 classes, 10 object and 5 data properties; English on all
// classes and object properties, French on all classes, German on 30 classes.
GenerationSpec ExampleOneSpec();

}  // namespace ontoaudit::gen

#endif  // ONTOAUDIT_GEN_GENERATOR_H_
