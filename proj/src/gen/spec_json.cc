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


#include <fstream>
#include <sstream>

#include "json.hpp"
#include "ontoaudit/common/error.h"
#include "ontoaudit/common/version.h"
#include "ontoaudit/gen/generator.h"

namespace ontoaudit::gen {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void Invalid(const std::string& message) {
  throw Error(ErrorCode::kInvalidSpec, message);
}

std::size_t Count(const Json& object, const char* key) {
  if (!object.contains(key)) return 0;
  const Json& value = object[key];
  if (!value.is_number_integer() || value.get<std::int64_t>() < 0) {
    Invalid(std::string(key) + ": expected a non-negative integer");
  }
  return value.get<std::size_t>();
}

GenerationSpec ParseOne(const Json& object, std::size_t index) {
  if (!object.is_object()) {
    Invalid("corpora[" + std::to_string(index) + "]: expected an object");
  }
  GenerationSpec spec;
  if (!object.contains("variant") || !object["variant"].is_string()) {
    Invalid("variant: required string");
  }
  const auto variant =
      detect::VariantFromName(object["variant"].get<std::string>());
  if (!variant || *variant == detect::Variant::kUndetermined) {
    Invalid("variant: unknown value '" + object["variant"].get<std::string>() +
            "'");
  }
  spec.variant = *variant;
  spec.name = object.value("name", std::string(detect::VariantName(*variant)));
  if (!object.contains("languages") || !object["languages"].is_array()) {
    Invalid("languages: required array of tags");
  }
  for (const Json& language : object["languages"]) {
    if (!language.is_string()) Invalid("languages: expected strings");
    spec.languages.push_back(language.get<std::string>());
  }
  spec.classes = Count(object, "classes");
  spec.object_properties = Count(object, "object_properties");
  spec.data_properties = Count(object, "data_properties");
  if (object.contains("completeness")) {
    const Json& map = object["completeness"];
    if (!map.is_object()) Invalid("completeness: expected an object");
    for (const auto& [language, value] : map.items()) {
      Completeness c;
      if (value.is_number()) {
        c.fraction = value.get<double>();
      } else if (value.is_object() && value.contains("entities")) {
        c.entities = Count(value, "entities");
      } else {
        Invalid("completeness: " + language +
                " expects a fraction or {\"entities\": n}");
      }
      spec.completeness[language] = c;
    }
  }
  if (object.contains("seed")) {
    if (!object["seed"].is_number_unsigned() &&
        !object["seed"].is_number_integer()) {
      Invalid("seed: expected an integer");
    }
    spec.seed = object["seed"].get<std::uint64_t>();
  }
  spec.base_iri = object.value("base_iri", spec.base_iri);
  const std::string mode = object.value("mapping_mode", std::string("pairwise"));
  if (mode == "pairwise") {
    spec.mapping_mode = MappingMode::kPairwise;
  } else if (mode == "nary") {
    spec.mapping_mode = MappingMode::kNary;
  } else {
    Invalid("mapping_mode: expected 'pairwise' or 'nary'");
  }
  ValidateSpec(spec);
  return spec;
}

}  // namespace

std::string ManifestJson(const Manifest& m) {
  Json labeled = Json::object();
  Json lcom = Json::object();
  for (std::size_t i = 0; i < m.labeled.size(); ++i) {
    labeled[m.labeled[i].first] = m.labeled[i].second;
    lcom[m.labeled[i].first] = m.Lcom(i);
  }
  Json documents = Json::object();
  for (const auto& [name, triples] : m.triples_per_document) {
    documents[name] = triples;
  }
  Json row = {
      {"ontology_id", m.name},
      {"dataset", "generated"},
      {"profile",
       {{"cov", m.cov},
        {"per_language", lcom},
        {"labeled_entities", labeled}}},
      {"primary_languages", m.primary_languages},
      {"approach",
       {{"family", detect::FamilyName(detect::FamilyOf(m.variant))},
        {"variant", detect::VariantName(m.variant)}}},
      {"signature",
       {{"classes", m.classes},
        {"object_properties", m.object_properties},
        {"data_properties", m.data_properties}}},
      {"generation",
       {{"seed", m.seed},
        {"documents", documents},
        {"annotation_assertions_per_class", m.annotation_assertions_per_class},
        {"mapping_axioms_per_class", m.mapping_axioms_per_class},
        {"mapping_triples_per_class", m.mapping_triples_per_class},
        {"mapping_mode", m.mapping_mode}}},
  };
  Json doc = {{"kind", "generation-manifest"},
              {"threshold", nullptr},
              {"rows", Json::array({row})},
              {"meta", {{"tool_version", kToolVersion}}}};
  return doc.dump(2) + "\n";
}

std::vector<GenerationSpec> ParseSpecs(std::string_view json_text) {
  Json root;
  try {
    root = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    Invalid(std::string("spec is not valid JSON: ") + e.what());
  }
  std::vector<GenerationSpec> specs;
  if (root.is_object() && root.contains("corpora")) {
    if (!root["corpora"].is_array()) Invalid("corpora: expected an array");
    for (std::size_t i = 0; i < root["corpora"].size(); ++i) {
      specs.push_back(ParseOne(root["corpora"][i], i));
    }
  } else {
    specs.push_back(ParseOne(root, 0));
  }
  return specs;
}

std::vector<GenerationSpec> LoadSpecs(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot read '" + path.string() + "'");
  }
  std::ostringstream text;
  text << in.rdbuf();
  return ParseSpecs(text.str());
}

std::optional<ManifestInfo> ReadManifest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  const Json root = Json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (root.is_discarded() || !root.contains("rows") ||
      !root["rows"].is_array() || root["rows"].empty()) {
    return std::nullopt;
  }
  const Json& row = root["rows"][0];
  try {
    ManifestInfo info;
    info.name = row.at("ontology_id").get<std::string>();
    info.variant = row.at("approach").at("variant").get<std::string>();
    info.cov = row.at("profile").at("cov").get<std::size_t>();
    for (const auto& [language, count] :
         row.at("profile").at("labeled_entities").items()) {
      info.labeled.emplace_back(language, count.get<std::size_t>());
    }
    return info;
  } catch (const Json::exception&) {
    return std::nullopt;
  }
}

}  // namespace ontoaudit::gen
