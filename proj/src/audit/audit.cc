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


#include "ontoaudit/audit/audit.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "ontoaudit/common/error.h"
#include "ontoaudit/lang/language_tag.h"

namespace ontoaudit::audit {
namespace {

using Json = nlohmann::ordered_json;

bool IsRdfFile(const std::filesystem::path& path) {
  static const std::set<std::string> kExtensions = {
      ".nt", ".ttl", ".rdf", ".owl", ".xml", ".n3", ".turtle", ".ntriples"};
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return kExtensions.contains(ext);
}

std::vector<std::filesystem::path> RdfFilesIn(
    const std::filesystem::path& directory) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(directory)) {
    if (entry.is_regular_file() && IsRdfFile(entry.path())) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

// Blank node labels are document-scoped, so every document after the first
// gets its own label prefix.
rdf::Graph Merge(std::vector<rdf::Graph>& graphs) {
  if (graphs.size() == 1) return std::move(graphs.front());
  rdf::GraphBuilder builder;
  for (std::size_t k = 0; k < graphs.size(); ++k) {
    const rdf::Graph& g = graphs[k];
    const std::string prefix = "d" + std::to_string(k) + "_";
    auto scoped = [&](const rdf::Term& term) {
      if (!term.is_blank() || k == 0) return term;
      return rdf::Term::Blank(prefix + term.value);
    };
    g.ForEach([&](const rdf::Term& s, const rdf::Term& p, const rdf::Term& o) {
      builder.Add(scoped(s), p, scoped(o));
    });
    for (const auto& [name, ns] : g.prefixes()) builder.AddPrefix(name, ns);
    if (k == 0 && g.base_iri()) builder.SetBase(*g.base_iri());
    builder.diagnostics().xml_lang_literals += g.diagnostics().xml_lang_literals;
    builder.diagnostics().tagged_literals += g.diagnostics().tagged_literals;
  }
  return std::move(builder).Build();
}

AuditResult Failure(std::string id, std::string source, const Error& e) {
  AuditResult result;
  result.ontology_id = std::move(id);
  result.source = std::move(source);
  result.error = e.what();
  result.error_code = std::string(ErrorCodeName(e.code()));
  return result;
}

Json Strings(const auto& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v);
  return out;
}

[[noreturn]] void Malformed(const std::string& message) {
  throw Error(ErrorCode::kMalformedPayload, message);
}

std::vector<std::string> StringList(const Json& value, const char* field) {
  std::vector<std::string> out;
  if (value.is_null()) return out;
  if (!value.is_array()) Malformed(std::string(field) + ": expected an array");
  for (const Json& v : value) {
    if (!v.is_string()) Malformed(std::string(field) + ": expected strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

}  // namespace

std::string ThresholdKey(double threshold) {
  std::ostringstream out;
  out.precision(15);
  out << threshold;
  return out.str();
}

AuditResult AuditGraph(const rdf::Graph& graph, std::string ontology_id,
                       const AuditOptions& options) {
  AuditResult result;
  result.ontology_id = std::move(ontology_id);
  const owl::Signature signature = owl::ExtractSignature(graph);
  const owl::AnnotationInventory inventory =
      owl::CollectAnnotations(graph, signature, options.label_properties);
  result.profile = metrics::ComputeProfile(signature, inventory);
  result.approach =
      detect::Detect(graph, signature, inventory, options.detect);

  if (!result.profile.degenerate && !result.profile.languages.empty()) {
    std::set<std::string> primary;
    for (const lang::LanguageTag& tag : metrics::PrimaryLanguages(
             result.profile, options.detect.tie_epsilon)) {
      primary.insert(tag.Display());
    }
    for (const metrics::LanguageStat& stat : result.profile.languages) {
      const std::string display = stat.tag.Display();
      if (primary.contains(display)) {
        result.primary_languages.push_back(display);
      } else {
        result.other_languages.push_back(display);
      }
    }
  }
  for (const double threshold : options.thresholds) {
    result.multilingual_at[ThresholdKey(threshold)] =
        metrics::ClassifyMultilingual(result.profile, threshold);
  }
  result.signature.classes = signature.classes.size();
  result.signature.object_properties = signature.object_properties.size();
  result.signature.data_properties = signature.data_properties.size();
  result.signature.punned = signature.Punned().size();
  result.signature.anonymous_expressions = signature.anonymous_expressions;
  result.signature.imports = signature.imports.size();
  for (const owl::AnnotationRow& row : inventory.rows) {
    if (row.language && !row.language->untagged && !row.language->well_formed) {
      ++result.ill_formed_tags;
    }
  }
  result.xml_lang_literals = graph.diagnostics().xml_lang_literals;
  return result;
}

AuditResult AuditFiles(const std::vector<std::filesystem::path>& files,
                       std::string ontology_id, const AuditOptions& options,
                       std::optional<std::string> media_type) {
  std::string source;
  for (const auto& f : files) {
    if (!source.empty()) source += ";";
    source += f.string();
  }
  if (files.empty()) {
    return Failure(std::move(ontology_id), source,
                   Error(ErrorCode::kEmptyInput, "no RDF files to audit"));
  }
  try {
    std::vector<rdf::Graph> graphs;
    for (const auto& file : files) {
      std::optional<rdf::Format> format;
      if (media_type) format = rdf::FormatFromMediaType(*media_type);
      graphs.push_back(rdf::ParseFile(file, format, options.parse));
    }
    const rdf::Graph merged = Merge(graphs);
    AuditResult result = AuditGraph(merged, std::move(ontology_id), options);
    result.source = std::move(source);
    return result;
  } catch (const ParseError& e) {
    return Failure(std::move(ontology_id), source, e);
  } catch (const Error& e) {
    return Failure(std::move(ontology_id), source, e);
  } catch (const std::exception& e) {
    return Failure(std::move(ontology_id), source,
                   Error(ErrorCode::kIoError, e.what()));
  }
}

std::vector<AuditInput> ResolveInputs(
    const std::vector<std::filesystem::path>& paths) {
  std::vector<AuditInput> inputs;
  for (const auto& path : paths) {
    std::error_code ec;
    if (std::filesystem::is_directory(path, ec)) {
      if (std::filesystem::exists(path / "manifest.json")) {
        AuditInput input;
        input.ontology_id = path.filename().string();
        if (input.ontology_id.empty()) {
          input.ontology_id = path.parent_path().filename().string();
        }
        input.files = RdfFilesIn(path);
        inputs.push_back(std::move(input));
        continue;
      }
      for (const auto& file : RdfFilesIn(path)) {
        inputs.push_back({file.stem().string(), {}, {file}, std::nullopt});
      }
    } else {
      inputs.push_back({path.stem().string(), {}, {path}, std::nullopt});
    }
  }
  return inputs;
}

std::vector<AuditResult> AuditAll(const std::vector<AuditInput>& inputs,
                                  const AuditOptions& options,
                                  unsigned concurrency) {
  std::vector<AuditResult> results(inputs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < inputs.size(); i = next++) {
      const AuditInput& input = inputs[i];
      results[i] = AuditFiles(input.files, input.ontology_id, options,
                              input.media_type);
      results[i].dataset = input.dataset;
    }
  };
  const unsigned threads = std::max(
      1u, std::min<unsigned>(concurrency, static_cast<unsigned>(inputs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  std::stable_sort(results.begin(), results.end(),
                   [](const AuditResult& a, const AuditResult& b) {
                     return std::tie(a.ontology_id, a.dataset, a.source) <
                            std::tie(b.ontology_id, b.dataset, b.source);
                   });
  return results;
}

std::string ToJsonLine(const AuditResult& r) {
  Json out = {{"ontology_id", r.ontology_id},
              {"dataset", r.dataset},
              {"source", r.source}};
  if (r.error) {
    out["error"] = *r.error;
    out["error_code"] = r.error_code.value_or("");
    return out.dump();
  }
  Json per_language = Json::object();
  Json labeled = Json::object();
  for (const metrics::LanguageStat& stat : r.profile.languages) {
    per_language[stat.tag.Display()] = stat.lcom;
    labeled[stat.tag.Display()] = stat.labeled;
  }
  out["profile"] = {{"cov", r.profile.cov},
                    {"degenerate", r.profile.degenerate},
                    {"per_language", per_language},
                    {"labeled_entities", labeled},
                    {"untagged_percentage", r.profile.untagged_percentage},
                    {"untagged_entities", r.profile.untagged_entities}};
  out["primary_languages"] = r.primary_languages;
  out["other_languages"] = r.other_languages;
  Json families = Json::array();
  for (const detect::Family f : r.approach.families_matched) {
    families.push_back(detect::FamilyName(f));
  }
  out["approach"] = {
      {"family", detect::FamilyName(r.approach.family)},
      {"variant", detect::VariantName(r.approach.variant)},
      {"families_matched", families},
      {"matched_namespaces", Strings(r.approach.matched_namespaces)},
      {"matched_predicates", Strings(r.approach.matched_predicates)},
      {"needs_human_review", r.approach.needs_human_review},
      {"notes", r.approach.notes}};
  Json multilingual = Json::object();
  for (const auto& [key, value] : r.multilingual_at) multilingual[key] = value;
  out["multilingual_at"] = multilingual;
  out["signature"] = {
      {"classes", r.signature.classes},
      {"object_properties", r.signature.object_properties},
      {"data_properties", r.signature.data_properties},
      {"punned", r.signature.punned},
      {"anonymous_expressions", r.signature.anonymous_expressions},
      {"imports", r.signature.imports}};
  out["diagnostics"] = {{"ill_formed_tags", r.ill_formed_tags},
                        {"xml_lang_literals", r.xml_lang_literals}};
  return out.dump();
}

AuditResult FromJsonLine(std::string_view line) {
  const Json in = Json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (in.is_discarded() || !in.is_object()) Malformed("not a JSON object");
  AuditResult r;
  try {
    if (!in.contains("ontology_id") || !in["ontology_id"].is_string()) {
      Malformed("ontology_id: required string");
    }
    r.ontology_id = in["ontology_id"].get<std::string>();
    r.dataset = in.value("dataset", std::string());
    r.source = in.value("source", std::string());
    if (in.contains("error")) {
      r.error = in["error"].get<std::string>();
      r.error_code = in.value("error_code", std::string());
      return r;
    }
    if (!in.contains("profile") || !in["profile"].is_object()) {
      Malformed("profile: required object");
    }
    const Json& p = in["profile"];
    if (!p.contains("cov") || !p["cov"].is_number_unsigned()) {
      Malformed("profile.cov: required non-negative integer");
    }
    r.profile.cov = p["cov"].get<std::size_t>();
    r.profile.degenerate = r.profile.cov == 0;
    r.profile.untagged_percentage = p.value("untagged_percentage", 0.0);
    r.profile.untagged_entities = p.value("untagged_entities", std::size_t{0});
    const Json labeled = p.value("labeled_entities", Json::object());
    if (p.contains("per_language")) {
      if (!p["per_language"].is_object()) {
        Malformed("profile.per_language: expected an object");
      }
      for (const auto& [tag, value] : p["per_language"].items()) {
        if (!value.is_number()) {
          Malformed("profile.per_language." + tag + ": expected a number");
        }
        metrics::LanguageStat stat;
        stat.tag = lang::ParseTag(tag);
        stat.lcom = value.get<double>();
        if (stat.lcom < 0 || stat.lcom > 100) {
          Malformed("profile.per_language." + tag + ": outside [0, 100]");
        }
        if (labeled.contains(tag)) {
          stat.labeled = labeled[tag].get<std::size_t>();
        } else {
          stat.labeled = static_cast<std::size_t>(std::llround(
              stat.lcom * static_cast<double>(r.profile.cov) / 100.0));
        }
        r.profile.languages.push_back(std::move(stat));
      }
      std::sort(r.profile.languages.begin(), r.profile.languages.end(),
                [](const metrics::LanguageStat& a,
                   const metrics::LanguageStat& b) {
                  return a.tag.Display() < b.tag.Display();
                });
    }
    r.primary_languages =
        StringList(in.value("primary_languages", Json()), "primary_languages");
    r.other_languages =
        StringList(in.value("other_languages", Json()), "other_languages");
    if (in.contains("approach")) {
      const Json& a = in["approach"];
      r.approach.family = detect::FamilyFromName(a.value("family", "none"))
                              .value_or(detect::Family::kNone);
      r.approach.variant =
          detect::VariantFromName(a.value("variant", "undetermined"))
              .value_or(detect::Variant::kUndetermined);
      for (const std::string& f :
           StringList(a.value("families_matched", Json()), "families_matched")) {
        if (auto family = detect::FamilyFromName(f)) {
          r.approach.families_matched.insert(*family);
        }
      }
      for (const std::string& s : StringList(
               a.value("matched_namespaces", Json()), "matched_namespaces")) {
        r.approach.matched_namespaces.insert(s);
      }
      for (const std::string& s : StringList(
               a.value("matched_predicates", Json()), "matched_predicates")) {
        r.approach.matched_predicates.insert(s);
      }
      r.approach.needs_human_review = a.value("needs_human_review", true);
      r.approach.notes = StringList(a.value("notes", Json()), "notes");
    }
    if (in.contains("multilingual_at")) {
      for (const auto& [key, value] : in["multilingual_at"].items()) {
        r.multilingual_at[key] = value.get<bool>();
      }
    }
    if (in.contains("signature")) {
      const Json& s = in["signature"];
      r.signature.classes = s.value("classes", std::size_t{0});
      r.signature.object_properties =
          s.value("object_properties", std::size_t{0});
      r.signature.data_properties = s.value("data_properties", std::size_t{0});
      r.signature.punned = s.value("punned", std::size_t{0});
      r.signature.anonymous_expressions =
          s.value("anonymous_expressions", std::uint64_t{0});
      r.signature.imports = s.value("imports", std::size_t{0});
    }
    if (in.contains("diagnostics")) {
      const Json& d = in["diagnostics"];
      r.ill_formed_tags = d.value("ill_formed_tags", std::uint64_t{0});
      r.xml_lang_literals = d.value("xml_lang_literals", std::uint64_t{0});
    }
  } catch (const Json::exception& e) {
    Malformed(e.what());
  }
  return r;
}

std::vector<AuditResult> ReadResults(std::istream& input) {
  std::vector<AuditResult> results;
  std::string line;
  std::size_t number = 0;
  while (std::getline(input, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      results.push_back(FromJsonLine(line));
    } catch (const Error& e) {
      Malformed("line " + std::to_string(number) + ": " + e.what());
    }
  }
  return results;
}

std::vector<AuditResult> ReadResultsFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot read '" + path.string() + "'");
  }
  return ReadResults(in);
}

}  // namespace ontoaudit::audit
