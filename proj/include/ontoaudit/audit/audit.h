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


#ifndef ONTOAUDIT_AUDIT_AUDIT_H_
#define ONTOAUDIT_AUDIT_AUDIT_H_

#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ontoaudit/detect/approach.h"
#include "ontoaudit/metrics/metrics.h"
#include "ontoaudit/owl/signature.h"
#include "ontoaudit/rdf/graph.h"
#include "ontoaudit/rdf/parser.h"

namespace ontoaudit::audit {

struct AuditOptions {
  std::vector<std::string> label_properties = owl::DefaultLabelProperties();
  detect::DetectOptions detect;
  // multilingual_at is reported for each of these thresholds.
  std::vector<double> thresholds = {0, metrics::kDefaultThreshold};
  rdf::ParseOptions parse;
};

struct SignatureCounts {
  std::size_t classes = 0;
  std::size_t object_properties = 0;
  std::size_t data_properties = 0;
  std::size_t punned = 0;
  std::uint64_t anonymous_expressions = 0;
  std::size_t imports = 0;
};

struct AuditResult {
  std::string ontology_id;
  std::string dataset;
  std::string source;
  metrics::CompletenessProfile profile;
  std::vector<std::string> primary_languages;
  std::vector<std::string> other_languages;
  detect::Evidence approach;
  // Keyed by ThresholdKey(threshold).
  std::map<std::string, bool> multilingual_at;
  SignatureCounts signature;
  std::uint64_t ill_formed_tags = 0;
  std::uint64_t xml_lang_literals = 0;
  // Set when the input could not be audited; other fields are then empty.
  std::optional<std::string> error;
  std::optional<std::string> error_code;

  bool ok() const { return !error.has_value(); }
};

// "0", "5", "2.5": shortest decimal form.
std::string ThresholdKey(double threshold);

AuditResult AuditGraph(const rdf::Graph& graph, std::string ontology_id,
                       const AuditOptions& options = {});

// Parses every file and audits their union as one ontology. Failures are
// reported in the result, never thrown.
AuditResult AuditFiles(const std::vector<std::filesystem::path>& files,
                       std::string ontology_id,
                       const AuditOptions& options = {},
                       std::optional<std::string> media_type = std::nullopt);

// One unit of audit work: an id and the files forming the ontology.
struct AuditInput {
  std::string ontology_id;
  std::string dataset;
  std::vector<std::filesystem::path> files;
  std::optional<std::string> media_type;
};

// Expands command-line paths: a file is one input; a directory holding
// manifest.json is one merged input; any other directory contributes one
// input per RDF file (sorted). Ids are file stems or directory names.
std::vector<AuditInput> ResolveInputs(
    const std::vector<std::filesystem::path>& paths);

// Audits inputs on up to `concurrency` threads; results are sorted by id.
std::vector<AuditResult> AuditAll(const std::vector<AuditInput>& inputs,
                                  const AuditOptions& options,
                                  unsigned concurrency = 1);

std::string ToJsonLine(const AuditResult& result);
// Throws Error(kMalformedPayload).
AuditResult FromJsonLine(std::string_view line);
// Reads JSON lines, skipping blank ones. Throws Error(kMalformedPayload)
// naming the line number.
std::vector<AuditResult> ReadResults(std::istream& input);
std::vector<AuditResult> ReadResultsFile(const std::filesystem::path& path);

}  // namespace ontoaudit::audit

#endif  // ONTOAUDIT_AUDIT_AUDIT_H_
