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


#ifndef ONTOAUDIT_REPORT_REPORT_H_
#define ONTOAUDIT_REPORT_REPORT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ontoaudit/audit/audit.h"

namespace ontoaudit::report {

enum class Kind {
  kPerOntologyClassification,
  kCompletenessMatrix,
  kDatasetComparison,
  kLanguageDistribution,
  kBoxplotSummary,
};

std::string_view KindName(Kind kind);
// Throws Error(kUnknownKind).
Kind ParseKind(std::string_view name);
bool IsAggregate(Kind kind);

enum class Format { kJson, kCsv, kMarkdown };
std::string_view FormatName(Format format);
// Throws Error(kInvalidArgument).
Format ParseFormat(std::string_view name);

inline constexpr std::string_view kQuartileMethod =
    "linear interpolation between closest ranks";

struct EmitOptions {
  double threshold = 5.0;
  // Per-ontology kinds list only ontologies multilingual at the threshold.
  bool multilingual_only = false;
  // Empty means "now"; ignored when timestamp is false.
  std::string generated_at;
  bool timestamp = true;
  // Thin-space thousands grouping in Markdown.
  bool group_digits = true;
};

// One cell of a rendered table. Numbers keep the text they are shown with so
// that every format carries the same value.
struct Cell {
  enum class Type { kNull, kString, kInteger, kNumber, kBool };
  Type type = Type::kNull;
  std::string text;
  bool percent = false;
};

struct Table {
  Kind kind = Kind::kPerOntologyClassification;
  double threshold = 0;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

// Throws Error(kEmptyInput) for aggregate kinds without any usable result.
Table BuildTable(const std::vector<audit::AuditResult>& results, Kind kind,
                 const EmitOptions& options);

std::string Render(const Table& table, Format format,
                   const EmitOptions& options);

std::string Emit(const std::vector<audit::AuditResult>& results, Kind kind,
                 Format format, const EmitOptions& options);

// Percentages: one decimal, or two when one decimal would hide a non-zero
// value (0.02 rather than 0.0).
std::string FormatPercent(double value);
// Fixed decimals, half away from zero.
std::string FormatFixed(double value, int decimals);
// Integral values without decimals, otherwise at most two.
std::string FormatCompact(double value);
// "95762" -> "95 762" with U+2009 between groups.
std::string GroupDigits(std::string_view number);

// Type-7 quantile of ascending data.
double Quantile(const std::vector<double>& sorted, double p);

}  // namespace ontoaudit::report

#endif  // ONTOAUDIT_REPORT_REPORT_H_
