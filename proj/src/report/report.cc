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


#include "ontoaudit/report/report.h"

#include <algorithm>
#include <cmath>
#include <ctime>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "ontoaudit/common/error.h"
#include "ontoaudit/common/version.h"
#include "ontoaudit/metrics/metrics.h"

namespace ontoaudit::report {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::pair<Kind, std::string_view> kKinds[] = {
    {Kind::kPerOntologyClassification, "per-ontology-classification"},
    {Kind::kCompletenessMatrix, "completeness-matrix"},
    {Kind::kDatasetComparison, "dataset-comparison"},
    {Kind::kLanguageDistribution, "language-distribution"},
    {Kind::kBoxplotSummary, "boxplot-summary"},
};

Cell Null() { return Cell{}; }

Cell Str(std::string text) {
  return Cell{Cell::Type::kString, std::move(text), false};
}

Cell Int(std::uint64_t value) {
  return Cell{Cell::Type::kInteger, std::to_string(value), false};
}

Cell Num(std::string text, bool percent = false) {
  return Cell{Cell::Type::kNumber, std::move(text), percent};
}

Cell Bool(bool value) {
  return Cell{Cell::Type::kBool, value ? "true" : "false", false};
}

std::string Join(const std::vector<std::string>& items) {
  std::string out;
  for (const std::string& item : items) {
    if (!out.empty()) out += " ";
    out += item;
  }
  return out;
}

std::string DatasetOf(const audit::AuditResult& r) {
  return r.dataset.empty() ? "unspecified" : r.dataset;
}

std::vector<const audit::AuditResult*> Sorted(
    const std::vector<audit::AuditResult>& results) {
  std::vector<const audit::AuditResult*> out;
  for (const audit::AuditResult& r : results) out.push_back(&r);
  std::stable_sort(out.begin(), out.end(), [](const auto* a, const auto* b) {
    return std::tie(a->ontology_id, a->dataset, a->source) <
           std::tie(b->ontology_id, b->dataset, b->source);
  });
  return out;
}

std::map<std::string, std::vector<metrics::CompletenessProfile>> ByDataset(
    const std::vector<audit::AuditResult>& results) {
  std::map<std::string, std::vector<metrics::CompletenessProfile>> out;
  for (const audit::AuditResult& r : results) {
    if (r.ok()) out[DatasetOf(r)].push_back(r.profile);
  }
  if (out.empty()) {
    throw Error(ErrorCode::kEmptyInput,
                "no audited ontologies to aggregate");
  }
  return out;
}

Table Classification(const std::vector<audit::AuditResult>& results,
                     const EmitOptions& options) {
  Table t;
  t.columns = {"ontology_id", "dataset",          "cov",
               "family",      "variant",          "primary_languages",
               "other_languages", "languages_above_threshold",
               "multilingual", "needs_human_review", "notes", "error"};
  for (const audit::AuditResult* r : Sorted(results)) {
    if (!r->ok()) {
      if (options.multilingual_only) continue;
      t.rows.push_back({Str(r->ontology_id), Str(DatasetOf(*r)), Null(),
                        Null(), Null(), Null(), Null(), Null(), Null(), Null(),
                        Null(),
                        Str(r->error_code.value_or("") + ": " + *r->error)});
      continue;
    }
    const auto above = metrics::LanguagesAbove(r->profile, options.threshold);
    const bool multilingual = above.size() >= 2;
    if (options.multilingual_only && !multilingual) continue;
    std::vector<std::string> notes = r->approach.notes;
    if (r->ill_formed_tags > 0) {
      notes.push_back(std::to_string(r->ill_formed_tags) +
                      " label(s) with ill-formed language tags; needs human "
                      "inspection");
    }
    std::string note_text;
    for (const std::string& n : notes) {
      if (!note_text.empty()) note_text += "; ";
      note_text += n;
    }
    t.rows.push_back(
        {Str(r->ontology_id), Str(DatasetOf(*r)), Int(r->profile.cov),
         Str(std::string(detect::FamilyName(r->approach.family))),
         Str(std::string(detect::VariantName(r->approach.variant))),
         Str(Join(r->primary_languages)), Str(Join(r->other_languages)),
         Int(above.size()), Bool(multilingual),
         Bool(r->approach.needs_human_review),
         note_text.empty() ? Null() : Str(note_text), Null()});
  }
  return t;
}

Table Matrix(const std::vector<audit::AuditResult>& results,
             const EmitOptions& options) {
  std::vector<const audit::AuditResult*> kept;
  std::map<std::string, std::string> tags;  // key -> display
  for (const audit::AuditResult* r : Sorted(results)) {
    if (!r->ok()) continue;
    if (options.multilingual_only &&
        !metrics::ClassifyMultilingual(r->profile, options.threshold)) {
      continue;
    }
    kept.push_back(r);
    for (const metrics::LanguageStat& s : r->profile.languages) {
      tags.emplace(s.tag.Display(), s.tag.Display());
    }
  }
  Table t;
  t.columns = {"ontology_id", "dataset", "cov"};
  for (const auto& [display, unused] : tags) t.columns.push_back(display);
  for (const audit::AuditResult* r : kept) {
    std::vector<Cell> row = {Str(r->ontology_id), Str(DatasetOf(*r)),
                             Int(r->profile.cov)};
    for (const auto& [display, unused] : tags) {
      const metrics::LanguageStat* hit = nullptr;
      for (const metrics::LanguageStat& s : r->profile.languages) {
        if (s.tag.Display() == display) hit = &s;
      }
      row.push_back(hit ? Num(FormatPercent(hit->lcom), true) : Null());
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table Comparison(const std::vector<audit::AuditResult>& results,
                 const EmitOptions& options) {
  Table t;
  t.columns = {"dataset",   "ontologies", "multilingual", "multilingual_pct",
               "total_cov", "mean_cov",   "median_cov"};
  for (const auto& [dataset, profiles] : ByDataset(results)) {
    const metrics::DatasetSummary s =
        metrics::Aggregate(profiles, options.threshold);
    const bool any = s.multilingual > 0;
    t.rows.push_back({Str(dataset), Int(s.total), Int(s.multilingual),
                      Num(FormatFixed(s.percent_multilingual, 2), true),
                      Int(s.total_cov),
                      any ? Num(FormatFixed(s.mean_cov, 2)) : Null(),
                      any ? Num(FormatCompact(s.median_cov)) : Null()});
  }
  return t;
}

Table Distribution(const std::vector<audit::AuditResult>& results,
                   const EmitOptions& options) {
  std::map<std::string, metrics::DatasetSummary> summaries;
  std::set<std::size_t> counts;
  for (const auto& [dataset, profiles] : ByDataset(results)) {
    summaries[dataset] = metrics::Aggregate(profiles, options.threshold);
    for (const auto& [n, unused] : summaries[dataset].languages_per_ontology) {
      counts.insert(n);
    }
  }
  Table t;
  t.columns = {"languages"};
  for (const auto& [dataset, unused] : summaries) t.columns.push_back(dataset);
  for (const std::size_t n : counts) {
    std::vector<Cell> row = {Int(n)};
    for (const auto& [dataset, s] : summaries) {
      const auto it = s.languages_per_ontology.find(n);
      row.push_back(Int(it == s.languages_per_ontology.end() ? 0 : it->second));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table Boxplot(const std::vector<audit::AuditResult>& results,
              const EmitOptions& options) {
  Table t;
  t.columns = {"dataset", "n",  "min",  "q1",
               "median",  "q3", "max",  "mean"};
  for (const auto& [dataset, profiles] : ByDataset(results)) {
    const metrics::DatasetSummary s =
        metrics::Aggregate(profiles, options.threshold);
    std::vector<double> covs(s.multilingual_covs.begin(),
                             s.multilingual_covs.end());
    if (covs.empty()) {
      t.rows.push_back({Str(dataset), Int(0), Null(), Null(), Null(), Null(),
                        Null(), Null()});
      continue;
    }
    t.rows.push_back({Str(dataset), Int(covs.size()),
                      Num(FormatCompact(covs.front())),
                      Num(FormatCompact(Quantile(covs, 0.25))),
                      Num(FormatCompact(Quantile(covs, 0.5))),
                      Num(FormatCompact(Quantile(covs, 0.75))),
                      Num(FormatCompact(covs.back())),
                      Num(FormatFixed(s.mean_cov, 2))});
  }
  return t;
}

std::string Timestamp(const EmitOptions& options) {
  if (!options.generated_at.empty()) return options.generated_at;
  const std::time_t now = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&now, &utc);
  std::ostringstream out;
  out << std::put_time(&utc, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

std::string ThresholdText(double threshold) {
  return audit::ThresholdKey(threshold);
}

std::string RenderJson(const Table& table, const EmitOptions& options) {
  Json rows = Json::array();
  for (const std::vector<Cell>& cells : table.rows) {
    Json row = Json::object();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const Cell& c = cells[i];
      switch (c.type) {
        case Cell::Type::kNull: row[table.columns[i]] = nullptr; break;
        case Cell::Type::kString: row[table.columns[i]] = c.text; break;
        case Cell::Type::kInteger:
          row[table.columns[i]] = std::stoull(c.text);
          break;
        case Cell::Type::kNumber:
          if (c.text.find('.') == std::string::npos) {
            row[table.columns[i]] = std::stoll(c.text);
          } else {
            row[table.columns[i]] = std::stod(c.text);
          }
          break;
        case Cell::Type::kBool: row[table.columns[i]] = c.text == "true"; break;
      }
    }
    rows.push_back(std::move(row));
  }
  Json meta = {
      {"generated_at",
       options.timestamp ? Json(Timestamp(options)) : Json(nullptr)},
      {"tool_version", std::string(kToolVersion)},
      {"columns", table.columns},
  };
  if (table.kind == Kind::kBoxplotSummary) {
    meta["quartile_method"] = std::string(kQuartileMethod);
  }
  Json doc = {{"kind", std::string(KindName(table.kind))},
              {"threshold", table.threshold},
              {"rows", std::move(rows)},
              {"meta", std::move(meta)}};
  return doc.dump(2) + "\n";
}

std::string CsvField(const std::string& text) {
  if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
  std::string out = "\"";
  for (const char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string RenderCsv(const Table& table) {
  std::string out;
  auto line = [&out](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out += ',';
      out += CsvField(fields[i]);
    }
    out += "\r\n";
  };
  line(table.columns);
  for (const std::vector<Cell>& cells : table.rows) {
    std::vector<std::string> fields;
    for (const Cell& c : cells) {
      fields.push_back(c.type == Cell::Type::kNull ? "-" : c.text);
    }
    line(fields);
  }
  return out;
}

std::string MarkdownText(const Cell& c, const EmitOptions& options) {
  switch (c.type) {
    case Cell::Type::kNull: return "-";
    case Cell::Type::kInteger:
    case Cell::Type::kNumber: {
      std::string text = options.group_digits ? GroupDigits(c.text) : c.text;
      return c.percent ? text + "%" : text;
    }
    case Cell::Type::kBool: return c.text == "true" ? "yes" : "no";
    case Cell::Type::kString: break;
  }
  std::string out;
  for (const char ch : c.text) {
    if (ch == '|') out += '\\';
    out += (ch == '\n' || ch == '\r') ? ' ' : ch;
  }
  return out;
}

std::string RenderMarkdown(const Table& table, const EmitOptions& options) {
  std::ostringstream out;
  out << "## " << KindName(table.kind) << "\n\n";
  out << "Threshold: LCom > " << ThresholdText(table.threshold) << "%\n";
  if (table.kind == Kind::kBoxplotSummary) {
    out << "Quartiles: " << kQuartileMethod << "\n";
  }
  if (options.timestamp) out << "Generated: " << Timestamp(options) << "\n";
  out << "\n|";
  for (const std::string& c : table.columns) out << " " << c << " |";
  out << "\n|";
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << " --- |";
  out << "\n";
  for (const std::vector<Cell>& cells : table.rows) {
    out << "|";
    for (const Cell& c : cells) out << " " << MarkdownText(c, options) << " |";
    out << "\n";
  }
  return out.str();
}

}  // namespace

std::string_view KindName(Kind kind) {
  for (const auto& [k, name] : kKinds) {
    if (k == kind) return name;
  }
  return "unknown";
}

Kind ParseKind(std::string_view name) {
  for (const auto& [k, known] : kKinds) {
    if (known == name) return k;
  }
  throw Error(ErrorCode::kUnknownKind,
              "unknown report kind '" + std::string(name) + "'");
}

bool IsAggregate(Kind kind) {
  return kind == Kind::kDatasetComparison ||
         kind == Kind::kLanguageDistribution || kind == Kind::kBoxplotSummary;
}

std::string_view FormatName(Format format) {
  switch (format) {
    case Format::kJson: return "json";
    case Format::kCsv: return "csv";
    case Format::kMarkdown: return "markdown";
  }
  return "json";
}

Format ParseFormat(std::string_view name) {
  if (name == "json") return Format::kJson;
  if (name == "csv") return Format::kCsv;
  if (name == "markdown" || name == "md") return Format::kMarkdown;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown format '" + std::string(name) +
                  "' (expected json, csv or markdown)");
}

Table BuildTable(const std::vector<audit::AuditResult>& results, Kind kind,
                 const EmitOptions& options) {
  if (!(options.threshold >= 0 && options.threshold <= 100)) {
    throw Error(ErrorCode::kInvalidArgument, "threshold must be in [0, 100]");
  }
  Table t;
  switch (kind) {
    case Kind::kPerOntologyClassification:
      t = Classification(results, options);
      break;
    case Kind::kCompletenessMatrix: t = Matrix(results, options); break;
    case Kind::kDatasetComparison: t = Comparison(results, options); break;
    case Kind::kLanguageDistribution: t = Distribution(results, options); break;
    case Kind::kBoxplotSummary: t = Boxplot(results, options); break;
  }
  t.kind = kind;
  t.threshold = options.threshold;
  return t;
}

std::string Render(const Table& table, Format format,
                   const EmitOptions& options) {
  switch (format) {
    case Format::kJson: return RenderJson(table, options);
    case Format::kCsv: return RenderCsv(table);
    case Format::kMarkdown: return RenderMarkdown(table, options);
  }
  return "";
}

std::string Emit(const std::vector<audit::AuditResult>& results, Kind kind,
                 Format format, const EmitOptions& options) {
  return Render(BuildTable(results, kind, options), format, options);
}

std::string FormatFixed(double value, int decimals) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(decimals)
      << metrics::RoundHalfUp(value, decimals);
  std::string text = out.str();
  if (text.starts_with("-") &&
      text.find_first_not_of("-0.") == std::string::npos) {
    text.erase(0, 1);
  }
  return text;
}

std::string FormatPercent(double value) {
  if (value > 0 && metrics::RoundHalfUp(value, 1) == 0.0) {
    return FormatFixed(value, 2);
  }
  return FormatFixed(value, 1);
}

std::string FormatCompact(double value) {
  if (value == std::floor(value) && std::fabs(value) < 1e15) {
    return FormatFixed(value, 0);
  }
  std::string text = FormatFixed(value, 2);
  while (text.back() == '0') text.pop_back();
  if (text.back() == '.') text.pop_back();
  return text;
}

std::string GroupDigits(std::string_view number) {
  std::size_t start = number.starts_with("-") ? 1 : 0;
  const std::size_t end = std::min(number.find('.'), number.size());
  if (end - start <= 3) return std::string(number);
  std::string out(number.substr(0, start));
  for (std::size_t i = start; i < end; ++i) {
    if (i > start && (end - i) % 3 == 0) out += "\u2009";
    out += number[i];
  }
  out += number.substr(end);
  return out;
}

double Quantile(const std::vector<double>& sorted, double p) {
  if (sorted.empty()) {
    throw Error(ErrorCode::kEmptyInput, "quantile of an empty sample");
  }
  const double h = (static_cast<double>(sorted.size()) - 1) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

}  // namespace ontoaudit::report
