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

#include "ontoaudit/metrics/metrics.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "ontoaudit/common/error.h"

namespace ontoaudit::metrics {
namespace {

double Percentage(std::size_t count, std::size_t cov) {
  return cov == 0 ? 0.0 : 100.0 * static_cast<double>(count) /
                              static_cast<double>(cov);
}

void SortLanguages(std::vector<LanguageStat>& languages) {
  std::sort(languages.begin(), languages.end(),
            [](const LanguageStat& a, const LanguageStat& b) {
              return a.tag.Display() < b.tag.Display() ||
                     (a.tag.Display() == b.tag.Display() &&
                      a.tag.Key() < b.tag.Key());
            });
}

}  // namespace

const LanguageStat* CompletenessProfile::Find(
    const lang::LanguageTag& tag) const {
  for (const LanguageStat& stat : languages) {
    if (lang::SameLanguage(stat.tag, tag)) return &stat;
  }
  return nullptr;
}

std::size_t Coverage(const owl::Signature& signature) {
  return signature.Coverage();
}

CompletenessProfile ComputeProfile(const owl::Signature& signature,
                                   const owl::AnnotationInventory& inventory) {
  CompletenessProfile profile;
  profile.cov = signature.Coverage();
  profile.degenerate = profile.cov == 0;
  if (profile.degenerate) return profile;

  std::unordered_map<std::string, lang::LanguageTag> tags;
  std::unordered_map<std::string, std::unordered_set<std::string>> entities;
  std::unordered_set<std::string> untagged;
  for (const owl::AnnotationRow& row : inventory.rows) {
    if (!row.language) continue;
    if (row.language->untagged) {
      untagged.insert(row.entity);
      continue;
    }
    const std::string key = row.language->Key();
    tags.emplace(key, *row.language);
    entities[key].insert(row.entity);
  }
  auto weight = [&signature](const std::unordered_set<std::string>& set) {
    std::size_t total = 0;
    for (const std::string& iri : set) {
      total += static_cast<std::size_t>(signature.Multiplicity(iri));
    }
    return total;
  };
  for (const auto& [key, set] : entities) {
    const std::size_t labeled = weight(set);
    if (labeled == 0) continue;
    profile.languages.push_back(
        LanguageStat{tags.at(key), labeled, Percentage(labeled, profile.cov)});
  }
  SortLanguages(profile.languages);
  profile.untagged_entities = weight(untagged);
  profile.untagged_percentage =
      Percentage(profile.untagged_entities, profile.cov);
  return profile;
}

CompletenessProfile ProfileFromCounts(
    std::size_t cov,
    const std::vector<std::pair<std::string, std::size_t>>& labeled,
    std::size_t untagged_entities) {
  CompletenessProfile profile;
  profile.cov = cov;
  profile.degenerate = cov == 0;
  if (profile.degenerate) return profile;
  for (const auto& [raw, count] : labeled) {
    if (count == 0) continue;
    if (count > cov) {
      throw Error(ErrorCode::kInvalidArgument,
                  "labeled count for '" + raw + "' exceeds Cov");
    }
    profile.languages.push_back(
        LanguageStat{lang::ParseTag(raw), count, Percentage(count, cov)});
  }
  SortLanguages(profile.languages);
  profile.untagged_entities = untagged_entities;
  profile.untagged_percentage = Percentage(untagged_entities, cov);
  return profile;
}

double LanguageCompleteness(const owl::AnnotationInventory& inventory,
                            const owl::Signature& signature,
                            const lang::LanguageTag& tag) {
  if (signature.Coverage() == 0) {
    throw Error(ErrorCode::kDegenerateCoverage,
                "Cov is 0; language completeness is undefined");
  }
  std::set<std::string> labeled;
  for (const owl::AnnotationRow& row : inventory.rows) {
    if (row.language && lang::SameLanguage(*row.language, tag)) {
      labeled.insert(row.entity);
    }
  }
  std::size_t count = 0;
  for (const std::string& iri : labeled) {
    count += static_cast<std::size_t>(signature.Multiplicity(iri));
  }
  return Percentage(count, signature.Coverage());
}

std::vector<lang::LanguageTag> PrimaryLanguages(
    const CompletenessProfile& profile, double tie_epsilon) {
  if (profile.degenerate) {
    throw Error(ErrorCode::kDegenerateProfile,
                "no primary language for a profile with Cov 0");
  }
  double best = 0;
  for (const LanguageStat& stat : profile.languages) {
    best = std::max(best, stat.lcom);
  }
  std::vector<lang::LanguageTag> out;
  for (const LanguageStat& stat : profile.languages) {
    if (stat.labeled > 0 && best - stat.lcom <= tie_epsilon + 1e-9) {
      out.push_back(stat.tag);
    }
  }
  return out;
}

std::vector<lang::LanguageTag> LanguagesAbove(const CompletenessProfile& profile,
                                              double threshold) {
  std::vector<lang::LanguageTag> out;
  for (const LanguageStat& stat : profile.languages) {
    if (stat.lcom > threshold) out.push_back(stat.tag);
  }
  return out;
}

bool ClassifyMultilingual(const CompletenessProfile& profile,
                          double threshold) {
  return LanguagesAbove(profile, threshold).size() >= 2;
}

std::uint64_t RequiredMappingCount(std::uint64_t n) {
  if (n == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "the number of ontologies must be at least 1");
  }
  return n * (n - 1) / 2;
}

double Median(std::vector<double> values) {
  if (values.empty()) return 0;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return (values[mid - 1] + values[mid]) / 2.0;
}

double RoundHalfUp(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  const double scaled = std::fabs(value) * scale;
  const double rounded = std::floor(scaled + 0.5 + 1e-9) / scale;
  return std::copysign(rounded, value);
}

DatasetSummary Aggregate(const std::vector<CompletenessProfile>& profiles,
                         double threshold) {
  if (profiles.empty()) {
    throw Error(ErrorCode::kEmptyInput, "cannot aggregate zero results");
  }
  DatasetSummary summary;
  summary.total = profiles.size();
  std::vector<double> covs;
  for (const CompletenessProfile& profile : profiles) {
    const std::vector<lang::LanguageTag> above =
        LanguagesAbove(profile, threshold);
    if (above.size() < 2) continue;
    ++summary.multilingual;
    summary.total_cov += profile.cov;
    covs.push_back(static_cast<double>(profile.cov));
    summary.multilingual_covs.push_back(profile.cov);
    ++summary.languages_per_ontology[above.size()];
    for (const lang::LanguageTag& tag : above) {
      ++summary.language_histogram[tag.Display()];
    }
  }
  std::sort(summary.multilingual_covs.begin(), summary.multilingual_covs.end());
  summary.percent_multilingual =
      100.0 * static_cast<double>(summary.multilingual) /
      static_cast<double>(summary.total);
  if (summary.multilingual > 0) {
    summary.mean_cov = static_cast<double>(summary.total_cov) /
                       static_cast<double>(summary.multilingual);
    summary.median_cov = Median(covs);
  }
  return summary;
}

}  // namespace ontoaudit::metrics
