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

#ifndef ONTOAUDIT_METRICS_METRICS_H_
#define ONTOAUDIT_METRICS_METRICS_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ontoaudit/lang/language_tag.h"
#include "ontoaudit/owl/signature.h"

namespace ontoaudit::metrics {

inline constexpr double kDefaultTieEpsilon = 1.0;
inline constexpr double kDefaultThreshold = 5.0;

struct LanguageStat {
  lang::LanguageTag tag;
  std::size_t labeled = 0;  // entities with at least one label in `tag`
  double lcom = 0;          // 100 * labeled / cov
};

struct CompletenessProfile {
  std::size_t cov = 0;
  bool degenerate = true;  // cov == 0
  // Sorted by display tag; untagged labels are kept separately.
  std::vector<LanguageStat> languages;
  std::size_t untagged_entities = 0;
  double untagged_percentage = 0;

  const LanguageStat* Find(const lang::LanguageTag& tag) const;
};

// Per-language completeness over every inventory row that carries a literal.
// An entity counts at most once per language (once per signature set it
// belongs to, so a punned IRI contributes as many entities as it adds to
// Cov).
CompletenessProfile ComputeProfile(const owl::Signature& signature,
                                   const owl::AnnotationInventory& inventory);

// Builds a profile from already-known counts.
CompletenessProfile ProfileFromCounts(
    std::size_t cov, const std::vector<std::pair<std::string, std::size_t>>& labeled,
    std::size_t untagged_entities = 0);

std::size_t Coverage(const owl::Signature& signature);

// Throws Error(kDegenerateCoverage) when the signature is empty.
double LanguageCompleteness(const owl::AnnotationInventory& inventory,
                            const owl::Signature& signature,
                            const lang::LanguageTag& tag);

// Languages whose LCom is within `tie_epsilon` points of the maximum.
// Throws Error(kDegenerateProfile) for a degenerate profile.
std::vector<lang::LanguageTag> PrimaryLanguages(
    const CompletenessProfile& profile, double tie_epsilon = kDefaultTieEpsilon);

// Languages with LCom strictly above `threshold`.
std::vector<lang::LanguageTag> LanguagesAbove(const CompletenessProfile& profile,
                                              double threshold);

bool ClassifyMultilingual(const CompletenessProfile& profile, double threshold);

// n(n-1)/2 pairwise correspondences between n monolingual ontologies.
std::uint64_t RequiredMappingCount(std::uint64_t n);

struct DatasetSummary {
  std::size_t total = 0;
  std::size_t multilingual = 0;
  double percent_multilingual = 0;
  std::uint64_t total_cov = 0;
  double mean_cov = 0;
  double median_cov = 0;
  // Multilingual ontologies per language with LCom above the threshold.
  std::map<std::string, std::size_t> language_histogram;
  // Number of multilingual ontologies keyed by their language count.
  std::map<std::size_t, std::size_t> languages_per_ontology;
  // Cov of each multilingual ontology, ascending.
  std::vector<std::size_t> multilingual_covs;
};

// Throws Error(kEmptyInput) for an empty list.
DatasetSummary Aggregate(const std::vector<CompletenessProfile>& profiles,
                         double threshold);

double Median(std::vector<double> values);

// Round half away from zero with a small tolerance for binary noise.
double RoundHalfUp(double value, int decimals);

}  // namespace ontoaudit::metrics

#endif  // ONTOAUDIT_METRICS_METRICS_H_
