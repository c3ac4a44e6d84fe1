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


#ifndef ONTOAUDIT_HARVEST_HARVEST_H_
#define ONTOAUDIT_HARVEST_HARVEST_H_

#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <istream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ontoaudit/harvest/transport.h"

namespace ontoaudit::harvest {

enum class Repository { kBioPortal, kLov };
std::string_view RepositoryName(Repository repository);
std::optional<Repository> RepositoryFromName(std::string_view name);

enum class StatusBucket { kCode0, k2xx, k3xx, k4xx, k5xx };
std::string_view BucketName(StatusBucket bucket);
std::optional<StatusBucket> BucketFromName(std::string_view name);
// 0 (and anything outside 200..599) maps to kCode0.
StatusBucket BucketFor(long http_code);

struct HarvestRecord {
  Repository repository = Repository::kBioPortal;
  std::string id;
  // Raw JSON text of everything the repository said about this entry.
  std::string metadata = "{}";
  std::string uri;
  // BioPortal hasOntologyLanguage (e.g. "OWL"); empty for LOV.
  std::string declared_format;
  // BioPortal submission status (e.g. "production").
  std::string status;
  // Unset until the document has been requested.
  std::optional<StatusBucket> bucket;
  long http_code = 0;        // first response
  long final_http_code = 0;  // after redirects
  std::string transport_error;
  std::string media_type;
  std::optional<std::string> cached_path;
  std::string fetched_at;
  std::optional<std::string> excluded_reason;
  int retries = 0;
  std::optional<std::uint64_t> triples;
  // Set when the body came from the repository's own copy.
  std::string fallback_url;
};

struct FilterStep {
  std::string name;
  std::string description;
  std::size_t in_count = 0;
  std::size_t out_count = 0;
};

struct Predicate {
  std::string name;
  std::string description;
  std::function<bool(const HarvestRecord&)> keep;
};

// format-is-owl, status-is-production, body-nonempty, bucket-is-2xx,
// body-is-rdf.
std::optional<Predicate> BuiltinPredicate(std::string_view name);

struct FilterResult {
  std::vector<HarvestRecord> surviving;
  std::vector<FilterStep> steps;
};
FilterResult FilterPipeline(std::vector<HarvestRecord> records,
                            const std::vector<Predicate>& steps);

// "981 -> 730 -> 268 -> 266".
std::string FormatCounts(const std::vector<FilterStep>& steps);

struct HarvestOptions {
  std::string api_key;
  // BioPortal accepts the key as a query parameter or an Authorization
  // header.
  bool api_key_in_header = false;
  std::string bioportal_base = "https://data.bioontology.org";
  std::string lov_base = "https://lov.linkeddata.es/dataset/lov";
  // Cache root; documents go to {cache_dir}/{repository}/{id}/.
  std::filesystem::path cache_dir;
  std::string accept = "application/rdf+xml";
  std::size_t per_host_limit = 4;
  std::chrono::milliseconds request_delay{100};
  int max_retries = 5;
  std::chrono::milliseconds backoff_base{500};
  std::chrono::milliseconds timeout{30000};
  int max_redirects = 5;
  std::size_t batch_size = 30;
  unsigned concurrency = 4;
  // Parse fetched bodies and record their triple count.
  bool verify_rdf = false;
  // Overrides fetched_at on every record; "" drops timestamps.
  std::optional<std::string> fixed_timestamp;
  std::function<void(const std::string&)> warn;
};

struct PipelineReport {
  Repository repository = Repository::kBioPortal;
  std::size_t listed = 0;
  std::vector<HarvestRecord> records;  // every listed record, final state
  std::vector<FilterStep> steps;
  std::vector<HarvestRecord> surviving;
  std::map<std::string, std::size_t> buckets;  // over fetched records
};

class Harvester {
 public:
  Harvester(Transport& transport, HarvestOptions options);

  // Listing plus per-ontology submission and category metadata, fetched in
  // batches. Throws Error(kAuthError), Error(kRateLimited),
  // Error(kTransportError) or Error(kMalformedPayload).
  std::vector<HarvestRecord> BioportalList();
  std::vector<HarvestRecord> LovList();

  // Never throws for per-record failures; they become a bucket and an
  // excluded_reason.
  void FetchDocument(HarvestRecord& record);
  void FetchAll(std::vector<HarvestRecord>& records);

  PipelineReport RunBioportal();
  PipelineReport RunLov();

  // Highest number of simultaneous requests seen for a host.
  std::size_t max_in_flight(const std::string& host) const;

 private:
  struct HostState {
    std::size_t in_flight = 0;
    std::size_t max_in_flight = 0;
    std::chrono::steady_clock::time_point last_start{};
  };

  HttpResponse Request(const std::string& url, const Headers& headers,
                       int* retries);
  HttpResponse RequestOnce(const std::string& url, const Headers& headers);
  std::string ApiUrl(const std::string& path) const;
  Headers ApiHeaders() const;
  std::string Now(const HttpResponse& response) const;
  void Warn(const std::string& message) const;
  void StoreBody(HarvestRecord& record, const std::string& body,
                 const std::string& media_type);
  bool TryLovFallback(HarvestRecord& record);

  Transport& transport_;
  HarvestOptions options_;
  mutable std::mutex hosts_mu_;
  std::condition_variable hosts_cv_;
  std::map<std::string, HostState> hosts_;
};

std::string ToJsonLine(const HarvestRecord& record);
// Throws Error(kMalformedPayload).
HarvestRecord RecordFromJson(std::string_view line);
void WriteLedger(const std::filesystem::path& path,
                 std::vector<HarvestRecord> records);
std::vector<HarvestRecord> ReadLedger(const std::filesystem::path& path);

// Lowercase hex SHA-256.
std::string Sha256Hex(std::string_view bytes);

std::string HostOf(std::string_view url);

}  // namespace ontoaudit::harvest

#endif  // ONTOAUDIT_HARVEST_HARVEST_H_
