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


#include "ontoaudit/harvest/harvest.h"

#include <openssl/evp.h>

#include <algorithm>
#include <atomic>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "ontoaudit/common/error.h"
#include "ontoaudit/rdf/iri.h"
#include "ontoaudit/rdf/parser.h"

namespace ontoaudit::harvest {
namespace {

using Json = nlohmann::ordered_json;

// Runs fn(i) for i in [0, n) on up to `threads` threads.
void ParallelFor(std::size_t n, unsigned threads,
                 const std::function<void(std::size_t)>& fn) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) fn(i);
  };
  const unsigned count =
      std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
}

std::string MediaTypeOf(const HttpResponse& response) {
  std::string type = response.Header("Content-Type").value_or("");
  type = type.substr(0, type.find(';'));
  while (!type.empty() && type.back() == ' ') type.pop_back();
  std::transform(type.begin(), type.end(), type.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return type;
}

bool IsHtml(const std::string& body, const std::string& media_type) {
  return media_type == "text/html" || media_type == "application/xhtml+xml" ||
         rdf::LooksLikeHtml(body);
}

std::string FileNameOf(std::string_view url) {
  url = url.substr(0, url.find_first_of("?#"));
  const auto slash = url.rfind('/');
  return std::string(slash == std::string_view::npos ? url
                                                     : url.substr(slash + 1));
}

std::string SafeSegment(std::string_view id) {
  std::string out;
  for (const char c : id) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '-' || c == '_' || c == '.';
    out += ok ? c : '_';
  }
  if (out.empty() || out == "." || out == "..") out = "_" + out;
  return out;
}

[[noreturn]] void Malformed(const std::string& message) {
  throw Error(ErrorCode::kMalformedPayload, message);
}

void CheckApiResponse(const HttpResponse& response, const std::string& what) {
  if (response.status == 401 || response.status == 403) {
    throw Error(ErrorCode::kAuthError,
                what + ": HTTP " + std::to_string(response.status) +
                    " (check the API key)");
  }
  if (response.status == 429) {
    throw Error(ErrorCode::kRateLimited, what + ": still rate limited");
  }
  if (response.status == 0) {
    throw Error(ErrorCode::kTransportError,
                what + ": " + response.transport_error);
  }
  if (response.status < 200 || response.status >= 300) {
    throw Error(ErrorCode::kTransportError,
                what + ": HTTP " + std::to_string(response.status));
  }
}

Json ParseJson(const std::string& body, const std::string& what) {
  Json value = Json::parse(body, nullptr, false);
  if (value.is_discarded()) Malformed(what + ": response is not JSON");
  return value;
}

std::string StringField(const Json& object, const char* key) {
  if (!object.is_object() || !object.contains(key)) return "";
  const Json& v = object[key];
  return v.is_string() ? v.get<std::string>() : "";
}

}  // namespace

std::string_view RepositoryName(Repository repository) {
  return repository == Repository::kBioPortal ? "bioportal" : "lov";
}

std::optional<Repository> RepositoryFromName(std::string_view name) {
  if (name == "bioportal") return Repository::kBioPortal;
  if (name == "lov") return Repository::kLov;
  return std::nullopt;
}

std::string_view BucketName(StatusBucket bucket) {
  switch (bucket) {
    case StatusBucket::kCode0: return "code-0";
    case StatusBucket::k2xx: return "2xx";
    case StatusBucket::k3xx: return "3xx";
    case StatusBucket::k4xx: return "4xx";
    case StatusBucket::k5xx: return "5xx";
  }
  return "code-0";
}

std::optional<StatusBucket> BucketFromName(std::string_view name) {
  for (const StatusBucket b :
       {StatusBucket::kCode0, StatusBucket::k2xx, StatusBucket::k3xx,
        StatusBucket::k4xx, StatusBucket::k5xx}) {
    if (BucketName(b) == name) return b;
  }
  return std::nullopt;
}

StatusBucket BucketFor(long http_code) {
  if (http_code >= 200 && http_code < 300) return StatusBucket::k2xx;
  if (http_code >= 300 && http_code < 400) return StatusBucket::k3xx;
  if (http_code >= 400 && http_code < 500) return StatusBucket::k4xx;
  if (http_code >= 500 && http_code < 600) return StatusBucket::k5xx;
  return StatusBucket::kCode0;
}

std::optional<Predicate> BuiltinPredicate(std::string_view name) {
  if (name == "format-is-owl") {
    return Predicate{"format-is-owl", "declared ontology language is OWL",
                     [](const HarvestRecord& r) {
                       std::string f = r.declared_format;
                       std::transform(f.begin(), f.end(), f.begin(),
                                      [](unsigned char c) {
                                        return std::toupper(c);
                                      });
                       return f == "OWL";
                     }};
  }
  if (name == "status-is-production") {
    return Predicate{"status-is-production",
                     "latest submission status is production",
                     [](const HarvestRecord& r) {
                       return r.status == "production";
                     }};
  }
  if (name == "body-nonempty") {
    return Predicate{"body-nonempty", "download returned a non-empty body",
                     [](const HarvestRecord& r) {
                       return r.cached_path.has_value();
                     }};
  }
  if (name == "bucket-is-2xx") {
    return Predicate{"bucket-is-2xx", "first response was 2xx",
                     [](const HarvestRecord& r) {
                       return r.bucket == StatusBucket::k2xx;
                     }};
  }
  if (name == "body-is-rdf") {
    return Predicate{"body-is-rdf",
                     "cached body is an RDF document with at least one triple",
                     [](const HarvestRecord& r) {
                       return r.cached_path.has_value() && !r.excluded_reason;
                     }};
  }
  return std::nullopt;
}

FilterResult FilterPipeline(std::vector<HarvestRecord> records,
                            const std::vector<Predicate>& steps) {
  FilterResult result;
  for (const Predicate& step : steps) {
    FilterStep report{step.name, step.description, records.size(), 0};
    std::vector<HarvestRecord> kept;
    for (HarvestRecord& r : records) {
      if (step.keep(r)) kept.push_back(std::move(r));
    }
    records = std::move(kept);
    report.out_count = records.size();
    result.steps.push_back(std::move(report));
  }
  result.surviving = std::move(records);
  return result;
}

std::string FormatCounts(const std::vector<FilterStep>& steps) {
  if (steps.empty()) return "";
  std::string out = std::to_string(steps.front().in_count);
  for (const FilterStep& s : steps) out += " -> " + std::to_string(s.out_count);
  return out;
}

Harvester::Harvester(Transport& transport, HarvestOptions options)
    : transport_(transport), options_(std::move(options)) {
  if (options_.cache_dir.empty()) {
    options_.cache_dir =
        std::filesystem::temp_directory_path() / "ontoaudit-cache";
  }
  if (options_.per_host_limit == 0) options_.per_host_limit = 1;
}

void Harvester::Warn(const std::string& message) const {
  if (options_.warn) options_.warn(message);
}

std::size_t Harvester::max_in_flight(const std::string& host) const {
  std::lock_guard<std::mutex> lock(hosts_mu_);
  const auto it = hosts_.find(host);
  return it == hosts_.end() ? 0 : it->second.max_in_flight;
}

HttpResponse Harvester::RequestOnce(const std::string& url,
                                    const Headers& headers) {
  const std::string host = HostOf(url);
  {
    std::unique_lock<std::mutex> lock(hosts_mu_);
    HostState& state = hosts_[host];
    while (true) {
      if (state.in_flight < options_.per_host_limit) {
        const auto now = std::chrono::steady_clock::now();
        const auto ready = state.last_start + options_.request_delay;
        if (state.last_start == std::chrono::steady_clock::time_point{} ||
            now >= ready) {
          break;
        }
        hosts_cv_.wait_until(lock, ready);
      } else {
        hosts_cv_.wait(lock);
      }
    }
    ++state.in_flight;
    state.max_in_flight = std::max(state.max_in_flight, state.in_flight);
    state.last_start = std::chrono::steady_clock::now();
  }
  HttpRequest request{url, headers, options_.timeout};
  HttpResponse response = transport_.Get(request);
  {
    std::lock_guard<std::mutex> lock(hosts_mu_);
    --hosts_[host].in_flight;
  }
  hosts_cv_.notify_all();
  return response;
}

HttpResponse Harvester::Request(const std::string& url, const Headers& headers,
                                int* retries) {
  for (int attempt = 0;; ++attempt) {
    HttpResponse response = RequestOnce(url, headers);
    if (response.status != 429 || attempt >= options_.max_retries) {
      return response;
    }
    if (retries != nullptr) ++*retries;
    std::this_thread::sleep_for(options_.backoff_base * (1 << attempt));
  }
}

std::string Harvester::ApiUrl(const std::string& path) const {
  std::string url = options_.bioportal_base + path;
  if (!options_.api_key_in_header && !options_.api_key.empty()) {
    url += (url.find('?') == std::string::npos ? "?" : "&");
    url += "apikey=" + options_.api_key;
  }
  return url;
}

Headers Harvester::ApiHeaders() const {
  Headers headers = {{"Accept", "application/json"}};
  if (options_.api_key_in_header && !options_.api_key.empty()) {
    headers.emplace_back("Authorization", "apikey token=" + options_.api_key);
  }
  return headers;
}

std::string Harvester::Now(const HttpResponse& response) const {
  if (options_.fixed_timestamp) return *options_.fixed_timestamp;
  if (!response.recorded_at.empty()) return response.recorded_at;
  const std::time_t now = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&now, &utc);
  std::ostringstream out;
  out << std::put_time(&utc, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

std::vector<HarvestRecord> Harvester::BioportalList() {
  if (options_.api_key.empty()) {
    throw Error(ErrorCode::kAuthError, "BioPortal requires an API key");
  }
  int ignored = 0;
  const HttpResponse listing =
      Request(ApiUrl("/ontologies"), ApiHeaders(), &ignored);
  CheckApiResponse(listing, "GET /ontologies");
  const Json ontologies = ParseJson(listing.body, "GET /ontologies");
  if (!ontologies.is_array()) Malformed("GET /ontologies: expected an array");

  const HttpResponse categories =
      Request(ApiUrl("/categories"), ApiHeaders(), &ignored);
  if (categories.status >= 200 && categories.status < 300) {
    const auto dir = options_.cache_dir / "bioportal";
    std::filesystem::create_directories(dir);
    std::ofstream(dir / "categories.json", std::ios::binary) << categories.body;
  } else {
    Warn("GET /categories failed; category names are not cached");
  }

  std::vector<HarvestRecord> records;
  std::set<std::string> seen;
  for (const Json& entry : ontologies) {
    const std::string acronym = StringField(entry, "acronym");
    if (acronym.empty()) {
      Warn("skipping a listed ontology without an acronym");
      continue;
    }
    if (!seen.insert(acronym).second) {
      Warn("duplicate acronym '" + acronym + "' ignored");
      continue;
    }
    HarvestRecord r;
    r.repository = Repository::kBioPortal;
    r.id = acronym;
    r.uri = entry.contains("links") ? StringField(entry["links"], "download")
                                    : "";
    if (r.uri.empty()) {
      r.uri = options_.bioportal_base + "/ontologies/" + acronym + "/download";
    }
    r.metadata = Json{{"ontology", entry}}.dump();
    records.push_back(std::move(r));
  }

  // Submission metadata and categories, a batch of ontologies at a time.
  const std::size_t batch = std::max<std::size_t>(1, options_.batch_size);
  for (std::size_t start = 0; start < records.size(); start += batch) {
    const std::size_t end = std::min(records.size(), start + batch);
    std::vector<std::string> failures(end - start);
    ParallelFor(end - start, options_.concurrency, [&](std::size_t k) {
      HarvestRecord& r = records[start + k];
      Json metadata = Json::parse(r.metadata);
      const HttpResponse submission = Request(
          ApiUrl("/ontologies/" + r.id + "/latest_submission"), ApiHeaders(),
          &r.retries);
      if (submission.status == 401 || submission.status == 403) {
        failures[k] = "auth";
        return;
      }
      const Json sub = submission.status >= 200 && submission.status < 300
                           ? Json::parse(submission.body, nullptr, false)
                           : Json();
      if (sub.is_object()) {
        r.declared_format = StringField(sub, "hasOntologyLanguage");
        r.status = StringField(sub, "status");
        metadata["latest_submission"] = sub;
      } else {
        metadata["latest_submission"] = nullptr;
      }
      const HttpResponse cats =
          Request(ApiUrl("/ontologies/" + r.id + "/categories"), ApiHeaders(),
                  &r.retries);
      const Json cat_list = cats.status >= 200 && cats.status < 300
                                ? Json::parse(cats.body, nullptr, false)
                                : Json();
      Json names = Json::array();
      if (cat_list.is_array()) {
        for (const Json& c : cat_list) {
          const std::string name = StringField(c, "acronym");
          names.push_back(name.empty() ? StringField(c, "name") : name);
        }
      }
      metadata["categories"] = names;
      r.metadata = metadata.dump();
    });
    for (const std::string& f : failures) {
      if (f == "auth") {
        throw Error(ErrorCode::kAuthError,
                    "submission metadata refused (check the API key)");
      }
    }
  }
  return records;
}

std::vector<HarvestRecord> Harvester::LovList() {
  int ignored = 0;
  const std::string url = options_.lov_base + "/api/v2/vocabulary/list";
  const HttpResponse listing =
      Request(url, {{"Accept", "application/json"}}, &ignored);
  CheckApiResponse(listing, "GET /api/v2/vocabulary/list");
  const Json list = ParseJson(listing.body, "GET /api/v2/vocabulary/list");
  if (!list.is_array()) Malformed("vocabulary list: expected an array");
  std::vector<HarvestRecord> records;
  std::set<std::string> seen;
  for (const Json& entry : list) {
    const std::string prefix = StringField(entry, "prefix");
    if (prefix.empty()) {
      Warn("skipping a vocabulary without a prefix");
      continue;
    }
    if (!seen.insert(prefix).second) {
      Warn("duplicate vocabulary prefix '" + prefix + "' ignored");
      continue;
    }
    HarvestRecord r;
    r.repository = Repository::kLov;
    r.id = prefix;
    r.uri = StringField(entry, "uri");
    if (r.uri.empty()) r.uri = StringField(entry, "nsp");
    r.metadata = entry.dump();
    records.push_back(std::move(r));
  }
  return records;
}

void Harvester::StoreBody(HarvestRecord& record, const std::string& body,
                          const std::string& media_type) {
  std::string ext = "rdf";
  if (IsHtml(body, media_type)) {
    ext = "html";
  } else {
    try {
      switch (rdf::DetectFormat(FileNameOf(record.fallback_url.empty()
                                               ? record.uri
                                               : record.fallback_url),
                                media_type.empty()
                                    ? std::nullopt
                                    : std::optional<std::string_view>(media_type),
                                std::string_view(body).substr(0, 4096))) {
        case rdf::Format::kNTriples: ext = "nt"; break;
        case rdf::Format::kTurtle: ext = "ttl"; break;
        case rdf::Format::kRdfXml: ext = "rdf"; break;
      }
    } catch (const Error&) {
      ext = "bin";
    }
  }
  const auto dir = options_.cache_dir / std::string(RepositoryName(record.repository)) /
                   SafeSegment(record.id);
  std::filesystem::create_directories(dir);
  const auto path = dir / (Sha256Hex(body) + "." + ext);
  if (!std::filesystem::exists(path)) {
    std::ofstream out(path, std::ios::binary);
    out << body;
    if (!out) {
      record.excluded_reason = "cache-write-failed";
      return;
    }
  }
  record.cached_path = path.string();
  record.media_type = media_type;
  record.triples.reset();
  record.excluded_reason.reset();
  if (ext == "html") {
    record.excluded_reason = "html-not-rdf";
    return;
  }
  if (!options_.verify_rdf) return;
  try {
    const rdf::Format format = ext == "nt"    ? rdf::Format::kNTriples
                               : ext == "ttl" ? rdf::Format::kTurtle
                               : ext == "rdf" ? rdf::Format::kRdfXml
                                              : throw Error(
                                                    ErrorCode::kUndecidableFormat,
                                                    "unknown RDF format");
    const rdf::Graph graph = rdf::ParseDocument(body, format);
    record.triples = graph.size();
    if (graph.empty()) record.excluded_reason = "namespace-only";
  } catch (const Error& e) {
    record.excluded_reason = std::string("not-rdf: ") + e.what();
  }
}

bool Harvester::TryLovFallback(HarvestRecord& record) {
  int ignored = 0;
  const HttpResponse info = Request(
      options_.lov_base + "/api/v2/vocabulary/info?vocab=" + record.id,
      {{"Accept", "application/json"}}, &ignored);
  if (info.status < 200 || info.status >= 300) return false;
  const Json doc = Json::parse(info.body, nullptr, false);
  if (!doc.is_object() || !doc.contains("versions") ||
      !doc["versions"].is_array()) {
    return false;
  }
  std::string best_issued;
  std::string best_url;
  for (const Json& v : doc["versions"]) {
    const std::string url = StringField(v, "fileURL");
    const std::string issued = StringField(v, "issued");
    if (!url.empty() && (best_url.empty() || issued > best_issued)) {
      best_url = url;
      best_issued = issued;
    }
  }
  if (best_url.empty()) return false;
  const HttpResponse file = Request(best_url, {{"Accept", "text/turtle, */*"}},
                                    &record.retries);
  if (file.status < 200 || file.status >= 300 || file.body.empty()) {
    return false;
  }
  std::string media = MediaTypeOf(file);
  if (IsHtml(file.body, media)) return false;
  if (media.empty() || media == "text/plain" ||
      media == "application/octet-stream") {
    media = best_url.ends_with(".n3") ? "text/n3" : media;
  }
  record.fallback_url = best_url;
  StoreBody(record, file.body, media);
  return true;
}

void Harvester::FetchDocument(HarvestRecord& record) {
  Headers headers = {{"Accept", options_.accept}};
  std::string url = record.uri;
  if (record.repository == Repository::kBioPortal) {
    if (options_.api_key_in_header) {
      headers.emplace_back("Authorization", "apikey token=" + options_.api_key);
    } else if (!options_.api_key.empty()) {
      url += (url.find('?') == std::string::npos ? "?" : "&");
      url += "apikey=" + options_.api_key;
    }
  }
  record.cached_path.reset();
  record.excluded_reason.reset();
  record.triples.reset();
  record.fallback_url.clear();
  if (url.empty() || !rdf::IsAbsoluteIri(url)) {
    record.bucket = StatusBucket::kCode0;
    record.transport_error = "no-uri";
    record.excluded_reason = "no-uri";
    return;
  }

  const HttpResponse first = Request(url, headers, &record.retries);
  HttpResponse last = first;
  for (int hop = 0; hop < options_.max_redirects && last.status >= 300 &&
                    last.status < 400;
       ++hop) {
    const auto location = last.Header("Location");
    if (!location) break;
    url = rdf::ResolveIri(url, *location);
    last = Request(url, headers, &record.retries);
  }
  record.http_code = first.status;
  record.final_http_code = last.status;
  record.bucket = BucketFor(first.status);
  record.transport_error = first.transport_error;
  record.fetched_at = Now(first);
  record.media_type = MediaTypeOf(last);

  if (record.bucket != StatusBucket::k2xx) {
    record.excluded_reason = first.status == 0
                                 ? first.transport_error
                                 : "http-" + std::to_string(first.status);
    return;
  }
  if (first.body.empty()) {
    record.excluded_reason = "empty-body";
    return;
  }
  StoreBody(record, first.body, record.media_type);
  if (record.excluded_reason == "html-not-rdf" &&
      record.repository == Repository::kLov) {
    const std::string html_path = *record.cached_path;
    if (!TryLovFallback(record)) {
      record.cached_path = html_path;
      record.excluded_reason = "html-not-rdf";
    }
  }
}

void Harvester::FetchAll(std::vector<HarvestRecord>& records) {
  ParallelFor(records.size(), options_.concurrency,
              [&](std::size_t i) { FetchDocument(records[i]); });
}

PipelineReport Harvester::RunBioportal() {
  PipelineReport report;
  report.repository = Repository::kBioPortal;
  report.records = BioportalList();
  report.listed = report.records.size();
  FilterResult selected = FilterPipeline(
      report.records, {*BuiltinPredicate("format-is-owl"),
                       *BuiltinPredicate("status-is-production")});
  FetchAll(selected.surviving);
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    index[report.records[i].id] = i;
  }
  for (const HarvestRecord& r : selected.surviving) {
    report.records[index[r.id]] = r;
    ++report.buckets[std::string(BucketName(*r.bucket))];
  }
  FilterResult final_result = FilterPipeline(
      std::move(selected.surviving), {*BuiltinPredicate("body-nonempty")});
  report.steps = std::move(selected.steps);
  for (FilterStep& s : final_result.steps) report.steps.push_back(std::move(s));
  report.surviving = std::move(final_result.surviving);
  return report;
}

PipelineReport Harvester::RunLov() {
  options_.verify_rdf = true;
  PipelineReport report;
  report.repository = Repository::kLov;
  report.records = LovList();
  report.listed = report.records.size();
  FetchAll(report.records);
  for (const HarvestRecord& r : report.records) {
    ++report.buckets[std::string(BucketName(*r.bucket))];
  }
  FilterResult result = FilterPipeline(
      report.records, {*BuiltinPredicate("bucket-is-2xx"),
                       *BuiltinPredicate("body-is-rdf")});
  report.steps = std::move(result.steps);
  report.surviving = std::move(result.surviving);
  return report;
}

std::string ToJsonLine(const HarvestRecord& r) {
  Json metadata = Json::parse(r.metadata, nullptr, false);
  if (metadata.is_discarded()) metadata = r.metadata;
  Json out = {{"repository", RepositoryName(r.repository)},
              {"id", r.id},
              {"uri", r.uri},
              {"declared_format", r.declared_format},
              {"status", r.status}};
  out["status_bucket"] =
      r.bucket ? Json(std::string(BucketName(*r.bucket))) : Json(nullptr);
  out["http_code"] = r.http_code;
  out["final_http_code"] = r.final_http_code;
  out["transport_error"] = r.transport_error;
  out["media_type"] = r.media_type;
  out["cached_path"] = r.cached_path ? Json(*r.cached_path) : Json(nullptr);
  out["fetched_at"] = r.fetched_at;
  out["excluded_reason"] =
      r.excluded_reason ? Json(*r.excluded_reason) : Json(nullptr);
  out["retries"] = r.retries;
  out["triples"] = r.triples ? Json(*r.triples) : Json(nullptr);
  out["fallback_url"] = r.fallback_url;
  out["metadata"] = metadata;
  return out.dump(-1, ' ', false, Json::error_handler_t::replace);
}

HarvestRecord RecordFromJson(std::string_view line) {
  const Json in = Json::parse(line, nullptr, false);
  if (in.is_discarded() || !in.is_object()) Malformed("not a JSON object");
  HarvestRecord r;
  try {
    const auto repository = RepositoryFromName(in.at("repository").get<std::string>());
    if (!repository) Malformed("repository: unknown value");
    r.repository = *repository;
    r.id = in.at("id").get<std::string>();
    r.uri = in.value("uri", "");
    r.declared_format = in.value("declared_format", "");
    r.status = in.value("status", "");
    if (in.contains("status_bucket") && in["status_bucket"].is_string()) {
      r.bucket = BucketFromName(in["status_bucket"].get<std::string>());
      if (!r.bucket) Malformed("status_bucket: unknown value");
    }
    r.http_code = in.value("http_code", 0L);
    r.final_http_code = in.value("final_http_code", 0L);
    r.transport_error = in.value("transport_error", "");
    r.media_type = in.value("media_type", "");
    if (in.contains("cached_path") && in["cached_path"].is_string()) {
      r.cached_path = in["cached_path"].get<std::string>();
    }
    r.fetched_at = in.value("fetched_at", "");
    if (in.contains("excluded_reason") && in["excluded_reason"].is_string()) {
      r.excluded_reason = in["excluded_reason"].get<std::string>();
    }
    r.retries = in.value("retries", 0);
    if (in.contains("triples") && in["triples"].is_number_unsigned()) {
      r.triples = in["triples"].get<std::uint64_t>();
    }
    r.fallback_url = in.value("fallback_url", "");
    r.metadata = in.contains("metadata") ? in["metadata"].dump() : "{}";
  } catch (const Json::exception& e) {
    Malformed(e.what());
  }
  return r;
}

void WriteLedger(const std::filesystem::path& path,
                 std::vector<HarvestRecord> records) {
  std::sort(records.begin(), records.end(),
            [](const HarvestRecord& a, const HarvestRecord& b) {
              return a.id < b.id;
            });
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  for (const HarvestRecord& r : records) out << ToJsonLine(r) << "\n";
  out.close();
  if (!out) {
    throw Error(ErrorCode::kIoError, "cannot write '" + path.string() + "'");
  }
}

std::vector<HarvestRecord> ReadLedger(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot read '" + path.string() + "'");
  }
  std::vector<HarvestRecord> records;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    try {
      records.push_back(RecordFromJson(line));
    } catch (const Error& e) {
      Malformed(path.string() + ":" + std::to_string(number) + ": " + e.what());
    }
  }
  return records;
}

std::string Sha256Hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(),
             nullptr);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xf];
  }
  return out;
}

std::string HostOf(std::string_view url) {
  const auto scheme = url.find("://");
  if (scheme == std::string_view::npos) return "";
  std::string_view rest = url.substr(scheme + 3);
  rest = rest.substr(0, rest.find_first_of("/?#"));
  const auto at = rest.rfind('@');
  if (at != std::string_view::npos) rest.remove_prefix(at + 1);
  std::string host(rest);
  std::transform(host.begin(), host.end(), host.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return host;
}

}  // namespace ontoaudit::harvest
