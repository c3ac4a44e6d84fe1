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


#ifndef ONTOAUDIT_HARVEST_TRANSPORT_H_
#define ONTOAUDIT_HARVEST_TRANSPORT_H_

#include <atomic>
#include <chrono>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ontoaudit::harvest {

using Headers = std::vector<std::pair<std::string, std::string>>;

struct HttpRequest {
  std::string url;
  Headers headers;
  std::chrono::milliseconds timeout{30000};
};

struct HttpResponse {
  // 0 when no response arrived.
  long status = 0;
  Headers headers;
  std::string body;
  // "dns", "timeout", "connect" or another short reason when status is 0.
  std::string transport_error;
  // Recorded exchange time, if the transport knows it (replay).
  std::string recorded_at;

  std::optional<std::string> Header(std::string_view name) const;
};

// Performs one HTTP GET without following redirects. Implementations must
// be safe to call from several threads.
class Transport {
 public:
  virtual ~Transport() = default;
  virtual HttpResponse Get(const HttpRequest& request) = 0;
};

// libcurl-backed transport.
class CurlTransport : public Transport {
 public:
  CurlTransport();
  ~CurlTransport() override;
  HttpResponse Get(const HttpRequest& request) override;

  // Number of CurlTransport objects ever constructed in this process; lets
  // tests assert that offline runs never touch the network.
  static std::size_t instances() { return instances_; }

 private:
  static std::atomic<std::size_t> instances_;
};

// Serves responses from exchanges.jsonl in a directory. Each line is
//   {"url": ..., "status": 200, "headers": {...}, "body": "..." |
//    "body_file": "relative/path", "error": "dns", "recorded_at": "..."}
// Several lines for one URL are served in order; the last one repeats.
// Unknown URLs get status 0 with transport_error "not-recorded".
class ReplayTransport : public Transport {
 public:
  // Throws Error(kConfigError) if the directory or its exchanges file is
  // missing or malformed.
  explicit ReplayTransport(const std::filesystem::path& directory);
  HttpResponse Get(const HttpRequest& request) override;

  std::size_t exchange_count() const { return count_; }

 private:
  struct Queue {
    std::vector<HttpResponse> responses;
    std::size_t next = 0;
  };
  std::mutex mu_;
  std::map<std::string, Queue> by_url_;
  std::size_t count_ = 0;
};

// Wraps another transport and appends every exchange to
// {directory}/exchanges.jsonl in the ReplayTransport format.
class RecordingTransport : public Transport {
 public:
  RecordingTransport(Transport& inner, const std::filesystem::path& directory);
  HttpResponse Get(const HttpRequest& request) override;

 private:
  Transport& inner_;
  std::filesystem::path path_;
  std::mutex mu_;
};

// Removes credentials (apikey query parameters) from a URL; replay keys and
// ledgers never contain the key.
std::string RedactUrl(std::string_view url);

}  // namespace ontoaudit::harvest

#endif  // ONTOAUDIT_HARVEST_TRANSPORT_H_
