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


#include "ontoaudit/harvest/transport.h"

#include <curl/curl.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "ontoaudit/common/error.h"

namespace ontoaudit::harvest {
namespace {

using Json = nlohmann::json;

bool EqualsIgnoreCase(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

std::size_t OnBody(char* data, std::size_t size, std::size_t n, void* user) {
  static_cast<std::string*>(user)->append(data, size * n);
  return size * n;
}

std::size_t OnHeader(char* data, std::size_t size, std::size_t n, void* user) {
  auto* headers = static_cast<Headers*>(user);
  std::string_view line(data, size * n);
  if (line.starts_with("HTTP/")) {
    headers->clear();  // a new response (e.g. after 100 Continue)
    return size * n;
  }
  const auto colon = line.find(':');
  if (colon == std::string_view::npos) return size * n;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == '\r' || s.back() == '\n' ||
                          s.back() == ' ')) {
      s.remove_suffix(1);
    }
    return std::string(s);
  };
  headers->emplace_back(trim(line.substr(0, colon)),
                        trim(line.substr(colon + 1)));
  return size * n;
}

std::string TransportReason(CURLcode code) {
  switch (code) {
    case CURLE_COULDNT_RESOLVE_HOST:
    case CURLE_COULDNT_RESOLVE_PROXY:
      return "dns";
    case CURLE_OPERATION_TIMEDOUT:
      return "timeout";
    case CURLE_COULDNT_CONNECT:
      return "connect";
    case CURLE_SSL_CONNECT_ERROR:
    case CURLE_PEER_FAILED_VERIFICATION:
      return "tls";
    default:
      return curl_easy_strerror(code);
  }
}

Json HeadersToJson(const Headers& headers) {
  Json out = Json::object();
  for (const auto& [name, value] : headers) out[name] = value;
  return out;
}

}  // namespace

std::optional<std::string> HttpResponse::Header(std::string_view name) const {
  for (const auto& [key, value] : headers) {
    if (EqualsIgnoreCase(key, name)) return value;
  }
  return std::nullopt;
}

std::atomic<std::size_t> CurlTransport::instances_{0};

CurlTransport::CurlTransport() {
  static const CURLcode init = curl_global_init(CURL_GLOBAL_DEFAULT);
  (void)init;
  ++instances_;
}

CurlTransport::~CurlTransport() = default;

HttpResponse CurlTransport::Get(const HttpRequest& request) {
  HttpResponse response;
  CURL* curl = curl_easy_init();
  if (curl == nullptr) {
    response.transport_error = "curl-init";
    return response;
  }
  curl_slist* headers = nullptr;
  for (const auto& [name, value] : request.headers) {
    headers = curl_slist_append(headers, (name + ": " + value).c_str());
  }
  curl_easy_setopt(curl, CURLOPT_URL, request.url.c_str());
  curl_easy_setopt(curl, CURLOPT_HTTPHEADER, headers);
  curl_easy_setopt(curl, CURLOPT_FOLLOWLOCATION, 0L);
  curl_easy_setopt(curl, CURLOPT_NOSIGNAL, 1L);
  curl_easy_setopt(curl, CURLOPT_TIMEOUT_MS,
                   static_cast<long>(request.timeout.count()));
  curl_easy_setopt(curl, CURLOPT_USERAGENT, "ontoaudit/0.1");
  curl_easy_setopt(curl, CURLOPT_WRITEFUNCTION, OnBody);
  curl_easy_setopt(curl, CURLOPT_WRITEDATA, &response.body);
  curl_easy_setopt(curl, CURLOPT_HEADERFUNCTION, OnHeader);
  curl_easy_setopt(curl, CURLOPT_HEADERDATA, &response.headers);
  const CURLcode code = curl_easy_perform(curl);
  if (code == CURLE_OK) {
    curl_easy_getinfo(curl, CURLINFO_RESPONSE_CODE, &response.status);
  } else {
    response.status = 0;
    response.body.clear();
    response.headers.clear();
    response.transport_error = TransportReason(code);
  }
  curl_slist_free_all(headers);
  curl_easy_cleanup(curl);
  return response;
}

ReplayTransport::ReplayTransport(const std::filesystem::path& directory) {
  const auto path = directory / "exchanges.jsonl";
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kConfigError,
                "no recorded exchanges at '" + path.string() + "'");
  }
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    const Json entry = Json::parse(line, nullptr, false);
    if (entry.is_discarded() || !entry.contains("url")) {
      throw Error(ErrorCode::kConfigError,
                  path.string() + ":" + std::to_string(number) +
                      ": malformed exchange");
    }
    HttpResponse response;
    response.status = entry.value("status", 0L);
    response.transport_error = entry.value("error", std::string());
    response.recorded_at = entry.value("recorded_at", std::string());
    if (entry.contains("headers")) {
      for (const auto& [name, value] : entry["headers"].items()) {
        response.headers.emplace_back(name, value.get<std::string>());
      }
    }
    if (entry.contains("body_file")) {
      std::ifstream body(directory / entry["body_file"].get<std::string>(),
                         std::ios::binary);
      if (!body) {
        throw Error(ErrorCode::kConfigError,
                    path.string() + ":" + std::to_string(number) +
                        ": missing body file");
      }
      std::ostringstream text;
      text << body.rdbuf();
      response.body = text.str();
    } else {
      response.body = entry.value("body", std::string());
    }
    by_url_[RedactUrl(entry["url"].get<std::string>())].responses.push_back(
        std::move(response));
    ++count_;
  }
}

HttpResponse ReplayTransport::Get(const HttpRequest& request) {
  std::lock_guard<std::mutex> lock(mu_);
  const auto it = by_url_.find(RedactUrl(request.url));
  if (it == by_url_.end()) {
    HttpResponse missing;
    missing.transport_error = "not-recorded";
    return missing;
  }
  Queue& queue = it->second;
  const std::size_t index = std::min(queue.next, queue.responses.size() - 1);
  if (queue.next < queue.responses.size()) ++queue.next;
  return queue.responses[index];
}

RecordingTransport::RecordingTransport(Transport& inner,
                                       const std::filesystem::path& directory)
    : inner_(inner), path_(directory / "exchanges.jsonl") {
  std::filesystem::create_directories(directory);
}

HttpResponse RecordingTransport::Get(const HttpRequest& request) {
  HttpResponse response = inner_.Get(request);
  Json entry = {{"url", RedactUrl(request.url)},
                {"status", response.status},
                {"headers", HeadersToJson(response.headers)},
                {"body", response.body}};
  if (!response.transport_error.empty()) {
    entry["error"] = response.transport_error;
  }
  std::lock_guard<std::mutex> lock(mu_);
  std::ofstream out(path_, std::ios::app | std::ios::binary);
  out << entry.dump(-1, ' ', false, Json::error_handler_t::replace) << "\n";
  return response;
}

std::string RedactUrl(std::string_view url) {
  const auto query = url.find('?');
  if (query == std::string_view::npos) return std::string(url);
  std::string out(url.substr(0, query));
  std::string_view rest = url.substr(query + 1);
  char separator = '?';
  while (!rest.empty()) {
    const auto amp = rest.find('&');
    const std::string_view param = rest.substr(0, amp);
    const bool is_key = param.size() >= 7 &&
                        EqualsIgnoreCase(param.substr(0, 7), "apikey=");
    if (!is_key && !EqualsIgnoreCase(param, "apikey")) {
      out += separator;
      out += param;
      separator = '&';
    }
    if (amp == std::string_view::npos) break;
    rest.remove_prefix(amp + 1);
  }
  return out;
}

}  // namespace ontoaudit::harvest
