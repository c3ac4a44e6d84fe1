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

#include "ontoaudit/rdf/iri.h"

#include <cctype>
#include <optional>
#include <vector>

namespace ontoaudit::rdf {

namespace {

struct IriParts {
  std::optional<std::string_view> scheme;
  std::optional<std::string_view> authority;
  std::string_view path;
  std::optional<std::string_view> query;
  std::optional<std::string_view> fragment;
};

std::size_t SchemeEnd(std::string_view iri) {
  if (iri.empty() || !std::isalpha(static_cast<unsigned char>(iri[0]))) {
    return std::string_view::npos;
  }
  for (std::size_t i = 1; i < iri.size(); ++i) {
    const char c = iri[i];
    if (c == ':') return i;
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' &&
        c != '.') {
      return std::string_view::npos;
    }
  }
  return std::string_view::npos;
}

IriParts Split(std::string_view iri) {
  IriParts parts;
  const std::size_t hash = iri.find('#');
  if (hash != std::string_view::npos) {
    parts.fragment = iri.substr(hash + 1);
    iri = iri.substr(0, hash);
  }
  const std::size_t question = iri.find('?');
  if (question != std::string_view::npos) {
    parts.query = iri.substr(question + 1);
    iri = iri.substr(0, question);
  }
  const std::size_t colon = SchemeEnd(iri);
  if (colon != std::string_view::npos) {
    parts.scheme = iri.substr(0, colon);
    iri = iri.substr(colon + 1);
  }
  if (iri.substr(0, 2) == "//") {
    iri.remove_prefix(2);
    const std::size_t slash = iri.find('/');
    parts.authority = iri.substr(0, slash);
    iri = slash == std::string_view::npos ? std::string_view() : iri.substr(slash);
  }
  parts.path = iri;
  return parts;
}

std::string RemoveDotSegments(std::string_view path) {
  std::vector<std::string_view> output;
  const bool absolute = !path.empty() && path.front() == '/';
  std::string_view input = path;
  bool trailing_slash = false;
  std::size_t pos = absolute ? 1 : 0;
  while (pos <= input.size()) {
    std::size_t next = input.find('/', pos);
    if (next == std::string_view::npos) next = input.size();
    std::string_view segment = input.substr(pos, next - pos);
    const bool last = next == input.size();
    if (segment == ".") {
      trailing_slash = last;
    } else if (segment == "..") {
      if (!output.empty()) output.pop_back();
      trailing_slash = last;
    } else {
      output.push_back(segment);
      trailing_slash = false;
    }
    pos = next + 1;
  }
  std::string result = absolute ? "/" : "";
  for (std::size_t i = 0; i < output.size(); ++i) {
    if (i > 0) result += '/';
    result += output[i];
  }
  if (trailing_slash && (result.empty() || result.back() != '/')) result += '/';
  return result;
}

std::string Merge(const IriParts& base, std::string_view ref_path) {
  if (base.authority && base.path.empty()) return "/" + std::string(ref_path);
  const std::size_t slash = base.path.rfind('/');
  if (slash == std::string_view::npos) return std::string(ref_path);
  return std::string(base.path.substr(0, slash + 1)) + std::string(ref_path);
}

std::string Recompose(std::string_view scheme,
                      const std::optional<std::string_view>& authority,
                      std::string_view path,
                      const std::optional<std::string_view>& query,
                      const std::optional<std::string_view>& fragment) {
  std::string out(scheme);
  out += ':';
  if (authority) {
    out += "//";
    out += *authority;
  }
  out += path;
  if (query) {
    out += '?';
    out += *query;
  }
  if (fragment) {
    out += '#';
    out += *fragment;
  }
  return out;
}

}  // namespace

bool IsAbsoluteIri(std::string_view iri) {
  return SchemeEnd(iri) != std::string_view::npos;
}

std::string ResolveIri(std::string_view base, std::string_view ref) {
  if (base.empty()) return std::string(ref);
  const IriParts r = Split(ref);
  if (r.scheme) {
    return Recompose(*r.scheme, r.authority, RemoveDotSegments(r.path), r.query,
                     r.fragment);
  }
  const IriParts b = Split(base);
  if (!b.scheme) return std::string(ref);
  if (r.authority) {
    return Recompose(*b.scheme, r.authority, RemoveDotSegments(r.path), r.query,
                     r.fragment);
  }
  if (r.path.empty()) {
    return Recompose(*b.scheme, b.authority, b.path, r.query ? r.query : b.query,
                     r.fragment);
  }
  if (r.path.front() == '/') {
    return Recompose(*b.scheme, b.authority, RemoveDotSegments(r.path), r.query,
                     r.fragment);
  }
  return Recompose(*b.scheme, b.authority, RemoveDotSegments(Merge(b, r.path)),
                   r.query, r.fragment);
}

std::string_view NamespaceOf(std::string_view iri) {
  std::size_t cut = iri.rfind('#');
  if (cut == std::string_view::npos) cut = iri.rfind('/');
  if (cut == std::string_view::npos) cut = iri.rfind(':');
  if (cut == std::string_view::npos) return {};
  return iri.substr(0, cut + 1);
}

std::string_view LocalName(std::string_view iri) {
  const std::string_view ns = NamespaceOf(iri);
  return iri.substr(ns.size());
}

std::string_view StripFragment(std::string_view iri) {
  const std::size_t hash = iri.find('#');
  return hash == std::string_view::npos ? iri : iri.substr(0, hash);
}

}  // namespace ontoaudit::rdf
