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

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <string>

#include "ontoaudit/common/error.h"
#include "ontoaudit/common/utf8.h"
#include "ontoaudit/rdf/parser.h"
#include "src/rdf/ntriples_line.h"
#include "src/rdf/readers.h"

namespace ontoaudit::rdf {
namespace {

std::string Lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

bool StartsWith(std::string_view text, std::string_view prefix) {
  return text.substr(0, prefix.size()) == prefix;
}

Graph ParseNTriplesDocument(std::string_view text, bool strict) {
  GraphBuilder builder;
  std::uint64_t line_number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_number;
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    try {
      if (auto triple = internal::ParseNTriplesLine(line, line_number)) {
        if (triple->object.has_language()) {
          ++builder.diagnostics().tagged_literals;
        }
        builder.Add(*triple);
      }
    } catch (const ParseError&) {
      if (strict) throw;
    }
  }
  return std::move(builder).Build();
}

// Skips a BOM, whitespace and '#' comment lines.
std::string_view SkipPreamble(std::string_view head) {
  head = utf8::SkipBom(head);
  while (!head.empty()) {
    const char c = head.front();
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      head.remove_prefix(1);
    } else if (c == '#') {
      const std::size_t nl = head.find('\n');
      head = nl == std::string_view::npos ? std::string_view()
                                          : head.substr(nl + 1);
    } else {
      break;
    }
  }
  return head;
}

}  // namespace

std::string_view FormatName(Format format) {
  switch (format) {
    case Format::kNTriples: return "ntriples";
    case Format::kTurtle: return "turtle";
    case Format::kRdfXml: return "rdfxml";
  }
  return "ntriples";
}

std::optional<Format> FormatFromName(std::string_view name) {
  const std::string lower = Lower(name);
  if (lower == "ntriples" || lower == "nt" || lower == "n-triples") {
    return Format::kNTriples;
  }
  if (lower == "turtle" || lower == "ttl") return Format::kTurtle;
  if (lower == "rdfxml" || lower == "rdf/xml" || lower == "xml" ||
      lower == "rdf" || lower == "owl") {
    return Format::kRdfXml;
  }
  return std::nullopt;
}

std::optional<Format> FormatFromMediaType(std::string_view media_type) {
  std::string lower = Lower(media_type.substr(0, media_type.find(';')));
  lower.erase(std::remove_if(lower.begin(), lower.end(),
                             [](unsigned char c) { return std::isspace(c); }),
              lower.end());
  if (lower == "application/n-triples" || lower == "text/plain") {
    return Format::kNTriples;
  }
  if (lower == "text/turtle" || lower == "application/x-turtle" ||
      lower == "text/n3" || lower == "application/turtle") {
    return Format::kTurtle;
  }
  if (lower == "application/rdf+xml" || lower == "application/owl+xml" ||
      lower == "application/xml" || lower == "text/xml") {
    return Format::kRdfXml;
  }
  return std::nullopt;
}

bool LooksLikeHtml(std::string_view head) {
  const std::string lower = Lower(SkipPreamble(head).substr(0, 512));
  if (StartsWith(lower, "<!doctype html") || StartsWith(lower, "<html")) {
    return true;
  }
  if (StartsWith(lower, "<?xml")) {
    const std::size_t end = lower.find("?>");
    if (end != std::string::npos) {
      std::string_view rest = lower;
      rest.remove_prefix(end + 2);
      rest = SkipPreamble(rest);
      return StartsWith(rest, "<!doctype html") || StartsWith(rest, "<html");
    }
  }
  return false;
}

Format DetectFormat(std::string_view filename,
                    std::optional<std::string_view> media_type,
                    std::string_view head) {
  if (media_type) {
    if (auto format = FormatFromMediaType(*media_type)) return *format;
  }
  const std::string lower_name = Lower(filename);
  const std::size_t dot = lower_name.rfind('.');
  if (dot != std::string::npos) {
    const std::string_view ext = std::string_view(lower_name).substr(dot + 1);
    if (ext == "nt") return Format::kNTriples;
    if (ext == "ttl" || ext == "n3") return Format::kTurtle;
    if (ext == "rdf" || ext == "owl" || ext == "xml") return Format::kRdfXml;
  }
  const std::string_view body = SkipPreamble(head);
  if (body.empty()) {
    throw Error(ErrorCode::kUndecidableFormat,
                "cannot determine the RDF format of '" +
                    std::string(filename) + "'");
  }
  if (StartsWith(body, "<?xml") || StartsWith(body, "<rdf:") ||
      StartsWith(body, "<!DOCTYPE rdf")) {
    return Format::kRdfXml;
  }
  const std::string lower_body = Lower(body.substr(0, 8));
  if (StartsWith(body, "@prefix") || StartsWith(body, "@base") ||
      StartsWith(lower_body, "prefix ") || StartsWith(lower_body, "base ")) {
    return Format::kTurtle;
  }
  return Format::kNTriples;
}

Graph ParseDocument(std::string_view bytes, Format format,
                    const ParseOptions& options) {
  if (bytes.size() > options.max_document_bytes) {
    throw Error(ErrorCode::kDocumentTooLarge,
                "document of " + std::to_string(bytes.size()) +
                    " bytes exceeds the in-memory limit of " +
                    std::to_string(options.max_document_bytes) +
                    " bytes; use the streaming scanner");
  }
  const std::string_view text = utf8::SkipBom(bytes);
  if (const auto bad = utf8::FindInvalid(text)) {
    const std::string_view before = text.substr(0, *bad);
    const auto line = 1 + std::count(before.begin(), before.end(), '\n');
    const std::size_t line_start = before.rfind('\n');
    const std::size_t column =
        line_start == std::string_view::npos ? *bad + 1 : *bad - line_start;
    throw ParseError(ErrorCode::kEncodingError, "invalid UTF-8",
                     static_cast<std::uint64_t>(line), column);
  }
  switch (format) {
    case Format::kNTriples:
      return ParseNTriplesDocument(text, options.strict);
    case Format::kTurtle:
      return internal::ParseTurtle(text, options);
    case Format::kRdfXml:
      return internal::ParseRdfXml(text, options);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown format");
}

Graph ParseFile(const std::filesystem::path& path, std::optional<Format> format,
                const ParseOptions& options) {
  std::error_code ec;
  const auto size = std::filesystem::file_size(path, ec);
  if (ec) {
    throw Error(ErrorCode::kIoError,
                "cannot read '" + path.string() + "': " + ec.message());
  }
  if (size > options.max_document_bytes) {
    throw Error(ErrorCode::kDocumentTooLarge,
                "'" + path.string() + "' exceeds the in-memory limit of " +
                    std::to_string(options.max_document_bytes) + " bytes");
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open '" + path.string() + "'");
  std::string bytes(size, '\0');
  in.read(bytes.data(), static_cast<std::streamsize>(size));
  if (static_cast<std::uint64_t>(in.gcount()) != size) {
    throw Error(ErrorCode::kIoError, "short read on '" + path.string() + "'");
  }
  const Format resolved =
      format ? *format
             : DetectFormat(path.filename().string(), std::nullopt,
                            std::string_view(bytes).substr(0, 4096));
  if (LooksLikeHtml(bytes)) {
    throw Error(ErrorCode::kMalformedSyntax,
                "'" + path.string() + "' is an HTML document, not RDF");
  }
  return ParseDocument(bytes, resolved, options);
}

}  // namespace ontoaudit::rdf
