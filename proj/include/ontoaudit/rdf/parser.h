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

#ifndef ONTOAUDIT_RDF_PARSER_H_
#define ONTOAUDIT_RDF_PARSER_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <istream>
#include <optional>
#include <string>
#include <string_view>

#include "ontoaudit/rdf/graph.h"
#include "ontoaudit/rdf/term.h"

namespace ontoaudit::rdf {

enum class Format { kNTriples, kTurtle, kRdfXml };

std::string_view FormatName(Format format);
std::optional<Format> FormatFromName(std::string_view name);

inline constexpr std::uint64_t kDefaultMaxDocumentBytes = 2ULL << 30;

struct ParseOptions {
  // Base IRI for relative references; an in-document base overrides it.
  std::optional<std::string> base;
  // Lenient mode skips malformed N-Triples lines. Turtle and RDF/XML are
  // always strict.
  bool strict = true;
  std::uint64_t max_document_bytes = kDefaultMaxDocumentBytes;
};

// Parses a whole document into memory. Throws ParseError on malformed input
// (with position), Error(kUnsupportedConstruct) on RDF/XML features outside
// the supported subset, Error(kEncodingError) on invalid UTF-8 and
// Error(kDocumentTooLarge) past the configured size limit.
Graph ParseDocument(std::string_view bytes, Format format,
                    const ParseOptions& options = {});

// Reads and parses a file; the format is detected from the extension and the
// first bytes when not supplied.
Graph ParseFile(const std::filesystem::path& path,
                std::optional<Format> format = std::nullopt,
                const ParseOptions& options = {});

// Signal precedence: media type, then file extension, then content sniffing.
// Throws Error(kUndecidableFormat) when no signal applies.
Format DetectFormat(std::string_view filename,
                    std::optional<std::string_view> media_type,
                    std::string_view head);

// Media-type based detection only; nullopt for types that are not RDF.
std::optional<Format> FormatFromMediaType(std::string_view media_type);

// True if the bytes look like an HTML page rather than an RDF document.
bool LooksLikeHtml(std::string_view head);

struct ScanSummary {
  std::uint64_t count = 0;
  std::uint64_t error_count = 0;
};

// Streams an N-Triples document line by line without building a Graph. In
// strict mode the first malformed line throws ParseError; in lenient mode it
// is counted and skipped. Throws Error(kIoError) on stream failure.
ScanSummary ScanStream(std::istream& input,
                       const std::function<void(const Triple&)>& callback,
                       bool strict = true);

// Canonical N-Triples serialization: one triple per line, LF endings, lines
// ordered by subject, predicate, object. Blank nodes are relabeled b0, b1...
// from their surroundings, so isomorphic graphs give the same text.
std::string SerializeNTriples(const Graph& graph);

}  // namespace ontoaudit::rdf

#endif  // ONTOAUDIT_RDF_PARSER_H_
