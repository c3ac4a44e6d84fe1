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

#ifndef ONTOAUDIT_SRC_RDF_NTRIPLES_LINE_H_
#define ONTOAUDIT_SRC_RDF_NTRIPLES_LINE_H_

#include <cstdint>
#include <optional>
#include <string_view>

#include "ontoaudit/rdf/term.h"

namespace ontoaudit::rdf::internal {

// Parses one N-Triples line. Returns nullopt for blank and comment-only lines;
// throws ParseError for malformed ones.
std::optional<Triple> ParseNTriplesLine(std::string_view line,
                                        std::uint64_t line_number);

}  // namespace ontoaudit::rdf::internal

#endif  // ONTOAUDIT_SRC_RDF_NTRIPLES_LINE_H_
