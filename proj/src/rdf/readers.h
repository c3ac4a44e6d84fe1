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

#ifndef ONTOAUDIT_SRC_RDF_READERS_H_
#define ONTOAUDIT_SRC_RDF_READERS_H_

#include <string_view>

#include "ontoaudit/rdf/graph.h"
#include "ontoaudit/rdf/parser.h"

namespace ontoaudit::rdf::internal {

// Input must already be valid UTF-8 with any BOM removed.
Graph ParseTurtle(std::string_view text, const ParseOptions& options);

Graph ParseRdfXml(std::string_view text, const ParseOptions& options);

}  // namespace ontoaudit::rdf::internal

#endif  // ONTOAUDIT_SRC_RDF_READERS_H_
