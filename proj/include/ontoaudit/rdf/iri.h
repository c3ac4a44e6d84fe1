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

#ifndef ONTOAUDIT_RDF_IRI_H_
#define ONTOAUDIT_RDF_IRI_H_

#include <string>
#include <string_view>

namespace ontoaudit::rdf {

// True if `iri` starts with a URI scheme followed by ':'.
bool IsAbsoluteIri(std::string_view iri);

// RFC 3986 section 5.2 reference resolution. An empty base returns `ref`
// unchanged.
std::string ResolveIri(std::string_view base, std::string_view ref);

// Everything up to and including the last '#', or failing that the last '/'.
std::string_view NamespaceOf(std::string_view iri);

// The fragment, or the last path segment when there is no fragment.
std::string_view LocalName(std::string_view iri);

// Drops the fragment (if any) of an IRI.
std::string_view StripFragment(std::string_view iri);

}  // namespace ontoaudit::rdf

#endif  // ONTOAUDIT_RDF_IRI_H_
