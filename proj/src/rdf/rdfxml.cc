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

#include <expat.h>

#include <algorithm>
#include <cctype>
#include <string>
#include <unordered_map>
#include <vector>

#include "ontoaudit/common/error.h"
#include "ontoaudit/rdf/iri.h"
#include "ontoaudit/rdf/vocab.h"
#include "src/rdf/readers.h"

namespace ontoaudit::rdf::internal {
namespace {

constexpr std::string_view kXhtmlNs = "http://www.w3.org/1999/xhtml";

bool IsWhitespace(std::string_view text) {
  return std::all_of(text.begin(), text.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
  });
}

// Expat reports namespaced names as "<namespace> <local>".
struct QName {
  std::string ns;
  std::string local;
  bool qualified = false;

  std::string Iri() const { return ns + local; }
  bool IsRdf(std::string_view name) const {
    return qualified && ns == vocab::kRdfNs && local == name;
  }
};

QName SplitName(const XML_Char* raw) {
  const std::string_view name(raw);
  const std::size_t space = name.find(' ');
  if (space == std::string_view::npos) return {"", std::string(name), false};
  return {std::string(name.substr(0, space)),
          std::string(name.substr(space + 1)), true};
}

enum class FrameKind {
  kTop,               // inside rdf:RDF
  kNode,              // node element
  kProperty,          // property element awaiting text or one node element
  kResourceProperty,  // rdf:parseType="Resource"
  kCollection,        // rdf:parseType="Collection"
  kEmpty,             // property element whose object was given by attribute
};

struct Frame {
  FrameKind kind = FrameKind::kTop;
  std::string lang;
  std::optional<std::string> base;
  Term subject;
  Term predicate;
  std::optional<std::string> datatype;
  std::string text;
  std::optional<Term> object;
  std::vector<Term> items;
  std::vector<std::pair<Term, Term>> pending_attributes;
  int li_counter = 0;
  std::string element;
};

class RdfXmlParser {
 public:
  explicit RdfXmlParser(const ParseOptions& options) : document_base_(options.base) {
    if (options.base) builder_.SetBase(*options.base);
  }

  Graph Parse(std::string_view text) && {
    XML_Parser parser = XML_ParserCreateNS("UTF-8", ' ');
    if (parser == nullptr) {
      throw Error(ErrorCode::kIoError, "cannot allocate XML parser");
    }
    parser_ = parser;
    XML_SetUserData(parser, this);
    XML_SetElementHandler(parser, &RdfXmlParser::OnStart, &RdfXmlParser::OnEnd);
    XML_SetCharacterDataHandler(parser, &RdfXmlParser::OnText);
    XML_SetStartNamespaceDeclHandler(parser, &RdfXmlParser::OnNamespace);

    constexpr std::size_t kChunk = 1 << 24;
    bool ok = true;
    std::size_t offset = 0;
    do {
      const std::size_t len = std::min(kChunk, text.size() - offset);
      const bool last = offset + len == text.size();
      ok = XML_Parse(parser, text.data() + offset, static_cast<int>(len),
                     last ? XML_TRUE : XML_FALSE) == XML_STATUS_OK;
      offset += len;
    } while (ok && offset < text.size());

    const auto line = XML_GetCurrentLineNumber(parser);
    const auto column = XML_GetCurrentColumnNumber(parser) + 1;
    const std::string xml_error =
        ok ? "" : XML_ErrorString(XML_GetErrorCode(parser));
    XML_ParserFree(parser);
    parser_ = nullptr;
    if (error_) {
      throw ParseError(error_->code, error_->message, error_->line,
                       error_->column);
    }
    if (!ok) {
      throw ParseError(ErrorCode::kMalformedSyntax, xml_error, line, column);
    }
    if (!saw_root_) {
      throw ParseError(ErrorCode::kMalformedSyntax, "no root element", 1, 1);
    }
    return std::move(builder_).Build();
  }

 private:
  struct PendingError {
    ErrorCode code;
    std::string message;
    std::uint64_t line;
    std::uint64_t column;
  };

  struct Abort {};

  [[noreturn]] void Fail(ErrorCode code, const std::string& message) {
    if (!error_) {
      error_ = PendingError{code, message, XML_GetCurrentLineNumber(parser_),
                            XML_GetCurrentColumnNumber(parser_) + 1};
    }
    throw Abort{};
  }

  template <typename Fn>
  static void Guard(void* data, Fn&& fn) {
    auto* self = static_cast<RdfXmlParser*>(data);
    if (self->error_) return;
    try {
      fn(*self);
    } catch (const Abort&) {
      XML_StopParser(self->parser_, XML_FALSE);
    } catch (const Error& e) {
      self->error_ = PendingError{e.code(), e.what(),
                                  XML_GetCurrentLineNumber(self->parser_),
                                  XML_GetCurrentColumnNumber(self->parser_) + 1};
      XML_StopParser(self->parser_, XML_FALSE);
    }
  }

  static void XMLCALL OnStart(void* data, const XML_Char* name,
                              const XML_Char** attrs) {
    Guard(data, [&](RdfXmlParser& self) { self.StartElement(name, attrs); });
  }
  static void XMLCALL OnEnd(void* data, const XML_Char* /*name*/) {
    Guard(data, [](RdfXmlParser& self) { self.EndElement(); });
  }
  static void XMLCALL OnText(void* data, const XML_Char* text, int len) {
    Guard(data, [&](RdfXmlParser& self) {
      self.Text(std::string_view(text, static_cast<std::size_t>(len)));
    });
  }
  static void XMLCALL OnNamespace(void* data, const XML_Char* prefix,
                                  const XML_Char* uri) {
    Guard(data, [&](RdfXmlParser& self) {
      self.builder_.AddPrefix(prefix ? prefix : "", uri ? uri : "");
    });
  }

  Term NewBlank() { return Term::Blank("b" + std::to_string(next_blank_++)); }

  Term BlankFor(const std::string& node_id) {
    auto it = node_ids_.find(node_id);
    if (it == node_ids_.end()) it = node_ids_.emplace(node_id, NewBlank()).first;
    return it->second;
  }

  std::string Resolve(const Frame& frame, std::string_view ref) {
    if (IsAbsoluteIri(ref)) return std::string(ref);
    if (!frame.base) {
      Fail(ErrorCode::kMalformedSyntax,
           "relative IRI '" + std::string(ref) + "' without a base");
    }
    return ResolveIri(*frame.base, ref);
  }

  std::string IdIri(const Frame& frame, std::string_view id) {
    if (!frame.base) {
      Fail(ErrorCode::kMalformedSyntax, "rdf:ID without a base IRI");
    }
    return std::string(StripFragment(*frame.base)) + "#" + std::string(id);
  }

  Term LiteralFor(const Frame& frame, std::string value) {
    if (frame.lang.empty()) return Term::Literal(std::move(value));
    ++builder_.diagnostics().xml_lang_literals;
    return Term::LangLiteral(std::move(value), frame.lang);
  }

  void Emit(const Term& s, const Term& p, const Term& o) { builder_.Add(s, p, o); }

  void StartElement(const XML_Char* raw_name, const XML_Char** attrs) {
    const QName name = SplitName(raw_name);
    if (stack_.empty()) {
      saw_root_ = true;
      if (!name.qualified || name.ns == kXhtmlNs) {
        std::string lower = name.local;
        std::transform(lower.begin(), lower.end(), lower.begin(),
                       [](unsigned char c) { return std::tolower(c); });
        if (lower == "html") {
          Fail(ErrorCode::kMalformedSyntax, "HTML document, not RDF");
        }
        Fail(ErrorCode::kMalformedSyntax,
             "root element <" + name.local + "> is not in a namespace");
      }
    }
    Frame frame;
    frame.element = name.qualified ? name.Iri() : name.local;
    if (!stack_.empty()) {
      frame.lang = stack_.back().lang;
      frame.base = stack_.back().base;
    } else {
      frame.base = document_base_;
    }

    // Split attributes into xml:*, rdf syntax and property attributes.
    std::vector<std::pair<QName, std::string>> attributes;
    for (const XML_Char** a = attrs; *a != nullptr; a += 2) {
      QName attr = SplitName(a[0]);
      std::string value = a[1];
      if (attr.qualified && attr.ns == vocab::kXmlNs) {
        if (attr.local == "lang") {
          frame.lang = value;
        } else if (attr.local == "base") {
          frame.base = frame.base && !IsAbsoluteIri(value)
                           ? ResolveIri(*frame.base, value)
                           : value;
          if (!IsAbsoluteIri(*frame.base)) {
            Fail(ErrorCode::kMalformedSyntax, "xml:base is not absolute");
          }
        }
        continue;
      }
      if (!attr.qualified) {
        if (attr.local.rfind("xml", 0) == 0) continue;
        Fail(ErrorCode::kUnsupportedConstruct,
             "unqualified attribute '" + attr.local + "' on <" +
                 frame.element + ">");
      }
      attributes.emplace_back(std::move(attr), std::move(value));
    }

    if (stack_.empty()) {
      if (name.IsRdf("RDF")) {
        frame.kind = FrameKind::kTop;
        stack_.push_back(std::move(frame));
        return;
      }
      StartNode(name, attributes, frame);
      stack_.push_back(std::move(frame));
      return;
    }

    Frame& parent = stack_.back();
    switch (parent.kind) {
      case FrameKind::kTop:
        StartNode(name, attributes, frame);
        break;
      case FrameKind::kProperty:
        if (parent.object) {
          Fail(ErrorCode::kMalformedSyntax,
               "property element <" + parent.element +
                   "> has more than one node element");
        }
        if (!IsWhitespace(parent.text)) {
          Fail(ErrorCode::kMalformedSyntax,
               "property element <" + parent.element +
                   "> mixes text and elements");
        }
        StartNode(name, attributes, frame);
        stack_.back().object = frame.subject;
        break;
      case FrameKind::kCollection:
        StartNode(name, attributes, frame);
        stack_.back().items.push_back(frame.subject);
        break;
      case FrameKind::kNode:
      case FrameKind::kResourceProperty:
        StartProperty(name, attributes, parent, frame);
        break;
      case FrameKind::kEmpty:
        Fail(ErrorCode::kMalformedSyntax,
             "property element <" + parent.element + "> must be empty");
    }
    stack_.push_back(std::move(frame));
  }

  static bool IsSyntaxName(const QName& name) {
    if (!name.qualified || name.ns != vocab::kRdfNs) return false;
    static constexpr std::string_view kNames[] = {
        "RDF", "ID", "about", "parseType", "resource", "nodeID", "datatype",
        "aboutEach", "aboutEachPrefix", "bagID"};
    return std::find(std::begin(kNames), std::end(kNames), name.local) !=
           std::end(kNames);
  }

  void CheckLegacy(const QName& name) {
    if (name.IsRdf("aboutEach") || name.IsRdf("aboutEachPrefix") ||
        name.IsRdf("bagID")) {
      Fail(ErrorCode::kUnsupportedConstruct,
           "rdf:" + name.local + " is not supported");
    }
  }

  void StartNode(const QName& name,
                 const std::vector<std::pair<QName, std::string>>& attributes,
                 Frame& frame) {
    if (IsSyntaxName(name) || name.IsRdf("li")) {
      Fail(ErrorCode::kMalformedSyntax,
           "<rdf:" + name.local + "> cannot be a node element");
    }
    frame.kind = FrameKind::kNode;
    std::optional<Term> subject;
    for (const auto& [attr, value] : attributes) {
      CheckLegacy(attr);
      if (attr.IsRdf("about") || attr.IsRdf("ID") || attr.IsRdf("nodeID")) {
        if (subject) {
          Fail(ErrorCode::kMalformedSyntax,
               "node element <" + frame.element +
                   "> has more than one identifying attribute");
        }
        if (attr.IsRdf("about")) {
          subject = Term::Iri(Resolve(frame, value));
        } else if (attr.IsRdf("ID")) {
          subject = Term::Iri(IdIri(frame, value));
        } else {
          subject = BlankFor(value);
        }
      }
    }
    frame.subject = subject ? *subject : NewBlank();
    if (!name.IsRdf("Description")) {
      Emit(frame.subject, Term::Iri(std::string(vocab::kRdfType)),
           Term::Iri(name.Iri()));
    }
    for (const auto& [attr, value] : attributes) {
      if (attr.IsRdf("about") || attr.IsRdf("ID") || attr.IsRdf("nodeID")) {
        continue;
      }
      EmitPropertyAttribute(frame, frame.subject, attr, value);
    }
  }

  void EmitPropertyAttribute(const Frame& frame, const Term& subject,
                             const QName& attr, const std::string& value) {
    if (IsSyntaxName(attr) || attr.IsRdf("li") || attr.IsRdf("Description")) {
      Fail(ErrorCode::kMalformedSyntax,
           "rdf:" + attr.local + " is not allowed here on <" + frame.element +
               ">");
    }
    if (attr.IsRdf("type")) {
      Emit(subject, Term::Iri(attr.Iri()), Term::Iri(Resolve(frame, value)));
      return;
    }
    Emit(subject, Term::Iri(attr.Iri()), LiteralFor(frame, value));
  }

  void StartProperty(const QName& name,
                     const std::vector<std::pair<QName, std::string>>& attributes,
                     Frame& parent, Frame& frame) {
    if (IsSyntaxName(name) || name.IsRdf("Description")) {
      Fail(ErrorCode::kMalformedSyntax,
           "<rdf:" + name.local + "> cannot be a property element");
    }
    frame.subject = parent.subject;
    if (name.IsRdf("li")) {
      frame.predicate = Term::Iri(std::string(vocab::kRdfNs) + "_" +
                                  std::to_string(++parent.li_counter));
    } else {
      frame.predicate = Term::Iri(name.Iri());
    }
    frame.kind = FrameKind::kProperty;

    std::optional<std::string> parse_type;
    std::optional<Term> object;
    std::vector<std::pair<QName, std::string>> property_attributes;
    for (const auto& [attr, value] : attributes) {
      CheckLegacy(attr);
      if (attr.IsRdf("ID")) {
        Fail(ErrorCode::kUnsupportedConstruct,
             "rdf:ID on property element <" + frame.element +
                 "> (statement reification) is not supported");
      } else if (attr.IsRdf("parseType")) {
        parse_type = value;
      } else if (attr.IsRdf("datatype")) {
        frame.datatype = Resolve(frame, value);
      } else if (attr.IsRdf("resource") || attr.IsRdf("nodeID")) {
        if (object) {
          Fail(ErrorCode::kMalformedSyntax,
               "property element <" + frame.element +
                   "> has both rdf:resource and rdf:nodeID");
        }
        object = attr.IsRdf("resource") ? Term::Iri(Resolve(frame, value))
                                        : BlankFor(value);
      } else {
        property_attributes.emplace_back(attr, value);
      }
    }

    if (parse_type) {
      if (object || frame.datatype || !property_attributes.empty()) {
        Fail(ErrorCode::kMalformedSyntax,
             "rdf:parseType cannot be combined with other attributes on <" +
                 frame.element + ">");
      }
      if (*parse_type == "Resource") {
        frame.kind = FrameKind::kResourceProperty;
        const Term node = NewBlank();
        Emit(frame.subject, frame.predicate, node);
        frame.subject = node;
        return;
      }
      if (*parse_type == "Collection") {
        frame.kind = FrameKind::kCollection;
        return;
      }
      Fail(ErrorCode::kUnsupportedConstruct,
           "rdf:parseType=\"" + *parse_type + "\" on <" + frame.element +
               "> is not supported");
    }

    if (object) {
      if (frame.datatype) {
        Fail(ErrorCode::kMalformedSyntax,
             "rdf:datatype with an object attribute on <" + frame.element +
                 ">");
      }
      frame.kind = FrameKind::kEmpty;
      Emit(frame.subject, frame.predicate, *object);
      for (const auto& [attr, value] : property_attributes) {
        EmitPropertyAttribute(frame, *object, attr, value);
      }
      return;
    }
    if (!property_attributes.empty()) {
      if (frame.datatype) {
        Fail(ErrorCode::kMalformedSyntax,
             "rdf:datatype with property attributes on <" + frame.element +
                 ">");
      }
      for (auto& [attr, value] : property_attributes) {
        if (IsSyntaxName(attr) || attr.IsRdf("li")) {
          Fail(ErrorCode::kMalformedSyntax,
               "rdf:" + attr.local + " is not allowed on <" + frame.element +
                   ">");
        }
        frame.pending_attributes.emplace_back(
            Term::Iri(attr.Iri()),
            attr.IsRdf("type") ? Term::Iri(Resolve(frame, value))
                               : LiteralFor(frame, value));
      }
    }
  }

  void Text(std::string_view text) {
    if (stack_.empty()) return;
    Frame& frame = stack_.back();
    if (frame.kind == FrameKind::kProperty) {
      frame.text.append(text);
      return;
    }
    if (!IsWhitespace(text)) {
      Fail(ErrorCode::kMalformedSyntax,
           "unexpected text inside <" + frame.element + ">");
    }
  }

  void EndElement() {
    Frame frame = std::move(stack_.back());
    stack_.pop_back();
    if (frame.kind == FrameKind::kCollection) {
      Term head = Term::Iri(std::string(vocab::kRdfNil));
      const Term first = Term::Iri(std::string(vocab::kRdfFirst));
      const Term rest = Term::Iri(std::string(vocab::kRdfRest));
      std::vector<Term> cells;
      for (std::size_t i = 0; i < frame.items.size(); ++i) {
        cells.push_back(NewBlank());
      }
      for (std::size_t i = 0; i < frame.items.size(); ++i) {
        Emit(cells[i], first, frame.items[i]);
        Emit(cells[i], rest,
             i + 1 < cells.size() ? cells[i + 1]
                                  : Term::Iri(std::string(vocab::kRdfNil)));
      }
      if (!cells.empty()) head = cells.front();
      Emit(frame.subject, frame.predicate, head);
      return;
    }
    if (frame.kind != FrameKind::kProperty) return;
    if (frame.object) {
      if (!IsWhitespace(frame.text)) {
        Fail(ErrorCode::kMalformedSyntax,
             "property element <" + frame.element +
                 "> mixes text and elements");
      }
      if (frame.datatype) {
        Fail(ErrorCode::kMalformedSyntax,
             "rdf:datatype on <" + frame.element + "> with a node element");
      }
      Emit(frame.subject, frame.predicate, *frame.object);
      return;
    }
    if (!frame.pending_attributes.empty()) {
      if (!frame.text.empty()) {
        Fail(ErrorCode::kMalformedSyntax,
             "property element <" + frame.element +
                 "> with property attributes must be empty");
      }
      const Term node = NewBlank();
      Emit(frame.subject, frame.predicate, node);
      for (const auto& [p, o] : frame.pending_attributes) Emit(node, p, o);
      return;
    }
    if (frame.datatype) {
      if (*frame.datatype == vocab::kRdfLangString) {
        Fail(ErrorCode::kMalformedSyntax,
             "rdf:langString literal without a language tag");
      }
      Emit(frame.subject, frame.predicate,
           Term::Literal(std::move(frame.text), *frame.datatype));
      return;
    }
    Emit(frame.subject, frame.predicate,
         LiteralFor(frame, std::move(frame.text)));
  }

  XML_Parser parser_ = nullptr;
  std::optional<std::string> document_base_;
  GraphBuilder builder_;
  std::vector<Frame> stack_;
  std::unordered_map<std::string, Term> node_ids_;
  std::uint64_t next_blank_ = 0;
  std::optional<PendingError> error_;
  bool saw_root_ = false;
};

}  // namespace

Graph ParseRdfXml(std::string_view text, const ParseOptions& options) {
  return RdfXmlParser(options).Parse(text);
}

}  // namespace ontoaudit::rdf::internal
