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
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "ontoaudit/common/error.h"
#include "ontoaudit/rdf/graph.h"
#include "ontoaudit/rdf/iri.h"
#include "ontoaudit/rdf/parser.h"
#include "ontoaudit/rdf/vocab.h"

namespace ontoaudit::rdf {
namespace {

const std::filesystem::path kFixtures = ONTOAUDIT_FIXTURE_DIR;

Term I(std::string iri) { return Term::Iri(std::move(iri)); }

constexpr char kOntolex[] = "http://www.w3.org/ns/lemon/ontolex#";
constexpr char kLex[] = "http://example.org/lexicon/";
constexpr char kRdfType[] = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
constexpr char kLabel[] = "http://www.w3.org/2000/01/rdf-schema#label";

// Renders a graph with blank nodes collapsed so that two graphs equal up to
// blank node renaming compare equal as sorted line lists.
std::vector<std::string> Skeleton(const Graph& graph) {
  std::vector<std::string> lines;
  graph.ForEach([&](const Term& s, const Term& p, const Term& o) {
    auto render = [](const Term& t) {
      return t.is_blank() ? std::string("_") : ToNTriples(t);
    };
    lines.push_back(render(s) + " " + render(p) + " " + render(o));
  });
  std::sort(lines.begin(), lines.end());
  return lines;
}

TEST(NTriplesTest, ParsesAllTermKinds) {
  const Graph g = ParseDocument(
      "<http://a/s> <http://a/p> <http://a/o> .\n"
      "# comment line\n"
      "_:x <http://a/p> \"caf\\u00E9\"@fr-CA .\n"
      "_:x <http://a/q> \"42\"^^<http://www.w3.org/2001/XMLSchema#integer> .\n"
      "<http://a/s> <http://a/r> \"plain\" . # trailing\n",
      Format::kNTriples);
  EXPECT_EQ(g.size(), 4u);
  EXPECT_TRUE(g.Contains({I("http://a/s"), I("http://a/r"),
                          Term::Literal("plain")}));
  EXPECT_TRUE(g.Contains({Term::Blank("x"), I("http://a/p"),
                          Term::LangLiteral("caf\xC3\xA9", "fr-CA")}));
  EXPECT_EQ(g.diagnostics().tagged_literals, 1u);
  const auto lit = Term::LangLiteral("x", "en");
  EXPECT_EQ(lit.datatype, vocab::kRdfLangString);
  EXPECT_EQ(Term::Literal("x").datatype, vocab::kXsdString);
}

TEST(NTriplesTest, EmptyDocumentHasNoTriples) {
  EXPECT_EQ(ParseDocument("", Format::kNTriples).size(), 0u);
  EXPECT_EQ(ParseDocument("", Format::kTurtle).size(), 0u);
}

TEST(NTriplesTest, DuplicateTriplesStoredOnce) {
  const Graph g = ParseDocument(
      "<http://a/s> <http://a/p> <http://a/o> .\n"
      "<http://a/s> <http://a/p> <http://a/o> .\n",
      Format::kNTriples);
  EXPECT_EQ(g.size(), 1u);
}

TEST(NTriplesTest, StrictErrorsReportPosition) {
  try {
    ParseDocument("<http://a/s> <http://a/p> <http://a/o> .\n"
                  "<http://a/s> <http://a/p> .\n",
                  Format::kNTriples);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMalformedSyntax);
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(ParseDocument("<rel> <http://a/p> <http://a/o> .\n",
                             Format::kNTriples),
               ParseError);
  EXPECT_THROW(ParseDocument("\"lit\" <http://a/p> <http://a/o> .\n",
                             Format::kNTriples),
               ParseError);
  EXPECT_THROW(ParseDocument("<http://a/s> _:p <http://a/o> .\n",
                             Format::kNTriples),
               ParseError);
}

TEST(NTriplesTest, LenientDocumentSkipsBadLines) {
  ParseOptions options;
  options.strict = false;
  const Graph g = ParseDocument(
      "<http://a/s> <http://a/p> <http://a/o> .\nbroken\n", Format::kNTriples,
      options);
  EXPECT_EQ(g.size(), 1u);
}

TEST(NTriplesTest, RejectsInvalidUtf8) {
  try {
    ParseDocument("<http://a/s> <http://a/p> \"\xC3\x28\" .\n",
                  Format::kNTriples);
    FAIL() << "expected an encoding error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEncodingError);
  }
}

TEST(NTriplesTest, SizeLimitIsEnforced) {
  ParseOptions options;
  options.max_document_bytes = 10;
  try {
    ParseDocument("<http://a/s> <http://a/p> <http://a/o> .\n",
                  Format::kNTriples, options);
    FAIL() << "expected size limit error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDocumentTooLarge);
  }
}

TEST(ScanStreamTest, CountsValidLines) {
  std::istringstream in(
      "<http://a/s> <http://a/p> <http://a/o1> .\n"
      "<http://a/s> <http://a/p> <http://a/o2> .\n"
      "<http://a/s> <http://a/p> <http://a/o3> .\n");
  int calls = 0;
  const ScanSummary summary = ScanStream(in, [&](const Triple&) { ++calls; });
  EXPECT_EQ(calls, 3);
  EXPECT_EQ(summary.count, 3u);
  EXPECT_EQ(summary.error_count, 0u);
}

TEST(ScanStreamTest, LenientSkipsMalformedLine) {
  const std::string text =
      "<http://a/s> <http://a/p> <http://a/o1> .\n"
      "<http://a/s> <http://a/p> \n"
      "<http://a/s> <http://a/p> <http://a/o3> .\n"
      "<http://a/s> <http://a/p> <http://a/o4> .\n";
  std::istringstream lenient(text);
  int calls = 0;
  const ScanSummary summary =
      ScanStream(lenient, [&](const Triple&) { ++calls; }, false);
  EXPECT_EQ(calls, 3);
  EXPECT_EQ(summary.error_count, 1u);

  std::istringstream strict(text);
  EXPECT_THROW(ScanStream(strict, [](const Triple&) {}), ParseError);
}

TEST(ScanStreamTest, AgreesWithDocumentParser) {
  const std::string text =
      "<http://a/s> <http://a/p> \"one\"@en .\n"
      "_:b <http://a/p> \"two\" .\n"
      "<http://a/s> <http://a/q> _:b .\n";
  std::istringstream in(text);
  const ScanSummary summary = ScanStream(in, [](const Triple&) {});
  EXPECT_EQ(summary.count, ParseDocument(text, Format::kNTriples).size());
}

TEST(SerializeTest, RoundTripsThroughNTriples) {
  const std::string text =
      "<http://a/s> <http://a/p> \"quote \\\" and \\\\ and \\n\"@en .\n"
      "_:b <http://a/p> \"3.5\"^^<http://www.w3.org/2001/XMLSchema#decimal> .\n"
      "<http://a/s> <http://a/q> _:b .\n"
      "<http://a/s> <http://a/q> \"\xE6\x97\xA5\xE6\x9C\xAC\" .\n";
  const Graph g = ParseDocument(text, Format::kNTriples);
  const std::string serialized = SerializeNTriples(g);
  const Graph again = ParseDocument(serialized, Format::kNTriples);
  EXPECT_EQ(again.size(), g.size());
  EXPECT_EQ(SerializeNTriples(again), serialized);
  EXPECT_NE(serialized.find("<http://a/s> <http://a/q> _:b0 ."),
            std::string::npos);
}

TEST(SerializeTest, BlankLabelsDoNotMatter) {
  const std::string a =
      "_:x <http://a/p> _:y .\n_:y <http://a/p> <http://a/o> .\n"
      "_:z <http://a/p> _:z .\n_:w <http://a/q> \"w\" .\n"
      "_:v <http://a/q> \"w\" .\n";
  const std::string b =
      "_:v <http://a/q> \"w\" .\n_:k <http://a/p> _:k .\n"
      "_:n1 <http://a/p> <http://a/o> .\n_:n2 <http://a/p> _:n1 .\n"
      "_:w <http://a/q> \"w\" .\n";
  const std::string sa = SerializeNTriples(ParseDocument(a, Format::kNTriples));
  const std::string sb = SerializeNTriples(ParseDocument(b, Format::kTurtle));
  EXPECT_EQ(sa, sb);
  EXPECT_EQ(std::count(sa.begin(), sa.end(), '\n'), 5);
}

TEST(TurtleTest, LexicalEntryListing) {
  const Graph g = ParseFile(kFixtures / "rdf/lexical_entry.ttl");
  const std::string entry = std::string(kLex) + "nl/lexicalEntry_Persoon";
  const std::string form = std::string(kLex) + "nl/lexicalEntry_form_Persoon";
  const std::vector<Triple> expected = {
      {I(entry), I(kRdfType), I(std::string(kOntolex) + "LexicalEntry")},
      {I(entry), I("http://purl.org/dc/terms/language"),
       I("http://example.org/languages/dutch")},
      {I(entry), I(kLabel), Term::LangLiteral("Persoon", "nl")},
      {I(entry), I(std::string(kOntolex) + "canonicalForm"), I(form)},
      {I(form), I(kRdfType), I(std::string(kOntolex) + "Form")},
      {I(form), I(std::string(kOntolex) + "writtenRep"),
       Term::LangLiteral("persoon", "nl")},
  };
  std::vector<Triple> sorted = expected;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(g.Materialize(), sorted);
  ASSERT_EQ(g.prefixes().size(), 5u);
  EXPECT_EQ(g.prefixes()[0].first, "");
  EXPECT_EQ(g.prefixes()[1].second, kOntolex);
}

TEST(TurtleTest, LexicalConceptListing) {
  const Graph g = ParseFile(kFixtures / "rdf/lexical_concept.ttl");
  EXPECT_EQ(g.size(), 5u);
  EXPECT_TRUE(g.Contains({I(std::string(kLex) + "lexicalConcepts/000000001"),
                          I(std::string(kOntolex) + "isEvokedBy"),
                          I(std::string(kLex) + "nl/lexicalEntry_Persoon")}));
}

TEST(TurtleTest, SyntaxCoverage) {
  const Graph g = ParseDocument(R"(
BASE <http://example.org/base/>
PREFIX ex: <http://example.org/ns#>
@prefix : <http://example.org/default#> .
<rel> a ex:Thing ;
    ex:n 42, -1.5, 2e3, true ;
    ex:s 'single', """triple "quoted"
line""" , "tagged"@PT-br ;
    ex:dt "x"^^ex:type ;
    ex:list ( :a :b ) ;
    ex:empty () ;
    ex:nested [ ex:p :c ] ;
    ex:bn _:one .
_:one ex:q :end.
[] ex:r :anon .
)",
                                Format::kTurtle);
  const std::string s = "http://example.org/base/rel";
  const std::string ex = "http://example.org/ns#";
  EXPECT_TRUE(g.Contains({I(s), I(kRdfType), I(ex + "Thing")}));
  EXPECT_TRUE(g.Contains(
      {I(s), I(ex + "n"), Term::Literal("42", std::string(vocab::kXsdInteger))}));
  EXPECT_TRUE(g.Contains({I(s), I(ex + "n"),
                          Term::Literal("-1.5", std::string(vocab::kXsdDecimal))}));
  EXPECT_TRUE(g.Contains(
      {I(s), I(ex + "n"), Term::Literal("2e3", std::string(vocab::kXsdDouble))}));
  EXPECT_TRUE(g.Contains({I(s), I(ex + "n"),
                          Term::Literal("true", std::string(vocab::kXsdBoolean))}));
  EXPECT_TRUE(g.Contains({I(s), I(ex + "s"),
                          Term::Literal("triple \"quoted\"\nline")}));
  EXPECT_TRUE(
      g.Contains({I(s), I(ex + "s"), Term::LangLiteral("tagged", "PT-br")}));
  EXPECT_TRUE(g.Contains({I(s), I(ex + "dt"), Term::Literal("x", ex + "type")}));
  EXPECT_TRUE(g.Contains({I(s), I(ex + "empty"), I(std::string(vocab::kRdfNil))}));
  // 4 numbers/booleans + 3 strings + type + dt + list link + 4 list cells +
  // empty + nested link + nested p + bn link + q + r.
  EXPECT_EQ(g.size(), 20u);
  EXPECT_EQ(g.base_iri(), "http://example.org/base/");
}

TEST(TurtleTest, BlankNodesRenamedInOrder) {
  const Graph g = ParseDocument(
      "@prefix ex: <http://e/> .\n_:zeta ex:p _:alpha .\n_:alpha ex:p _:zeta .\n",
      Format::kTurtle);
  EXPECT_TRUE(g.Contains({Term::Blank("b0"), I("http://e/p"), Term::Blank("b1")}));
  EXPECT_TRUE(g.Contains({Term::Blank("b1"), I("http://e/p"), Term::Blank("b0")}));
}

TEST(TurtleTest, Errors) {
  EXPECT_THROW(ParseDocument("<rel> <http://e/p> <http://e/o> .", Format::kTurtle),
               ParseError);
  EXPECT_THROW(ParseDocument("ex:a ex:b ex:c .", Format::kTurtle), ParseError);
  EXPECT_THROW(ParseDocument("@prefix ex: <http://e/> .\nex:a ex:b ex:c",
                             Format::kTurtle),
               ParseError);
  try {
    ParseDocument("@prefix ex: <http://e/> .\n\nex:a ex:b \"open .\n",
                  Format::kTurtle);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 11u);
  }
  // A path separator in a local name must be escaped.
  EXPECT_THROW(ParseDocument("@prefix : <http://e/> .\n:nl/x :p :o .\n",
                             Format::kTurtle),
               ParseError);
}

TEST(TurtleTest, ExternalBaseResolvesRelativeIris) {
  ParseOptions options;
  options.base = "http://example.org/dir/file.ttl";
  const Graph g =
      ParseDocument("<#a> <../p> <o> .", Format::kTurtle, options);
  EXPECT_TRUE(g.Contains({I("http://example.org/dir/file.ttl#a"),
                          I("http://example.org/p"),
                          I("http://example.org/dir/o")}));
}

TEST(RdfXmlTest, SubsetFixture) {
  const Graph g = ParseFile(kFixtures / "rdf/person.rdf");
  const std::string b = "http://example.org/people";
  const std::string owl = "http://www.w3.org/2002/07/owl#";
  const std::string rdfs = "http://www.w3.org/2000/01/rdf-schema#";
  EXPECT_EQ(g.size(), 21u);
  EXPECT_TRUE(g.Contains({I(b), I(kRdfType), I(owl + "Ontology")}));
  EXPECT_TRUE(g.Contains({I(b + "#Person"), I(rdfs + "subClassOf"),
                          I(owl + "Thing")}));
  EXPECT_TRUE(g.Contains(
      {I(b + "#Person"), I(kLabel), Term::LangLiteral("Person", "en")}));
  EXPECT_TRUE(g.Contains(
      {I(b + "#Person"), I(kLabel), Term::LangLiteral("Persoon", "nl")}));
  EXPECT_TRUE(g.Contains({I(b + "#Person"), I(rdfs + "comment"),
                          Term::Literal("A human being.")}));
  EXPECT_TRUE(g.Contains(
      {I(b + "#Student"), I(kLabel), Term::LangLiteral("Student", "en")}));
  EXPECT_TRUE(g.Contains({I(b + "#Student"), I(kRdfType), I(owl + "Class")}));
  EXPECT_EQ(g.diagnostics().xml_lang_literals, 3u);

  const std::vector<std::string> skeleton = Skeleton(g);
  auto count = [&](const std::string& line) {
    return std::count(skeleton.begin(), skeleton.end(), line);
  };
  EXPECT_EQ(count("_ <" + std::string(vocab::kRdfFirst) + "> <" + b +
                  "#School>"),
            1);
  EXPECT_EQ(count("_ <" + std::string(vocab::kRdfRest) + "> <" +
                  std::string(vocab::kRdfNil) + ">"),
            1);
  EXPECT_EQ(count("_ <http://example.org/people#age> "
                  "\"7\"^^<http://www.w3.org/2001/XMLSchema#integer>"),
            1);
  EXPECT_EQ(count("_ <" + owl + "someValuesFrom> _"), 1);

  bool has_ex = false;
  for (const auto& [prefix, ns] : g.prefixes()) {
    has_ex |= prefix == "ex" && ns == "http://example.org/people#";
  }
  EXPECT_TRUE(has_ex);
}

TEST(RdfXmlTest, UnsupportedConstructsNameTheElement) {
  const std::string head =
      "<rdf:RDF xmlns:rdf=\"http://www.w3.org/1999/02/22-rdf-syntax-ns#\" "
      "xmlns:ex=\"http://e/\"><rdf:Description rdf:about=\"http://e/s\">";
  const std::string tail = "</rdf:Description></rdf:RDF>";
  try {
    ParseDocument(head + "<ex:p rdf:parseType=\"Literal\"><b>x</b></ex:p>" +
                      tail,
                  Format::kRdfXml);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupportedConstruct);
    EXPECT_NE(std::string(e.what()).find("http://e/p"), std::string::npos);
  }
  try {
    ParseDocument(head + "<ex:p rdf:ID=\"st\">x</ex:p>" + tail, Format::kRdfXml);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupportedConstruct);
  }
}

TEST(RdfXmlTest, RejectsHtmlAndBrokenXml) {
  try {
    ParseDocument("<!DOCTYPE html><html><body>hi</body></html>",
                  Format::kRdfXml);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMalformedSyntax);
    EXPECT_NE(std::string(e.what()).find("HTML"), std::string::npos);
  }
  EXPECT_THROW(ParseDocument("<rdf:RDF xmlns:rdf=\"http://www.w3.org/1999/02/"
                             "22-rdf-syntax-ns#\">",
                             Format::kRdfXml),
               ParseError);
  EXPECT_TRUE(LooksLikeHtml("\xEF\xBB\xBF  <!doctype HTML>"));
  EXPECT_FALSE(LooksLikeHtml("<?xml version=\"1.0\"?><rdf:RDF/>"));
}

TEST(RdfXmlTest, ListItemsAndTypedNodes) {
  const Graph g = ParseDocument(
      "<rdf:RDF xmlns:rdf=\"http://www.w3.org/1999/02/22-rdf-syntax-ns#\" "
      "xmlns:ex=\"http://e/\"><rdf:Seq rdf:about=\"http://e/s\">"
      "<rdf:li>a</rdf:li><rdf:li rdf:resource=\"http://e/b\"/></rdf:Seq>"
      "<ex:T rdf:about=\"http://e/t\" ex:a=\"v\"><ex:p ex:q=\"w\"/></ex:T>"
      "</rdf:RDF>",
      Format::kRdfXml);
  const std::string rdf = std::string(vocab::kRdfNs);
  EXPECT_TRUE(g.Contains({I("http://e/s"), I(rdf + "_1"), Term::Literal("a")}));
  EXPECT_TRUE(g.Contains({I("http://e/s"), I(rdf + "_2"), I("http://e/b")}));
  EXPECT_TRUE(g.Contains({I("http://e/t"), I(kRdfType), I("http://e/T")}));
  EXPECT_TRUE(g.Contains({I("http://e/t"), I("http://e/a"), Term::Literal("v")}));
  EXPECT_EQ(g.size(), 7u);
}

TEST(DetectFormatTest, SignalPrecedence) {
  EXPECT_EQ(DetectFormat("x.ttl", "application/rdf+xml", ""), Format::kRdfXml);
  EXPECT_EQ(DetectFormat("x.nt", std::nullopt, ""), Format::kNTriples);
  EXPECT_EQ(DetectFormat("x.owl", std::nullopt, "@prefix"), Format::kRdfXml);
  EXPECT_EQ(DetectFormat("download", std::nullopt,
                         "@prefix ontolex: <http://www.w3.org/ns/lemon/ontolex#> ."),
            Format::kTurtle);
  EXPECT_EQ(DetectFormat("", std::nullopt, "# c\nPREFIX ex: <http://e/>"),
            Format::kTurtle);
  EXPECT_EQ(DetectFormat("", std::nullopt, "\xEF\xBB\xBF<?xml version=\"1.0\"?>"),
            Format::kRdfXml);
  EXPECT_EQ(DetectFormat("", std::nullopt, "<http://a> <http://b> <http://c> ."),
            Format::kNTriples);
  EXPECT_EQ(DetectFormat("", "text/turtle; charset=utf-8", ""), Format::kTurtle);
  try {
    DetectFormat("", std::nullopt, "  \n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUndecidableFormat);
  }
}

TEST(IriTest, ResolvesReferences) {
  const std::string base = "http://a/b/c/d;p?q";
  EXPECT_EQ(ResolveIri(base, "g"), "http://a/b/c/g");
  EXPECT_EQ(ResolveIri(base, "../g"), "http://a/b/g");
  EXPECT_EQ(ResolveIri(base, "#s"), "http://a/b/c/d;p?q#s");
  EXPECT_EQ(ResolveIri(base, ""), "http://a/b/c/d;p?q");
  EXPECT_EQ(ResolveIri(base, "../../../g"), "http://a/g");
  EXPECT_EQ(ResolveIri(base, "//g"), "http://g");
  EXPECT_EQ(NamespaceOf("http://e.org/onto#Person"), "http://e.org/onto#");
  EXPECT_EQ(LocalName("http://e.org/onto/Person"), "Person");
}

}  // namespace
}  // namespace ontoaudit::rdf
