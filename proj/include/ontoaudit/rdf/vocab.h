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

#ifndef ONTOAUDIT_RDF_VOCAB_H_
#define ONTOAUDIT_RDF_VOCAB_H_

#include <string_view>

// Namespace and term IRIs for the vocabularies the auditor inspects.
namespace ontoaudit::vocab {

inline constexpr std::string_view kRdfNs =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfsNs =
    "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kOwlNs = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kXsdNs = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kXmlNs =
    "http://www.w3.org/XML/1998/namespace";
inline constexpr std::string_view kSkosNs =
    "http://www.w3.org/2004/02/skos/core#";
inline constexpr std::string_view kOntolexNs =
    "http://www.w3.org/ns/lemon/ontolex#";
inline constexpr std::string_view kDctermsNs = "http://purl.org/dc/terms/";

inline constexpr std::string_view kRdfType =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view kRdfLangString =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";
inline constexpr std::string_view kRdfXmlLiteral =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#XMLLiteral";
inline constexpr std::string_view kRdfFirst =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#first";
inline constexpr std::string_view kRdfRest =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#rest";
inline constexpr std::string_view kRdfNil =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#nil";

inline constexpr std::string_view kXsdString =
    "http://www.w3.org/2001/XMLSchema#string";
inline constexpr std::string_view kXsdInteger =
    "http://www.w3.org/2001/XMLSchema#integer";
inline constexpr std::string_view kXsdDecimal =
    "http://www.w3.org/2001/XMLSchema#decimal";
inline constexpr std::string_view kXsdDouble =
    "http://www.w3.org/2001/XMLSchema#double";
inline constexpr std::string_view kXsdBoolean =
    "http://www.w3.org/2001/XMLSchema#boolean";

inline constexpr std::string_view kRdfsLabel =
    "http://www.w3.org/2000/01/rdf-schema#label";
inline constexpr std::string_view kRdfsComment =
    "http://www.w3.org/2000/01/rdf-schema#comment";
inline constexpr std::string_view kRdfsSubClassOf =
    "http://www.w3.org/2000/01/rdf-schema#subClassOf";
inline constexpr std::string_view kRdfsSubPropertyOf =
    "http://www.w3.org/2000/01/rdf-schema#subPropertyOf";

inline constexpr std::string_view kOwlOntology =
    "http://www.w3.org/2002/07/owl#Ontology";
inline constexpr std::string_view kOwlImports =
    "http://www.w3.org/2002/07/owl#imports";
inline constexpr std::string_view kOwlClass =
    "http://www.w3.org/2002/07/owl#Class";
inline constexpr std::string_view kOwlThing =
    "http://www.w3.org/2002/07/owl#Thing";
inline constexpr std::string_view kOwlNothing =
    "http://www.w3.org/2002/07/owl#Nothing";
inline constexpr std::string_view kOwlObjectProperty =
    "http://www.w3.org/2002/07/owl#ObjectProperty";
inline constexpr std::string_view kOwlDatatypeProperty =
    "http://www.w3.org/2002/07/owl#DatatypeProperty";
inline constexpr std::string_view kOwlAnnotationProperty =
    "http://www.w3.org/2002/07/owl#AnnotationProperty";
inline constexpr std::string_view kOwlTransitiveProperty =
    "http://www.w3.org/2002/07/owl#TransitiveProperty";
inline constexpr std::string_view kOwlSymmetricProperty =
    "http://www.w3.org/2002/07/owl#SymmetricProperty";
inline constexpr std::string_view kOwlAsymmetricProperty =
    "http://www.w3.org/2002/07/owl#AsymmetricProperty";
inline constexpr std::string_view kOwlReflexiveProperty =
    "http://www.w3.org/2002/07/owl#ReflexiveProperty";
inline constexpr std::string_view kOwlIrreflexiveProperty =
    "http://www.w3.org/2002/07/owl#IrreflexiveProperty";
inline constexpr std::string_view kOwlInverseFunctionalProperty =
    "http://www.w3.org/2002/07/owl#InverseFunctionalProperty";
inline constexpr std::string_view kOwlEquivalentClass =
    "http://www.w3.org/2002/07/owl#equivalentClass";
inline constexpr std::string_view kOwlDisjointWith =
    "http://www.w3.org/2002/07/owl#disjointWith";
inline constexpr std::string_view kOwlEquivalentProperty =
    "http://www.w3.org/2002/07/owl#equivalentProperty";
inline constexpr std::string_view kOwlPropertyDisjointWith =
    "http://www.w3.org/2002/07/owl#propertyDisjointWith";
inline constexpr std::string_view kOwlInverseOf =
    "http://www.w3.org/2002/07/owl#inverseOf";
inline constexpr std::string_view kOwlSameAs =
    "http://www.w3.org/2002/07/owl#sameAs";
inline constexpr std::string_view kOwlRestriction =
    "http://www.w3.org/2002/07/owl#Restriction";
inline constexpr std::string_view kOwlOnProperty =
    "http://www.w3.org/2002/07/owl#onProperty";
inline constexpr std::string_view kOwlSomeValuesFrom =
    "http://www.w3.org/2002/07/owl#someValuesFrom";
inline constexpr std::string_view kOwlUnionOf =
    "http://www.w3.org/2002/07/owl#unionOf";
inline constexpr std::string_view kOwlDeprecated =
    "http://www.w3.org/2002/07/owl#deprecated";

inline constexpr std::string_view kSkosPrefLabel =
    "http://www.w3.org/2004/02/skos/core#prefLabel";
inline constexpr std::string_view kSkosAltLabel =
    "http://www.w3.org/2004/02/skos/core#altLabel";
inline constexpr std::string_view kSkosMappingRelation =
    "http://www.w3.org/2004/02/skos/core#mappingRelation";
inline constexpr std::string_view kSkosExactMatch =
    "http://www.w3.org/2004/02/skos/core#exactMatch";
inline constexpr std::string_view kSkosCloseMatch =
    "http://www.w3.org/2004/02/skos/core#closeMatch";
inline constexpr std::string_view kSkosBroadMatch =
    "http://www.w3.org/2004/02/skos/core#broadMatch";
inline constexpr std::string_view kSkosNarrowMatch =
    "http://www.w3.org/2004/02/skos/core#narrowMatch";
inline constexpr std::string_view kSkosRelatedMatch =
    "http://www.w3.org/2004/02/skos/core#relatedMatch";

inline constexpr std::string_view kOntolexLexicalEntry =
    "http://www.w3.org/ns/lemon/ontolex#LexicalEntry";
inline constexpr std::string_view kOntolexForm =
    "http://www.w3.org/ns/lemon/ontolex#Form";
inline constexpr std::string_view kOntolexLexicalSense =
    "http://www.w3.org/ns/lemon/ontolex#LexicalSense";
inline constexpr std::string_view kOntolexLexicalConcept =
    "http://www.w3.org/ns/lemon/ontolex#LexicalConcept";
inline constexpr std::string_view kOntolexCanonicalForm =
    "http://www.w3.org/ns/lemon/ontolex#canonicalForm";
inline constexpr std::string_view kOntolexOtherForm =
    "http://www.w3.org/ns/lemon/ontolex#otherForm";
inline constexpr std::string_view kOntolexLexicalForm =
    "http://www.w3.org/ns/lemon/ontolex#lexicalForm";
inline constexpr std::string_view kOntolexWrittenRep =
    "http://www.w3.org/ns/lemon/ontolex#writtenRep";
inline constexpr std::string_view kOntolexDenotes =
    "http://www.w3.org/ns/lemon/ontolex#denotes";
inline constexpr std::string_view kOntolexIsDenotedBy =
    "http://www.w3.org/ns/lemon/ontolex#isDenotedBy";
inline constexpr std::string_view kOntolexSense =
    "http://www.w3.org/ns/lemon/ontolex#sense";
inline constexpr std::string_view kOntolexIsSenseOf =
    "http://www.w3.org/ns/lemon/ontolex#isSenseOf";
inline constexpr std::string_view kOntolexReference =
    "http://www.w3.org/ns/lemon/ontolex#reference";
inline constexpr std::string_view kOntolexIsReferenceOf =
    "http://www.w3.org/ns/lemon/ontolex#isReferenceOf";
inline constexpr std::string_view kOntolexConcept =
    "http://www.w3.org/ns/lemon/ontolex#concept";
inline constexpr std::string_view kOntolexIsConceptOf =
    "http://www.w3.org/ns/lemon/ontolex#isConceptOf";
inline constexpr std::string_view kOntolexEvokes =
    "http://www.w3.org/ns/lemon/ontolex#evokes";
inline constexpr std::string_view kOntolexIsEvokedBy =
    "http://www.w3.org/ns/lemon/ontolex#isEvokedBy";
inline constexpr std::string_view kOntolexLexicalizedSense =
    "http://www.w3.org/ns/lemon/ontolex#lexicalizedSense";
inline constexpr std::string_view kOntolexIsLexicalizedSenseOf =
    "http://www.w3.org/ns/lemon/ontolex#isLexicalizedSenseOf";

inline constexpr std::string_view kDctermsLanguage =
    "http://purl.org/dc/terms/language";

inline constexpr std::string_view kLimeNs = "http://www.w3.org/ns/lemon/lime#";
inline constexpr std::string_view kLimeEntry =
    "http://www.w3.org/ns/lemon/lime#entry";
inline constexpr std::string_view kLimeLanguage =
    "http://www.w3.org/ns/lemon/lime#language";
inline constexpr std::string_view kLimeLexicon =
    "http://www.w3.org/ns/lemon/lime#Lexicon";
inline constexpr std::string_view kVartransNs =
    "http://www.w3.org/ns/lemon/vartrans#";

inline constexpr std::string_view kOwlIntersectionOf =
    "http://www.w3.org/2002/07/owl#intersectionOf";
inline constexpr std::string_view kOwlComplementOf =
    "http://www.w3.org/2002/07/owl#complementOf";
inline constexpr std::string_view kOwlOneOf =
    "http://www.w3.org/2002/07/owl#oneOf";
inline constexpr std::string_view kOwlAllValuesFrom =
    "http://www.w3.org/2002/07/owl#allValuesFrom";
inline constexpr std::string_view kOwlFunctionalProperty =
    "http://www.w3.org/2002/07/owl#FunctionalProperty";
inline constexpr std::string_view kOwlVersionIri =
    "http://www.w3.org/2002/07/owl#versionIRI";

}  // namespace ontoaudit::vocab

#endif  // ONTOAUDIT_RDF_VOCAB_H_
