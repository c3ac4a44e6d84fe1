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


#include "ontoaudit/gen/generator.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <string_view>
#include <tuple>

#include "ontoaudit/common/error.h"
#include "ontoaudit/lang/language_tag.h"
#include "ontoaudit/metrics/metrics.h"
#include "ontoaudit/rdf/iri.h"
#include "ontoaudit/rdf/parser.h"
#include "ontoaudit/rdf/vocab.h"

namespace ontoaudit::gen {
namespace {

using detect::Family;
using detect::Variant;
using rdf::Term;

constexpr std::array<std::string_view, 96> kWords = {
    "river",    "stream",   "sea",      "lake",     "mountain", "valley",
    "forest",   "field",    "city",     "village",  "road",     "bridge",
    "person",   "teacher",  "student",  "farmer",   "doctor",   "patient",
    "animal",   "plant",    "tree",     "flower",   "seed",     "root",
    "leaf",     "fruit",    "cell",     "tissue",   "organ",    "protein",
    "gene",     "sample",   "assay",    "device",   "sensor",   "signal",
    "process",  "event",    "activity", "role",     "function", "quality",
    "measure",  "unit",     "quantity", "volume",   "mass",     "length",
    "period",   "season",   "weather",  "climate",  "soil",     "water",
    "stone",    "metal",    "fabric",   "tool",     "machine",  "vehicle",
    "building", "room",     "door",     "window",   "market",   "price",
    "product",  "service",  "contract", "policy",   "law",      "court",
    "language", "word",     "sentence", "book",     "chapter",  "author",
    "song",     "dance",    "festival", "game",     "team",     "player",
    "school",   "lesson",   "course",   "exam",     "hospital", "disease",
    "symptom",  "therapy",  "drug",     "dose",     "journey",  "harbour",
};

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Raw engine output keeps results identical across standard libraries.
  std::uint64_t Below(std::uint64_t n) { return engine_() % n; }

 private:
  std::mt19937_64 engine_;
};

enum class Kind { kClass, kObjectProperty, kDataProperty };

struct Entity {
  Kind kind;
  std::string local;
  std::string words;  // label text in the primary language
};

std::string UpperFirst(std::string_view word) {
  std::string out(word);
  if (!out.empty() && out[0] >= 'a' && out[0] <= 'z') out[0] -= 'a' - 'A';
  return out;
}

std::string Base36(std::size_t value) {
  static constexpr char kDigits[] = "0123456789abcdefghijklmnopqrstuvwxyz";
  std::string out;
  do {
    out.insert(out.begin(), kDigits[value % 36]);
    value /= 36;
  } while (value > 0);
  return out;
}

std::string OpaqueCode(Rng& rng, std::size_t index) {
  std::string code;
  for (int i = 0; i < 3; ++i) code += static_cast<char>('0' + rng.Below(10));
  code += static_cast<char>('A' + rng.Below(26));
  code += static_cast<char>('a' + rng.Below(26));
  return code + Base36(index);
}

std::vector<std::string_view> PickWords(Rng& rng, std::size_t count) {
  std::vector<std::string_view> words;
  for (std::size_t i = 0; i < count; ++i) {
    words.push_back(kWords[rng.Below(kWords.size())]);
  }
  return words;
}

std::string Join(const std::vector<std::string_view>& words,
                 std::string_view separator) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i > 0) out += separator;
    out += words[i];
  }
  return out;
}

std::vector<Entity> MakeEntities(const GenerationSpec& spec, bool descriptive,
                                 Rng& rng) {
  std::vector<Entity> entities;
  std::set<std::string> used;
  auto add = [&](Kind kind) {
    Entity entity{kind, {}, {}};
    if (!descriptive) {
      const auto words = PickWords(rng, 1 + rng.Below(2));
      entity.words = Join(words, " ");
      entity.local = OpaqueCode(rng, entities.size());
    } else {
      // Draw longer phrases until the name is unused.
      for (std::size_t length = 1;; ++length) {
        auto words = PickWords(rng, std::min<std::size_t>(length, 4));
        if (length > 4) words.push_back(kWords[length % kWords.size()]);
        std::string local;
        if (kind != Kind::kClass) local = "has";
        for (std::string_view w : words) local += UpperFirst(w);
        if (used.insert(local).second) {
          entity.local = local;
          entity.words = (kind == Kind::kClass ? "" : "has ") + Join(words, " ");
          break;
        }
      }
    }
    entities.push_back(std::move(entity));
  };
  for (std::size_t i = 0; i < spec.classes; ++i) add(Kind::kClass);
  for (std::size_t i = 0; i < spec.object_properties; ++i) {
    add(Kind::kObjectProperty);
  }
  for (std::size_t i = 0; i < spec.data_properties; ++i) {
    add(Kind::kDataProperty);
  }
  return entities;
}

std::size_t LabelCount(const GenerationSpec& spec, const std::string& language,
                       std::size_t cov) {
  const auto it = spec.completeness.find(language);
  if (it == spec.completeness.end()) return cov;
  if (it->second.entities) return *it->second.entities;
  const double exact = it->second.fraction * static_cast<double>(cov);
  return static_cast<std::size_t>(std::ceil(exact - 1e-9));
}

std::string LabelText(const Entity& entity, std::size_t language_index,
                      const std::string& language) {
  if (language_index == 0) return entity.words;
  return entity.words + " (" + language + ")";
}

// Accumulates one document; terms are built from strings on the fly.
class DocumentBuilder {
 public:
  explicit DocumentBuilder(std::string name) : name_(std::move(name)) {}

  void Add(const std::string& s, std::string_view p, const std::string& o) {
    builder_.Add(Term::Iri(s), Term::Iri(std::string(p)), Term::Iri(o));
  }
  void AddType(const std::string& s, std::string_view type) {
    Add(s, vocab::kRdfType, std::string(type));
  }
  void AddText(const std::string& s, std::string_view p, std::string text,
               const std::string& language) {
    builder_.Add(Term::Iri(s), Term::Iri(std::string(p)),
                 Term::LangLiteral(std::move(text), language));
  }
  void AddTerm(const Term& s, std::string_view p, const Term& o) {
    builder_.Add(s, Term::Iri(std::string(p)), o);
  }

  Document Build() && {
    return Document{std::move(name_), std::move(builder_).Build()};
  }

 private:
  std::string name_;
  rdf::GraphBuilder builder_;
};

std::string_view TypeOf(Kind kind) {
  switch (kind) {
    case Kind::kClass: return vocab::kOwlClass;
    case Kind::kObjectProperty: return vocab::kOwlObjectProperty;
    case Kind::kDataProperty: return vocab::kOwlDatatypeProperty;
  }
  return vocab::kOwlClass;
}

void Declare(DocumentBuilder& doc, const std::string& iri, Kind kind) {
  doc.AddType(iri, TypeOf(kind));
  if (kind == Kind::kClass) {
    doc.Add(iri, vocab::kRdfsSubClassOf, std::string(vocab::kOwlThing));
  }
}

std::string LexvoIri(const std::string& language) {
  return "http://lexvo.org/id/iso639-1/" + language;
}

bool IsSafeName(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '-' || c == '_';
  });
}

[[noreturn]] void Invalid(const std::string& message) {
  throw Error(ErrorCode::kInvalidSpec, message);
}

struct Context {
  const GenerationSpec& spec;
  std::vector<Entity> entities;
  std::string root;  // base_iri + name
  std::vector<std::size_t> counts;  // labeled entities per language
};

void Bridge(const Context& ctx, DocumentBuilder& bridge,
            const std::vector<std::string>& iris, std::string_view predicate) {
  const std::size_t n = iris.size();
  if (ctx.spec.mapping_mode == MappingMode::kNary) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      bridge.Add(iris[i], predicate, iris[i + 1]);
    }
    return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      bridge.Add(iris[i], predicate, iris[j]);
    }
  }
}

void GenerateLabels(const Context& ctx, Corpus& corpus) {
  const GenerationSpec& spec = ctx.spec;
  DocumentBuilder doc("ontology");
  const std::string ns = ctx.root + "#";
  doc.AddType(ctx.root, vocab::kOwlOntology);
  for (const Entity& e : ctx.entities) Declare(doc, ns + e.local, e.kind);
  for (std::size_t j = 0; j < spec.languages.size(); ++j) {
    const std::string& language = spec.languages[j];
    std::string_view property = vocab::kRdfsLabel;
    if (j == 0 && spec.variant == Variant::kLabelsPrimaryOpaque) {
      property = vocab::kSkosPrefLabel;
    }
    for (std::size_t i = 0; i < ctx.counts[j]; ++i) {
      const Entity& e = ctx.entities[i];
      doc.AddText(ns + e.local, property, LabelText(e, j, language), language);
    }
  }
  if (spec.classes > 0) {
    for (const std::size_t count : ctx.counts) {
      if (count > 0) ++corpus.manifest.annotation_assertions_per_class;
    }
  }
  corpus.documents.push_back(std::move(doc).Build());
}

void GenerateLinguistic(const Context& ctx, Corpus& corpus) {
  const GenerationSpec& spec = ctx.spec;
  const bool senses = spec.variant == Variant::kLinguisticSenses;
  DocumentBuilder ontology("ontology");
  const std::string ns = ctx.root + "#";
  ontology.AddType(ctx.root, vocab::kOwlOntology);
  for (const Entity& e : ctx.entities) Declare(ontology, ns + e.local, e.kind);

  std::vector<Document> lexicons;
  for (std::size_t j = 0; j < spec.languages.size(); ++j) {
    const std::string& language = spec.languages[j];
    DocumentBuilder lexicon("lexicon-" + language);
    const std::string lex_ns = ctx.root + "/lexicon/" + language + "/";
    const std::string lexicon_iri = lex_ns + "lexicon";
    lexicon.AddType(lexicon_iri, vocab::kLimeLexicon);
    lexicon.AddTerm(Term::Iri(lexicon_iri), vocab::kLimeLanguage,
                    Term::Literal(language));
    for (std::size_t i = 0; i < ctx.counts[j]; ++i) {
      const Entity& e = ctx.entities[i];
      const std::string text = LabelText(e, j, language);
      const std::string entry = lex_ns + "lexicalEntry_" + e.local;
      const std::string form = lex_ns + "lexicalEntry_form_" + e.local;
      lexicon.Add(lexicon_iri, vocab::kLimeEntry, entry);
      lexicon.AddType(entry, vocab::kOntolexLexicalEntry);
      lexicon.Add(entry, vocab::kDctermsLanguage, LexvoIri(language));
      lexicon.AddText(entry, vocab::kRdfsLabel, text, language);
      lexicon.Add(entry, vocab::kOntolexCanonicalForm, form);
      lexicon.AddType(form, vocab::kOntolexForm);
      lexicon.AddText(form, vocab::kOntolexWrittenRep, text, language);
      ontology.Add(ns + e.local, vocab::kOntolexIsDenotedBy, entry);
      if (senses) {
        const std::string sense = entry + "_sense1";
        lexicon.Add(entry, vocab::kOntolexSense, sense);
        lexicon.AddType(sense, vocab::kOntolexLexicalSense);
        lexicon.Add(sense, vocab::kOntolexReference, ns + e.local);
      }
    }
    lexicons.push_back(std::move(lexicon).Build());
  }
  corpus.documents.push_back(std::move(ontology).Build());
  for (Document& d : lexicons) corpus.documents.push_back(std::move(d));
}

void GenerateMapping(const Context& ctx, Corpus& corpus) {
  const GenerationSpec& spec = ctx.spec;
  const std::size_t n = spec.languages.size();
  const Variant variant = spec.variant;
  DocumentBuilder bridge("bridge");
  const std::string bridge_iri = ctx.root + "/bridge";
  bridge.AddType(bridge_iri, vocab::kOwlOntology);

  auto entity_iri = [&](std::size_t j, const Entity& e) {
    return ctx.root + "/" + spec.languages[j] + "#" + e.local;
  };
  auto label_iri = [&](std::size_t j, const Entity& e) {
    return ctx.root + "/" + spec.languages[j] + "/label/" + e.local;
  };
  auto entry_iri = [&](std::size_t j, const Entity& e) {
    return ctx.root + "/lexicon/" + spec.languages[j] + "/lexicalEntry_" +
           e.local;
  };
  auto hub_iri = [&](std::size_t i) {
    std::string digits = std::to_string(i + 1);
    if (digits.size() < 9) digits.insert(0, 9 - digits.size(), '0');
    return ctx.root + "/lexicalConcepts/" + digits;
  };

  for (std::size_t j = 0; j < n; ++j) {
    const std::string& language = spec.languages[j];
    DocumentBuilder doc("ontology-" + language);
    const std::string root = ctx.root + "/" + language;
    doc.AddType(root, vocab::kOwlOntology);
    for (std::size_t i = 0; i < ctx.entities.size(); ++i) {
      const Entity& e = ctx.entities[i];
      const std::string iri = entity_iri(j, e);
      Declare(doc, iri, e.kind);
      if (variant == Variant::kMappingLexicalConcepts) {
        doc.Add(iri, vocab::kOntolexConcept, hub_iri(i));
      }
      if (i >= ctx.counts[j]) continue;
      const std::string text = LabelText(e, 0, language);
      if (variant == Variant::kMappingAnnotation) {
        doc.Add(iri, vocab::kRdfsLabel, label_iri(j, e));
        doc.AddText(label_iri(j, e), vocab::kRdfsLabel, text, language);
      } else {
        doc.AddText(iri, vocab::kRdfsLabel, text, language);
      }
    }
    corpus.documents.push_back(std::move(doc).Build());
  }

  Manifest& m = corpus.manifest;
  const bool nary = spec.mapping_mode == MappingMode::kNary;
  const std::size_t links = nary ? (n - 1) : n * (n - 1) / 2;
  for (std::size_t i = 0; i < ctx.entities.size(); ++i) {
    const Entity& e = ctx.entities[i];
    std::vector<std::string> iris;
    switch (variant) {
      case Variant::kMappingTbox:
        for (std::size_t j = 0; j < n; ++j) iris.push_back(entity_iri(j, e));
        Bridge(ctx, bridge, iris,
               e.kind == Kind::kClass ? vocab::kOwlEquivalentClass
                                      : vocab::kOwlEquivalentProperty);
        break;
      case Variant::kMappingAnnotation:
        for (std::size_t j = 0; j < n; ++j) {
          if (i < ctx.counts[j]) iris.push_back(label_iri(j, e));
        }
        Bridge(ctx, bridge, iris, vocab::kOwlSameAs);
        break;
      case Variant::kMappingIli:
        for (std::size_t j = 0; j < n; ++j) {
          bridge.Add(entity_iri(j, e), vocab::kOwlSameAs,
                     "http://ili.example.org/ili/i" + std::to_string(i + 1));
        }
        break;
      case Variant::kMappingLexicalConcepts: {
        const std::string hub = hub_iri(i);
        bridge.AddType(hub, vocab::kOntolexLexicalConcept);
        for (std::size_t j = 0; j < n; ++j) {
          bridge.Add(hub, vocab::kOntolexLexicalizedSense,
                     entry_iri(j, e) + "_sense1");
          bridge.Add(hub, vocab::kOntolexIsEvokedBy, entry_iri(j, e));
        }
        break;
      }
      default:
        break;
    }
  }
  switch (variant) {
    case Variant::kMappingTbox:
    case Variant::kMappingAnnotation:
      m.mapping_axioms_per_class = nary ? 1 : links;
      m.mapping_triples_per_class = links;
      m.mapping_mode = nary ? "nary" : "pairwise";
      break;
    case Variant::kMappingIli:
      m.mapping_axioms_per_class = n;
      m.mapping_triples_per_class = n;
      break;
    case Variant::kMappingLexicalConcepts:
      // Hub typing plus one sense and one entry link per language, and the
      // concept link in each monolingual ontology.
      m.mapping_axioms_per_class = 1 + 3 * n;
      m.mapping_triples_per_class = 1 + 3 * n;
      break;
    default:
      break;
  }
  corpus.documents.push_back(std::move(bridge).Build());
}

void FillManifest(const Context& ctx, Corpus& corpus) {
  const GenerationSpec& spec = ctx.spec;
  Manifest& m = corpus.manifest;
  m.name = spec.name;
  m.variant = spec.variant;
  m.seed = spec.seed;
  const std::size_t base = ctx.entities.size();
  const bool mapping = detect::FamilyOf(spec.variant) == Family::kMappingModel;
  const std::size_t copies = mapping ? spec.languages.size() : 1;
  m.cov = base * copies;
  m.classes = spec.classes * copies;
  m.object_properties = spec.object_properties * copies;
  m.data_properties = spec.data_properties * copies;
  std::vector<std::pair<std::string, std::size_t>> nonzero;
  for (std::size_t j = 0; j < spec.languages.size(); ++j) {
    m.labeled.emplace_back(spec.languages[j], ctx.counts[j]);
    if (ctx.counts[j] > 0) nonzero.emplace_back(spec.languages[j], ctx.counts[j]);
  }
  if (m.cov > 0 && !nonzero.empty()) {
    const metrics::CompletenessProfile profile =
        metrics::ProfileFromCounts(m.cov, nonzero);
    for (const lang::LanguageTag& tag : metrics::PrimaryLanguages(profile)) {
      m.primary_languages.push_back(tag.Display());
    }
  }
  for (const Document& d : corpus.documents) {
    m.triples_per_document.emplace_back(d.name, d.graph.size());
  }
}

}  // namespace

double Manifest::Lcom(std::size_t index) const {
  if (cov == 0 || index >= labeled.size()) return 0;
  return 100.0 * static_cast<double>(labeled[index].second) /
         static_cast<double>(cov);
}

void ValidateSpec(const GenerationSpec& spec) {
  if (!IsSafeName(spec.name)) {
    Invalid("name: expected letters, digits, '-' or '_', got '" + spec.name +
            "'");
  }
  if (spec.variant == Variant::kUndetermined) {
    Invalid("variant: must be one of the nine modelling variants");
  }
  if (spec.languages.empty()) Invalid("languages: must not be empty");
  std::set<std::string> keys;
  for (const std::string& language : spec.languages) {
    const lang::LanguageTag tag = lang::ParseTag(language);
    if (!tag.well_formed) {
      Invalid("languages: '" + language + "' is not a well-formed tag");
    }
    if (!IsSafeName(language)) {
      Invalid("languages: '" + language + "' cannot be used in a file name");
    }
    if (!keys.insert(tag.Key()).second) {
      Invalid("languages: duplicate tag '" + language + "'");
    }
  }
  const std::size_t cov =
      spec.classes + spec.object_properties + spec.data_properties;
  for (const auto& [language, completeness] : spec.completeness) {
    if (std::find(spec.languages.begin(), spec.languages.end(), language) ==
        spec.languages.end()) {
      Invalid("completeness: '" + language + "' is not in languages");
    }
    if (completeness.entities) {
      if (*completeness.entities > cov) {
        Invalid("completeness: " + language + " labels more entities than " +
                "the " + std::to_string(cov) + " declared");
      }
    } else if (!(completeness.fraction >= 0 && completeness.fraction <= 1)) {
      Invalid("completeness: " + language + " fraction outside [0, 1]");
    }
  }
  if (!rdf::IsAbsoluteIri(spec.base_iri) ||
      !(spec.base_iri.ends_with('/') || spec.base_iri.ends_with('#'))) {
    Invalid("base_iri: expected an absolute IRI ending in '/' or '#'");
  }
  const Family family = detect::FamilyOf(spec.variant);
  if (family == Family::kMappingModel && spec.languages.size() < 2) {
    Invalid("languages: a mapping variant needs at least two languages");
  }
  if (spec.variant == Variant::kLabelsLanguageIndependent ||
      spec.variant == Variant::kLabelsPrimaryOpaque) {
    // Opaque identifiers need at least one label on every entity.
    std::size_t widest = 0;
    for (const std::string& language : spec.languages) {
      widest = std::max(widest, LabelCount(spec, language, cov));
    }
    if (widest < cov) {
      Invalid("completeness: opaque identifiers require a label on every "
              "entity in at least one language");
    }
  }
}

Corpus Generate(const GenerationSpec& spec) {
  ValidateSpec(spec);
  Rng rng(spec.seed);
  const bool descriptive = spec.variant == Variant::kLabelsPrimaryDescriptive;
  Context ctx{spec, MakeEntities(spec, descriptive, rng),
              spec.base_iri + spec.name, {}};
  for (const std::string& language : spec.languages) {
    ctx.counts.push_back(LabelCount(spec, language, ctx.entities.size()));
  }
  Corpus corpus;
  switch (detect::FamilyOf(spec.variant)) {
    case Family::kLabels: GenerateLabels(ctx, corpus); break;
    case Family::kLinguisticModel: GenerateLinguistic(ctx, corpus); break;
    case Family::kMappingModel: GenerateMapping(ctx, corpus); break;
    case Family::kNone: break;
  }
  FillManifest(ctx, corpus);
  return corpus;
}

Corpus GenerateInflectionShowcase() {
  static constexpr std::string_view kLexinfo =
      "http://www.lexinfo.net/ontology/3.0/lexinfo#";
  const std::string root = "http://example.org/generated/inflection";
  const std::string ns = root + "#";
  const std::string lexinfo(kLexinfo);
  struct Lexeme {
    std::string language;
    std::string entity;
    std::string lemma;
    std::string tag;    // lexinfo value: a gender or a number
    std::string other;  // an alternate written form, if any
  };
  // Spanish marks gender on the noun; isiZulu and isiXhosa mark number
  // with a noun-class prefix, given here as a fixed plural form.
  const std::vector<Lexeme> lexemes = {
      {"es", "738Tq0", "profesor", "masculine", ""},
      {"es", "738Tq0", "profesora", "feminine", ""},
      {"es", "204Kv1", "estudiante", "commonGender", ""},
      {"zu", "738Tq0", "uthisha", "singular", "othisha"},
      {"zu", "204Kv1", "umfundi", "singular", "abafundi"},
      {"xh", "738Tq0", "utitshala", "singular", "ootitshala"},
      {"xh", "204Kv1", "umfundi", "singular", "abafundi"},
  };
  Corpus corpus;
  DocumentBuilder ontology("ontology");
  ontology.AddType(root, vocab::kOwlOntology);
  Declare(ontology, ns + "738Tq0", Kind::kClass);
  Declare(ontology, ns + "204Kv1", Kind::kClass);
  std::vector<Document> lexicons;
  for (const std::string language : {"es", "xh", "zu"}) {
    DocumentBuilder lexicon("lexicon-" + language);
    const std::string lex_ns = root + "/lexicon/" + language + "/";
    const std::string lexicon_iri = lex_ns + "lexicon";
    lexicon.AddType(lexicon_iri, vocab::kLimeLexicon);
    lexicon.AddTerm(Term::Iri(lexicon_iri), vocab::kLimeLanguage,
                    Term::Literal(language));
    for (const Lexeme& x : lexemes) {
      if (x.language != language) continue;
      const std::string entry = lex_ns + "lexicalEntry_" + x.lemma;
      const std::string form = lex_ns + "lexicalEntry_form_" + x.lemma;
      const std::string gender_or_number =
          x.language == "es" ? lexinfo + "gender" : lexinfo + "number";
      lexicon.Add(lexicon_iri, vocab::kLimeEntry, entry);
      lexicon.AddType(entry, vocab::kOntolexLexicalEntry);
      lexicon.Add(entry, vocab::kDctermsLanguage, LexvoIri(language));
      lexicon.Add(entry, vocab::kOntolexCanonicalForm, form);
      lexicon.AddType(form, vocab::kOntolexForm);
      lexicon.AddText(form, vocab::kOntolexWrittenRep, x.lemma, language);
      lexicon.Add(form, gender_or_number, lexinfo + x.tag);
      if (!x.other.empty()) {
        const std::string plural = lex_ns + "lexicalEntry_form_" + x.other;
        lexicon.Add(entry, vocab::kOntolexOtherForm, plural);
        lexicon.AddType(plural, vocab::kOntolexForm);
        lexicon.AddText(plural, vocab::kOntolexWrittenRep, x.other,
                        language);
        lexicon.Add(plural, lexinfo + "number", lexinfo + "plural");
      }
      ontology.Add(ns + x.entity, vocab::kOntolexIsDenotedBy, entry);
    }
    lexicons.push_back(std::move(lexicon).Build());
  }
  corpus.documents.push_back(std::move(ontology).Build());
  for (Document& d : lexicons) corpus.documents.push_back(std::move(d));

  Manifest& m = corpus.manifest;
  m.name = "inflection";
  m.variant = Variant::kLinguisticEntries;
  m.cov = 2;
  m.classes = 2;
  m.labeled = {{"es", 2}, {"xh", 2}, {"zu", 2}};
  m.primary_languages = {"es", "xh", "zu"};
  for (const Document& d : corpus.documents) {
    m.triples_per_document.emplace_back(d.name, d.graph.size());
  }
  return corpus;
}

Corpus GenerateRiverShowcase() {
  namespace v = vocab;
  const std::string root = "http://example.org/generated/river";
  const std::string ns = root + "#";
  const Term river = Term::Iri(ns + "River");
  const Term riviere = Term::Iri(ns + "Riviere");
  const Term fleuve = Term::Iri(ns + "Fleuve");
  const Term sea = Term::Iri(ns + "Sea");
  const Term flows_into = Term::Iri(ns + "flowsInto");
  auto blank = [](int i) { return Term::Blank("b" + std::to_string(i)); };
  auto iri = [](std::string_view s) { return Term::Iri(std::string(s)); };

  DocumentBuilder doc("ontology");
  doc.AddType(root, v::kOwlOntology);
  for (const Term* c : {&river, &riviere, &fleuve, &sea}) {
    doc.AddTerm(*c, v::kRdfType, iri(v::kOwlClass));
  }
  doc.AddTerm(flows_into, v::kRdfType, iri(v::kOwlObjectProperty));

  // Riviere is a river flowing into a riviere or a fleuve.
  doc.AddTerm(riviere, v::kRdfsSubClassOf, river);
  doc.AddTerm(riviere, v::kRdfsSubClassOf, blank(0));
  doc.AddTerm(blank(0), v::kRdfType, iri(v::kOwlRestriction));
  doc.AddTerm(blank(0), v::kOwlOnProperty, flows_into);
  doc.AddTerm(blank(0), v::kOwlSomeValuesFrom, blank(1));
  doc.AddTerm(blank(1), v::kRdfType, iri(v::kOwlClass));
  doc.AddTerm(blank(1), v::kOwlUnionOf, blank(2));
  doc.AddTerm(blank(2), v::kRdfFirst, riviere);
  doc.AddTerm(blank(2), v::kRdfRest, blank(3));
  doc.AddTerm(blank(3), v::kRdfFirst, fleuve);
  doc.AddTerm(blank(3), v::kRdfRest, iri(v::kRdfNil));
  // Fleuve is a river flowing into the sea.
  doc.AddTerm(fleuve, v::kRdfsSubClassOf, river);
  doc.AddTerm(fleuve, v::kRdfsSubClassOf, blank(4));
  doc.AddTerm(blank(4), v::kRdfType, iri(v::kOwlRestriction));
  doc.AddTerm(blank(4), v::kOwlOnProperty, flows_into);
  doc.AddTerm(blank(4), v::kOwlSomeValuesFrom, sea);
  // The two are disjoint.
  doc.AddTerm(riviere, v::kRdfsSubClassOf, blank(5));
  doc.AddTerm(blank(5), v::kRdfType, iri(v::kOwlClass));
  doc.AddTerm(blank(5), v::kOwlComplementOf, fleuve);

  const std::vector<std::tuple<const Term*, std::string, std::string>> labels = {
      {&river, "river", "en"},         {&sea, "sea", "en"},
      {&flows_into, "flows into", "en"}, {&river, "cours d'eau", "fr"},
      {&riviere, "rivière", "fr"},     {&fleuve, "fleuve", "fr"},
      {&sea, "mer", "fr"},             {&flows_into, "se jette dans", "fr"},
  };
  for (const auto& [entity, text, language] : labels) {
    doc.AddTerm(*entity, v::kRdfsLabel, Term::LangLiteral(text, language));
  }

  Corpus corpus;
  corpus.documents.push_back(std::move(doc).Build());
  Manifest& m = corpus.manifest;
  m.name = "river";
  m.variant = Variant::kLabelsPrimaryDescriptive;
  m.cov = 5;
  m.classes = 4;
  m.object_properties = 1;
  m.labeled = {{"en", 3}, {"fr", 5}};
  m.primary_languages = {"fr"};
  m.annotation_assertions_per_class = 2;
  m.triples_per_document.emplace_back("ontology", corpus.documents[0].graph.size());
  return corpus;
}

std::vector<std::filesystem::path> EmitNTriples(
    const Corpus& corpus, const std::filesystem::path& directory) {
  std::error_code ec;
  std::filesystem::create_directories(directory, ec);
  if (ec) {
    throw Error(ErrorCode::kIoError, "cannot create '" + directory.string() +
                                         "': " + ec.message());
  }
  auto write = [](const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
    out.close();
    if (!out) {
      throw Error(ErrorCode::kIoError, "cannot write '" + path.string() + "'");
    }
  };
  std::vector<std::filesystem::path> paths;
  for (const Document& d : corpus.documents) {
    paths.push_back(directory / (d.name + ".nt"));
    write(paths.back(), rdf::SerializeNTriples(d.graph));
  }
  paths.push_back(directory / "manifest.json");
  write(paths.back(), ManifestJson(corpus.manifest));
  return paths;
}

std::vector<std::string> ValidateSenseCardinality(const rdf::Graph& graph) {
  namespace v = vocab;
  std::map<std::string, std::set<std::string>> entries;
  std::map<std::string, std::set<std::string>> references;
  std::set<std::string> senses;
  graph.ForEach([&](const Term& s, const Term& p, const Term& o) {
    const std::string& pred = p.value;
    if (pred == v::kRdfType && o.value == v::kOntolexLexicalSense) {
      senses.insert(s.value);
    } else if (pred == v::kOntolexSense) {
      senses.insert(o.value);
      entries[o.value].insert(s.value);
    } else if (pred == v::kOntolexIsSenseOf) {
      senses.insert(s.value);
      entries[s.value].insert(o.value);
    } else if (pred == v::kOntolexReference) {
      senses.insert(s.value);
      references[s.value].insert(o.value);
    } else if (pred == v::kOntolexIsReferenceOf) {
      senses.insert(o.value);
      references[o.value].insert(s.value);
    }
  });
  std::vector<std::string> violations;
  for (const std::string& sense : senses) {
    const std::size_t e = entries.contains(sense) ? entries[sense].size() : 0;
    const std::size_t r =
        references.contains(sense) ? references[sense].size() : 0;
    if (e != 1) {
      violations.push_back(sense + ": linked to " + std::to_string(e) +
                           " lexical entries, expected 1");
    }
    if (r != 1) {
      violations.push_back(sense + ": has " + std::to_string(r) +
                           " references, expected 1");
    }
  }
  return violations;
}

std::vector<std::string> ValidatePrefLabelUniqueness(const rdf::Graph& graph) {
  std::map<std::pair<std::string, std::string>, std::set<std::string>> values;
  graph.ForEach([&](const Term& s, const Term& p, const Term& o) {
    if (p.value != vocab::kSkosPrefLabel || !o.is_literal()) return;
    const std::string key =
        o.language.empty() ? std::string() : lang::ParseTag(o.language).Key();
    values[{s.value, key}].insert(o.value);
  });
  std::vector<std::string> violations;
  for (const auto& [key, texts] : values) {
    if (texts.size() <= 1) continue;
    const std::string language =
        key.second.empty() ? std::string("no language") : key.second.substr(2);
    violations.push_back(key.first + ": " + std::to_string(texts.size()) +
                         " skos:prefLabel values in " + language);
  }
  return violations;
}

std::vector<GenerationSpec> ReferenceSpecs(std::uint64_t seed) {
  std::vector<GenerationSpec> specs;
  auto add = [&](Variant variant, std::vector<std::string> languages) {
    GenerationSpec spec;
    spec.name = "reference-" + std::string(detect::VariantName(variant));
    spec.variant = variant;
    spec.languages = std::move(languages);
    spec.classes = 12;
    spec.object_properties = 4;
    spec.data_properties = 2;
    spec.seed = seed + specs.size();
    specs.push_back(std::move(spec));
    return &specs.back();
  };
  add(Variant::kLabelsLanguageIndependent, {"en", "nl"});
  for (const Variant v :
       {Variant::kLabelsPrimaryDescriptive, Variant::kLabelsPrimaryOpaque}) {
    GenerationSpec* spec = add(v, {"en", "fr", "de"});
    spec->completeness["fr"] = Completeness{0.5, std::nullopt};
    spec->completeness["de"] = Completeness{0.25, std::nullopt};
  }
  add(Variant::kLinguisticEntries, {"en", "nl"});
  add(Variant::kLinguisticSenses, {"en", "nl"});
  add(Variant::kMappingTbox, {"en", "nl", "zu"});
  add(Variant::kMappingAnnotation, {"en", "nl"});
  add(Variant::kMappingIli, {"en", "nl"});
  add(Variant::kMappingLexicalConcepts, {"en", "nl"});
  return specs;
}

GenerationSpec ExampleOneSpec() {
  GenerationSpec spec;
  spec.name = "example-1";
  spec.variant = Variant::kLabelsPrimaryDescriptive;
  spec.languages = {"en", "fr", "de"};
  spec.classes = 50;
  spec.object_properties = 10;
  spec.data_properties = 5;
  spec.completeness["en"] = Completeness{0, 60};
  spec.completeness["fr"] = Completeness{0, 50};
  spec.completeness["de"] = Completeness{0, 30};
  spec.seed = 1;
  return spec;
}

}  // namespace ontoaudit::gen
