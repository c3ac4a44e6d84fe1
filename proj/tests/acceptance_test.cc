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


// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails. Runs without network access.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "ontoaudit/audit/audit.h"
#include "ontoaudit/common/error.h"
#include "ontoaudit/gen/generator.h"
#include "ontoaudit/harvest/harvest.h"
#include "ontoaudit/harvest/transport.h"
#include "ontoaudit/metrics/metrics.h"
#include "ontoaudit/owl/signature.h"
#include "ontoaudit/rdf/parser.h"
#include "ontoaudit/rdf/vocab.h"
#include "ontoaudit/report/report.h"
#include "tests/oracle.h"
#include "tools/cli.h"

namespace ontoaudit {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

const fs::path kFixtures = ONTOAUDIT_FIXTURE_DIR;

// Collects the failed checks of one criterion.
class Checks {
 public:
  void Expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok) failures_.push_back(what);
  }
  template <typename A, typename B>
  void Equal(const A& actual, const B& expected, const std::string& what) {
    std::ostringstream s;
    s << what << ": got " << actual << ", want " << expected;
    Expect(actual == expected, s.str());
  }
  void Near(double actual, double expected, double tolerance,
            const std::string& what) {
    std::ostringstream s;
    s << what << ": got " << actual << ", want " << expected << " +/- "
      << tolerance;
    Expect(std::fabs(actual - expected) <= tolerance, s.str());
  }
  void Note(std::string note) { notes_.push_back(std::move(note)); }

  bool ok() const { return failures_.empty(); }
  int count() const { return count_; }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  int count_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

fs::path TempDir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("ontoaudit_accept_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

audit::AuditResult AuditCorpus(const gen::Corpus& corpus,
                               const std::string& name) {
  std::vector<fs::path> files = gen::EmitNTriples(corpus, TempDir(name));
  files.erase(std::remove_if(files.begin(), files.end(),
                             [](const fs::path& p) {
                               return p.filename() == "manifest.json";
                             }),
              files.end());
  return audit::AuditFiles(files, name);
}

double Lcom(const metrics::CompletenessProfile& p, const std::string& tag) {
  const metrics::LanguageStat* s = p.Find(lang::ParseTag(tag));
  return s ? s->lcom : -1;
}

std::string Joined(const std::vector<std::string>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i];
  return out + "}";
}

// Example 1.
void ExampleOne(Checks& c) {
  const audit::AuditResult r =
      AuditCorpus(gen::Generate(gen::ExampleOneSpec()), "example1");
  c.Expect(r.ok(), "audit succeeded");
  if (!r.ok()) return;
  c.Equal(r.profile.cov, 65u, "Cov");
  c.Equal(metrics::RoundHalfUp(Lcom(r.profile, "en"), 1), 92.3, "LCom en");
  c.Equal(metrics::RoundHalfUp(Lcom(r.profile, "fr"), 1), 76.9, "LCom fr");
  c.Equal(metrics::RoundHalfUp(Lcom(r.profile, "de"), 1), 46.2, "LCom de");
  c.Equal(Joined(r.primary_languages), std::string("{en}"), "PL");
}

// Nine-variant round trip.
void NineVariants(Checks& c) {
  const std::vector<gen::GenerationSpec> specs = gen::ReferenceSpecs();
  c.Equal(specs.size(), 9u, "reference specs");
  int family_hits = 0;
  for (const gen::GenerationSpec& spec : specs) {
    const gen::Corpus corpus = gen::Generate(spec);
    const audit::AuditResult r = AuditCorpus(corpus, spec.name);
    c.Expect(r.ok(), spec.name + " audited");
    if (!r.ok()) continue;
    if (r.approach.family == detect::FamilyOf(spec.variant)) ++family_hits;
    c.Expect(r.approach.variant == spec.variant,
             spec.name + " variant " +
                 std::string(detect::VariantName(r.approach.variant)));
    c.Expect(!r.approach.needs_human_review, spec.name + " review flag");
    c.Equal(r.profile.cov, corpus.manifest.cov, spec.name + " Cov");
    for (std::size_t i = 0; i < corpus.manifest.labeled.size(); ++i) {
      const std::string& tag = corpus.manifest.labeled[i].first;
      c.Equal(Lcom(r.profile, tag), corpus.manifest.Lcom(i),
              spec.name + " LCom " + tag);
    }
  }
  c.Equal(family_hits, 9, "family accuracy");
}

// Threshold behavior on the OM and CL rows.
metrics::CompletenessProfile LabelsFixture(
    std::size_t cov, std::vector<std::pair<std::string, std::size_t>> counts) {
  gen::GenerationSpec spec;
  spec.name = "threshold";
  spec.variant = detect::Variant::kLabelsPrimaryDescriptive;
  spec.classes = cov;
  for (const auto& [tag, n] : counts) {
    spec.languages.push_back(tag);
    spec.completeness[tag].entities = n;
  }
  const gen::Corpus corpus = gen::Generate(spec);
  const rdf::Graph& g = corpus.documents.at(0).graph;
  const owl::Signature s = owl::ExtractSignature(g);
  return metrics::ComputeProfile(s, owl::CollectAnnotations(g, s));
}

void Thresholds(Checks& c) {
  const metrics::CompletenessProfile om =
      LabelsFixture(833, {{"en", 282}, {"ja", 17}});
  c.Equal(metrics::RoundHalfUp(Lcom(om, "en"), 1), 33.9, "OM en");
  c.Equal(metrics::RoundHalfUp(Lcom(om, "ja"), 1), 2.0, "OM ja");
  c.Expect(metrics::ClassifyMultilingual(om, 0), "OM multilingual at 0");
  c.Expect(!metrics::ClassifyMultilingual(om, 5), "OM monolingual at 5");

  const metrics::CompletenessProfile cl =
      LabelsFixture(16846, {{"en", 219}, {"zh", 17}});
  c.Equal(metrics::RoundHalfUp(Lcom(cl, "en"), 1), 1.3, "CL en");
  c.Equal(metrics::RoundHalfUp(Lcom(cl, "zh"), 1), 0.1, "CL zh");
  c.Expect(metrics::ClassifyMultilingual(cl, 0), "CL multilingual at 0");
  c.Expect(!metrics::ClassifyMultilingual(cl, 5), "CL monolingual at 5");

  std::set<std::string> dropped;
  for (const audit::AuditResult& r :
       audit::ReadResultsFile(kFixtures / "results/bioportal.jsonl")) {
    if (metrics::ClassifyMultilingual(r.profile, 0) &&
        !metrics::ClassifyMultilingual(r.profile, 5)) {
      dropped.insert(r.ontology_id);
    }
  }
  const std::set<std::string> expected = {"CL",   "EUPATH", "MOSAIC", "OBI",
                                          "OBIB", "OCMR",   "OM"};
  c.Expect(dropped == expected,
           "dropouts " +
               Joined(std::vector<std::string>(dropped.begin(), dropped.end())));
}

// Dataset comparison from the encoded per-ontology results.
struct OracleRow {
  std::size_t ontologies = 0;
  std::size_t multilingual = 0;
  double pct = 0;
  double mean = 0;
  double median = 0;
  std::uint64_t total = 0;
};

// Recomputes the comparison straight from the raw JSON lines: an ontology is
// multilingual when at least two languages have completeness above T.
OracleRow Oracle(const fs::path& path, double threshold) {
  OracleRow row;
  std::ifstream in(path);
  std::string line;
  std::vector<double> covs;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const Json j = Json::parse(line);
    ++row.ontologies;
    int above = 0;
    for (const auto& [tag, value] : j["profile"]["per_language"].items()) {
      if (value.get<double>() > threshold) ++above;
    }
    if (above >= 2) covs.push_back(j["profile"]["cov"].get<double>());
  }
  row.multilingual = covs.size();
  row.pct = 100.0 * covs.size() / row.ontologies;
  for (double v : covs) row.total += static_cast<std::uint64_t>(v);
  row.mean = covs.empty() ? 0 : row.total / static_cast<double>(covs.size());
  std::sort(covs.begin(), covs.end());
  const std::size_t n = covs.size();
  if (n > 0) {
    row.median = n % 2 ? covs[n / 2] : (covs[n / 2 - 1] + covs[n / 2]) / 2;
  }
  return row;
}

void Aggregates(Checks& c) {
  std::vector<audit::AuditResult> results;
  for (const char* name : {"bioportal", "lov"}) {
    auto part =
        audit::ReadResultsFile(kFixtures / "results" / (std::string(name) +
                                                        ".jsonl"));
    results.insert(results.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
  }
  struct Published {
    double threshold;
    std::string dataset;
    std::string pct;
    double mean;
    double mean_tolerance;
    std::string median;  // empty when not published
  };
  const std::vector<Published> published = {
      {0, "bioportal", "6.77", 5320.11, 0, "1391"},
      {0, "lov", "15.74", 178.59, 0, "66"},
      {5, "bioportal", "4.14", 5769.45, 0.01, ""},
      {5, "lov", "14.20", 124.36, 0.01, ""},
  };
  for (const Published& p : published) {
    report::EmitOptions options;
    options.threshold = p.threshold;
    options.timestamp = false;
    const report::Table t =
        report::BuildTable(results, report::Kind::kDatasetComparison, options);
    auto column = [&](const std::string& name) {
      return static_cast<std::size_t>(
          std::find(t.columns.begin(), t.columns.end(), name) -
          t.columns.begin());
    };
    const std::vector<report::Cell>* row = nullptr;
    for (const auto& r : t.rows) {
      if (r[column("dataset")].text == p.dataset) row = &r;
    }
    const std::string where =
        p.dataset + "@" + std::to_string(static_cast<int>(p.threshold));
    c.Expect(row != nullptr, where + " row present");
    if (row == nullptr) continue;
    const auto cell = [&](const std::string& name) {
      return (*row)[column(name)].text;
    };
    c.Equal(cell("multilingual_pct"), p.pct, where + " percent");
    if (p.mean_tolerance == 0) {
      c.Equal(cell("mean_cov"), report::FormatFixed(p.mean, 2),
              where + " mean");
    } else {
      c.Near(std::stod(cell("mean_cov")), p.mean, p.mean_tolerance,
             where + " mean");
    }
    if (!p.median.empty()) c.Equal(cell("median_cov"), p.median, where + " median");

    const OracleRow o =
        Oracle(kFixtures / "results" / (p.dataset + ".jsonl"), p.threshold);
    c.Equal(std::stoul(cell("ontologies")), o.ontologies, where + " oracle n");
    c.Equal(std::stoul(cell("multilingual")), o.multilingual,
            where + " oracle multilingual");
    c.Near(std::stod(cell("multilingual_pct")), o.pct, 0.005,
           where + " oracle percent");
    c.Equal(std::stoull(cell("total_cov")), o.total, where + " oracle total");
    c.Near(std::stod(cell("mean_cov")), o.mean, 0.005, where + " oracle mean");
    c.Near(std::stod(cell("median_cov")), o.median, 0.005,
           where + " oracle median");
    if (p.threshold == 0) {
      c.Equal(o.total, p.dataset == "bioportal" ? 95762u : 14644u,
              where + " total Cov");
      c.Equal(o.multilingual, p.dataset == "bioportal" ? 18u : 82u,
              where + " multilingual count");
    }
  }
}

// Offline harvest replay.
harvest::HarvestOptions ReplayOptions(const std::string& name) {
  harvest::HarvestOptions options;
  options.api_key = "acceptance";
  options.cache_dir = TempDir(name);
  options.request_delay = std::chrono::milliseconds(0);
  options.backoff_base = std::chrono::milliseconds(0);
  options.fixed_timestamp = "";
  options.bioportal_base = "https://data.bioontology.org";
  options.lov_base = "https://lov.linkeddata.es/dataset/lov";
  options.concurrency = 8;
  return options;
}

void Harvest(Checks& c) {
  {
    harvest::ReplayTransport transport(kFixtures / "replay/bioportal");
    harvest::Harvester h(transport, ReplayOptions("bioportal"));
    const harvest::PipelineReport r = h.RunBioportal();
    c.Equal(harvest::FormatCounts(r.steps),
            std::string("981 -> 730 -> 268 -> 266"), "BioPortal pipeline");
  }
  {
    harvest::ReplayTransport transport(kFixtures / "replay/lov");
    harvest::Harvester h(transport, ReplayOptions("lov"));
    const harvest::PipelineReport r = h.RunLov();
    const auto bucket = [&](const std::string& b) {
      const auto it = r.buckets.find(b);
      return it == r.buckets.end() ? 0u : it->second;
    };
    c.Equal(bucket("code-0"), 75u, "LOV code-0");
    c.Equal(bucket("3xx"), 23u, "LOV 3xx");
    c.Equal(bucket("4xx"), 125u, "LOV 4xx");
    c.Equal(bucket("5xx"), 27u, "LOV 5xx");
    c.Equal(bucket("2xx"), 523u, "LOV 2xx");
    c.Equal(r.surviving.size(), 521u, "LOV final");
  }
  c.Equal(harvest::CurlTransport::instances(), 0u, "no live transport");
}

// Metric properties on random signatures.
void Properties(Checks& c) {
  std::mt19937_64 rng(20261016);
  int mismatches = 0;
  int out_of_range = 0;
  int not_antitone = 0;
  const double grid[] = {0, 1, 5, 10, 25, 33.4, 50, 66.7, 75, 99, 100};
  for (int i = 0; i < 1000; ++i) {
    const testing::RandomCase rc = testing::MakeRandomCase(rng);
    const rdf::Graph g = rdf::ParseDocument(rc.ntriples, rdf::Format::kNTriples);
    const owl::Signature s = owl::ExtractSignature(g);
    const metrics::CompletenessProfile p =
        metrics::ComputeProfile(s, owl::CollectAnnotations(g, s));
    bool match = p.cov == rc.cov && p.languages.size() == rc.labeled.size();
    for (const auto& [tag, n] : rc.labeled) {
      const double want = 100.0 * static_cast<double>(n) /
                          static_cast<double>(rc.cov);
      match = match && Lcom(p, tag) == want;
    }
    if (!match) ++mismatches;
    for (const metrics::LanguageStat& l : p.languages) {
      if (l.lcom < 0 || l.lcom > 100) ++out_of_range;
    }
    for (std::size_t a = 0; a + 1 < std::size(grid); ++a) {
      if (metrics::ClassifyMultilingual(p, grid[a + 1]) &&
          !metrics::ClassifyMultilingual(p, grid[a])) {
        ++not_antitone;
      }
    }
  }
  c.Equal(mismatches, 0, "LCom oracle mismatches");
  c.Equal(out_of_range, 0, "LCom outside [0,100]");
  c.Equal(not_antitone, 0, "antitone violations");
  for (std::uint64_t n = 1; n <= 50; ++n) {
    if (metrics::RequiredMappingCount(n) != testing::CountPairs(n)) {
      c.Expect(false, "mapping count n=" + std::to_string(n));
    }
  }
}

// Structural validators and their mutations.
const gen::Document* FindDocument(const gen::Corpus& corpus,
                                  const std::string& name) {
  for (const gen::Document& d : corpus.documents) {
    if (d.name == name) return &d;
  }
  return nullptr;
}

std::string FirstSubject(const rdf::Graph& g, std::string_view predicate) {
  std::string subject;
  g.ForEach([&](const rdf::Term& s, const rdf::Term& p, const rdf::Term&) {
    if (subject.empty() && p.value == predicate) subject = s.value;
  });
  return subject;
}

void Validators(Checks& c) {
  std::size_t checked = 0;
  for (const gen::GenerationSpec& spec : gen::ReferenceSpecs()) {
    for (const gen::Document& d : gen::Generate(spec).documents) {
      c.Expect(gen::ValidateSenseCardinality(d.graph).empty(),
               spec.name + "/" + d.name + " sense cardinality");
      c.Expect(gen::ValidatePrefLabelUniqueness(d.graph).empty(),
               spec.name + "/" + d.name + " prefLabel uniqueness");
      ++checked;
    }
  }
  c.Note(std::to_string(checked) + " documents");

  for (const gen::GenerationSpec& spec : gen::ReferenceSpecs()) {
    if (spec.variant == detect::Variant::kLinguisticSenses) {
      const gen::Corpus corpus = gen::Generate(spec);
      const gen::Document* lexicon = FindDocument(corpus, "lexicon-en");
      c.Expect(lexicon != nullptr, "senses lexicon present");
      if (!lexicon) continue;
      const std::string sense =
          FirstSubject(lexicon->graph, vocab::kOntolexReference);
      c.Expect(!sense.empty(), "sense with a reference");
      rdf::GraphBuilder mutated;
      mutated.AddAll(lexicon->graph);
      mutated.Add(rdf::Term::Iri(sense),
                  rdf::Term::Iri(std::string(vocab::kOntolexReference)),
                  rdf::Term::Iri("http://example.org/other#Thing"));
      c.Equal(gen::ValidateSenseCardinality(std::move(mutated).Build()).size(),
              1u, "second reference detected");
    }
    if (spec.variant == detect::Variant::kLabelsPrimaryOpaque) {
      const gen::Corpus corpus = gen::Generate(spec);
      const rdf::Graph& g = corpus.documents.at(0).graph;
      const std::string entity = FirstSubject(g, vocab::kSkosPrefLabel);
      c.Expect(!entity.empty(), "entity with a prefLabel");
      rdf::GraphBuilder mutated;
      mutated.AddAll(g);
      mutated.Add(rdf::Term::Iri(entity),
                  rdf::Term::Iri(std::string(vocab::kSkosPrefLabel)),
                  rdf::Term::LangLiteral("another name", "EN"));
      c.Equal(
          gen::ValidatePrefLabelUniqueness(std::move(mutated).Build()).size(),
          1u, "second prefLabel detected");
    }
  }
}

// Parser conformance.
void Parsers(Checks& c) {
  std::vector<gen::Corpus> corpora;
  for (const gen::GenerationSpec& spec : gen::ReferenceSpecs()) {
    corpora.push_back(gen::Generate(spec));
  }
  corpora.push_back(gen::Generate(gen::ExampleOneSpec()));
  corpora.push_back(gen::GenerateRiverShowcase());
  corpora.push_back(gen::GenerateInflectionShowcase());
  std::size_t documents = 0;
  for (const gen::Corpus& corpus : corpora) {
    for (const gen::Document& d : corpus.documents) {
      const std::string text = rdf::SerializeNTriples(d.graph);
      for (const rdf::Format f : {rdf::Format::kNTriples, rdf::Format::kTurtle}) {
        const rdf::Graph back = rdf::ParseDocument(text, f);
        const std::string where = corpus.manifest.name + "/" + d.name;
        c.Equal(back.size(), d.graph.size(), where + " size");
        c.Expect(rdf::SerializeNTriples(back) == text, where + " round trip");
      }
      ++documents;
    }
  }
  c.Note(std::to_string(documents) + " documents round-tripped");

  const std::size_t listing = rdf::ParseFile(kFixtures / "rdf/lexical_entry.ttl").size();
  c.Equal(listing, 7u, "lexical entry Turtle triples");

  const std::pair<const char*, std::size_t> pinned[] = {
      {"rdf/person.rdf", 21}, {"rdf/listing1.rdf", 5}, {"rdf/obo_style.rdf", 19}};
  for (const auto& [file, count] : pinned) {
    try {
      c.Equal(rdf::ParseFile(kFixtures / file).size(), count, file);
    } catch (const Error& e) {
      c.Expect(false, std::string(file) + ": " + e.what());
    }
  }
}

// Determinism of gen and report.
struct CliRun {
  int code = 0;
  std::string out;
};

CliRun Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "ontoaudit");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code =
      cli::Run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str() + err.str()};
}

std::map<std::string, std::string> Tree(const fs::path& root) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::recursive_directory_iterator(root)) {
    if (!e.is_regular_file()) continue;
    std::ifstream in(e.path(), std::ios::binary);
    files[fs::relative(e.path(), root).string()] =
        std::string(std::istreambuf_iterator<char>(in), {});
  }
  return files;
}

void Determinism(Checks& c) {
  const fs::path a = TempDir("gen_a");
  const fs::path b = TempDir("gen_b");
  for (const fs::path& dir : {a, b}) {
    c.Equal(Cli({"gen", "--builtin", "reference", "--seed", "7", "--out",
                 dir.string()})
                .code,
            cli::kExitOk, "gen exit");
  }
  const auto ta = Tree(a);
  c.Expect(!ta.empty() && ta == Tree(b), "gen outputs byte-identical");

  const std::string bp = (kFixtures / "results/bioportal.jsonl").string();
  const std::string lov = (kFixtures / "results/lov.jsonl").string();
  for (const char* kind :
       {"per-ontology-classification", "completeness-matrix",
        "dataset-comparison", "language-distribution", "boxplot-summary"}) {
    for (const char* format : {"json", "csv", "markdown"}) {
      const std::vector<std::string> args = {"report",   bp,     lov,
                                             "--kind",   kind,   "--format",
                                             format,     "--no-timestamp"};
      const CliRun first = Cli(args);
      const CliRun second = Cli(args);
      const std::string where = std::string(kind) + "/" + format;
      c.Equal(first.code, cli::kExitOk, where + " exit");
      c.Expect(!first.out.empty() && first.out == second.out,
               where + " byte-identical");
    }
  }
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;  // 0 means no runtime bound
  std::function<void(Checks&)> run;
};

}  // namespace
}  // namespace ontoaudit

int main() {
  using namespace ontoaudit;
  const std::vector<Criterion> criteria = {
      {1, "example-1", 1, ExampleOne},
      {2, "nine-variant-round-trip", 10, NineVariants},
      {3, "threshold-behavior", 0, Thresholds},
      {4, "aggregate-reproduction", 0, Aggregates},
      {5, "offline-pipeline-counts", 0, Harvest},
      {6, "metric-properties", 30, Properties},
      {7, "structural-invariants", 0, Validators},
      {8, "parser-conformance", 0, Parsers},
      {9, "determinism", 0, Determinism},
  };
  int failed = 0;
  for (const Criterion& criterion : criteria) {
    Checks checks;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.run(checks);
    } catch (const std::exception& e) {
      checks.Expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    if (criterion.budget_seconds > 0) {
      std::ostringstream s;
      s << "runtime " << seconds << " s over " << criterion.budget_seconds
        << " s";
      checks.Expect(seconds < criterion.budget_seconds, s.str());
    }
    std::cout << "AC" << criterion.id << " " << (checks.ok() ? "PASS" : "FAIL")
              << " " << criterion.name << " (" << checks.count()
              << " checks, " << static_cast<long>(seconds * 1000) << " ms)";
    for (const std::string& note : checks.notes()) std::cout << " " << note;
    std::cout << "\n";
    for (const std::string& f : checks.failures()) {
      std::cout << "    " << f << "\n";
    }
    if (!checks.ok()) ++failed;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size()
            << " criteria passed\n";
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
