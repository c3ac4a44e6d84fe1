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


#include "tools/cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ontoaudit/audit/audit.h"
#include "ontoaudit/common/error.h"
#include "ontoaudit/common/version.h"
#include "ontoaudit/detect/approach.h"
#include "ontoaudit/gen/generator.h"
#include "ontoaudit/harvest/harvest.h"
#include "ontoaudit/harvest/transport.h"
#include "ontoaudit/owl/signature.h"
#include "ontoaudit/report/report.h"

namespace ontoaudit::cli {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

constexpr char kApiKeyEnv[] = "ONTOAUDIT_BIOPORTAL_APIKEY";
constexpr char kCacheDirEnv[] = "ONTOAUDIT_CACHE_DIR";

// Settings shared by every subcommand; a --config file fills the same keys.
struct RunConfig {
  std::string cache_dir = "ontoaudit-cache";
  bool offline = false;
  double threshold = 5.0;
  std::vector<std::string> label_properties;
  std::string watchlist;
  double tie_epsilon = 1.0;
  double dominance = 0.8;
  unsigned concurrency = 4;
  bool strict = true;
  bool lenient = false;
  bool no_timestamp = false;
  std::string bioportal_apikey;
};

struct HarvestArgs {
  std::string repository;
  std::string replay_dir;
  std::string record_dir;
  std::string ledger;
  std::string accept = "application/rdf+xml";
  std::size_t per_host_limit = 4;
  int request_delay_ms = 100;
  bool api_key_in_header = false;
};

struct AuditArgs {
  std::vector<std::string> inputs;
  std::string ledger;
  std::string dataset;
  std::string out;
};

struct GenArgs {
  std::string spec;
  std::string builtin;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
};

struct ReportArgs {
  std::vector<std::string> results;
  std::string kind;
  std::string format = "markdown";
  std::string out;
  bool multilingual_only = false;
};

class Logger {
 public:
  explicit Logger(std::ostream& err) : err_(err) {}
  void Warn(const std::string& message) const {
    err_ << "ontoaudit: warning: " << message << "\n";
  }
  void Info(const std::string& message) const {
    err_ << "ontoaudit: " << message << "\n";
  }
  int Fail(const std::string& message, int code = kExitUsage) const {
    err_ << "ontoaudit: error: " << message << "\n";
    return code;
  }

 private:
  std::ostream& err_;
};

// Writes to --out when given, otherwise to stdout.
bool WriteOutput(const std::string& path, const std::string& data,
                 std::ostream& out) {
  if (path.empty() || path == "-") {
    out << data;
    return static_cast<bool>(out);
  }
  std::ofstream file(path, std::ios::binary);
  file << data;
  return static_cast<bool>(file);
}

audit::AuditOptions MakeAuditOptions(const RunConfig& config) {
  audit::AuditOptions options;
  if (!config.label_properties.empty()) {
    options.label_properties = config.label_properties;
  }
  if (!config.watchlist.empty()) {
    options.detect.watchlist = detect::Watchlist::Load(config.watchlist);
  }
  options.detect.tie_epsilon = config.tie_epsilon;
  options.detect.dominance = config.dominance;
  options.thresholds = {0};
  if (config.threshold != 0) options.thresholds.push_back(config.threshold);
  options.parse.strict = !config.lenient;
  return options;
}

int CmdHarvest(const RunConfig& config, const HarvestArgs& args,
               std::ostream& out, const Logger& log) {
  const auto repository = harvest::RepositoryFromName(args.repository);
  if (!repository) {
    return log.Fail("unknown repository '" + args.repository +
                    "' (expected bioportal or lov)");
  }
  harvest::HarvestOptions options;
  options.cache_dir = config.cache_dir;
  options.accept = args.accept;
  options.per_host_limit = args.per_host_limit;
  options.request_delay = std::chrono::milliseconds(args.request_delay_ms);
  options.concurrency = config.concurrency;
  options.api_key_in_header = args.api_key_in_header;
  options.warn = [&log](const std::string& m) { log.Warn(m); };
  if (config.no_timestamp) options.fixed_timestamp = "";

  std::unique_ptr<harvest::Transport> transport;
  std::unique_ptr<harvest::Transport> recorder;
  if (config.offline) {
    if (!fs::is_directory(config.cache_dir)) {
      return log.Fail("offline mode needs an existing cache directory, '" +
                      config.cache_dir + "' is missing");
    }
    const fs::path replay =
        args.replay_dir.empty()
            ? fs::path(config.cache_dir) / "replay" / args.repository
            : fs::path(args.replay_dir);
    transport = std::make_unique<harvest::ReplayTransport>(replay);
    // Recorded exchanges carry no key; the listing still needs one set.
    options.api_key = config.bioportal_apikey.empty() ? "offline-replay"
                                                      : config.bioportal_apikey;
    options.request_delay = std::chrono::milliseconds(0);
    options.backoff_base = std::chrono::milliseconds(0);
  } else {
    options.api_key = config.bioportal_apikey;
    if (*repository == harvest::Repository::kBioPortal &&
        options.api_key.empty()) {
      return log.Fail(std::string("BioPortal needs an API key; set ") +
                      kApiKeyEnv);
    }
    transport = std::make_unique<harvest::CurlTransport>();
    if (!args.record_dir.empty()) {
      recorder = std::make_unique<harvest::RecordingTransport>(
          *transport, args.record_dir);
    }
  }

  harvest::Harvester harvester(recorder ? *recorder : *transport, options);
  const harvest::PipelineReport report =
      *repository == harvest::Repository::kBioPortal ? harvester.RunBioportal()
                                                     : harvester.RunLov();
  const fs::path ledger =
      args.ledger.empty()
          ? fs::path(config.cache_dir) / (args.repository + "-ledger.jsonl")
          : fs::path(args.ledger);
  if (ledger.has_parent_path()) fs::create_directories(ledger.parent_path());
  harvest::WriteLedger(ledger, report.records);

  out << args.repository << ": " << report.listed << " listed\n";
  for (const harvest::FilterStep& step : report.steps) {
    out << "  " << step.name << ": " << step.in_count << " -> "
        << step.out_count << "\n";
  }
  out << "buckets:";
  for (const auto& [bucket, count] : report.buckets) {
    out << " " << bucket << "=" << count;
  }
  out << "\npipeline: " << harvest::FormatCounts(report.steps) << "\n";
  out << "ledger: " << ledger.string() << "\n";
  std::size_t failed = 0;
  for (const harvest::HarvestRecord& r : report.records) {
    if (r.bucket && *r.bucket != harvest::StatusBucket::k2xx) ++failed;
  }
  if (failed > 0) {
    log.Warn(std::to_string(failed) + " document(s) could not be fetched");
  }
  return kExitOk;
}

std::vector<audit::AuditInput> LedgerInputs(const std::string& path,
                                            const Logger& log) {
  std::vector<audit::AuditInput> inputs;
  std::size_t skipped = 0;
  for (const harvest::HarvestRecord& r : harvest::ReadLedger(path)) {
    if (!r.cached_path || r.excluded_reason) {
      ++skipped;
      continue;
    }
    audit::AuditInput input;
    input.ontology_id = r.id;
    input.dataset = std::string(harvest::RepositoryName(r.repository));
    input.files = {*r.cached_path};
    if (!r.media_type.empty()) input.media_type = r.media_type;
    inputs.push_back(std::move(input));
  }
  if (skipped > 0) {
    log.Info("ledger: skipped " + std::to_string(skipped) +
             " record(s) without a usable document");
  }
  return inputs;
}

std::vector<audit::AuditInput> CollectInputs(const AuditArgs& args,
                                             const Logger& log) {
  std::vector<audit::AuditInput> inputs;
  if (!args.ledger.empty()) inputs = LedgerInputs(args.ledger, log);
  std::vector<fs::path> paths(args.inputs.begin(), args.inputs.end());
  for (audit::AuditInput& input : audit::ResolveInputs(paths)) {
    inputs.push_back(std::move(input));
  }
  if (!args.dataset.empty()) {
    for (audit::AuditInput& input : inputs) input.dataset = args.dataset;
  }
  return inputs;
}

int CmdAudit(const RunConfig& config, const AuditArgs& args,
             std::ostream& out, const Logger& log) {
  const std::vector<audit::AuditInput> inputs = CollectInputs(args, log);
  if (inputs.empty()) return log.Fail("no inputs to audit", kExitPartial);
  const std::vector<audit::AuditResult> results =
      audit::AuditAll(inputs, MakeAuditOptions(config), config.concurrency);
  std::string data;
  std::size_t ok = 0;
  for (const audit::AuditResult& r : results) {
    data += audit::ToJsonLine(r);
    data += "\n";
    if (r.ok()) {
      ++ok;
    } else {
      log.Warn(r.ontology_id + ": " + *r.error);
    }
  }
  if (!WriteOutput(args.out, data, out)) {
    return log.Fail("cannot write '" + args.out + "'");
  }
  log.Info("audited " + std::to_string(ok) + " of " +
           std::to_string(results.size()) + " input(s)");
  return ok > 0 ? kExitOk : kExitPartial;
}

int CmdDetect(const RunConfig& config, const AuditArgs& args,
              std::ostream& out, const Logger& log) {
  const std::vector<audit::AuditInput> inputs = CollectInputs(args, log);
  if (inputs.empty()) return log.Fail("no inputs to inspect", kExitPartial);
  std::string data;
  std::size_t ok = 0;
  for (const audit::AuditResult& r :
       audit::AuditAll(inputs, MakeAuditOptions(config), config.concurrency)) {
    Json line = {{"ontology_id", r.ontology_id}};
    if (!r.ok()) {
      line["error"] = *r.error;
      log.Warn(r.ontology_id + ": " + *r.error);
    } else {
      ++ok;
      Json matched = Json::array();
      for (const detect::Family f : r.approach.families_matched) {
        matched.push_back(std::string(detect::FamilyName(f)));
      }
      line["family"] = std::string(detect::FamilyName(r.approach.family));
      line["variant"] = std::string(detect::VariantName(r.approach.variant));
      line["families_matched"] = matched;
      line["needs_human_review"] = r.approach.needs_human_review;
      line["notes"] = r.approach.notes;
    }
    data += line.dump() + "\n";
  }
  if (!WriteOutput(args.out, data, out)) {
    return log.Fail("cannot write '" + args.out + "'");
  }
  return ok > 0 ? kExitOk : kExitPartial;
}

int CmdGen(const GenArgs& args, std::ostream& out, const Logger& log) {
  std::vector<gen::Corpus> corpora;
  if (!args.builtin.empty()) {
    if (args.builtin == "reference") {
      for (const gen::GenerationSpec& s :
           gen::ReferenceSpecs(args.seed.value_or(7))) {
        corpora.push_back(gen::Generate(s));
      }
    } else if (args.builtin == "example-1") {
      gen::GenerationSpec spec = gen::ExampleOneSpec();
      if (args.seed) spec.seed = *args.seed;
      corpora.push_back(gen::Generate(spec));
    } else if (args.builtin == "river") {
      corpora.push_back(gen::GenerateRiverShowcase());
    } else if (args.builtin == "inflection") {
      corpora.push_back(gen::GenerateInflectionShowcase());
    } else {
      return log.Fail("unknown built-in corpus '" + args.builtin +
                      "' (expected reference, example-1, river or "
                      "inflection)");
    }
  }
  if (!args.spec.empty()) {
    for (gen::GenerationSpec spec : gen::LoadSpecs(args.spec)) {
      if (args.seed) spec.seed = *args.seed;
      corpora.push_back(gen::Generate(spec));
    }
  }
  if (corpora.empty()) {
    return log.Fail("nothing to generate; give a spec file or --builtin");
  }
  std::set<std::string> names;
  for (const gen::Corpus& corpus : corpora) {
    if (!names.insert(corpus.manifest.name).second) {
      return log.Fail("two corpora share the name '" + corpus.manifest.name +
                      "'");
    }
  }
  for (const gen::Corpus& corpus : corpora) {
    for (const fs::path& path : gen::EmitNTriples(
             corpus, fs::path(args.out_dir) / corpus.manifest.name)) {
      out << path.generic_string() << "\n";
    }
  }
  return kExitOk;
}

int CmdReport(const RunConfig& config, const ReportArgs& args,
              std::ostream& out, const Logger& log) {
  const report::Kind kind = report::ParseKind(args.kind);
  const report::Format format = report::ParseFormat(args.format);
  std::vector<audit::AuditResult> results;
  for (const std::string& path : args.results) {
    try {
      for (audit::AuditResult& r : audit::ReadResultsFile(path)) {
        results.push_back(std::move(r));
      }
    } catch (const Error& e) {
      return log.Fail(path + ": " + e.what());
    }
  }
  if (results.empty()) return log.Fail("no results to report");
  report::EmitOptions options;
  options.threshold = config.threshold;
  options.timestamp = !config.no_timestamp;
  options.multilingual_only = args.multilingual_only;
  if (!WriteOutput(args.out, report::Emit(results, kind, format, options),
                   out)) {
    return log.Fail("cannot write '" + args.out + "'");
  }
  return kExitOk;
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  const Logger log(err);
  RunConfig config;
  if (const char* env = std::getenv(kCacheDirEnv); env && *env) {
    config.cache_dir = env;
  }

  CLI::App app{"Audit OWL/RDF ontologies for multilingual labelling",
               "ontoaudit"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.set_config("--config", "", "key=value settings file; flags win");
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--cache-dir", config.cache_dir,
                 "Harvest cache root (env " + std::string(kCacheDirEnv) + ")");
  app.add_flag("--offline", config.offline,
               "Replay recorded exchanges; never open a network connection");
  app.add_option("--threshold", config.threshold,
                 "LCom percentage a language must exceed")
      ->check(CLI::Range(0.0, 100.0));
  app.add_option("--label-properties", config.label_properties,
                 "Comma-separated label property IRIs")
      ->delimiter(',');
  app.add_option("--watchlist", config.watchlist,
                 "File of 'name namespace-IRI' lines to watch")
      ->check(CLI::ExistingFile);
  app.add_option("--tie-epsilon", config.tie_epsilon,
                 "Primary-language tie tolerance in percentage points")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--dominance", config.dominance,
                 "Identifier share needed to pick a labels variant")
      ->check(CLI::Range(0.5, 1.0));
  app.add_option("--concurrency", config.concurrency, "Worker threads")
      ->check(CLI::PositiveNumber);
  auto* strict = app.add_flag("--strict", config.strict,
                              "Stop at the first malformed line (default)");
  app.add_flag("--lenient", config.lenient,
               "Skip malformed N-Triples lines")
      ->excludes(strict);
  app.add_flag("--no-timestamp", config.no_timestamp,
               "Omit wall-clock times from outputs");
  app.add_option("--bioportal-apikey", config.bioportal_apikey,
                 "BioPortal API key")
      ->envname(kApiKeyEnv);

  HarvestArgs harvest_args;
  auto* harvest = app.add_subcommand("harvest", "Fetch a repository's ontologies");
  harvest->add_option("repository", harvest_args.repository, "bioportal or lov")
      ->required();
  harvest->add_option("--replay-dir", harvest_args.replay_dir,
                      "Recorded exchanges used with --offline");
  harvest->add_option("--record-dir", harvest_args.record_dir,
                      "Append live exchanges here for later replay");
  harvest->add_option("--ledger", harvest_args.ledger, "Ledger output path");
  harvest->add_option("--accept", harvest_args.accept,
                      "Accept header for document requests");
  harvest->add_option("--per-host-limit", harvest_args.per_host_limit,
                      "Simultaneous requests per host")
      ->check(CLI::PositiveNumber);
  harvest->add_option("--request-delay-ms", harvest_args.request_delay_ms,
                      "Minimum gap between requests to one host")
      ->check(CLI::NonNegativeNumber);
  harvest->add_flag("--api-key-in-header", harvest_args.api_key_in_header,
                    "Send the BioPortal key as an Authorization header");

  AuditArgs audit_args;
  auto* audit_cmd = app.add_subcommand("audit", "Audit ontology files");
  audit_cmd->add_option("inputs", audit_args.inputs, "Files or directories");
  audit_cmd->add_option("--ledger", audit_args.ledger,
                        "Audit the documents of a harvest ledger")
      ->check(CLI::ExistingFile);
  audit_cmd->add_option("--dataset", audit_args.dataset,
                        "Dataset name stored on every result");
  audit_cmd->add_option("--out", audit_args.out, "Results file (JSON lines)");

  AuditArgs detect_args;
  auto* detect_cmd =
      app.add_subcommand("detect", "Report the modelling approach only");
  detect_cmd->add_option("inputs", detect_args.inputs, "Files or directories");
  detect_cmd->add_option("--out", detect_args.out, "Output file");

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "Generate reference ontologies");
  gen_cmd->add_option("spec", gen_args.spec, "JSON generation spec")
      ->check(CLI::ExistingFile);
  gen_cmd->add_option("--builtin", gen_args.builtin,
                      "reference, example-1, river or inflection");
  gen_cmd->add_option("--out", gen_args.out_dir, "Output directory")
      ->required();
  gen_cmd->add_option("--seed", gen_args.seed, "Override every spec's seed");

  ReportArgs report_args;
  auto* report_cmd = app.add_subcommand("report", "Render result tables");
  report_cmd->add_option("results", report_args.results,
                         "Audit results (JSON lines)")
      ->required();
  report_cmd->add_option("--kind", report_args.kind,
                         "per-ontology-classification, completeness-matrix, "
                         "dataset-comparison, language-distribution or "
                         "boxplot-summary")
      ->required();
  report_cmd->add_option("--format", report_args.format,
                         "json, csv or markdown");
  report_cmd->add_option("--out", report_args.out, "Output file");
  report_cmd->add_flag("--multilingual-only", report_args.multilingual_only,
                       "Per-ontology kinds: keep multilingual rows only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*harvest) return CmdHarvest(config, harvest_args, out, log);
    if (*audit_cmd) return CmdAudit(config, audit_args, out, log);
    if (*detect_cmd) return CmdDetect(config, detect_args, out, log);
    if (*gen_cmd) return CmdGen(gen_args, out, log);
    if (*report_cmd) return CmdReport(config, report_args, out, log);
  } catch (const Error& e) {
    return log.Fail(std::string(ErrorCodeName(e.code())) + ": " + e.what());
  } catch (const std::exception& e) {
    return log.Fail(e.what());
  }
  return kExitUsage;
}

}  // namespace ontoaudit::cli
