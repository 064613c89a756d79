// Copyright 2026 The fpeval Authors
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

// fpeval command-line front end.
//
// Exit status: 0 on success, 1 on usage errors, 2 on data errors. Errors go
// to stderr as "fpeval <command>: error[<kind>]: <message>".

#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fpeval/dataset_io.h"
#include "fpeval/errors.h"
#include "fpeval/file_util.h"
#include "fpeval/hybrid.h"
#include "fpeval/json_value.h"
#include "fpeval/mask_inference.h"
#include "fpeval/mask_model.h"
#include "fpeval/metrics.h"
#include "fpeval/observation_log.h"
#include "fpeval/parallel.h"
#include "fpeval/popularity.h"
#include "fpeval/preprocess.h"
#include "fpeval/resolution.h"
#include "fpeval/synthetic.h"
#include "json.hpp"

namespace fpeval {
namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

// Bad flag values detected after CLI11 parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { kText, kCsv, kJson };

const std::map<std::string, OutputFormat> kFormatNames = {
    {"text", OutputFormat::kText},
    {"csv", OutputFormat::kCsv},
    {"json", OutputFormat::kJson}};

void Emit(const std::string& path, const std::string& contents) {
  if (path.empty() || path == "-") {
    std::cout << contents;
    std::cout.flush();
  } else {
    WriteFileAtomic(path, contents);
  }
}

std::string Fixed3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

// Left-aligned first column, right-aligned numbers.
std::string TextTable(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
  std::vector<size_t> width(header.size());
  for (size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    for (size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (size_t c = 0; c < cells.size(); ++c) {
      if (c > 0) out << "  ";
      const std::string pad(width[c] - cells[c].size(), ' ');
      out << (c == 0 ? cells[c] + pad : pad + cells[c]);
    }
    out << '\n';
  };
  line(header);
  size_t total = 0;
  for (size_t w : width) total += w;
  out << std::string(total + 2 * (width.size() - 1), '-') << '\n';
  for (const auto& row : rows) line(row);
  return out.str();
}

template <typename T, typename Fn>
T ParseFlag(const std::string& flag, const std::string& text, Fn parse) {
  try {
    return parse(text);
  } catch (const Error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

Resolution ParseResolutionFlag(const std::string& flag, const std::string& text) {
  return ParseFlag<Resolution>(flag, text, [](const std::string& t) {
    return Resolution::Parse(t);
  });
}

// "1000x1000:200x100" (cap:quantum).
SpoofStrategy ParseStrategyFlag(const std::string& flag, const std::string& text) {
  const size_t colon = text.find(':');
  if (colon == std::string::npos) {
    throw UsageError(flag + ": expected CAPxCAP:QUANTxQUANT, got '" + text + "'");
  }
  SpoofStrategy s = SpoofStrategy::FromParts(
      ParseResolutionFlag(flag, text.substr(0, colon)),
      ParseResolutionFlag(flag, text.substr(colon + 1)));
  ParseFlag<int>(flag, text, [&](const std::string&) {
    s.Validate();
    return 0;
  });
  return s;
}

MaskPolicy ParsePolicyFlag(const std::string& text) {
  std::optional<MaskPolicy> p = ParseMaskPolicy(text);
  if (!p) {
    throw UsageError("--policy: expected inconclusive-as-masked or "
                     "inconclusive-as-unmasked, got '" + text + "'");
  }
  return *p;
}

DatasetFormat DataFormatFor(const std::string& path, const std::string& flag_value) {
  if (flag_value.empty()) return FormatFromPath(path);
  std::optional<DatasetFormat> f = ParseDatasetFormat(flag_value);
  if (!f) throw UsageError("unknown dataset format '" + flag_value + "'");
  return *f;
}

void SetParams(StatParams* params, double f, double alpha) {
  params->f = f;
  params->alpha = alpha;
  try {
    params->Validate();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::vector<MaskModel> LoadModels(const std::vector<std::string>& paths) {
  std::vector<MaskModel> models;
  for (const std::string& p : paths) models.push_back(LoadMaskModel(p));
  return models;
}

// ---------------------------------------------------------------- gen

struct GenCorpusOptions {
  std::string preset = "firefox-like";
  std::string spec;
  int64_t n = 5000;
  uint64_t seed = 0;
  std::string out;
  std::string out_format;
  std::string truth;
};

void RunGenCorpus(const GenCorpusOptions& o, const CLI::App& cmd) {
  CorpusSpec spec;
  if (!o.spec.empty()) {
    spec = CorpusSpecFromJson(ParseJsonObjectStrict(ReadFile(o.spec), o.spec));
    if (cmd.count("--n") > 0) spec.n = o.n;
    if (cmd.count("--seed") > 0) spec.seed = o.seed;
  } else {
    if (o.n < 0) throw UsageError("--n must be non-negative");
    spec = PresetCorpusSpec(o.preset, o.n, o.seed);
  }
  GeneratedCorpus g = GenerateCorpus(spec);
  SaveDataset(g.dataset, o.out, DataFormatFor(o.out, o.out_format));
  if (!o.truth.empty()) WriteFileAtomic(o.truth, ToJson(g.truth).dump(2) + "\n");
  std::cerr << "wrote " << g.dataset.size() << " records to " << o.out << "\n";
}

struct GenLogOptions {
  std::string preset = "tor-firefox";
  std::string pets_spec;
  int platforms = 6;
  int epochs = 2;
  uint64_t seed = 0;
  double f = 0.75;
  double alpha = 0.1;
  std::string out;
  std::string truth;
};

std::vector<PetRequest> PetsFromJson(const json& j, const std::string& where) {
  std::vector<PetRequest> pets;
  for (const auto& [name, verdicts] : j.items()) {
    if (!verdicts.is_object()) {
      throw SpecError(where + ": pet '" + name + "' must map attributes to statuses");
    }
    PetRequest p{name, {}};
    for (const auto& [attr, status] : verdicts.items()) {
      std::optional<VerdictStatus> s =
          status.is_string() ? ParseVerdictStatus(status.get<std::string>())
                             : std::nullopt;
      if (!s) {
        throw SpecError(where + ": bad status for '" + name + "'/'" + attr + "'");
      }
      p.verdicts.emplace(attr, *s);
    }
    pets.push_back(std::move(p));
  }
  return pets;
}

void RunGenLog(const GenLogOptions& o) {
  StatParams params;
  SetParams(&params, o.f, o.alpha);
  std::vector<PetRequest> pets;
  if (!o.pets_spec.empty()) {
    pets = PetsFromJson(ParseJsonObjectStrict(ReadFile(o.pets_spec), o.pets_spec),
                        o.pets_spec);
  } else if (o.preset == "tor-firefox") {
    pets.push_back({"tor", TorFirefoxVerdicts()});
  } else {
    throw UsageError("--preset: unknown log preset '" + o.preset + "'");
  }
  GeneratedLog g = GenerateLog(pets, o.platforms, o.epochs, o.seed, params);
  SaveObservationLog(g.log, o.out);
  if (!o.truth.empty()) WriteFileAtomic(o.truth, ToJson(g.truth).dump(2) + "\n");
  std::cerr << "wrote " << g.log.observations.size() << " observations to "
            << o.out << "\n";
}

// ---------------------------------------------------------------- ingest

struct IngestOptions {
  std::string data;
  std::string in_format;
  std::string chrome;
  std::string firefox;
  std::string out_format;
  std::string report;
  std::string format = "text";
};

void RunIngest(const IngestOptions& o) {
  const Dataset raw = LoadDataset(o.data, DataFormatFor(o.data, o.in_format));
  const Dataset deduped = DedupeByCookie(raw);
  SanitizeReport sanitize_report;
  const Dataset clean = Sanitize(deduped, &sanitize_report);
  const BrowserSplit split = SplitByBrowser(clean);
  if (!o.chrome.empty()) {
    SaveDataset(split.chrome, o.chrome, DataFormatFor(o.chrome, o.out_format));
  }
  if (!o.firefox.empty()) {
    SaveDataset(split.firefox, o.firefox, DataFormatFor(o.firefox, o.out_format));
  }

  const auto n = [](const Dataset& d) { return static_cast<int64_t>(d.size()); };
  json report = {{"input", n(raw)},
                 {"after_dedupe", n(deduped)},
                 {"dropped", sanitize_report.dropped},
                 {"after_sanitize", n(clean)},
                 {"chrome", n(split.chrome)},
                 {"firefox", n(split.firefox)},
                 {"other_browser", n(clean) - n(split.chrome) - n(split.firefox)}};
  if (!o.report.empty()) WriteFileAtomic(o.report, report.dump(2) + "\n");
  if (o.format == "json") {
    Emit("", report.dump(2) + "\n");
    return;
  }
  std::vector<std::vector<std::string>> rows = {
      {"input", std::to_string(n(raw))},
      {"after dedupe", std::to_string(n(deduped))}};
  for (const auto& [rule, count] : sanitize_report.dropped) {
    rows.push_back({"dropped: " + rule, std::to_string(count)});
  }
  rows.push_back({"after sanitize", std::to_string(n(clean))});
  rows.push_back({"chrome", std::to_string(n(split.chrome))});
  rows.push_back({"firefox", std::to_string(n(split.firefox))});
  Emit("", TextTable({"stage", "records"}, rows));
}

// ---------------------------------------------------------------- infer

struct InferOptions {
  std::string log;
  std::string pet;
  double f = 0.75;
  double alpha = 0.1;
  std::string browser;
  std::string out;
  std::string format = "text";
};

void RunInfer(const InferOptions& o) {
  StatParams params;
  SetParams(&params, o.f, o.alpha);
  const ObservationLog log = LoadObservationLog(o.log);
  MaskModel model = InferModel(log, o.pet, params);
  if (!o.browser.empty()) {
    model.browser = ParseBrowserFamily(o.browser);
    if (!model.browser) throw UsageError("--browser: unknown family '" + o.browser + "'");
  }
  const std::string model_json = ToJson(model).dump(2) + "\n";
  if (!o.out.empty()) WriteFileAtomic(o.out, model_json);
  if (o.format == "json") {
    if (o.out.empty()) Emit("", model_json);
    return;
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& [attr, v] : model.verdicts) {
    rows.push_back({attr, std::string(ToString(v.status)),
                    v.confidence ? Fixed3(*v.confidence) : ""});
  }
  std::string text = TextTable({"attribute", "status", "alpha"}, rows);
  for (const std::string& note : model.notes) text += "note: " + note + "\n";
  Emit("", text);
}

// ---------------------------------------------------------------- rank

struct RankOptions {
  std::vector<std::string> models;
  std::string out;
  std::string format = "text";
};

void RunRank(const RankOptions& o) {
  const PreorderRanking r = RankPreorder(LoadModels(o.models));
  if (o.format == "json") {
    json classes = json::array();
    for (const auto& c : r.classes) {
      classes.push_back({{"pets", c}, {"masked", r.masked_counts.at(c.front())}});
    }
    json pairs = json::array();
    for (const auto& [a, b] : r.dominance) pairs.push_back({a, b});
    Emit(o.out, json({{"classes", classes},
                      {"dominance", pairs},
                      {"masked_counts", r.masked_counts}})
                    .dump(2) +
                    "\n");
    return;
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& c : r.classes) {
    std::string names;
    for (const std::string& p : c) names += (names.empty() ? "" : ", ") + p;
    rows.push_back({names, std::to_string(r.masked_counts.at(c.front()))});
  }
  std::string text = TextTable({"pets", "masked"}, rows);
  for (const auto& [a, b] : r.dominance) {
    if (a != b) text += a + " >= " + b + "\n";
  }
  Emit(o.out, text);
}

// ---------------------------------------------------------------- evaluate

struct EvaluateOptions {
  std::string data;
  std::string in_format;
  std::vector<std::string> models;
  std::string policy = "inconclusive-as-masked";
  std::string out;
  std::string format = "text";
};

void RunEvaluate(const EvaluateOptions& o) {
  const MaskPolicy policy = ParsePolicyFlag(o.policy);
  const Dataset d = LoadDataset(o.data, DataFormatFor(o.data, o.in_format));
  const std::vector<HybridRow> rows = EvaluateAll(d, LoadModels(o.models), policy);
  const std::string table_csv = HybridTableToCsv(rows);
  if (!o.out.empty()) WriteFileAtomic(o.out, table_csv);
  switch (kFormatNames.at(o.format)) {
    case OutputFormat::kCsv:
      if (o.out.empty()) Emit("", table_csv);
      return;
    case OutputFormat::kJson: {
      json j = json::array();
      for (const HybridRow& row : rows) {
        json r = ToJson(row.report);
        r["pets"] = row.pets;
        j.push_back(std::move(r));
      }
      Emit("", j.dump(2) + "\n");
      return;
    }
    case OutputFormat::kText:
      break;
  }
  std::vector<std::vector<std::string>> text_rows;
  if (!rows.empty()) {
    const TrackabilityReport& b = rows.front().report.before;
    text_rows.push_back({"(no mask)", Fixed3(b.entropy_bits), Fixed3(b.pct_le_1),
                         Fixed3(b.pct_le_10), ""});
  }
  for (const HybridRow& row : rows) {
    const HybridReport& r = row.report;
    text_rows.push_back({r.pet, Fixed3(r.after.entropy_bits), Fixed3(r.after.pct_le_1),
                         Fixed3(r.after.pct_le_10), Fixed3(r.eff.at(Metric::kEntropy))});
  }
  Emit("", "records: " + std::to_string(d.size()) + "\n" +
               TextTable({"pet", "H", "%<=1", "%<=10", "eff H"}, text_rows));
}

// ---------------------------------------------------------------- popeval

struct PopevalOptions {
  std::string data;
  std::string in_format;
  std::vector<std::string> models;
  std::string popularity;
  int64_t users = 0;
  int samples = 100;
  uint64_t seed = 0;
  std::string policy = "inconclusive-as-masked";
  std::string out;
  std::string format = "text";
};

void RunPopeval(const PopevalOptions& o) {
  const MaskPolicy policy = ParsePolicyFlag(o.policy);
  if (o.popularity.empty() && o.users <= 0) {
    throw UsageError("give --popularity or a positive --users");
  }
  if (o.samples < 2) throw UsageError("--samples must be at least 2");
  const Dataset d = LoadDataset(o.data, DataFormatFor(o.data, o.in_format));
  std::map<std::string, std::optional<int64_t>> table;
  if (!o.popularity.empty()) {
    for (const PopularityEntry& e : LoadPopularityTable(o.popularity)) {
      table[e.pet] = e.users;
    }
  }

  std::vector<PopularityRow> rows;
  for (const MaskModel& m : LoadModels(o.models)) {
    PopularityRow row;
    row.pet = m.pet;
    if (o.users > 0) {
      row.users = o.users;
    } else if (auto it = table.find(m.pet); it != table.end()) {
      row.users = it->second;
      if (!row.users) row.status = "unknown-users";
    } else {
      row.status = "not-in-table";
    }
    if (row.users) {
      try {
        row.estimate = PopularityEvaluate(d, m, *row.users, o.samples, o.seed, policy);
      } catch (const SampleTooLargeError&) {
        row.status = "sample-too-large";
      }
    }
    rows.push_back(std::move(row));
  }

  const std::string table_csv = PopularityRowsToCsv(rows);
  if (!o.out.empty()) WriteFileAtomic(o.out, table_csv);
  switch (kFormatNames.at(o.format)) {
    case OutputFormat::kCsv:
      if (o.out.empty()) Emit("", table_csv);
      return;
    case OutputFormat::kJson: {
      json j = json::array();
      for (const PopularityRow& r : rows) {
        json e = {{"pet", r.pet}, {"status", r.status}};
        e["users"] = r.users ? json(*r.users) : json(nullptr);
        if (r.estimate) e["estimate"] = ToJson(*r.estimate);
        j.push_back(std::move(e));
      }
      Emit("", j.dump(2) + "\n");
      return;
    }
    case OutputFormat::kText:
      break;
  }
  auto cell = [](const PopularityRow& r, Metric m) -> std::string {
    if (!r.estimate) return "";
    const MeanSem& ms = r.estimate->metrics.at(m);
    return Fixed3(ms.mean) + " +- " + Fixed3(ms.sem);
  };
  std::vector<std::vector<std::string>> text_rows;
  for (const PopularityRow& r : rows) {
    text_rows.push_back({r.pet, r.users ? std::to_string(*r.users) : "NA",
                         cell(r, Metric::kEntropy), cell(r, Metric::kPctLe1),
                         cell(r, Metric::kPctLe10), r.status});
  }
  Emit("", TextTable({"pet", "users", "H", "%<=1", "%<=10", "status"}, text_rows));
}

// ---------------------------------------------------------------- sweep

struct SweepOptions {
  std::string data;
  std::string in_format;
  std::string model;
  std::vector<std::string> caps = {"1000x1000"};
  std::string quanta = "200x100";
  std::vector<std::string> exclude;
  std::string reference = "1000x1000:200x100";
  std::string out;
  std::string pareto_out;
  std::string format = "text";
};

void RunSweep(const SweepOptions& o) {
  std::vector<Resolution> caps;
  for (const std::string& c : o.caps) caps.push_back(ParseResolutionFlag("--caps", c));
  std::vector<Resolution> exclude;
  for (const std::string& e : o.exclude) {
    exclude.push_back(ParseResolutionFlag("--exclude", e));
  }
  const QuantaRange quanta = ParseFlag<QuantaRange>(
      "--quanta", o.quanta, [](const std::string& t) { return QuantaRange::Parse(t); });
  const SpoofStrategy reference = ParseStrategyFlag("--reference", o.reference);

  const Dataset d = LoadDataset(o.data, DataFormatFor(o.data, o.in_format));
  const MaskModel baseline =
      o.model.empty() ? TorHandcraftedModel(d.AttributeNames()) : LoadMaskModel(o.model);

  const std::vector<SweepResult> results = Sweep(d, baseline, caps, quanta, exclude);
  const std::string sweep_csv = SweepToCsv(results);
  const StrategyScore ref = ScoreStrategy(d, baseline, reference);
  const std::vector<SweepResult> better = ParetoImprovements(results, ref);
  if (!o.pareto_out.empty()) WriteFileAtomic(o.pareto_out, SweepToCsv(better));

  if (o.out.empty() && o.format == "csv") {
    Emit("", sweep_csv);
    return;
  }
  if (!o.out.empty()) WriteFileAtomic(o.out, sweep_csv);
  if (o.format == "json") {
    Emit("", json({{"candidates", results.size()},
                   {"reference", {{"strategy", reference.ToString()},
                                  {"entropy", ref.entropy_bits},
                                  {"pct_le_1", ref.pct_le_1},
                                  {"pct_le_10", ref.pct_le_10},
                                  {"abs_loss", ref.abs_loss},
                                  {"pct_loss", ref.pct_loss},
                                  {"sets", StrategySets(reference)}}},
                   {"pareto_improvements", better.size()}})
                     .dump(2) +
                 "\n");
    return;
  }
  auto row = [](const SpoofStrategy& s, const StrategyScore& sc) {
    return std::vector<std::string>{
        s.ToString(),         Fixed3(sc.entropy_bits), Fixed3(sc.pct_le_1),
        Fixed3(sc.pct_le_10), Fixed3(sc.abs_loss),     Fixed3(sc.pct_loss)};
  };
  std::vector<std::vector<std::string>> rows = {row(reference, ref)};
  for (const SweepResult& r : better) rows.push_back(row(r.strategy, r.score));
  Emit("", "candidates: " + std::to_string(results.size()) +
               "\npareto improvements over " + reference.ToString() + ": " +
               std::to_string(better.size()) + "\n" +
               TextTable({"strategy", "H", "%<=1", "%<=10", "abs loss", "pct loss"},
                         rows));
}

// ---------------------------------------------------------------- main

void AddFormat(CLI::App* cmd, std::string* format, const std::string& allowed) {
  std::vector<std::string> names;
  std::stringstream ss(allowed);
  for (std::string n; std::getline(ss, n, '|');) names.push_back(n);
  cmd->add_option("--format", *format, "stdout format (" + allowed + ")")
      ->check(CLI::IsMember(names));
}

int Main(int argc, char** argv) {
  CLI::App app{"Evaluate anti-fingerprinting tools with anonymity-set metrics."};
  app.require_subcommand(1);
  int threads = 0;
  std::function<void()> action;
  app.add_option("--threads", threads, "worker threads (default FPEVAL_THREADS or all cores)")
      ->check(CLI::NonNegativeNumber);

  // gen
  CLI::App* gen = app.add_subcommand("gen", "Generate synthetic corpora and logs");
  gen->require_subcommand(1);
  GenCorpusOptions gc;
  CLI::App* gen_corpus = gen->add_subcommand("corpus", "Synthetic fingerprint dataset");
  gen_corpus->add_option("--preset", gc.preset, "firefox-like or chrome-like")
      ->check(CLI::IsMember({"firefox-like", "chrome-like"}));
  gen_corpus->add_option("--spec", gc.spec, "corpus spec json")->check(CLI::ExistingFile);
  gen_corpus->add_option("--n", gc.n, "record count");
  gen_corpus->add_option("--seed", gc.seed, "random seed");
  gen_corpus->add_option("--out", gc.out, "output dataset (.csv or .jsonl)")->required();
  gen_corpus->add_option("--out-format", gc.out_format, "csv or jsonl");
  gen_corpus->add_option("--truth", gc.truth, "ground-truth json");
  gen_corpus->callback([&] { action = [&] { RunGenCorpus(gc, *gen_corpus); }; });

  GenLogOptions gl;
  CLI::App* gen_log = gen->add_subcommand("log", "Synthetic observation log");
  gen_log->add_option("--preset", gl.preset, "tor-firefox");
  gen_log->add_option("--pets-spec", gl.pets_spec, "json: pet -> attribute -> status")
      ->check(CLI::ExistingFile);
  gen_log->add_option("--platforms", gl.platforms, "platform count");
  gen_log->add_option("--epochs", gl.epochs, "epochs per boundary");
  gen_log->add_option("--seed", gl.seed, "random seed");
  gen_log->add_option("--f", gl.f, "impact fraction");
  gen_log->add_option("--alpha", gl.alpha, "confidence threshold");
  gen_log->add_option("--out", gl.out, "output log (jsonl)")->required();
  gen_log->add_option("--truth", gl.truth, "ground-truth json");
  gen_log->callback([&] { action = [&] { RunGenLog(gl); }; });

  // ingest
  IngestOptions ing;
  CLI::App* ingest = app.add_subcommand("ingest", "Dedupe, sanitize and split a dataset");
  ingest->add_option("--data", ing.data, "input dataset")->required()->check(CLI::ExistingFile);
  ingest->add_option("--in-format", ing.in_format, "csv or jsonl");
  ingest->add_option("--chrome", ing.chrome, "write the Chrome subset here");
  ingest->add_option("--firefox", ing.firefox, "write the Firefox subset here");
  ingest->add_option("--out-format", ing.out_format, "csv or jsonl");
  ingest->add_option("--report", ing.report, "write the pipeline report json here");
  AddFormat(ingest, &ing.format, "text|json");
  ingest->callback([&] { action = [&] { RunIngest(ing); }; });

  // infer
  InferOptions inf;
  CLI::App* infer = app.add_subcommand("infer", "Infer a mask model from an observation log");
  infer->add_option("--log", inf.log, "observation log")->required()->check(CLI::ExistingFile);
  infer->add_option("--pet", inf.pet, "tool name as in the log")->required();
  infer->add_option("--f", inf.f, "impact fraction");
  infer->add_option("--alpha", inf.alpha, "confidence threshold");
  infer->add_option("--browser", inf.browser, "tag the model with a browser family");
  infer->add_option("--out", inf.out, "write the model json here");
  AddFormat(infer, &inf.format, "text|json");
  infer->callback([&] { action = [&] { RunInfer(inf); }; });

  // rank
  RankOptions rk;
  CLI::App* rank = app.add_subcommand("rank", "Order mask models by masked-attribute inclusion");
  rank->add_option("--model", rk.models, "mask model json")->required()->check(CLI::ExistingFile);
  rank->add_option("--out", rk.out, "output file");
  AddFormat(rank, &rk.format, "text|json");
  rank->callback([&] { action = [&] { RunRank(rk); }; });

  // evaluate
  EvaluateOptions ev;
  CLI::App* evaluate = app.add_subcommand("evaluate", "Trackability before and after masking");
  evaluate->add_option("--data", ev.data, "dataset")->required()->check(CLI::ExistingFile);
  evaluate->add_option("--in-format", ev.in_format, "csv or jsonl");
  evaluate->add_option("--model", ev.models, "mask model json")->required()->check(CLI::ExistingFile);
  evaluate->add_option("--policy", ev.policy, "inconclusive-as-masked or inconclusive-as-unmasked");
  evaluate->add_option("--out", ev.out, "write the table csv here");
  AddFormat(evaluate, &ev.format, "text|csv|json");
  evaluate->callback([&] { action = [&] { RunEvaluate(ev); }; });

  // popeval
  PopevalOptions pe;
  CLI::App* popeval = app.add_subcommand("popeval", "Popularity-scaled sampled evaluation");
  popeval->add_option("--data", pe.data, "dataset")->required()->check(CLI::ExistingFile);
  popeval->add_option("--in-format", pe.in_format, "csv or jsonl");
  popeval->add_option("--model", pe.models, "mask model json")->required()->check(CLI::ExistingFile);
  popeval->add_option("--popularity", pe.popularity, "csv with columns pet,users")
      ->check(CLI::ExistingFile);
  popeval->add_option("--users", pe.users, "sample size for every model (overrides the table)");
  popeval->add_option("--samples", pe.samples, "samples per model");
  popeval->add_option("--seed", pe.seed, "random seed");
  popeval->add_option("--policy", pe.policy, "inconclusive-as-masked or inconclusive-as-unmasked");
  popeval->add_option("--out", pe.out, "write the results csv here");
  AddFormat(popeval, &pe.format, "text|csv|json");
  popeval->callback([&] { action = [&] { RunPopeval(pe); }; });

  // sweep
  SweepOptions sw;
  CLI::App* sweep = app.add_subcommand("sweep", "Score screen spoofing strategies");
  sweep->add_option("--data", sw.data, "dataset")->required()->check(CLI::ExistingFile);
  sweep->add_option("--in-format", sw.in_format, "csv or jsonl");
  sweep->add_option("--model", sw.model, "baseline model (default: mask every attribute)")
      ->check(CLI::ExistingFile);
  sweep->add_option("--caps", sw.caps, "cap sizes, WxH")->delimiter(',');
  sweep->add_option("--quanta", sw.quanta, "quantum range WxH..WxH or one WxH");
  sweep->add_option("--exclude", sw.exclude, "quanta to skip, WxH")->delimiter(',');
  sweep->add_option("--reference", sw.reference, "strategy to compare against, CAP:QUANT");
  sweep->add_option("--out", sw.out, "write the sweep csv here");
  sweep->add_option("--pareto-out", sw.pareto_out, "write improvements over the reference here");
  AddFormat(sweep, &sw.format, "text|csv|json");
  sweep->callback([&] { action = [&] { RunSweep(sw); }; });

  std::string command = "fpeval";
  try {
    app.parse(argc, argv);
    for (CLI::App* sub = &app; !sub->get_subcommands().empty();) {
      sub = sub->get_subcommands().front();
      command += " " + sub->get_name();
    }
    if (threads > 0) SetDefaultThreads(threads);
    action();
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << command << ": error[usage]: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << command << ": error[" << e.kind() << "]: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << command << ": error[internal]: " << e.what() << "\n";
    return kExitData;
  }
  return kExitOk;
}

}  // namespace
}  // namespace fpeval

int main(int argc, char** argv) { return fpeval::Main(argc, argv); }
