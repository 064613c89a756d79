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

// Python bindings. Structured results cross the boundary as plain dicts
// and lists (via json); datasets, logs and models stay opaque handles.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fpeval/dataset_io.h"
#include "fpeval/errors.h"
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

namespace py = pybind11;
using nlohmann::json;

namespace fpeval {
namespace {

py::object ToPy(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

json FromPy(const py::handle& obj) {
  return json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

DatasetFormat FormatArg(const std::string& path, const std::string& format) {
  if (format.empty()) return FormatFromPath(path);
  auto f = ParseDatasetFormat(format);
  if (!f) throw ConfigurationError("unknown dataset format '" + format + "'");
  return *f;
}

MaskPolicy PolicyArg(const std::string& policy) {
  auto p = ParseMaskPolicy(policy);
  if (!p) throw ConfigurationError("unknown policy '" + policy + "'");
  return *p;
}

json RecordToJson(const Record& r) {
  json attrs = json::object();
  for (const auto& [name, value] : r.fingerprint.attrs()) attrs[name] = ValueToJson(value);
  return {{"attrs", attrs},
          {"cookie_id", r.cookie_id ? json(*r.cookie_id) : json(nullptr)},
          {"js_enabled", r.js_enabled},
          {"browser", ToString(r.browser_family)},
          {"os", ToString(r.os_family)}};
}

json ScoreToJson(const StrategyScore& s) {
  return {{"entropy", s.entropy_bits},
          {"pct_le_1", s.pct_le_1},
          {"pct_le_10", s.pct_le_10},
          {"abs_loss", s.abs_loss},
          {"pct_loss", s.pct_loss}};
}

json SweepResultToJson(const SweepResult& r) {
  json j = ScoreToJson(r.score);
  j["strategy"] = r.strategy.ToString();
  return j;
}

SpoofStrategy StrategyArg(const std::string& text) {
  const size_t colon = text.find(':');
  if (colon == std::string::npos) {
    throw FormatError("strategy '" + text + "' must look like CAP:QUANT");
  }
  return SpoofStrategy::FromParts(Resolution::Parse(text.substr(0, colon)),
                                  Resolution::Parse(text.substr(colon + 1)));
}

}  // namespace
}  // namespace fpeval

PYBIND11_MODULE(_fpeval, m) {
  using namespace fpeval;
  m.doc() = "Fingerprint masking evaluation";

  py::register_exception<Error>(m, "FpevalError", PyExc_ValueError);

  m.def("set_threads", &SetDefaultThreads, py::arg("threads"),
        "Worker threads for parallel operations; 0 restores the default.");

  // ------------------------------------------------------------- datasets
  py::class_<Dataset>(m, "Dataset")
      .def("__len__", &Dataset::size)
      .def("__eq__", [](const Dataset& a, const Dataset& b) { return a == b; })
      .def_readwrite("provenance", &Dataset::provenance)
      .def("attribute_names", &Dataset::AttributeNames)
      .def("record", [](const Dataset& d, size_t i) {
        if (i >= d.size()) throw py::index_error("record index out of range");
        return ToPy(RecordToJson(d.records[i]));
      })
      .def("serialize", [](const Dataset& d, const std::string& format) {
        return SerializeDataset(d, FormatArg("", format));
      }, py::arg("format") = "jsonl")
      .def("save", [](const Dataset& d, const std::string& path, const std::string& format) {
        SaveDataset(d, path, FormatArg(path, format));
      }, py::arg("path"), py::arg("format") = "");

  m.def("load_dataset", [](const std::string& path, const std::string& format) {
    return LoadDataset(path, FormatArg(path, format));
  }, py::arg("path"), py::arg("format") = "");
  m.def("parse_dataset", [](const std::string& text, const std::string& format) {
    return ParseDataset(text, FormatArg("", format));
  }, py::arg("text"), py::arg("format") = "jsonl");

  m.def("dedupe", &DedupeByCookie, py::arg("dataset"));
  m.def("sanitize", [](const Dataset& d) {
    SanitizeReport report;
    Dataset out = Sanitize(d, &report);
    py::dict r;
    r["dropped"] = report.dropped;
    r["kept"] = report.kept;
    return py::make_tuple(std::move(out), r);
  }, py::arg("dataset"), "Returns (dataset, report).");
  m.def("split_by_browser", [](const Dataset& d) {
    BrowserSplit s = SplitByBrowser(d);
    py::dict out;
    out["chrome"] = std::move(s.chrome);
    out["firefox"] = std::move(s.firefox);
    return out;
  }, py::arg("dataset"));

  // -------------------------------------------------------------- metrics
  m.def("trackability", [](const Dataset& d) {
    return ToPy(ToJson(Trackability(d.Fingerprints())));
  }, py::arg("dataset"));
  m.def("entropy_from_counts", [](const std::vector<int64_t>& counts) {
    return EntropyFromCounts(counts);
  }, py::arg("counts"));
  m.def("pct_le_from_counts", [](const std::vector<int64_t>& counts, int64_t k) {
    return PctLeFromCounts(counts, k);
  }, py::arg("counts"), py::arg("k"));

  // --------------------------------------------------------- mask models
  py::class_<MaskModel>(m, "MaskModel")
      .def_readwrite("pet", &MaskModel::pet)
      .def("__eq__", [](const MaskModel& a, const MaskModel& b) { return a == b; })
      .def("statuses", [](const MaskModel& model) {
        std::map<std::string, std::string> out;
        for (const auto& [a, v] : model.verdicts) out[a] = std::string(ToString(v.status));
        return out;
      })
      .def("masked_attributes", &MaskModel::MaskedAttributes)
      .def("signature", &MaskModel::Signature)
      .def("to_dict", [](const MaskModel& model) { return ToPy(ToJson(model)); })
      .def_static("from_dict", [](const py::object& obj) { return MaskModelFromJson(FromPy(obj)); })
      .def("save", [](const MaskModel& model, const std::string& path) { SaveMaskModel(model, path); });

  m.def("load_model", &LoadMaskModel, py::arg("path"));
  m.def("tor_handcrafted_model", [](const std::vector<std::string>& attrs, const std::string& s) {
    return TorHandcraftedModel(attrs, StrategyArg(s));
  }, py::arg("attributes"), py::arg("strategy") = "1000x1000:200x100");

  // ------------------------------------------------------------ inference
  py::class_<ObservationLog>(m, "ObservationLog")
      .def("__len__", [](const ObservationLog& l) { return l.observations.size(); })
      .def("pets", &ObservationLog::Pets)
      .def("attribute_names", &ObservationLog::AttributeNames)
      .def("serialize", &SerializeObservationLog);
  m.def("load_log", &LoadObservationLog, py::arg("path"));
  m.def("parse_log", [](const std::string& text) { return ParseObservationLog(text); },
        py::arg("text"));
  m.def("infer_model", [](const ObservationLog& log, const std::string& pet, double f,
                          double alpha) {
    return InferModel(log, pet, StatParams{f, alpha});
  }, py::arg("log"), py::arg("pet"), py::arg("f") = 0.75, py::arg("alpha") = 0.1);
  m.def("rank_preorder", [](const std::vector<MaskModel>& models) {
    const PreorderRanking r = RankPreorder(models);
    py::dict out;
    out["classes"] = r.classes;
    out["dominance"] = r.dominance;
    out["masked_counts"] = r.masked_counts;
    return out;
  }, py::arg("models"));

  // ---------------------------------------------------------- evaluation
  m.def("apply_mask", [](const Dataset& d, const MaskModel& model, const std::string& policy) {
    return ApplyMask(d, model, PolicyArg(policy));
  }, py::arg("dataset"), py::arg("model"), py::arg("policy") = "masked");
  m.def("evaluate_pet", [](const Dataset& d, const MaskModel& model, const std::string& policy) {
    return ToPy(ToJson(EvaluatePet(d, model, PolicyArg(policy))));
  }, py::arg("dataset"), py::arg("model"), py::arg("policy") = "masked");
  m.def("evaluate_all", [](const Dataset& d, const std::vector<MaskModel>& models,
                           const std::string& policy) {
    json rows = json::array();
    for (const HybridRow& row : EvaluateAll(d, models, PolicyArg(policy))) {
      json r = ToJson(row.report);
      r["pets"] = row.pets;
      rows.push_back(std::move(r));
    }
    return ToPy(rows);
  }, py::arg("dataset"), py::arg("models"), py::arg("policy") = "masked");
  m.def("popularity_evaluate", [](const Dataset& d, const MaskModel& model, int64_t users,
                                  int samples, uint64_t seed, const std::string& policy) {
    return ToPy(ToJson(PopularityEvaluate(d, model, users, samples, seed, PolicyArg(policy))));
  }, py::arg("dataset"), py::arg("model"), py::arg("users"), py::arg("samples") = 100,
     py::arg("seed") = 0, py::arg("policy") = "masked");

  // ----------------------------------------------------------- resolution
  m.def("spoof", [](const std::string& strategy, int64_t w, int64_t h) {
    const Resolution r = Spoof(StrategyArg(strategy), {w, h});
    return py::make_tuple(r.w, r.h);
  }, py::arg("strategy"), py::arg("width"), py::arg("height"));
  m.def("strategy_sets", [](const std::string& s) { return StrategySets(StrategyArg(s)); },
        py::arg("strategy"));
  m.def("score_strategy", [](const Dataset& d, const MaskModel& baseline, const std::string& s) {
    return ToPy(ScoreToJson(ScoreStrategy(d, baseline, StrategyArg(s))));
  }, py::arg("dataset"), py::arg("baseline_model"), py::arg("strategy"));
  m.def("sweep", [](const Dataset& d, const MaskModel& baseline,
                    const std::vector<std::string>& caps, const std::string& quanta,
                    const std::vector<std::string>& exclude) {
    std::vector<Resolution> cap_list, excluded;
    for (const std::string& c : caps) cap_list.push_back(Resolution::Parse(c));
    for (const std::string& e : exclude) excluded.push_back(Resolution::Parse(e));
    json out = json::array();
    for (const SweepResult& r : Sweep(d, baseline, cap_list, QuantaRange::Parse(quanta), excluded)) {
      out.push_back(SweepResultToJson(r));
    }
    return ToPy(out);
  }, py::arg("dataset"), py::arg("baseline_model"), py::arg("caps"), py::arg("quanta"),
     py::arg("exclude") = std::vector<std::string>{});
  m.def("pareto_improvements", [](const py::list& results, const py::dict& reference) {
    auto score = [](const json& j) {
      return StrategyScore{j.at("entropy").get<double>(), j.at("pct_le_1").get<double>(),
                           j.at("pct_le_10").get<double>(), j.at("abs_loss").get<double>(),
                           j.at("pct_loss").get<double>()};
    };
    std::vector<SweepResult> parsed;
    const json rows = FromPy(results);
    for (const json& r : rows) {
      parsed.push_back({StrategyArg(r.at("strategy").get<std::string>()), score(r)});
    }
    json out = json::array();
    for (const SweepResult& r : ParetoImprovements(parsed, score(FromPy(reference)))) {
      out.push_back(SweepResultToJson(r));
    }
    return ToPy(out);
  }, py::arg("results"), py::arg("reference"));

  // ------------------------------------------------------------ synthetic
  m.def("generate_corpus", [](const py::object& spec) {
    CorpusSpec s = CorpusSpecFromJson(FromPy(spec));
    GeneratedCorpus g = GenerateCorpus(s);
    return py::make_tuple(std::move(g.dataset), ToPy(ToJson(g.truth)));
  }, py::arg("spec"), "spec is a dict as accepted by `fpeval gen corpus --spec`.");
  m.def("generate_log", [](const py::dict& pets, int platforms, int epochs, uint64_t seed,
                           double f, double alpha) {
    std::vector<PetRequest> requests;
    const json spec = FromPy(pets);
    for (const auto& [pet, attrs] : spec.items()) {
      PetRequest r{pet, {}};
      for (const auto& [attr, status] : attrs.items()) {
        auto st = ParseVerdictStatus(status.get<std::string>());
        if (!st) throw SpecError("unknown status '" + status.get<std::string>() + "'");
        r.verdicts[attr] = *st;
      }
      requests.push_back(std::move(r));
    }
    GeneratedLog g = GenerateLog(requests, platforms, epochs, seed, StatParams{f, alpha});
    return py::make_tuple(std::move(g.log), ToPy(ToJson(g.truth)));
  }, py::arg("pets"), py::arg("platforms") = 6, py::arg("epochs") = 2, py::arg("seed") = 0,
     py::arg("f") = 0.75, py::arg("alpha") = 0.1);
  m.def("tor_firefox_verdicts", [] {
    std::map<std::string, std::string> out;
    for (const auto& [a, s] : TorFirefoxVerdicts()) out[a] = std::string(ToString(s));
    return out;
  });
}
