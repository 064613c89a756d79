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

// Seeded synthetic corpora and observation logs with ground truth. These
// stand in for real fingerprint collections and browser experiments; their
// marginals are invented and carry no real-world meaning.

#ifndef FPEVAL_SYNTHETIC_H_
#define FPEVAL_SYNTHETIC_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fpeval/fingerprint.h"
#include "fpeval/mask_model.h"
#include "fpeval/observation_log.h"
#include "fpeval/resolution.h"
#include "json.hpp"

namespace fpeval {

struct WeightedValue {
  AttributeValue value;
  double weight = 0.0;
};

struct WeightedResolution {
  Resolution resolution;
  double weight = 0.0;
};

// Weights of every distribution must be positive and sum to 1 (within
// 1e-9). The User-Agent and screen attributes are synthesized from the
// browser/os mixes and the resolution list; `attributes` describes the
// rest, each drawn independently.
struct CorpusSpec {
  int64_t n = 0;
  std::map<std::string, std::vector<WeightedValue>> attributes;
  // chrome, firefox, other
  std::vector<double> browser_mix = {0.5, 0.4, 0.1};
  // windows, mac, linux, mobile
  std::vector<double> os_mix = {0.6, 0.2, 0.15, 0.05};
  std::vector<WeightedResolution> resolutions;
  // Also emit screen.AvailWidth/AvailHeight/AvailLeft/AvailTop.
  bool avail_attributes = true;
  double js_disabled_fraction = 0.0;
  double bad_resolution_fraction = 0.0;
  double no_cookie_fraction = 0.0;
  // Distinct cookie ids to spread records over; 0 gives every record its
  // own cookie.
  int64_t cookies = 0;
  uint64_t seed = 0;

  // Throws SpecError.
  void Validate() const;
};

// "seed" is required.
CorpusSpec CorpusSpecFromJson(const nlohmann::json& j);
nlohmann::json ToJson(const CorpusSpec& spec);

// "firefox-like" or "chrome-like": attribute names follow common
// fingerprinting scripts, values and weights are made up.
CorpusSpec PresetCorpusSpec(std::string_view name, int64_t n, uint64_t seed);

struct RecordTruth {
  BrowserFamily browser = BrowserFamily::kOther;
  OsFamily os = OsFamily::kOther;
  bool planted_js_disabled = false;
  bool planted_bad_resolution = false;
  // First sanitize rule the record violates, or empty.
  std::string expected_drop_rule;
};

struct GroundTruth {
  std::vector<RecordTruth> records;
  // pet -> attribute -> status the log was built to produce.
  std::map<std::string, std::map<std::string, VerdictStatus>> verdicts;
};

nlohmann::json ToJson(const GroundTruth& truth);

struct GeneratedCorpus {
  Dataset dataset;
  GroundTruth truth;
};

GeneratedCorpus GenerateCorpus(const CorpusSpec& spec);

struct PetRequest {
  std::string name;
  std::map<std::string, VerdictStatus> verdicts;
};

struct GeneratedLog {
  ObservationLog log;
  GroundTruth truth;
};

// Builds a log on which InferModel(log, pet, params) reproduces every
// requested verdict. All pets must request the same attribute set, and
// their requests must be compatible with one shared baseline (for example
// one pet cannot ask for unmasked while another asks for insufficient
// diversity on the same attribute). Unmasked needs at least
// MinDistinctValuesForUnmasked(params) platforms; any variation status
// needs epochs_per_boundary >= 2. Violations throw SpecError.
GeneratedLog GenerateLog(const std::vector<PetRequest>& pets, int platforms,
                         int epochs_per_boundary, uint64_t seed,
                         const StatParams& params = {});

// Verdicts resembling Tor Browser on Firefox: 21 standardized
// attributes, `platform` unmasked, the rest inconclusive.
std::map<std::string, VerdictStatus> TorFirefoxVerdicts();

}  // namespace fpeval

#endif  // FPEVAL_SYNTHETIC_H_
