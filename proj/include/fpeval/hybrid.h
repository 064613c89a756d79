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

// Counterfactual evaluation: apply a mask model to fingerprints collected
// from platforms without the tool and compare trackability before and
// after.

#ifndef FPEVAL_HYBRID_H_
#define FPEVAL_HYBRID_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fpeval/fingerprint.h"
#include "fpeval/mask_model.h"
#include "fpeval/metrics.h"

namespace fpeval {

// How inconclusive verdicts are treated. Masking them (the default) gives an
// upper bound on the tool's effect.
enum class MaskPolicy { kInconclusiveAsMasked, kInconclusiveAsUnmasked };

std::string_view ToString(MaskPolicy policy);
// "masked"/"unmasked" or the full ToString spellings.
std::optional<MaskPolicy> ParseMaskPolicy(std::string_view name);

// Rewrites one fingerprint. Masked attributes (and inconclusive ones under
// kInconclusiveAsMasked) become the sentinel, or the output of their map
// transform evaluated on the original fingerprint. Everything else passes
// through.
Fingerprint MaskFingerprint(const Fingerprint& fp, const MaskModel& model,
                            MaskPolicy policy);

// Record count, order and metadata are preserved. Throws ConfigurationError
// for a transform on a non-masked attribute.
Dataset ApplyMask(const Dataset& d, const MaskModel& model,
                  MaskPolicy policy = MaskPolicy::kInconclusiveAsMasked);

struct HybridReport {
  std::string pet;
  TrackabilityReport before;
  TrackabilityReport after;
  std::map<Metric, double> eff;
  // Partition of the dataset's attribute names. Attributes the model does
  // not mention count as unmasked.
  std::vector<std::string> masked_attrs;
  std::vector<std::string> inconclusive_attrs;
  std::vector<std::string> unmasked_attrs;
};

// Throws DomainError on an empty dataset.
HybridReport EvaluatePet(const Dataset& d, const MaskModel& model,
                         MaskPolicy policy = MaskPolicy::kInconclusiveAsMasked);

// One table row; tools whose models transform data identically share it.
struct HybridRow {
  std::vector<std::string> pets;  // sorted
  HybridReport report;
};

// Rows sorted by descending after-entropy, then by first name. Models that
// name a browser must match every record's browser family
// (ConfigurationError otherwise).
std::vector<HybridRow> EvaluateAll(
    const Dataset& d, const std::vector<MaskModel>& models,
    MaskPolicy policy = MaskPolicy::kInconclusiveAsMasked);

nlohmann::json ToJson(const HybridReport& report);

// Columns pet,entropy,pct_le_1,pct_le_10 (after-metrics), full precision.
std::string HybridTableToCsv(const std::vector<HybridRow>& rows);

// One parsed line of the csv written by HybridTableToCsv.
struct HybridTableRow {
  std::string pet;
  double entropy_bits = 0.0;
  double pct_le_1 = 0.0;
  double pct_le_10 = 0.0;
};
std::vector<HybridTableRow> HybridTableFromCsv(std::string_view contents);

}  // namespace fpeval

#endif  // FPEVAL_HYBRID_H_
