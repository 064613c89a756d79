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

// Screen-resolution spoofing in the style of Tor Browser: the reported
// screen is the content window, whose size is rounded down to a multiple of
// a quantum and capped. This module scores such strategies on a dataset,
// sweeps the (cap, quantum) design space, and filters Pareto improvements.

#ifndef FPEVAL_RESOLUTION_H_
#define FPEVAL_RESOLUTION_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fpeval/hybrid.h"
#include "fpeval/mask_model.h"

namespace fpeval {

struct Resolution {
  int64_t w = 0;
  int64_t h = 0;

  std::string ToString() const;  // "WxH"
  // Parses "WxH" with positive components; throws FormatError.
  static Resolution Parse(std::string_view text);

  friend bool operator==(const Resolution&, const Resolution&) = default;
  friend auto operator<=>(const Resolution&, const Resolution&) = default;
};

struct SpoofStrategy {
  int64_t cap_w = 1000;
  int64_t cap_h = 1000;
  int64_t quant_w = 200;
  int64_t quant_h = 100;

  static SpoofStrategy TorDefault() { return {}; }
  static SpoofStrategy FromParts(Resolution cap, Resolution quant) {
    return {cap.w, cap.h, quant.w, quant.h};
  }

  // Positive dimensions and quantum <= cap; throws ConfigurationError.
  void Validate() const;
  std::string ToString() const;  // "1000x1000:200x100"

  friend bool operator==(const SpoofStrategy&, const SpoofStrategy&) = default;
};

// One dimension: min(cap, floor(x / quant) * quant), raised to one quantum
// when the floor is zero.
int64_t SpoofDimension(int64_t cap, int64_t quant, int64_t x);

Resolution Spoof(const SpoofStrategy& s, Resolution screen);

// Number of distinct (w', h') outputs the strategy can produce.
int64_t StrategySets(const SpoofStrategy& s);

struct StrategyScore {
  double entropy_bits = 0.0;
  double pct_le_1 = 0.0;
  double pct_le_10 = 0.0;
  double abs_loss = 0.0;  // mean unused pixels per record
  double pct_loss = 0.0;  // mean unused fraction of the screen

  friend bool operator==(const StrategyScore&, const StrategyScore&) = default;
};

// `model` with screen.Width/Height replaced by the spoofed dimensions,
// screen.AvailWidth/AvailHeight by the same, and AvailLeft/AvailTop by 0.
MaskModel WithScreenStrategy(const MaskModel& model, const SpoofStrategy& s);

// Handcrafted Tor model: every attribute in `attributes` is standardized
// and the screen attributes follow `s`.
MaskModel TorHandcraftedModel(const std::vector<std::string>& attributes,
                              const SpoofStrategy& s = SpoofStrategy::TorDefault());

// Applies WithScreenStrategy(baseline_model, s) through ApplyMask and
// computes metrics and utility loss. Throws DataError listing the records
// that lack a usable screen resolution.
StrategyScore ScoreStrategy(const Dataset& d, const MaskModel& baseline_model,
                            const SpoofStrategy& s);

// Inclusive quantum rectangle.
struct QuantaRange {
  Resolution min{1, 1};
  Resolution max{1, 1};

  // "WxH..WxH" or a single "WxH".
  static QuantaRange Parse(std::string_view text);
};

// Candidates in cap order, then row-major (quant_w, quant_h). Quanta larger
// than the cap and those listed in `exclude` are skipped.
std::vector<SpoofStrategy> EnumerateStrategies(
    const std::vector<Resolution>& caps, const QuantaRange& quanta,
    const std::vector<Resolution>& exclude = {});

struct SweepResult {
  SpoofStrategy strategy;
  StrategyScore score;
};

// Scores every candidate of EnumerateStrategies. The baseline model is
// applied once; each candidate then only re-buckets the screen attributes.
// Output order matches EnumerateStrategies regardless of thread count.
std::vector<SweepResult> Sweep(const Dataset& d, const MaskModel& baseline_model,
                               const std::vector<Resolution>& caps,
                               const QuantaRange& quanta,
                               const std::vector<Resolution>& exclude = {});

// Results whose five numbers (three metrics, two losses) are all strictly
// below the reference.
std::vector<SweepResult> ParetoImprovements(
    const std::vector<SweepResult>& results, const StrategyScore& reference);

// Columns cap_w,cap_h,quant_w,quant_h,entropy,pct_le_1,pct_le_10,abs_loss,
// pct_loss.
std::string SweepToCsv(const std::vector<SweepResult>& results);
std::vector<SweepResult> SweepFromCsv(std::string_view contents);

}  // namespace fpeval

#endif  // FPEVAL_RESOLUTION_H_
