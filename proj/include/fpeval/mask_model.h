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

// Mask models: per-attribute verdicts describing how a privacy tool treats
// each fingerprint attribute, plus optional value transforms for
// handcrafted models.
//
// File format (json):
//   {
//     "pet": "tor",
//     "browser": "firefox",                 // optional
//     "params": {"f": 0.75, "alpha": 0.1},
//     "verdicts": {
//       "timezone": {"status": "masked-standardize"},
//       "language": {"status": "unmasked", "confidence": 0.1},
//       "plugins":  {"status": "inconclusive-baseline-varies",
//                    "reason": "..."}
//     },
//     "transforms": {                       // optional
//       "screen.Width": {"kind": "map", "function": "screen-spoof",
//                        "params": {"cap_w": 1000, ..., "output": "width"}}
//     }
//   }

#ifndef FPEVAL_MASK_MODEL_H_
#define FPEVAL_MASK_MODEL_H_

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fpeval/fingerprint.h"
#include "json.hpp"

namespace fpeval {

enum class VerdictStatus {
  kMaskedVary,
  kMaskedStandardize,
  kUnmasked,
  kInconclusiveBaselineVaries,
  kInconclusiveInsufficientDiversity,
};

std::string_view ToString(VerdictStatus status);
std::optional<VerdictStatus> ParseVerdictStatus(std::string_view name);

inline bool IsMasked(VerdictStatus s) {
  return s == VerdictStatus::kMaskedVary ||
         s == VerdictStatus::kMaskedStandardize;
}
inline bool IsInconclusive(VerdictStatus s) {
  return s == VerdictStatus::kInconclusiveBaselineVaries ||
         s == VerdictStatus::kInconclusiveInsufficientDiversity;
}

// Impact fraction f and confidence threshold alpha of the standardization
// test. Both must lie in (0, 1).
struct StatParams {
  double f = 0.75;
  double alpha = 0.1;

  void Validate() const;
  friend bool operator==(const StatParams&, const StatParams&) = default;
};

// One observation cited as evidence for a verdict.
struct Citation {
  std::string platform_id;
  std::string subject;  // "baseline" or "pet:<name>"
  std::string epoch;    // "<boundary>:<index>"
  AttributeValue value;

  friend bool operator==(const Citation&, const Citation&) = default;
};

struct Verdict {
  VerdictStatus status = VerdictStatus::kInconclusiveInsufficientDiversity;
  // Set iff status is kUnmasked: the alpha the test was run at.
  std::optional<double> confidence;
  std::string reason;
  std::vector<Citation> evidence;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

// Replacement applied to a masked attribute. FullMask writes the sentinel;
// a map transform computes the replacement from the original fingerprint.
class ValueTransform {
 public:
  enum class Kind { kFullMask, kMap };
  using Fn = std::function<AttributeValue(const Fingerprint& original)>;

  static ValueTransform FullMask();
  // Built-in functions:
  //   "screen-spoof": {cap_w, cap_h, quant_w, quant_h, output}, output one of
  //       "width", "height" (spoofed screen.Width / screen.Height) or "zero".
  //   "constant": {value}
  // Throws ConfigurationError for unknown functions or bad params.
  static ValueTransform Map(std::string function, nlohmann::json params);

  Kind kind() const { return kind_; }
  const std::string& function() const { return function_; }
  const nlohmann::json& params() const { return params_; }

  AttributeValue Apply(const Fingerprint& original) const;

  friend bool operator==(const ValueTransform& a, const ValueTransform& b) {
    return a.kind_ == b.kind_ && a.function_ == b.function_ &&
           a.params_ == b.params_;
  }

 private:
  Kind kind_ = Kind::kFullMask;
  std::string function_;
  nlohmann::json params_;
  Fn fn_;
};

struct MaskModel {
  std::string pet;
  std::optional<BrowserFamily> browser;
  StatParams params;
  std::map<std::string, Verdict, std::less<>> verdicts;
  std::map<std::string, ValueTransform, std::less<>> transforms;
  // Free-form diagnostics from inference (skipped boundaries, ...).
  std::vector<std::string> notes;

  // Attributes with a Masked* verdict.
  std::set<std::string> MaskedAttributes() const;
  std::set<std::string> InconclusiveAttributes() const;

  // Throws ConfigurationError when a transform sits on an attribute that is
  // not masked.
  void Validate() const;

  // Statuses, confidences and transforms only; two models with the same
  // signature transform every dataset identically.
  std::string Signature() const;

  friend bool operator==(const MaskModel&, const MaskModel&) = default;
};

nlohmann::json ToJson(const MaskModel& model);
MaskModel MaskModelFromJson(const nlohmann::json& j);

MaskModel LoadMaskModel(const std::string& path);
void SaveMaskModel(const MaskModel& model, const std::string& path);

}  // namespace fpeval

#endif  // FPEVAL_MASK_MODEL_H_
