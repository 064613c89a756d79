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

// Classifies how a privacy tool treats each attribute by comparing paired
// platforms with and without the tool.
//
// For one (tool, attribute) pair the checks run in a fixed order and the
// first that fires decides:
//   1. a baseline platform shows two or more values      -> inconclusive
//   2. a platform with the tool shows two or more values -> masked (vary)
//   3. some platform's value changes when the tool is
//      added                                             -> masked (standardize)
//   4/5. otherwise the tool might still standardize a fraction f of values
//      we never tried. With k distinct baseline values tested, the chance of
//      having seen no standardized value is (1 - f)^k. If that is <= alpha
//      the attribute is unmasked at confidence alpha, else inconclusive.
//
// Variation is judged per (platform, subject) over all of its epochs. A
// Missing value on one side of a pair counts as a change.

#ifndef FPEVAL_MASK_INFERENCE_H_
#define FPEVAL_MASK_INFERENCE_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fpeval/mask_model.h"
#include "fpeval/observation_log.h"

namespace fpeval {

// True iff some baseline platform reports two or more distinct values for
// `attr`. Throws NotObservedError if no observation carries the attribute.
bool BaselineVaries(const ObservationLog& log, std::string_view attr);

// (1 - f)^k <= alpha.
bool RulesOutImpactfulStandardization(int64_t distinct_values,
                                      const StatParams& params);

// Smallest k for which RulesOutImpactfulStandardization holds.
int64_t MinDistinctValuesForUnmasked(const StatParams& params);

// Throws InsufficientDataError when no platform has both baseline and
// `pet` observations, NotObservedError when nothing carries `attr`.
Verdict Classify(const ObservationLog& log, std::string_view pet,
                 std::string_view attr, const StatParams& params = {});

// Verdicts for every attribute seen in the baseline or `pet`
// observations. Per-attribute failures become inconclusive verdicts with a
// reason instead of aborting.
MaskModel InferModel(const ObservationLog& log, std::string_view pet,
                     const StatParams& params = {});

// Tools ordered by inclusion of their masked-attribute sets.
struct PreorderRanking {
  // (a, b) iff masked(a) is a superset of masked(b). Reflexive pairs are
  // included.
  std::vector<std::pair<std::string, std::string>> dominance;
  // Tools with equal masked sets, largest sets first, names sorted.
  std::vector<std::vector<std::string>> classes;
  std::map<std::string, int64_t> masked_counts;

  bool Dominates(std::string_view a, std::string_view b) const;
};

// Throws ConfigurationError if the models do not share an attribute
// universe.
PreorderRanking RankPreorder(const std::vector<MaskModel>& models);

}  // namespace fpeval

#endif  // FPEVAL_MASK_INFERENCE_H_
