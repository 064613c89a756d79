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

// Popularity-adjusted evaluation. A tool with N users only hides its users
// among N platforms, so instead of masking the whole dataset we repeatedly
// draw N records without replacement, mask them, and report mean and
// standard error of each metric over the draws.

#ifndef FPEVAL_POPULARITY_H_
#define FPEVAL_POPULARITY_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fpeval/hybrid.h"
#include "fpeval/metrics.h"

namespace fpeval {

struct PopularityEntry {
  std::string pet;
  std::optional<int64_t> users;  // nullopt: unknown, excluded from analysis
};

// csv with header pet,users. "NA" (or empty) is unknown. Thousands
// separators and a trailing '+' are accepted ("10,000,000+").
std::vector<PopularityEntry> ParsePopularityTable(std::string_view contents);
std::vector<PopularityEntry> LoadPopularityTable(const std::string& path);

struct MeanSem {
  double mean = 0.0;
  double sem = 0.0;

  friend bool operator==(const MeanSem&, const MeanSem&) = default;
};

struct SampledEstimate {
  std::map<Metric, MeanSem> metrics;
  int samples = 0;
  int64_t sample_size = 0;
  uint64_t seed = 0;

  friend bool operator==(const SampledEstimate&, const SampledEstimate&) =
      default;
};

// sem is the n-1 sample standard deviation divided by sqrt(samples).
// Iteration i draws from its own generator seeded with DeriveSeed(seed, i),
// and results are reduced in index order, so the output is independent of
// thread count.
//
// Throws SampleTooLargeError when users > |d| (no such sample without
// replacement exists) and DomainError when users == 0 or samples < 2.
SampledEstimate PopularityEvaluate(
    const Dataset& d, const MaskModel& model, int64_t users, int samples = 100,
    uint64_t seed = 0, MaskPolicy policy = MaskPolicy::kInconclusiveAsMasked);

nlohmann::json ToJson(const SampledEstimate& estimate);

// One line of a popularity run. Skipped pets keep `status` != "ok" and no
// estimate.
struct PopularityRow {
  std::string pet;
  std::optional<int64_t> users;
  std::string status = "ok";
  std::optional<SampledEstimate> estimate;

  friend bool operator==(const PopularityRow&, const PopularityRow&) = default;
};

// Columns: pet,users,status,samples,seed,entropy_mean,entropy_sem,
// pct_le_1_mean,pct_le_1_sem,pct_le_10_mean,pct_le_10_sem.
std::string PopularityRowsToCsv(const std::vector<PopularityRow>& rows);
std::vector<PopularityRow> PopularityRowsFromCsv(std::string_view contents);

}  // namespace fpeval

#endif  // FPEVAL_POPULARITY_H_
