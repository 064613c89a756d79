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

// Anonymity sets and trackability metrics.

#ifndef FPEVAL_METRICS_H_
#define FPEVAL_METRICS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fpeval/fingerprint.h"
#include "json.hpp"

namespace fpeval {

// Canonical fingerprint -> number of platforms sharing it.
struct AnonymitySetDistribution {
  std::map<std::string, int64_t> sets;
  int64_t total = 0;

  // Set sizes in canonical-key order.
  std::vector<int64_t> Counts() const;
};

AnonymitySetDistribution AnonymitySets(std::span<const Fingerprint> fps);

// Plug-in Shannon entropy in bits, -sum (c/n) log2 (c/n). Exactly 0.0 for a
// single set. Throws DomainError when empty.
double Entropy(const AnonymitySetDistribution& dist);

// Fraction of platforms whose anonymity set has at most `k` members.
double PctLe(const AnonymitySetDistribution& dist, int64_t k);

// Count-based forms. Counts are summed in sorted order, so the result
// depends only on the multiset of counts.
double EntropyFromCounts(std::span<const int64_t> counts);
double PctLeFromCounts(std::span<const int64_t> counts, int64_t k);

struct TrackabilityReport {
  int64_t n = 0;
  double entropy_bits = 0.0;
  double pct_le_1 = 0.0;
  double pct_le_10 = 0.0;

  friend bool operator==(const TrackabilityReport&,
                         const TrackabilityReport&) = default;
};

TrackabilityReport Trackability(const AnonymitySetDistribution& dist);
TrackabilityReport Trackability(std::span<const Fingerprint> fps);
TrackabilityReport TrackabilityFromCounts(std::span<const int64_t> counts);

enum class Metric { kEntropy, kPctLe1, kPctLe10 };

inline constexpr Metric kAllMetrics[] = {Metric::kEntropy, Metric::kPctLe1,
                                         Metric::kPctLe10};

std::string_view ToString(Metric metric);
std::optional<Metric> ParseMetric(std::string_view name);
double MetricValue(const TrackabilityReport& report, Metric metric);

// metric(without) - metric(with). Positive means the PET lowers
// trackability. Throws DomainError if either side is empty.
double Effectiveness(Metric metric, std::span<const Fingerprint> without,
                     std::span<const Fingerprint> with);
double Effectiveness(Metric metric, const TrackabilityReport& without,
                     const TrackabilityReport& with);

nlohmann::json ToJson(const TrackabilityReport& report);
TrackabilityReport TrackabilityFromJson(const nlohmann::json& j);

}  // namespace fpeval

#endif  // FPEVAL_METRICS_H_
