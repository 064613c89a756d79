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

#include "fpeval/metrics.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fpeval/errors.h"

namespace fpeval {

std::vector<int64_t> AnonymitySetDistribution::Counts() const {
  std::vector<int64_t> counts;
  counts.reserve(sets.size());
  for (const auto& [key, count] : sets) counts.push_back(count);
  return counts;
}

AnonymitySetDistribution AnonymitySets(std::span<const Fingerprint> fps) {
  AnonymitySetDistribution dist;
  for (const Fingerprint& fp : fps) ++dist.sets[fp.Canonical()];
  dist.total = static_cast<int64_t>(fps.size());
  return dist;
}

double EntropyFromCounts(std::span<const int64_t> counts) {
  const int64_t total = std::accumulate(counts.begin(), counts.end(), int64_t{0});
  if (total <= 0) throw DomainError("entropy of an empty distribution");
  // Sum in sorted order so the result depends only on the multiset of
  // counts, not on how the sets happened to be keyed.
  std::vector<int64_t> sorted(counts.begin(), counts.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(total);
  double h = 0.0;
  for (int64_t c : sorted) {
    if (c <= 0) continue;
    if (c == total) return 0.0;
    const double p = static_cast<double>(c) / n;
    h -= p * std::log2(p);
  }
  return h;
}

double PctLeFromCounts(std::span<const int64_t> counts, int64_t k) {
  if (k < 1) throw DomainError("pct_le requires k >= 1");
  int64_t total = 0;
  int64_t small = 0;
  for (int64_t c : counts) {
    total += c;
    if (c <= k) small += c;
  }
  if (total <= 0) throw DomainError("pct_le of an empty distribution");
  return static_cast<double>(small) / static_cast<double>(total);
}

double Entropy(const AnonymitySetDistribution& dist) {
  if (dist.total <= 0) throw DomainError("entropy of an empty distribution");
  return EntropyFromCounts(dist.Counts());
}

double PctLe(const AnonymitySetDistribution& dist, int64_t k) {
  if (dist.total <= 0) throw DomainError("pct_le of an empty distribution");
  return PctLeFromCounts(dist.Counts(), k);
}

TrackabilityReport TrackabilityFromCounts(std::span<const int64_t> counts) {
  TrackabilityReport r;
  r.n = std::accumulate(counts.begin(), counts.end(), int64_t{0});
  r.entropy_bits = EntropyFromCounts(counts);
  r.pct_le_1 = PctLeFromCounts(counts, 1);
  r.pct_le_10 = PctLeFromCounts(counts, 10);
  return r;
}

TrackabilityReport Trackability(const AnonymitySetDistribution& dist) {
  if (dist.total <= 0) throw DomainError("trackability of an empty dataset");
  return TrackabilityFromCounts(dist.Counts());
}

TrackabilityReport Trackability(std::span<const Fingerprint> fps) {
  return Trackability(AnonymitySets(fps));
}

std::string_view ToString(Metric metric) {
  switch (metric) {
    case Metric::kEntropy:
      return "entropy";
    case Metric::kPctLe1:
      return "pct_le_1";
    case Metric::kPctLe10:
      return "pct_le_10";
  }
  return "";
}

std::optional<Metric> ParseMetric(std::string_view name) {
  for (Metric m : kAllMetrics) {
    if (ToString(m) == name) return m;
  }
  return std::nullopt;
}

double MetricValue(const TrackabilityReport& report, Metric metric) {
  switch (metric) {
    case Metric::kEntropy:
      return report.entropy_bits;
    case Metric::kPctLe1:
      return report.pct_le_1;
    case Metric::kPctLe10:
      return report.pct_le_10;
  }
  return 0.0;
}

double Effectiveness(Metric metric, const TrackabilityReport& without,
                     const TrackabilityReport& with) {
  return MetricValue(without, metric) - MetricValue(with, metric);
}

double Effectiveness(Metric metric, std::span<const Fingerprint> without,
                     std::span<const Fingerprint> with) {
  if (without.empty() || with.empty()) {
    throw DomainError("effectiveness needs non-empty datasets");
  }
  return Effectiveness(metric, Trackability(without), Trackability(with));
}

nlohmann::json ToJson(const TrackabilityReport& report) {
  return {{"n", report.n},
          {"entropy_bits", report.entropy_bits},
          {"pct_le_1", report.pct_le_1},
          {"pct_le_10", report.pct_le_10}};
}

TrackabilityReport TrackabilityFromJson(const nlohmann::json& j) {
  TrackabilityReport r;
  r.n = j.at("n").get<int64_t>();
  r.entropy_bits = j.at("entropy_bits").get<double>();
  r.pct_le_1 = j.at("pct_le_1").get<double>();
  r.pct_le_10 = j.at("pct_le_10").get<double>();
  return r;
}

}  // namespace fpeval
