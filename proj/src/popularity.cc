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

#include "fpeval/popularity.h"

#include <algorithm>
#include <cmath>

#include "fpeval/csv.h"
#include "fpeval/errors.h"
#include "fpeval/file_util.h"
#include "fpeval/parallel.h"
#include "fpeval/random.h"

namespace fpeval {

std::vector<PopularityEntry> ParsePopularityTable(std::string_view contents) {
  std::vector<csv::Row> rows = csv::Parse(contents);
  std::vector<PopularityEntry> out;
  if (rows.empty()) return out;
  const auto& header = rows.front().fields;
  if (header.size() < 2 || header[0].text != "pet" || header[1].text != "users") {
    throw FormatError("popularity table: header must be 'pet,users'");
  }
  for (size_t i = 1; i < rows.size(); ++i) {
    const auto& f = rows[i].fields;
    if (f.size() < 2 || f[0].text.empty()) {
      throw FormatError("popularity table: line " +
                        std::to_string(rows[i].line) + " needs pet and users");
    }
    PopularityEntry e{f[0].text, std::nullopt};
    std::string users;
    for (char c : f[1].text) {
      if (c != ',' && c != ' ') users.push_back(c);
    }
    if (!users.empty() && users.back() == '+') users.pop_back();
    if (!users.empty() && users != "NA") {
      auto n = ParseCanonicalInteger(users);
      if (!n || *n <= 0) {
        throw FormatError("popularity table: bad user count '" + f[1].text +
                          "' on line " + std::to_string(rows[i].line));
      }
      e.users = *n;
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<PopularityEntry> LoadPopularityTable(const std::string& path) {
  return ParsePopularityTable(ReadFile(path));
}

SampledEstimate PopularityEvaluate(const Dataset& d, const MaskModel& model,
                                   int64_t users, int samples, uint64_t seed,
                                   MaskPolicy policy) {
  if (users <= 0) throw DomainError("users must be positive");
  if (samples < 2) throw DomainError("at least 2 samples are needed for a sem");
  if (users > static_cast<int64_t>(d.size())) {
    throw SampleTooLargeError(
        "pet '" + model.pet + "' has " + std::to_string(users) +
        " users but the dataset holds only " + std::to_string(d.size()) +
        " records");
  }

  // Mask once; each record's class id is the rank of its canonical masked
  // fingerprint, so counting by id visits sets in canonical order just like
  // AnonymitySets().
  const Dataset masked = ApplyMask(d, model, policy);
  std::vector<std::string> keys;
  keys.reserve(masked.size());
  for (const Record& r : masked.records) keys.push_back(r.fingerprint.Canonical());
  std::vector<std::string> sorted_keys = keys;
  std::sort(sorted_keys.begin(), sorted_keys.end());
  sorted_keys.erase(std::unique(sorted_keys.begin(), sorted_keys.end()),
                    sorted_keys.end());
  std::vector<size_t> class_of(keys.size());
  for (size_t i = 0; i < keys.size(); ++i) {
    class_of[i] = static_cast<size_t>(
        std::lower_bound(sorted_keys.begin(), sorted_keys.end(), keys[i]) -
        sorted_keys.begin());
  }

  std::vector<TrackabilityReport> per_sample(static_cast<size_t>(samples));
  ParallelFor(per_sample.size(), [&](size_t it) {
    Rng rng(DeriveSeed(seed, it));
    std::vector<size_t> picked =
        SampleWithoutReplacement(d.size(), static_cast<size_t>(users), rng);
    std::vector<int64_t> by_class(sorted_keys.size(), 0);
    for (size_t idx : picked) ++by_class[class_of[idx]];
    std::vector<int64_t> counts;
    for (int64_t c : by_class) {
      if (c > 0) counts.push_back(c);
    }
    per_sample[it] = TrackabilityFromCounts(counts);
  });

  SampledEstimate est;
  est.samples = samples;
  est.sample_size = users;
  est.seed = seed;
  for (Metric m : kAllMetrics) {
    // Welford; exact when every sample agrees.
    double mean = 0.0;
    double m2 = 0.0;
    for (size_t i = 0; i < per_sample.size(); ++i) {
      const double x = MetricValue(per_sample[i], m);
      const double delta = x - mean;
      mean += delta / static_cast<double>(i + 1);
      m2 += delta * (x - mean);
    }
    const double n = static_cast<double>(samples);
    const double sd = std::sqrt(std::max(0.0, m2) / (n - 1.0));
    est.metrics[m] = {mean, sd / std::sqrt(n)};
  }
  return est;
}

nlohmann::json ToJson(const SampledEstimate& estimate) {
  nlohmann::json metrics = nlohmann::json::object();
  for (const auto& [metric, ms] : estimate.metrics) {
    metrics[std::string(ToString(metric))] = {{"mean", ms.mean}, {"sem", ms.sem}};
  }
  return {{"metrics", std::move(metrics)},
          {"samples", estimate.samples},
          {"sample_size", estimate.sample_size},
          {"seed", estimate.seed}};
}

namespace {

constexpr const char* kRowColumns[] = {
    "pet",           "users",        "status",         "samples",
    "seed",          "entropy_mean", "entropy_sem",    "pct_le_1_mean",
    "pct_le_1_sem",  "pct_le_10_mean", "pct_le_10_sem"};
constexpr size_t kRowWidth = std::size(kRowColumns);

}  // namespace

std::string PopularityRowsToCsv(const std::vector<PopularityRow>& rows) {
  auto num = [](double v) { return nlohmann::json(v).dump(); };
  std::string out =
      csv::JoinRow(std::vector<std::string>(std::begin(kRowColumns), std::end(kRowColumns)));
  for (const PopularityRow& row : rows) {
    std::vector<std::string> f = {
        csv::Escape(row.pet), row.users ? std::to_string(*row.users) : "NA",
        csv::Escape(row.status)};
    if (row.estimate) {
      f.push_back(std::to_string(row.estimate->samples));
      f.push_back(std::to_string(row.estimate->seed));
      for (Metric m : kAllMetrics) {
        const MeanSem& ms = row.estimate->metrics.at(m);
        f.push_back(num(ms.mean));
        f.push_back(num(ms.sem));
      }
    } else {
      f.resize(kRowWidth);
    }
    out += csv::JoinRow(f);
  }
  return out;
}

std::vector<PopularityRow> PopularityRowsFromCsv(std::string_view contents) {
  std::vector<csv::Row> rows = csv::Parse(contents);
  if (rows.empty() || rows.front().fields.size() != kRowWidth ||
      rows.front().fields[0].text != "pet") {
    throw FormatError("popularity results csv: missing or unexpected header");
  }
  std::vector<PopularityRow> out;
  for (size_t i = 1; i < rows.size(); ++i) {
    const auto& f = rows[i].fields;
    const std::string where = " on line " + std::to_string(rows[i].line);
    if (f.size() != kRowWidth) {
      throw FormatError("popularity results csv: wrong field count" + where);
    }
    PopularityRow row;
    row.pet = f[0].text;
    if (f[1].text != "NA") {
      row.users = ParseCanonicalInteger(f[1].text);
      if (!row.users) throw FormatError("bad users '" + f[1].text + "'" + where);
    }
    row.status = f[2].text;
    if (!f[3].text.empty()) {
      try {
        SampledEstimate est;
        est.samples = std::stoi(f[3].text);
        est.seed = std::stoull(f[4].text);
        est.sample_size = row.users.value_or(0);
        size_t k = 5;
        for (Metric m : kAllMetrics) {
          MeanSem ms;
          ms.mean = nlohmann::json::parse(f[k++].text).get<double>();
          ms.sem = nlohmann::json::parse(f[k++].text).get<double>();
          est.metrics[m] = ms;
        }
        row.estimate = est;
      } catch (const std::exception&) {
        throw FormatError("popularity results csv: bad number" + where);
      }
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace fpeval
