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

// Experimental observations consumed by mask inference.
//
// jsonl, one observation per line:
//   {"platform": "p0", "subject": "baseline" | "pet:<name>",
//    "boundary": "reload" | "domain" | "session", "epoch": 0,
//    "attrs": {"timezone": -480, ...}}
//
// Each (platform, subject) is one browsing platform with or without the
// tool. Epochs index visits that cross the named boundary: reloads of one
// domain, visits to different domains, or sessions. Producers are expected
// to separate sessions by at least 45 minutes of inactivity; the log only
// records the label.

#ifndef FPEVAL_OBSERVATION_LOG_H_
#define FPEVAL_OBSERVATION_LOG_H_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fpeval/fingerprint.h"

namespace fpeval {

enum class Boundary { kReload, kDomain, kSession };

inline constexpr Boundary kAllBoundaries[] = {
    Boundary::kReload, Boundary::kDomain, Boundary::kSession};

std::string_view ToString(Boundary boundary);
std::optional<Boundary> ParseBoundary(std::string_view name);

// Baseline when `pet` is empty.
struct Subject {
  std::string pet;

  static Subject Baseline() { return {}; }
  static Subject Pet(std::string name) { return {std::move(name)}; }
  bool is_baseline() const { return pet.empty(); }
  std::string ToString() const;
  // "baseline" or "pet:<name>"; throws FormatError otherwise.
  static Subject Parse(std::string_view text);

  friend bool operator==(const Subject&, const Subject&) = default;
  friend auto operator<=>(const Subject&, const Subject&) = default;
};

struct Observation {
  std::string platform_id;
  Subject subject;
  Boundary boundary = Boundary::kReload;
  int epoch = 0;
  Fingerprint fingerprint;

  friend bool operator==(const Observation&, const Observation&) = default;
};

struct ObservationLog {
  std::vector<Observation> observations;

  std::set<std::string> AttributeNames() const;
  std::set<std::string> Pets() const;

  friend bool operator==(const ObservationLog&, const ObservationLog&) =
      default;
};

ObservationLog ParseObservationLog(std::string_view contents);
std::string SerializeObservationLog(const ObservationLog& log);
ObservationLog LoadObservationLog(const std::string& path);
void SaveObservationLog(const ObservationLog& log, const std::string& path);

}  // namespace fpeval

#endif  // FPEVAL_OBSERVATION_LOG_H_
