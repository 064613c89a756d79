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

// Dataset cleaning applied before any trackability analysis. The CLI runs
// these in the order dedupe -> sanitize -> split.

#ifndef FPEVAL_PREPROCESS_H_
#define FPEVAL_PREPROCESS_H_

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "fpeval/fingerprint.h"

namespace fpeval {

// Treats each cookie as one browsing platform: drops cookie-less records and
// keeps only the first record seen for every cookie id.
Dataset DedupeByCookie(const Dataset& d);

namespace sanitize_rule {
inline constexpr std::string_view kJsDisabled = "js-disabled";
inline constexpr std::string_view kIllegitimateResolution =
    "illegitimate-resolution";
inline constexpr std::string_view kNonDesktopOs = "non-desktop-os";
}  // namespace sanitize_rule

struct SanitizeReport {
  // Rule name -> records dropped. A record is counted once, under the first
  // rule it violates in the order js-disabled, illegitimate-resolution,
  // non-desktop-os. All three rules are always present.
  std::map<std::string, int64_t> dropped;
  int64_t kept = 0;

  int64_t total_dropped() const;
};

// Removes records showing obvious signs of PET use or a non-desktop OS.
Dataset Sanitize(const Dataset& d, SanitizeReport* report = nullptr);

// Name of the first sanitize rule `r` violates, or empty.
std::string_view FirstViolatedRule(const Record& r);

struct BrowserSplit {
  Dataset chrome;
  Dataset firefox;
};

BrowserSplit SplitByBrowser(const Dataset& d);

}  // namespace fpeval

#endif  // FPEVAL_PREPROCESS_H_
