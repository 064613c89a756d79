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

#include "fpeval/preprocess.h"

#include <set>

namespace fpeval {

Dataset DedupeByCookie(const Dataset& d) {
  Dataset out;
  out.provenance = d.provenance;
  std::set<std::string, std::less<>> seen;
  for (const Record& r : d.records) {
    if (!r.cookie_id.has_value()) continue;
    if (seen.insert(*r.cookie_id).second) out.records.push_back(r);
  }
  return out;
}

int64_t SanitizeReport::total_dropped() const {
  int64_t total = 0;
  for (const auto& [rule, count] : dropped) total += count;
  return total;
}

std::string_view FirstViolatedRule(const Record& r) {
  if (!r.js_enabled) return sanitize_rule::kJsDisabled;
  if (r.illegitimate_resolution) return sanitize_rule::kIllegitimateResolution;
  if (r.os_family == OsFamily::kOther) return sanitize_rule::kNonDesktopOs;
  return {};
}

Dataset Sanitize(const Dataset& d, SanitizeReport* report) {
  SanitizeReport local;
  for (std::string_view rule :
       {sanitize_rule::kJsDisabled, sanitize_rule::kIllegitimateResolution,
        sanitize_rule::kNonDesktopOs}) {
    local.dropped[std::string(rule)] = 0;
  }
  Dataset out;
  out.provenance = d.provenance;
  for (const Record& r : d.records) {
    std::string_view rule = FirstViolatedRule(r);
    if (rule.empty()) {
      out.records.push_back(r);
    } else {
      ++local.dropped[std::string(rule)];
    }
  }
  local.kept = static_cast<int64_t>(out.records.size());
  if (report != nullptr) *report = std::move(local);
  return out;
}

BrowserSplit SplitByBrowser(const Dataset& d) {
  BrowserSplit split;
  split.chrome.provenance = d.provenance + "#chrome";
  split.firefox.provenance = d.provenance + "#firefox";
  for (const Record& r : d.records) {
    if (r.browser_family == BrowserFamily::kChrome) {
      split.chrome.records.push_back(r);
    } else if (r.browser_family == BrowserFamily::kFirefox) {
      split.firefox.records.push_back(r);
    }
  }
  return split;
}

}  // namespace fpeval
