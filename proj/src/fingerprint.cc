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

#include "fpeval/fingerprint.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

namespace fpeval {
namespace {

bool Contains(std::string_view haystack, std::string_view needle) {
  return haystack.find(needle) != std::string_view::npos;
}

bool ContainsIgnoreCase(std::string_view haystack, std::string_view needle) {
  auto it = std::search(haystack.begin(), haystack.end(), needle.begin(),
                        needle.end(), [](char a, char b) {
                          return std::tolower(static_cast<unsigned char>(a)) ==
                                 std::tolower(static_cast<unsigned char>(b));
                        });
  return it != haystack.end();
}

void AppendLengthPrefixed(std::string_view s, std::string* out) {
  out->append(std::to_string(s.size()));
  out->push_back(':');
  out->append(s);
}

// Screen dimension from an attribute value. Returns {value, illegitimate}.
std::pair<std::optional<int64_t>, bool> ScreenDimension(
    const AttributeValue& v) {
  if (v.is_missing() || v.is_masked()) return {std::nullopt, false};
  std::optional<int64_t> n = v.AsInteger();
  if (!n.has_value() || *n <= 0) return {std::nullopt, true};
  return {n, false};
}

}  // namespace

std::optional<int64_t> ParseCanonicalInteger(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::string_view digits = text;
  if (digits.front() == '-') digits.remove_prefix(1);
  if (digits.empty()) return std::nullopt;
  if (!std::all_of(digits.begin(), digits.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    return std::nullopt;
  }
  if (digits.size() > 1 && digits.front() == '0') return std::nullopt;
  if (text == "-0") return std::nullopt;
  int64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    return std::nullopt;
  }
  return value;
}

std::optional<int64_t> AttributeValue::AsInteger() const {
  if (is_integer()) return integer();
  if (is_text()) return ParseCanonicalInteger(text());
  return std::nullopt;
}

void AttributeValue::AppendCanonical(std::string* out) const {
  if (is_missing()) {
    out->push_back('M');
  } else if (is_masked()) {
    out->push_back('X');
  } else if (is_integer()) {
    out->push_back('I');
    out->append(std::to_string(integer()));
    out->push_back(';');
  } else {
    out->push_back('T');
    AppendLengthPrefixed(text(), out);
  }
}

std::string AttributeValue::ToString() const {
  if (is_missing()) return "<missing>";
  if (is_masked()) return "<masked>";
  if (is_integer()) return std::to_string(integer());
  return "\"" + text() + "\"";
}

AttributeValue Fingerprint::Get(std::string_view name) const {
  auto it = attrs_.find(name);
  return it == attrs_.end() ? AttributeValue::Missing() : it->second;
}

void Fingerprint::Set(std::string name, AttributeValue value) {
  attrs_.insert_or_assign(std::move(name), std::move(value));
}

std::string Fingerprint::Canonical() const {
  std::string out;
  for (const auto& [name, value] : attrs_) {
    AppendLengthPrefixed(name, &out);
    value.AppendCanonical(&out);
  }
  return out;
}

std::string_view ToString(BrowserFamily family) {
  switch (family) {
    case BrowserFamily::kChrome:
      return "chrome";
    case BrowserFamily::kFirefox:
      return "firefox";
    case BrowserFamily::kOther:
      break;
  }
  return "other";
}

std::string_view ToString(OsFamily family) {
  switch (family) {
    case OsFamily::kWindows:
      return "windows";
    case OsFamily::kMac:
      return "mac";
    case OsFamily::kLinux:
      return "linux";
    case OsFamily::kOther:
      break;
  }
  return "other";
}

std::optional<BrowserFamily> ParseBrowserFamily(std::string_view name) {
  for (BrowserFamily f : {BrowserFamily::kChrome, BrowserFamily::kFirefox,
                          BrowserFamily::kOther}) {
    std::string_view candidate = ToString(f);
    if (name.size() == candidate.size() && ContainsIgnoreCase(name, candidate)) {
      return f;
    }
  }
  return std::nullopt;
}

BrowserFamily ClassifyBrowser(std::string_view ua) {
  if (Contains(ua, "Firefox/") && !ContainsIgnoreCase(ua, "Seamonkey")) {
    return BrowserFamily::kFirefox;
  }
  if (Contains(ua, "Chrome/") && !ContainsIgnoreCase(ua, "Chromium") &&
      !ContainsIgnoreCase(ua, "Edge") && !ContainsIgnoreCase(ua, "OPR")) {
    return BrowserFamily::kChrome;
  }
  return BrowserFamily::kOther;
}

OsFamily ClassifyOs(std::string_view ua) {
  // Mobile UAs carry desktop-looking tokens ("Linux", "like Mac OS X").
  for (std::string_view mobile : {"Android", "iPhone", "iPad", "iPod",
                                  "Windows Phone", "CrOS"}) {
    if (Contains(ua, mobile)) return OsFamily::kOther;
  }
  if (Contains(ua, "Windows")) return OsFamily::kWindows;
  if (Contains(ua, "Macintosh") || Contains(ua, "Mac OS X")) {
    return OsFamily::kMac;
  }
  if (Contains(ua, "Linux") || Contains(ua, "X11")) return OsFamily::kLinux;
  return OsFamily::kOther;
}

Record Record::FromFingerprint(Fingerprint fingerprint,
                               std::optional<std::string> cookie_id,
                               bool js_enabled) {
  Record r;
  AttributeValue ua = fingerprint.Get(attr::kUserAgent);
  if (ua.is_text()) {
    r.browser_family = ClassifyBrowser(ua.text());
    r.os_family = ClassifyOs(ua.text());
  }
  auto [w, bad_w] = ScreenDimension(fingerprint.Get(attr::kScreenWidth));
  auto [h, bad_h] = ScreenDimension(fingerprint.Get(attr::kScreenHeight));
  r.screen_w = w;
  r.screen_h = h;
  r.illegitimate_resolution = bad_w || bad_h;
  r.fingerprint = std::move(fingerprint);
  r.cookie_id = std::move(cookie_id);
  r.js_enabled = js_enabled;
  return r;
}

std::vector<std::string> Dataset::AttributeNames() const {
  std::set<std::string, std::less<>> names;
  for (const Record& r : records) {
    for (const auto& [name, value] : r.fingerprint.attrs()) {
      if (names.find(name) == names.end()) names.insert(name);
    }
  }
  return {names.begin(), names.end()};
}

std::vector<Fingerprint> Dataset::Fingerprints() const {
  std::vector<Fingerprint> out;
  out.reserve(records.size());
  for (const Record& r : records) out.push_back(r.fingerprint);
  return out;
}

}  // namespace fpeval
