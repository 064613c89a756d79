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

// Core data model: attribute values, fingerprints, dataset records.

#ifndef FPEVAL_FINGERPRINT_H_
#define FPEVAL_FINGERPRINT_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace fpeval {

// Well-known attribute names.
namespace attr {
inline constexpr std::string_view kUserAgent = "h.User-Agent";
inline constexpr std::string_view kScreenWidth = "screen.Width";
inline constexpr std::string_view kScreenHeight = "screen.Height";
inline constexpr std::string_view kScreenAvailWidth = "screen.AvailWidth";
inline constexpr std::string_view kScreenAvailHeight = "screen.AvailHeight";
inline constexpr std::string_view kScreenAvailLeft = "screen.AvailLeft";
inline constexpr std::string_view kScreenAvailTop = "screen.AvailTop";
}  // namespace attr

// The value of one attribute on one platform visit.
//
// Besides text and integers there are two non-data states: Missing (the
// attribute was not observed) and Masked (the reserved sentinel written by
// mask application). Masked lives outside the text/integer space so it can
// never collide with an observed value.
class AttributeValue {
 public:
  struct MissingTag {
    friend bool operator==(MissingTag, MissingTag) { return true; }
    friend bool operator<(MissingTag, MissingTag) { return false; }
  };
  struct MaskedTag {
    friend bool operator==(MaskedTag, MaskedTag) { return true; }
    friend bool operator<(MaskedTag, MaskedTag) { return false; }
  };

  AttributeValue() = default;  // Missing

  static AttributeValue Missing() { return AttributeValue(); }
  static AttributeValue Masked() { return AttributeValue(MaskedTag{}); }
  static AttributeValue Text(std::string text) {
    return AttributeValue(std::move(text));
  }
  static AttributeValue Integer(int64_t value) { return AttributeValue(value); }

  bool is_missing() const { return std::holds_alternative<MissingTag>(rep_); }
  bool is_masked() const { return std::holds_alternative<MaskedTag>(rep_); }
  bool is_text() const { return std::holds_alternative<std::string>(rep_); }
  bool is_integer() const { return std::holds_alternative<int64_t>(rep_); }

  // Precondition: is_text() / is_integer() respectively.
  const std::string& text() const { return std::get<std::string>(rep_); }
  int64_t integer() const { return std::get<int64_t>(rep_); }

  // Integer value, or the text parsed as a base-10 integer. nullopt for
  // anything else.
  std::optional<int64_t> AsInteger() const;

  // Appends the injective canonical encoding of this value.
  void AppendCanonical(std::string* out) const;

  // Human-readable rendering for diagnostics and evidence citations.
  std::string ToString() const;

  friend bool operator==(const AttributeValue& a, const AttributeValue& b) {
    return a.rep_ == b.rep_;
  }
  friend bool operator<(const AttributeValue& a, const AttributeValue& b) {
    return a.rep_ < b.rep_;
  }

 private:
  using Rep = std::variant<MissingTag, std::string, int64_t, MaskedTag>;
  explicit AttributeValue(Rep rep) : rep_(std::move(rep)) {}
  explicit AttributeValue(std::string text) : rep_(std::move(text)) {}
  explicit AttributeValue(int64_t value) : rep_(value) {}
  explicit AttributeValue(MaskedTag tag) : rep_(tag) {}

  Rep rep_;
};

// Parses `text` as a canonical base-10 int64 ("0", "-12", no leading zeros,
// no sign on zero, no whitespace).
std::optional<int64_t> ParseCanonicalInteger(std::string_view text);

// Ordered attribute-name -> value map for one platform visit. An absent
// name reads as Missing, but equality and Canonical() still tell an absent
// name from an explicit Missing. Dataset loaders give every record every
// column, so the two never mix within a loaded dataset.
class Fingerprint {
 public:
  using Map = std::map<std::string, AttributeValue, std::less<>>;

  Fingerprint() = default;
  explicit Fingerprint(Map attrs) : attrs_(std::move(attrs)) {}

  const Map& attrs() const { return attrs_; }
  size_t size() const { return attrs_.size(); }
  bool contains(std::string_view name) const {
    return attrs_.find(name) != attrs_.end();
  }

  // Missing when absent.
  AttributeValue Get(std::string_view name) const;
  void Set(std::string name, AttributeValue value);

  // Attributes sorted by name, each as <len>:<name> followed by the value's
  // tagged encoding. Injective: equal strings iff equal fingerprints.
  std::string Canonical() const;

  friend bool operator==(const Fingerprint& a, const Fingerprint& b) {
    return a.attrs_ == b.attrs_;
  }

 private:
  Map attrs_;
};

enum class BrowserFamily { kChrome, kFirefox, kOther };
enum class OsFamily { kWindows, kMac, kLinux, kOther };

std::string_view ToString(BrowserFamily family);
std::string_view ToString(OsFamily family);
// Accepts the ToString spellings case-insensitively.
std::optional<BrowserFamily> ParseBrowserFamily(std::string_view name);

// Substring rules over the raw User-Agent string.
//   Firefox: contains "Firefox/" and not "Seamonkey".
//   Chrome:  contains "Chrome/" and none of "Chromium", "Edge", "OPR".
// Exclusion tokens match case-insensitively.
BrowserFamily ClassifyBrowser(std::string_view user_agent);

// Desktop OS from the User-Agent; mobile platforms map to kOther.
OsFamily ClassifyOs(std::string_view user_agent);

// One dataset row: a fingerprint plus metadata.
struct Record {
  Fingerprint fingerprint;
  std::optional<std::string> cookie_id;
  BrowserFamily browser_family = BrowserFamily::kOther;
  OsFamily os_family = OsFamily::kOther;
  bool js_enabled = true;
  // Positive pixel counts mirrored from screen.Width / screen.Height.
  std::optional<int64_t> screen_w;
  std::optional<int64_t> screen_h;
  // A screen dimension is present but non-numeric or non-positive.
  bool illegitimate_resolution = false;

  // Builds a record, deriving the classifier and screen fields from the
  // fingerprint.
  static Record FromFingerprint(Fingerprint fingerprint,
                                std::optional<std::string> cookie_id,
                                bool js_enabled);

  friend bool operator==(const Record&, const Record&) = default;
};

struct Dataset {
  std::vector<Record> records;
  std::string provenance;

  size_t size() const { return records.size(); }
  bool empty() const { return records.empty(); }

  // Sorted union of attribute names over all records.
  std::vector<std::string> AttributeNames() const;

  std::vector<Fingerprint> Fingerprints() const;

  // Record-wise equality; provenance is a label and is ignored.
  friend bool operator==(const Dataset& a, const Dataset& b) {
    return a.records == b.records;
  }
};

}  // namespace fpeval

#endif  // FPEVAL_FINGERPRINT_H_
