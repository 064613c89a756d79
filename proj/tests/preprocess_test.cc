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

#include "fpeval/synthetic.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace fpeval {
namespace {

constexpr char kFirefoxUa[] =
    "Mozilla/5.0 (Windows NT 10.0; Win64; x64; rv:56.0) Gecko/20100101 Firefox/56.0";
constexpr char kChromeUa[] =
    "Mozilla/5.0 (X11; Linux x86_64) AppleWebKit/537.36 (KHTML, like Gecko) "
    "Chrome/63.0.3239.132 Safari/537.36";

Record MakeRecord(std::optional<std::string> cookie, std::string ua = kFirefoxUa,
                  bool js = true, AttributeValue width = AttributeValue::Integer(1920)) {
  Fingerprint fp;
  fp.Set(std::string(attr::kUserAgent), AttributeValue::Text(std::move(ua)));
  fp.Set(std::string(attr::kScreenWidth), std::move(width));
  fp.Set(std::string(attr::kScreenHeight), AttributeValue::Integer(1080));
  if (cookie) fp.Set("tag", AttributeValue::Text(*cookie));
  return Record::FromFingerprint(fp, std::move(cookie), js);
}

TEST(DedupeByCookieTest, KeepsFirstPerCookie) {
  Dataset d;
  d.records = {MakeRecord("c1"), MakeRecord("c1", kChromeUa), MakeRecord("c2"),
               MakeRecord(std::nullopt)};
  const Dataset out = DedupeByCookie(d);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out.records[0], d.records[0]);
  EXPECT_EQ(out.records[1], d.records[2]);
}

TEST(DedupeByCookieTest, DistinctCookiesOnlyLoseCookielessRows) {
  Dataset d;
  d.records = {MakeRecord("a"), MakeRecord(std::nullopt), MakeRecord("b")};
  const Dataset out = DedupeByCookie(d);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out.records[0], d.records[0]);
  EXPECT_EQ(out.records[1], d.records[2]);
}

TEST(DedupeByCookieTest, GeneratedCookieCount) {
  CorpusSpec spec = PresetCorpusSpec("firefox-like", 100, 17);
  spec.cookies = 40;
  const Dataset out = DedupeByCookie(GenerateCorpus(spec).dataset);
  EXPECT_EQ(out.size(), 40u);
}

TEST(DedupeByCookieTest, OutputCookiesPairwiseDistinct) {
  Rng rng(8);
  for (int iter = 0; iter < 100; ++iter) {
    const Dataset out = DedupeByCookie(testing::RandomDataset(rng, rng.Uniform(60), 2, 3));
    std::set<std::string> cookies;
    for (const Record& r : out.records) {
      ASSERT_TRUE(r.cookie_id.has_value());
      ASSERT_TRUE(cookies.insert(*r.cookie_id).second);
    }
  }
}

TEST(SanitizeTest, Rules) {
  Dataset d;
  d.records = {MakeRecord("ok"),
               MakeRecord("js", kFirefoxUa, false),
               MakeRecord("res", kFirefoxUa, true, AttributeValue::Text("0")),
               MakeRecord("mobile", "Mozilla/5.0 (Linux; Android 8.0.0) Chrome/63.0"),
               MakeRecord("both", kFirefoxUa, false, AttributeValue::Integer(-3))};
  SanitizeReport report;
  const Dataset out = Sanitize(d, &report);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out.records[0].cookie_id, "ok");
  EXPECT_EQ(report.dropped.at("js-disabled"), 2);
  EXPECT_EQ(report.dropped.at("illegitimate-resolution"), 1);
  EXPECT_EQ(report.dropped.at("non-desktop-os"), 1);
  EXPECT_EQ(report.kept, 1);
  EXPECT_EQ(report.total_dropped(), 4);
}

TEST(SanitizeTest, EmptyReportListsEveryRule) {
  SanitizeReport report;
  Sanitize(Dataset{}, &report);
  EXPECT_EQ(report.dropped.size(), 3u);
  EXPECT_EQ(report.total_dropped(), 0);
}

TEST(SanitizeTest, Idempotent) {
  Rng rng(2);
  for (uint64_t seed = 0; seed < 20; ++seed) {
    CorpusSpec spec = PresetCorpusSpec("chrome-like", 200, seed);
    spec.js_disabled_fraction = 0.1;
    spec.bad_resolution_fraction = 0.1;
    const Dataset once = Sanitize(GenerateCorpus(spec).dataset);
    SanitizeReport again;
    EXPECT_EQ(Sanitize(once, &again), once);
    EXPECT_EQ(again.total_dropped(), 0);
  }
}

TEST(SanitizeTest, PlantedCountsMatchGroundTruth) {
  CorpusSpec spec = PresetCorpusSpec("firefox-like", 2000, 99);
  spec.js_disabled_fraction = 0.05;
  spec.bad_resolution_fraction = 0.03;
  const GeneratedCorpus g = GenerateCorpus(spec);
  int64_t planted_js = 0;
  std::map<std::string, int64_t> expected;
  for (const RecordTruth& t : g.truth.records) {
    planted_js += t.planted_js_disabled;
    if (!t.expected_drop_rule.empty()) ++expected[t.expected_drop_rule];
  }
  SanitizeReport report;
  const Dataset out = Sanitize(g.dataset, &report);
  EXPECT_GT(planted_js, 50);
  EXPECT_EQ(report.dropped.at("js-disabled"), planted_js);
  for (const auto& [rule, count] : expected) EXPECT_EQ(report.dropped.at(rule), count) << rule;
  EXPECT_GT(report.dropped.at("illegitimate-resolution"), 0);
  EXPECT_GT(report.dropped.at("non-desktop-os"), 0);
}

TEST(SplitByBrowserTest, Examples) {
  Dataset d;
  d.records = {MakeRecord("f"), MakeRecord("c", kChromeUa),
               MakeRecord("e", "Mozilla/5.0 (Windows NT 10.0) Chrome/63.0 Edge/16.16299")};
  const BrowserSplit s = SplitByBrowser(d);
  ASSERT_EQ(s.firefox.size(), 1u);
  ASSERT_EQ(s.chrome.size(), 1u);
  EXPECT_EQ(s.firefox.records[0].cookie_id, "f");
  EXPECT_EQ(s.chrome.records[0].cookie_id, "c");
}

TEST(SplitByBrowserTest, MatchesGeneratedLabels) {
  CorpusSpec spec = PresetCorpusSpec("chrome-like", 200, 4);
  const GeneratedCorpus g = GenerateCorpus(spec);
  std::vector<std::string> want_chrome, want_firefox;
  for (size_t i = 0; i < g.dataset.size(); ++i) {
    const std::string cookie = *g.dataset.records[i].cookie_id;
    if (g.truth.records[i].browser == BrowserFamily::kChrome) want_chrome.push_back(cookie);
    if (g.truth.records[i].browser == BrowserFamily::kFirefox) want_firefox.push_back(cookie);
  }
  const BrowserSplit s = SplitByBrowser(g.dataset);
  std::vector<std::string> got_chrome, got_firefox;
  for (const Record& r : s.chrome.records) got_chrome.push_back(*r.cookie_id);
  for (const Record& r : s.firefox.records) got_firefox.push_back(*r.cookie_id);
  EXPECT_EQ(got_chrome, want_chrome);
  EXPECT_EQ(got_firefox, want_firefox);
  EXPECT_LT(got_chrome.size() + got_firefox.size(), g.dataset.size());
  EXPECT_FALSE(got_firefox.empty());
}

}  // namespace
}  // namespace fpeval
