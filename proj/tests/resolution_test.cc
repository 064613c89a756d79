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

#include "fpeval/resolution.h"

#include <cmath>
#include <set>

#include "fpeval/errors.h"
#include "fpeval/hybrid.h"
#include "fpeval/metrics.h"
#include "fpeval/synthetic.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace fpeval {
namespace {

Record ScreenRecord(int64_t w, int64_t h, int64_t extra = 0) {
  Fingerprint fp;
  fp.Set(std::string(attr::kScreenWidth), AttributeValue::Integer(w));
  fp.Set(std::string(attr::kScreenHeight), AttributeValue::Integer(h));
  fp.Set("timezone", AttributeValue::Integer(extra));
  return Record::FromFingerprint(fp, std::nullopt, true);
}

TEST(ResolutionTest, Parse) {
  EXPECT_EQ(Resolution::Parse("1366x768"), (Resolution{1366, 768}));
  EXPECT_EQ((Resolution{3, 4}).ToString(), "3x4");
  for (const char* bad : {"", "x", "10x", "x10", "0x10", "-1x10", "10*10", "10x10x"}) {
    EXPECT_THROW(Resolution::Parse(bad), FormatError) << bad;
  }
  const QuantaRange q = QuantaRange::Parse("1x2..30x40");
  EXPECT_EQ(q.min, (Resolution{1, 2}));
  EXPECT_EQ(q.max, (Resolution{30, 40}));
  EXPECT_EQ(QuantaRange::Parse("5x6").max, (Resolution{5, 6}));
  EXPECT_THROW(QuantaRange::Parse("30x40..1x2"), FormatError);
}

TEST(SpoofStrategyTest, Validate) {
  EXPECT_NO_THROW(SpoofStrategy::TorDefault().Validate());
  EXPECT_EQ(SpoofStrategy::TorDefault().ToString(), "1000x1000:200x100");
  EXPECT_THROW((SpoofStrategy{1000, 1000, 0, 100}.Validate()), ConfigurationError);
  EXPECT_THROW((SpoofStrategy{100, 1000, 200, 100}.Validate()), ConfigurationError);
}

TEST(SpoofTest, Examples) {
  const SpoofStrategy tor = SpoofStrategy::TorDefault();
  EXPECT_EQ(Spoof(tor, {1440, 900}), (Resolution{1000, 900}));
  EXPECT_EQ(Spoof(tor, {6000, 3000}), (Resolution{1000, 1000}));
  EXPECT_EQ(Spoof(tor, {450, 721}), (Resolution{400, 700}));
  EXPECT_EQ(Spoof(tor, {150, 50}), (Resolution{200, 100}));
}

TEST(SpoofTest, Properties) {
  Rng rng(1);
  for (int iter = 0; iter < 20000; ++iter) {
    const int64_t cap = 1 + static_cast<int64_t>(rng.Uniform(2000));
    const int64_t quant = 1 + static_cast<int64_t>(rng.Uniform(cap));
    const int64_t x = 1 + static_cast<int64_t>(rng.Uniform(5000));
    const int64_t y = SpoofDimension(cap, quant, x);
    EXPECT_LE(y, std::max(x, quant));
    EXPECT_LE(y, cap);
    EXPECT_GE(y, 1);
    // Monotone in the true size.
    EXPECT_LE(y, SpoofDimension(cap, quant, x + 1 + static_cast<int64_t>(rng.Uniform(50))));
    if (cap % quant == 0) EXPECT_EQ(SpoofDimension(cap, quant, y), y);
    if (x >= quant && x <= cap) EXPECT_LE(y, x);
  }
}

// Distinct outputs, counted by running every plausible input.
int64_t BruteSets(const SpoofStrategy& s) {
  auto count = [](int64_t cap, int64_t quant) {
    std::set<int64_t> out;
    for (int64_t x = 1; x <= 3 * cap; ++x) {
      const int64_t f = (x / quant) * quant;
      out.insert(std::min(cap, f == 0 ? quant : f));
    }
    return static_cast<int64_t>(out.size());
  };
  return count(s.cap_w, s.quant_w) * count(s.cap_h, s.quant_h);
}

TEST(StrategySetsTest, KnownAndBrute) {
  EXPECT_EQ(StrategySets(SpoofStrategy::TorDefault()), 50);
  EXPECT_EQ(StrategySets({1000, 1000, 1000, 1000}), 1);
  const SpoofStrategy odd{1350, 1000, 269, 160};
  EXPECT_EQ(StrategySets(odd), BruteSets(odd));
  EXPECT_EQ(StrategySets(odd), 6 * 7);
  Rng rng(2);
  for (int iter = 0; iter < 200; ++iter) {
    SpoofStrategy s;
    s.cap_w = 1 + rng.Uniform(300);
    s.cap_h = 1 + rng.Uniform(300);
    s.quant_w = 1 + rng.Uniform(s.cap_w);
    s.quant_h = 1 + rng.Uniform(s.cap_h);
    EXPECT_EQ(StrategySets(s), BruteSets(s)) << s.ToString();
  }
}

TEST(StrategySetsTest, BoundsDistinctOutputsOnData) {
  Rng rng(3);
  const SpoofStrategy s{1200, 900, 130, 70};
  std::set<Resolution> outputs;
  for (int i = 0; i < 50000; ++i) {
    outputs.insert(Spoof(s, {1 + static_cast<int64_t>(rng.Uniform(4000)),
                             1 + static_cast<int64_t>(rng.Uniform(3000))}));
  }
  EXPECT_LE(static_cast<int64_t>(outputs.size()), StrategySets(s));
}

TEST(ScoreStrategyTest, LossOracle) {
  Rng rng(4);
  Dataset d;
  std::vector<Resolution> screens;
  for (int i = 0; i < 1000; ++i) {
    const Resolution r{300 + static_cast<int64_t>(rng.Uniform(2500)),
                       200 + static_cast<int64_t>(rng.Uniform(1400))};
    screens.push_back(r);
    d.records.push_back(ScreenRecord(r.w, r.h));
  }
  const SpoofStrategy s = SpoofStrategy::TorDefault();
  long double abs_sum = 0, pct_sum = 0;
  for (const Resolution& r : screens) {
    const int64_t w = std::min<int64_t>(1000, std::max<int64_t>(200, r.w / 200 * 200));
    const int64_t h = std::min<int64_t>(1000, std::max<int64_t>(100, r.h / 100 * 100));
    const long double unused = static_cast<long double>(r.w) * r.h - static_cast<long double>(w) * h;
    abs_sum += unused;
    pct_sum += unused / (static_cast<long double>(r.w) * r.h);
  }
  const StrategyScore score = ScoreStrategy(d, testing::ModelWith("none", {}), s);
  EXPECT_NEAR(score.abs_loss, static_cast<double>(abs_sum / 1000), 1e-6);
  EXPECT_NEAR(score.pct_loss, static_cast<double>(pct_sum / 1000), 1e-12);
  EXPECT_GE(score.abs_loss, 0.0);
}

TEST(ScoreStrategyTest, IdentitySpoofKeepsTrueResolution) {
  Rng rng(5);
  Dataset d;
  for (int i = 0; i < 300; ++i) {
    d.records.push_back(ScreenRecord(1 + rng.Uniform(20), 1 + rng.Uniform(20), rng.Uniform(3)));
  }
  const StrategyScore s =
      ScoreStrategy(d, testing::ModelWith("none", {}), {100, 100, 1, 1});
  const TrackabilityReport truth = Trackability(d.Fingerprints());
  EXPECT_EQ(s.entropy_bits, truth.entropy_bits);
  EXPECT_EQ(s.pct_le_1, truth.pct_le_1);
  EXPECT_EQ(s.pct_le_10, truth.pct_le_10);
  EXPECT_EQ(s.abs_loss, 0.0);
  EXPECT_EQ(s.pct_loss, 0.0);
}

TEST(ScoreStrategyTest, MissingResolutionIsDataError) {
  Dataset d;
  d.records.push_back(ScreenRecord(800, 600));
  Fingerprint fp;
  fp.Set("timezone", AttributeValue::Integer(1));
  d.records.push_back(Record::FromFingerprint(fp, std::nullopt, true));
  EXPECT_THROW(ScoreStrategy(d, testing::ModelWith("n", {}), SpoofStrategy::TorDefault()),
               DataError);
  EXPECT_THROW(Sweep(d, testing::ModelWith("n", {}), {{1000, 1000}}, QuantaRange::Parse("100x100")),
               DataError);
  EXPECT_THROW(ScoreStrategy(Dataset(), testing::ModelWith("n", {}), SpoofStrategy::TorDefault()),
               DomainError);
}

TEST(WithScreenStrategyTest, TransformsAllScreenAttributes) {
  const MaskModel m = TorHandcraftedModel({"timezone", std::string(attr::kScreenWidth)});
  EXPECT_EQ(m.browser, BrowserFamily::kFirefox);
  EXPECT_EQ(m.transforms.size(), 6u);
  EXPECT_NO_THROW(m.Validate());
  Fingerprint fp;
  fp.Set(std::string(attr::kScreenWidth), AttributeValue::Integer(1440));
  fp.Set(std::string(attr::kScreenHeight), AttributeValue::Integer(900));
  fp.Set(std::string(attr::kScreenAvailWidth), AttributeValue::Integer(1440));
  fp.Set(std::string(attr::kScreenAvailHeight), AttributeValue::Integer(860));
  fp.Set(std::string(attr::kScreenAvailLeft), AttributeValue::Integer(30));
  fp.Set("timezone", AttributeValue::Integer(60));
  const Fingerprint out = MaskFingerprint(fp, m, MaskPolicy::kInconclusiveAsMasked);
  EXPECT_EQ(out.Get(attr::kScreenWidth), AttributeValue::Integer(1000));
  EXPECT_EQ(out.Get(attr::kScreenAvailHeight), AttributeValue::Integer(900));
  EXPECT_EQ(out.Get(attr::kScreenAvailLeft), AttributeValue::Integer(0));
  EXPECT_FALSE(out.contains(attr::kScreenAvailTop));
  EXPECT_TRUE(out.Get("timezone").is_masked());
}

TEST(EnumerateStrategiesTest, Counts) {
  const std::vector<Resolution> tor_cap = {{1000, 1000}};
  EXPECT_EQ(EnumerateStrategies(tor_cap, QuantaRange::Parse("1x1..200x100"), {{200, 100}}).size(),
            19999u);
  EXPECT_EQ(EnumerateStrategies(tor_cap, QuantaRange::Parse("200x100..300x200")).size(), 10201u);
  // Quanta above the cap are skipped.
  const auto small = EnumerateStrategies({{3, 2}}, QuantaRange::Parse("1x1..5x5"));
  EXPECT_EQ(small.size(), 6u);
  EXPECT_EQ(small.front().ToString(), "3x2:1x1");
  EXPECT_EQ(small.back().ToString(), "3x2:3x2");
}

TEST(SweepTest, MatchesDirectScoring) {
  CorpusSpec spec = PresetCorpusSpec("firefox-like", 600, 17);
  spec.bad_resolution_fraction = 0.0;
  const Dataset d = GenerateCorpus(spec).dataset;
  const MaskModel baseline = testing::ModelWith(
      "b", {{"timezone", VerdictStatus::kMaskedStandardize},
            {"canvas fingerprint", VerdictStatus::kMaskedVary}});
  const std::vector<Resolution> caps = {{1000, 1000}, {1400, 900}};
  const QuantaRange quanta = QuantaRange::Parse("95x40..104x47");
  const std::vector<SweepResult> results = Sweep(d, baseline, caps, quanta, {{100, 45}});
  const std::vector<SpoofStrategy> expected = EnumerateStrategies(caps, quanta, {{100, 45}});
  ASSERT_EQ(results.size(), expected.size());
  for (size_t i = 0; i < results.size(); ++i) {
    EXPECT_EQ(results[i].strategy, expected[i]);
    EXPECT_EQ(results[i].score, ScoreStrategy(d, baseline, expected[i]))
        << expected[i].ToString();
  }
}

TEST(ParetoTest, StrictDominanceOnly) {
  const StrategyScore ref{2.0, 0.5, 0.7, 1000.0, 0.2};
  std::vector<SweepResult> results = {
      {{1, 1, 1, 1}, ref},
      {{2, 2, 1, 1}, {1.9, 0.5, 0.7, 1000.0, 0.2}},
      {{3, 3, 1, 1}, {1.9, 0.4, 0.6, 999.0, 0.1}},
      {{4, 4, 1, 1}, {1.9, 0.4, 0.6, 1001.0, 0.1}},
  };
  const auto better = ParetoImprovements(results, ref);
  ASSERT_EQ(better.size(), 1u);
  EXPECT_EQ(better[0].strategy.cap_w, 3);
}

TEST(ParetoTest, PlantedDominator) {
  Dataset d;
  for (int i = 0; i < 89; ++i) d.records.push_back(ScreenRecord(1000, 950));
  for (int i = 0; i < 10; ++i) d.records.push_back(ScreenRecord(1000, 1050));
  d.records.push_back(ScreenRecord(700, 700));
  const MaskModel none = testing::ModelWith("none", {});
  const StrategyScore ref = ScoreStrategy(d, none, SpoofStrategy::TorDefault());
  EXPECT_NEAR(ref.entropy_bits,
              -(0.89 * std::log2(0.89) + 0.1 * std::log2(0.1) + 0.01 * std::log2(0.01)),
              1e-12);
  EXPECT_DOUBLE_EQ(ref.abs_loss, (89 * 50000.0 + 10 * 50000.0 + 70000.0) / 100);
  EXPECT_TRUE(ParetoImprovements({{SpoofStrategy::TorDefault(), ref}}, ref).empty());

  std::vector<SweepResult> results =
      Sweep(d, none, {{1000, 1000}}, QuantaRange::Parse("900x850..1000x950"));
  results.push_back(Sweep(d, none, {{1000, 1000}}, QuantaRange::Parse("100x50")).front());
  const auto better = ParetoImprovements(results, ref);
  bool found = false;
  for (const SweepResult& r : better) {
    EXPECT_NE(r.strategy, (SpoofStrategy{1000, 1000, 100, 50}));
    if (r.strategy == SpoofStrategy{1000, 1000, 1000, 950}) found = true;
  }
  EXPECT_TRUE(found);
  const StrategyScore planted = ScoreStrategy(d, none, {1000, 1000, 1000, 950});
  EXPECT_EQ(planted.entropy_bits, 0.0);
  EXPECT_LT(planted.abs_loss, ref.abs_loss);
}

TEST(SweepCsvTest, RoundTrip) {
  Rng rng(6);
  std::vector<SweepResult> results;
  for (int i = 0; i < 50; ++i) {
    results.push_back({{1000, 1000, 1 + i, 2 + i},
                       {rng.UniformReal() * 10, rng.UniformReal(), rng.UniformReal(),
                        rng.UniformReal() * 1e6 - 1e5, rng.UniformReal() / 3}});
  }
  const auto parsed = SweepFromCsv(SweepToCsv(results));
  ASSERT_EQ(parsed.size(), results.size());
  for (size_t i = 0; i < results.size(); ++i) {
    EXPECT_EQ(parsed[i].strategy, results[i].strategy);
    EXPECT_EQ(parsed[i].score, results[i].score);
  }
  EXPECT_THROW(SweepFromCsv("a,b\n"), FormatError);
  EXPECT_THROW(SweepFromCsv("cap_w,cap_h,quant_w,quant_h,entropy,pct_le_1,pct_le_10,abs_loss,pct_loss\n"
                            "1,1,1,1,x,0,0,0,0\n"),
               FormatError);
}

}  // namespace
}  // namespace fpeval
