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

#include "fpeval/errors.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace fpeval {
namespace {

using testing::BruteEntropy;

Fingerprint Fp(int64_t v) {
  Fingerprint fp;
  fp.Set("a", AttributeValue::Integer(v));
  return fp;
}

std::vector<int64_t> Sorted(std::vector<int64_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

TEST(AnonymitySetsTest, Examples) {
  const Fingerprint f = Fp(1), g = Fp(2);
  std::vector<Fingerprint> three = {f, f, f};
  AnonymitySetDistribution d = AnonymitySets(three);
  EXPECT_EQ(d.total, 3);
  EXPECT_EQ(d.Counts(), std::vector<int64_t>{3});

  std::vector<Fingerprint> mixed = {f, g, f};
  d = AnonymitySets(mixed);
  EXPECT_EQ(d.sets.at(f.Canonical()), 2);
  EXPECT_EQ(d.sets.at(g.Canonical()), 1);
  EXPECT_TRUE(AnonymitySets({}).sets.empty());
}

// 1,000 fingerprints over 7 templates against the pairwise-equality oracle.
TEST(AnonymitySetsTest, TemplatesMatchPairwiseOracle) {
  Rng rng(70);
  const auto templates = testing::RandomFingerprints(rng, 7, 4, 50);
  std::vector<Fingerprint> fps;
  for (int i = 0; i < 1000; ++i) fps.push_back(templates[rng.Uniform(7)]);
  EXPECT_EQ(Sorted(AnonymitySets(fps).Counts()), testing::PairwiseClassSizes(fps));
}

TEST(AnonymitySetsTest, RandomMatchesPairwiseOracle) {
  Rng rng(71);
  for (int iter = 0; iter < 60; ++iter) {
    const auto fps = testing::RandomFingerprints(rng, rng.Uniform(300), 1 + rng.Uniform(3),
                                                 1 + rng.Uniform(3));
    const AnonymitySetDistribution d = AnonymitySets(fps);
    ASSERT_EQ(d.total, static_cast<int64_t>(fps.size()));
    ASSERT_EQ(Sorted(d.Counts()), testing::PairwiseClassSizes(fps));
  }
}

TEST(EntropyTest, Examples) {
  EXPECT_EQ(EntropyFromCounts(std::vector<int64_t>{5}), 0.0);
  EXPECT_DOUBLE_EQ(EntropyFromCounts(std::vector<int64_t>(8, 1)), 3.0);
  EXPECT_NEAR(EntropyFromCounts(std::vector<int64_t>{2, 1}), 0.9182958340544896, 1e-15);
  EXPECT_EQ(EntropyFromCounts(std::vector<int64_t>{2, 2}), 1.0);
  std::vector<Fingerprint> same(4, Fp(1));
  EXPECT_EQ(Entropy(AnonymitySets(same)), 0.0);
}

TEST(EntropyTest, EmptyIsDomainError) {
  EXPECT_THROW(Entropy(AnonymitySetDistribution{}), DomainError);
  EXPECT_THROW(EntropyFromCounts({}), DomainError);
  EXPECT_THROW(PctLe(AnonymitySetDistribution{}, 1), DomainError);
  EXPECT_THROW(Trackability(std::span<const Fingerprint>{}), DomainError);
  EXPECT_THROW(PctLeFromCounts(std::vector<int64_t>{1}, 0), DomainError);
}

TEST(EntropyTest, MatchesBruteForceAndBounds) {
  Rng rng(72);
  for (int iter = 0; iter < 500; ++iter) {
    std::vector<int64_t> counts(1 + rng.Uniform(40));
    for (int64_t& c : counts) c = 1 + static_cast<int64_t>(rng.Uniform(10));
    const double h = EntropyFromCounts(counts);
    ASSERT_NEAR(h, BruteEntropy(counts), 1e-12);
    int64_t total = 0;
    for (int64_t c : counts) total += c;
    ASSERT_GE(h, 0.0);
    ASSERT_LE(h, std::log2(static_cast<double>(total)) + 1e-12);
    // Permutation invariance is exact.
    std::vector<int64_t> shuffled = counts;
    for (size_t i = shuffled.size(); i > 1; --i) {
      std::swap(shuffled[i - 1], shuffled[rng.Uniform(i)]);
    }
    ASSERT_EQ(EntropyFromCounts(shuffled), h);
  }
}

TEST(EntropyTest, MergingSetsNeverIncreasesEntropy) {
  Rng rng(73);
  for (int iter = 0; iter < 500; ++iter) {
    std::vector<int64_t> counts(2 + rng.Uniform(20));
    for (int64_t& c : counts) c = 1 + static_cast<int64_t>(rng.Uniform(10));
    std::vector<int64_t> merged = counts;
    const size_t i = rng.Uniform(merged.size());
    size_t j = rng.Uniform(merged.size() - 1);
    if (j >= i) ++j;
    merged[i] += merged[j];
    merged.erase(merged.begin() + static_cast<std::ptrdiff_t>(j));
    ASSERT_LE(EntropyFromCounts(merged), EntropyFromCounts(counts));
  }
}

TEST(PctLeTest, Examples) {
  EXPECT_EQ(PctLeFromCounts(std::vector<int64_t>{1, 1, 1}, 1), 1.0);
  EXPECT_EQ(PctLeFromCounts(std::vector<int64_t>{11}, 10), 0.0);
  EXPECT_EQ(PctLeFromCounts(std::vector<int64_t>{1, 2, 10, 4}, 10), 1.0);
  EXPECT_EQ(PctLeFromCounts(std::vector<int64_t>{1, 2, 10, 4}, 1), 1.0 / 17.0);
}

TEST(PctLeTest, MonotoneInK) {
  Rng rng(74);
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<int64_t> counts(1 + rng.Uniform(20));
    int64_t total = 0;
    for (int64_t& c : counts) total += (c = 1 + static_cast<int64_t>(rng.Uniform(15)));
    double prev = 0.0;
    for (int64_t k = 1; k <= total; ++k) {
      const double p = PctLeFromCounts(counts, k);
      ASSERT_GE(p, prev);
      prev = p;
    }
    ASSERT_EQ(prev, 1.0);
  }
}

// Any deterministic function of the fingerprint is a coarsening.
TEST(CoarseningTest, DeterministicMapNeverIncreasesMetrics) {
  Rng rng(75);
  for (int iter = 0; iter < 200; ++iter) {
    const auto fps = testing::RandomFingerprints(rng, 1 + rng.Uniform(200), 3, 3);
    const uint64_t salt = rng.Next();
    const uint64_t buckets = 1 + rng.Uniform(30);
    std::vector<Fingerprint> mapped;
    for (const Fingerprint& fp : fps) {
      const uint64_t h = std::hash<std::string>{}(fp.Canonical()) ^ salt;
      mapped.push_back(Fp(static_cast<int64_t>(DeriveSeed(h, 0) % buckets)));
    }
    const TrackabilityReport before = Trackability(fps);
    const TrackabilityReport after = Trackability(mapped);
    ASSERT_LE(after.entropy_bits, before.entropy_bits);
    ASSERT_LE(after.pct_le_1, before.pct_le_1);
    ASSERT_LE(after.pct_le_10, before.pct_le_10);
  }
}

TEST(TrackabilityTest, ReportInvariants) {
  Rng rng(76);
  for (int iter = 0; iter < 100; ++iter) {
    const auto fps = testing::RandomFingerprints(rng, 1 + rng.Uniform(200), 2, 4);
    const TrackabilityReport r = Trackability(fps);
    ASSERT_EQ(r.n, static_cast<int64_t>(fps.size()));
    ASSERT_LE(r.pct_le_1, r.pct_le_10);
    ASSERT_LE(r.entropy_bits, std::log2(static_cast<double>(r.n)) + 1e-12);
    ASSERT_EQ(TrackabilityFromJson(ToJson(r)), r);
  }
}

TEST(EffectivenessTest, Examples) {
  std::vector<Fingerprint> distinct, same;
  for (int i = 0; i < 8; ++i) {
    distinct.push_back(Fp(i));
    same.push_back(Fp(0));
  }
  EXPECT_EQ(Effectiveness(Metric::kEntropy, distinct, distinct), 0.0);
  EXPECT_EQ(Effectiveness(Metric::kEntropy, distinct, same), 3.0);
  EXPECT_EQ(Effectiveness(Metric::kPctLe1, distinct, same), 1.0);
  EXPECT_EQ(Effectiveness(Metric::kPctLe10, distinct, same), 0.0);
  EXPECT_THROW(Effectiveness(Metric::kEntropy, distinct, {}), DomainError);
}

TEST(MetricTest, Names) {
  for (Metric m : kAllMetrics) EXPECT_EQ(ParseMetric(ToString(m)), m);
  EXPECT_EQ(ParseMetric("H"), std::nullopt);
  const nlohmann::json j = ToJson(TrackabilityReport{3, 1.5, 0.25, 1.0});
  EXPECT_EQ(j.at("n"), 3);
  EXPECT_EQ(j.at("entropy_bits"), 1.5);
}

}  // namespace
}  // namespace fpeval
