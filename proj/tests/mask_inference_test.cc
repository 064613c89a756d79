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

#include "fpeval/mask_inference.h"

#include <cmath>

#include "fpeval/errors.h"
#include "fpeval/synthetic.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace fpeval {
namespace {

using VS = VerdictStatus;

class LogBuilder {
 public:
  // One observation per call; `value` nullopt leaves the attribute absent.
  LogBuilder& Add(std::string platform, Subject subject, Boundary boundary, int epoch,
                  std::optional<AttributeValue> value, std::string attr = "a") {
    Observation o;
    o.platform_id = std::move(platform);
    o.subject = std::move(subject);
    o.boundary = boundary;
    o.epoch = epoch;
    if (value) o.fingerprint.Set(attr, *value);
    log_.observations.push_back(std::move(o));
    return *this;
  }
  // Two reload epochs per side with constant values.
  LogBuilder& Pair(const std::string& platform, std::optional<AttributeValue> base,
                   std::optional<AttributeValue> with, const std::string& pet = "p") {
    for (int e = 0; e < 2; ++e) {
      Add(platform, Subject::Baseline(), Boundary::kReload, e, base);
      Add(platform, Subject::Pet(pet), Boundary::kReload, e, with);
    }
    return *this;
  }
  const ObservationLog& log() const { return log_; }

 private:
  ObservationLog log_;
};

AttributeValue T(const std::string& s) { return AttributeValue::Text(s); }

std::map<std::string, VS> Statuses(const MaskModel& m) {
  std::map<std::string, VS> out;
  for (const auto& [a, v] : m.verdicts) out.emplace(a, v.status);
  return out;
}

TEST(BaselineVariesTest, CrossPlatformDifferenceIsNotVariation) {
  LogBuilder b;
  b.Pair("p1", T("x"), T("x")).Pair("p2", T("y"), T("y"));
  EXPECT_FALSE(BaselineVaries(b.log(), "a"));
}

TEST(BaselineVariesTest, ReloadEpochsVary) {
  LogBuilder b;
  b.Add("p1", Subject::Baseline(), Boundary::kReload, 0, T("v"))
      .Add("p1", Subject::Baseline(), Boundary::kReload, 1, T("v"))
      .Add("p1", Subject::Baseline(), Boundary::kReload, 2, T("w"));
  EXPECT_TRUE(BaselineVaries(b.log(), "a"));
}

TEST(BaselineVariesTest, AbsentEverywhereIsNotObserved) {
  LogBuilder b;
  b.Pair("p1", T("x"), T("x"));
  EXPECT_THROW(BaselineVaries(b.log(), "nope"), NotObservedError);
}

TEST(BaselineVariesTest, PlantedNoiseOnOneAttribute) {
  std::map<std::string, VS> want;
  for (int i = 0; i < 8; ++i) want["attr" + std::to_string(i)] = VS::kUnmasked;
  want["attr3"] = VS::kInconclusiveBaselineVaries;
  const GeneratedLog g = GenerateLog({{"p", want}}, 4, 3, 21);
  for (const auto& [attr, status] : want) {
    EXPECT_EQ(BaselineVaries(g.log, attr), attr == "attr3") << attr;
  }
}

TEST(ClassifyTest, GeometricTestExamples) {
  LogBuilder one;
  one.Pair("p1", T("x"), T("x")).Pair("p2", T("x"), T("x"));
  Verdict v = Classify(one.log(), "p", "a");
  EXPECT_EQ(v.status, VS::kInconclusiveInsufficientDiversity);
  EXPECT_EQ(v.confidence, std::nullopt);

  LogBuilder two;
  two.Pair("p1", T("x"), T("x")).Pair("p2", T("y"), T("y"));
  v = Classify(two.log(), "p", "a");
  EXPECT_EQ(v.status, VS::kUnmasked);
  EXPECT_EQ(v.confidence, 0.1);
  EXPECT_EQ(v.evidence.size(), 2u);
  EXPECT_NE(v.reason.find("k=2"), std::string::npos);
}

TEST(ClassifyTest, PetVariationWinsOverStandardization) {
  LogBuilder b;
  b.Pair("p1", T("x"), T("s")).Pair("p2", T("y"), T("s"));
  b.Add("p3", Subject::Baseline(), Boundary::kReload, 0, T("z"))
      .Add("p3", Subject::Baseline(), Boundary::kReload, 1, T("z"))
      .Add("p3", Subject::Pet("p"), Boundary::kReload, 0, T("r1"))
      .Add("p3", Subject::Pet("p"), Boundary::kReload, 1, T("r2"));
  const Verdict v = Classify(b.log(), "p", "a");
  EXPECT_EQ(v.status, VS::kMaskedVary);
  ASSERT_EQ(v.evidence.size(), 2u);
  EXPECT_EQ(v.evidence[0].platform_id, "p3");
  EXPECT_EQ(v.evidence[1].epoch, "reload:1");
}

TEST(ClassifyTest, BaselineVariationWinsOverEverything) {
  LogBuilder b;
  b.Pair("p1", T("x"), T("s"));
  b.Add("p2", Subject::Baseline(), Boundary::kSession, 0, T("u"))
      .Add("p2", Subject::Baseline(), Boundary::kSession, 1, T("v"))
      .Add("p2", Subject::Pet("p"), Boundary::kSession, 0, T("r1"))
      .Add("p2", Subject::Pet("p"), Boundary::kSession, 1, T("r2"));
  EXPECT_EQ(Classify(b.log(), "p", "a").status, VS::kInconclusiveBaselineVaries);
}

TEST(ClassifyTest, PartialStandardizationOnOneOfSix) {
  LogBuilder b;
  for (int i = 0; i < 6; ++i) {
    const std::string value = "v" + std::to_string(i);
    b.Pair("p" + std::to_string(i), T(value), T(i == 4 ? "std" : value));
  }
  const Verdict v = Classify(b.log(), "p", "a");
  EXPECT_EQ(v.status, VS::kMaskedStandardize);
  EXPECT_EQ(v.evidence.at(0).platform_id, "p4");
}

TEST(ClassifyTest, SuppressionIsStandardization) {
  LogBuilder b;
  b.Pair("p1", T("x"), std::nullopt).Pair("p2", T("y"), T("y"));
  EXPECT_EQ(Classify(b.log(), "p", "a").status, VS::kMaskedStandardize);
  const MaskModel m = InferModel(b.log(), "p");
  EXPECT_EQ(m.verdicts.at("a").status, VS::kMaskedStandardize);
}

TEST(ClassifyTest, Errors) {
  LogBuilder b;
  b.Add("p1", Subject::Baseline(), Boundary::kReload, 0, T("x"))
      .Add("p2", Subject::Pet("p"), Boundary::kReload, 0, T("x"));
  EXPECT_THROW(Classify(b.log(), "p", "a"), InsufficientDataError);
  EXPECT_THROW(Classify(b.log(), "p", "missing"), NotObservedError);
  EXPECT_THROW(Classify(b.log(), "p", "a", StatParams{1.0, 0.1}), DomainError);
  EXPECT_THROW(Classify(b.log(), "p", "a", StatParams{0.75, 0.0}), DomainError);
  // InferModel contains the failure per attribute.
  const MaskModel m = InferModel(b.log(), "p");
  EXPECT_EQ(m.verdicts.at("a").status, VS::kInconclusiveInsufficientDiversity);
  EXPECT_EQ(m.verdicts.at("a").reason.rfind("insufficient-data: ", 0), 0u);
}

// The geometric test by k for two impact fractions.
TEST(GeometricTest, TruthTable) {
  const StatParams strict{0.75, 0.1};
  EXPECT_FALSE(RulesOutImpactfulStandardization(1, strict));
  for (int k = 2; k <= 10; ++k) EXPECT_TRUE(RulesOutImpactfulStandardization(k, strict)) << k;
  const StatParams half{0.5, 0.1};
  for (int k = 1; k <= 3; ++k) EXPECT_FALSE(RulesOutImpactfulStandardization(k, half)) << k;
  for (int k = 4; k <= 10; ++k) EXPECT_TRUE(RulesOutImpactfulStandardization(k, half)) << k;
  EXPECT_EQ(MinDistinctValuesForUnmasked(strict), 2);
  EXPECT_EQ(MinDistinctValuesForUnmasked(half), 4);
}

// Built logs with k distinct baseline values, classified end to end.
TEST(GeometricTest, ClassifyByDistinctValues) {
  for (double f : {0.75, 0.5}) {
    const StatParams params{f, 0.1};
    for (int k = 1; k <= 10; ++k) {
      LogBuilder b;
      for (int p = 0; p < 12; ++p) {
        const AttributeValue v = AttributeValue::Integer(p % k);
        b.Pair("p" + std::to_string(p), v, v);
      }
      const bool unmasked = std::pow(1.0 - f, k) <= 0.1;
      EXPECT_EQ(Classify(b.log(), "p", "a", params).status,
                unmasked ? VS::kUnmasked : VS::kInconclusiveInsufficientDiversity)
          << "f=" << f << " k=" << k;
    }
  }
}

TEST(ClassifyTest, AddingNewDistinctValueNeverLosesUnmasked) {
  Rng rng(31);
  for (int iter = 0; iter < 200; ++iter) {
    LogBuilder b;
    const int platforms = 1 + static_cast<int>(rng.Uniform(6));
    const int alphabet = 1 + static_cast<int>(rng.Uniform(4));
    for (int p = 0; p < platforms; ++p) {
      const AttributeValue v = AttributeValue::Integer(rng.Uniform(alphabet));
      b.Pair("p" + std::to_string(p), v, v);
    }
    const VS before = Classify(b.log(), "p", "a").status;
    b.Pair("new", T("fresh"), T("fresh"));
    const VS after = Classify(b.log(), "p", "a").status;
    if (before == VS::kUnmasked) ASSERT_EQ(after, VS::kUnmasked);
  }
}

TEST(InferModelTest, NullToolIsAllUnmasked) {
  ObservationLog log;
  for (int p = 0; p < 3; ++p) {
    for (const Subject& s : {Subject::Baseline(), Subject::Pet("null")}) {
      for (int e = 0; e < 2; ++e) {
        Observation o{"p" + std::to_string(p), s, Boundary::kDomain, e, {}};
        for (const std::string attr : {"a", "b", "c"}) {
          o.fingerprint.Set(attr, T(attr + std::to_string(p)));
        }
        log.observations.push_back(o);
      }
    }
  }
  const MaskModel m = InferModel(log, "null");
  ASSERT_EQ(m.verdicts.size(), 3u);
  for (const auto& [attr, v] : m.verdicts) {
    EXPECT_EQ(v.status, VS::kUnmasked) << attr;
    EXPECT_EQ(v.confidence, 0.1);
  }
  EXPECT_EQ(m.pet, "null");
  EXPECT_TRUE(m.notes.empty());
}

TEST(InferModelTest, NotesSkippedBoundaries) {
  LogBuilder b;
  b.Pair("p1", T("x"), T("x"));
  b.Add("p1", Subject::Baseline(), Boundary::kSession, 0, T("x"));
  const MaskModel m = InferModel(b.log(), "p");
  ASSERT_FALSE(m.notes.empty());
  EXPECT_NE(m.notes.front().find("session"), std::string::npos);
}

TEST(InferModelTest, TorColumnPatternIsRecovered) {
  const auto want = TorFirefoxVerdicts();
  int masked = 0;
  for (const auto& [a, s] : want) masked += IsMasked(s);
  EXPECT_EQ(masked, 21);
  for (uint64_t seed = 0; seed < 10; ++seed) {
    const GeneratedLog g = GenerateLog({{"tor", want}}, 6, 2, seed);
    EXPECT_EQ(Statuses(InferModel(g.log, "tor")), want) << seed;
  }
}

TEST(InferModelTest, DeterministicAndOrderFree) {
  std::map<std::string, VS> want = {{"a", VS::kMaskedVary},
                                    {"b", VS::kMaskedStandardize},
                                    {"c", VS::kUnmasked}};
  GeneratedLog g = GenerateLog({{"p", want}}, 3, 2, 5);
  const MaskModel m = InferModel(g.log, "p");
  EXPECT_EQ(InferModel(g.log, "p"), m);
  std::reverse(g.log.observations.begin(), g.log.observations.end());
  EXPECT_EQ(Statuses(InferModel(g.log, "p")), Statuses(m));
}

TEST(InferModelTest, ClosureOverRandomRequests) {
  Rng rng(99);
  const auto attrs = testing::AttrNames(10);
  for (int iter = 0; iter < 100; ++iter) {
    std::map<std::string, VS> want;
    for (const std::string& a : attrs) want[a] = testing::RandomStatus(rng);
    const GeneratedLog g = GenerateLog({{"pet", want}}, 2 + static_cast<int>(rng.Uniform(5)),
                                       2 + static_cast<int>(rng.Uniform(2)), rng.Next());
    ASSERT_EQ(Statuses(InferModel(g.log, "pet")), want) << iter;
  }
}

MaskModel Masking(const std::string& pet, const std::set<std::string>& masked,
                  const std::vector<std::string>& universe) {
  std::map<std::string, VS> s;
  for (const std::string& a : universe) {
    s[a] = masked.count(a) ? VS::kMaskedStandardize : VS::kUnmasked;
  }
  return testing::ModelWith(pet, s);
}

TEST(RankPreorderTest, SubsetAndAntichain) {
  const std::vector<std::string> u = {"a", "b"};
  PreorderRanking r = RankPreorder({Masking("ab", {"a", "b"}, u), Masking("a", {"a"}, u)});
  EXPECT_TRUE(r.Dominates("ab", "a"));
  EXPECT_FALSE(r.Dominates("a", "ab"));
  EXPECT_TRUE(r.Dominates("a", "a"));
  EXPECT_EQ(r.masked_counts.at("ab"), 2);

  r = RankPreorder({Masking("x", {"a"}, u), Masking("y", {"b"}, u)});
  EXPECT_FALSE(r.Dominates("x", "y"));
  EXPECT_FALSE(r.Dominates("y", "x"));
  EXPECT_EQ(r.classes.size(), 2u);
}

TEST(RankPreorderTest, EqualSetsShareAClass) {
  const std::vector<std::string> u = {"a", "b", "c"};
  const PreorderRanking r = RankPreorder(
      {Masking("q", {"a"}, u), Masking("p", {"a"}, u), Masking("z", {"a", "b"}, u)});
  ASSERT_EQ(r.classes.size(), 2u);
  EXPECT_EQ(r.classes[0], std::vector<std::string>{"z"});
  EXPECT_EQ(r.classes[1], (std::vector<std::string>{"p", "q"}));
  EXPECT_TRUE(r.Dominates("p", "q"));
  EXPECT_TRUE(r.Dominates("q", "p"));
}

TEST(RankPreorderTest, DifferentUniversesRejected) {
  EXPECT_THROW(RankPreorder({Masking("x", {"a"}, {"a"}), Masking("y", {}, {"b"})}),
               ConfigurationError);
}

TEST(RankPreorderTest, RelationIsReflexiveAndTransitive) {
  Rng rng(12);
  const auto u = testing::AttrNames(5);
  for (int iter = 0; iter < 50; ++iter) {
    std::vector<MaskModel> models;
    for (int i = 0; i < 6; ++i) {
      std::set<std::string> masked;
      for (const std::string& a : u) {
        if (rng.Bernoulli(0.5)) masked.insert(a);
      }
      models.push_back(Masking("m" + std::to_string(i), masked, u));
    }
    const PreorderRanking r = RankPreorder(models);
    for (const MaskModel& a : models) {
      ASSERT_TRUE(r.Dominates(a.pet, a.pet));
      for (const MaskModel& b : models) {
        for (const MaskModel& c : models) {
          if (r.Dominates(a.pet, b.pet) && r.Dominates(b.pet, c.pet)) {
            ASSERT_TRUE(r.Dominates(a.pet, c.pet));
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace fpeval
