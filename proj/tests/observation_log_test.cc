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

#include "fpeval/observation_log.h"

#include "fpeval/errors.h"
#include "fpeval/synthetic.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace fpeval {
namespace {

TEST(SubjectTest, ParseAndPrint) {
  EXPECT_TRUE(Subject::Parse("baseline").is_baseline());
  EXPECT_EQ(Subject::Parse("pet:tor").pet, "tor");
  EXPECT_EQ(Subject::Pet("a:b").ToString(), "pet:a:b");
  EXPECT_EQ(Subject::Baseline().ToString(), "baseline");
  EXPECT_THROW(Subject::Parse("pet:"), FormatError);
  EXPECT_THROW(Subject::Parse("tor"), FormatError);
}

TEST(BoundaryTest, Names) {
  for (Boundary b : kAllBoundaries) EXPECT_EQ(ParseBoundary(ToString(b)), b);
  EXPECT_EQ(ToString(Boundary::kSession), "session");
  EXPECT_EQ(ParseBoundary("tab"), std::nullopt);
}

TEST(ObservationLogTest, ParsesRecords) {
  const ObservationLog log = ParseObservationLog(
      R"({"platform":"win-ff","subject":"baseline","boundary":"reload","epoch":0,"attrs":{"timezone":-60,"language":"en"}})"
      "\n\n"
      R"({"platform":"win-ff","subject":"pet:tor","boundary":"session","epoch":3,"attrs":{"timezone":0}})"
      "\n");
  ASSERT_EQ(log.observations.size(), 2u);
  EXPECT_EQ(log.observations[1].subject.pet, "tor");
  EXPECT_EQ(log.observations[1].boundary, Boundary::kSession);
  EXPECT_EQ(log.observations[1].epoch, 3);
  EXPECT_EQ(log.observations[0].fingerprint.Get("timezone"), AttributeValue::Integer(-60));
  EXPECT_EQ(log.AttributeNames(), (std::set<std::string>{"language", "timezone"}));
  EXPECT_EQ(log.Pets(), std::set<std::string>{"tor"});
}

TEST(ObservationLogTest, Errors) {
  const char* bad[] = {
      R"({"subject":"baseline","boundary":"reload","epoch":0,"attrs":{}})",
      R"({"platform":"p","subject":"x","boundary":"reload","epoch":0,"attrs":{}})",
      R"({"platform":"p","subject":"baseline","boundary":"tab","epoch":0,"attrs":{}})",
      R"({"platform":"p","subject":"baseline","boundary":"reload","epoch":-1,"attrs":{}})",
      R"({"platform":"p","subject":"baseline","boundary":"reload","epoch":0,"attrs":{}, "attrs":{}})",
      R"({"platform":"","subject":"baseline","boundary":"reload","epoch":0,"attrs":{}})",
      R"([1,2])",
      R"({"platform":"p")",
  };
  for (const char* line : bad) EXPECT_THROW(ParseObservationLog(line), FormatError) << line;
}

TEST(ObservationLogTest, RoundTripGenerated) {
  testing::TempDir dir;
  for (uint64_t seed = 0; seed < 5; ++seed) {
    const GeneratedLog g = GenerateLog({{"tor", TorFirefoxVerdicts()}}, 4, 2, seed);
    EXPECT_EQ(ParseObservationLog(SerializeObservationLog(g.log)), g.log);
    SaveObservationLog(g.log, dir.File("log.jsonl"));
    EXPECT_EQ(LoadObservationLog(dir.File("log.jsonl")), g.log);
  }
}

}  // namespace
}  // namespace fpeval
