// Copyright 2026 The toolcall Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "toolcall/error.h"
#include "toolcall/matching/match.h"
#include "toolcall/util/rng.h"

namespace toolcall {
namespace {

FunctionCall f(std::string name, Json args) {
  return FunctionCall{std::move(name), std::move(args)};
}

TEST(MatchTest, ExactCall) {
  const MatchVerdict v = cascaded_match(f("f", {{"a", "x"}}), f("f", {{"a", "x"}}));
  EXPECT_TRUE(v.name_match);
  EXPECT_TRUE(v.strict_match);
  EXPECT_TRUE(v.flexible_match);
}

TEST(MatchTest, SemanticArgument) {
  const MatchVerdict v = cascaded_match(f("f", {{"desc", "a large black cat"}}),
                                        f("f", {{"desc", "black cat"}}));
  EXPECT_TRUE(v.name_match);
  EXPECT_FALSE(v.strict_match);
  EXPECT_TRUE(v.flexible_match);
  ASSERT_EQ(v.detail.size(), 1u);
  EXPECT_EQ(v.detail[0].outcome, ArgOutcome::kSemantic);
  EXPECT_NEAR(v.detail[0].score, 0.8, 1e-12);
}

TEST(MatchTest, NameGate) {
  const MatchVerdict v = cascaded_match(f("g", {{"x", 1}}), f("f", {{"x", 1}}));
  EXPECT_FALSE(v.name_match);
  EXPECT_FALSE(v.strict_match);
  EXPECT_FALSE(v.flexible_match);
}

TEST(MatchTest, NonTextPairsNeedEquality) {
  const MatchVerdict v = cascaded_match(f("f", {{"n", 41}}), f("f", {{"n", 42}}));
  EXPECT_TRUE(v.name_match);
  EXPECT_FALSE(v.flexible_match);
  EXPECT_EQ(v.detail[0].outcome, ArgOutcome::kFailed);
}

TEST(MatchTest, KeySetMismatchFailsFlexible) {
  MatchVerdict v = cascaded_match(f("f", {{"a", "x"}}), f("f", {{"a", "x"}, {"b", "y"}}));
  EXPECT_FALSE(v.flexible_match);
  EXPECT_EQ(v.detail[1].outcome, ArgOutcome::kMissing);
  v = cascaded_match(f("f", {{"a", "x"}, {"c", 1}}), f("f", {{"a", "x"}}));
  EXPECT_FALSE(v.flexible_match);
  EXPECT_EQ(v.detail[1].outcome, ArgOutcome::kExtra);
}

TEST(MatchTest, ThresholdRange) {
  EXPECT_THROW(cascaded_match(f("f", {}), f("f", {}), 0.0), Error);
  EXPECT_THROW(CallMatcher(1.5), Error);
  EXPECT_NO_THROW(CallMatcher(1.0));
  // At threshold 1.0 only token-identical texts pass semantically.
  const MatchVerdict v = cascaded_match(f("f", {{"a", "York-City"}}),
                                        f("f", {{"a", "york city"}}), 1.0);
  EXPECT_TRUE(v.flexible_match);
}

Json random_arg(SeededRng& rng) {
  static const char* texts[] = {"new york city", "york city", "the cat", "cat",
                                "2023-04-01", "April 1, 2023", "[1, 2]", "42",
                                "big red dog", "dog"};
  switch (rng.uniform_index(4)) {
    case 0: return texts[rng.uniform_index(std::size(texts))];
    case 1: return static_cast<int>(rng.uniform_index(3));
    case 2: return Json::array({1, 2});
    default: return rng.uniform_index(2) == 1;
  }
}

FunctionCall random_call(SeededRng& rng) {
  static const char* names[] = {"get_weather", "getWeather", "book", "book2"};
  Json args = Json::object();
  static const char* keys[] = {"a", "b", "c"};
  for (const char* k : keys) {
    if (rng.uniform_index(2)) args[k] = random_arg(rng);
  }
  return f(names[rng.uniform_index(4)], args);
}

TEST(MatchProperty, ImplicationChainAndReflexivity) {
  SeededRng rng(1234);
  for (int i = 0; i < 10000; ++i) {
    const FunctionCall p = random_call(rng);
    const FunctionCall g = random_call(rng);
    const MatchVerdict v = cascaded_match(p, g);
    if (v.strict_match) ASSERT_TRUE(v.flexible_match);
    if (v.flexible_match) ASSERT_TRUE(v.name_match);
    ASSERT_EQ(v.strict_match, rule_match(p, g));
    ASSERT_TRUE(rule_match(p, p));
  }
}

}  // namespace
}  // namespace toolcall
