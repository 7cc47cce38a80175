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

#include <functional>
#include <map>
#include <set>

#include "test_util.h"
#include "toolcall/candidates/candidates.h"
#include "toolcall/error.h"
#include "toolcall/util/rng.h"

namespace toolcall {
namespace {

using testing::tool;

std::vector<ToolSpec> make_pool(size_t n) {
  const char* words[] = {"weather", "stock", "hotel", "flight", "music",
                         "recipe", "news", "map", "email", "calendar"};
  std::vector<ToolSpec> pool;
  for (size_t i = 0; i < n; ++i) {
    pool.push_back(tool("tool_" + std::to_string(i),
                        std::string(words[i % 10]) + " " + words[(i * 7) % 10] +
                            " service " + std::to_string(i)));
  }
  return pool;
}

std::shared_ptr<Embedder> hashing() { return std::make_shared<HashingEmbedder>(128, 5); }

std::set<std::string> names(const std::vector<ToolSpec>& tools) {
  std::set<std::string> out;
  for (const ToolSpec& t : tools) out.insert(t.name);
  return out;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

TEST(HybridTest, TwoAnchorsGiveThirteenHard) {
  const auto pool = make_pool(60);
  CachingEmbedder e(hashing());
  const CandidateList c = assemble_hybrid({pool[0], pool[1]}, pool, e, 42);
  EXPECT_EQ(c.anchors.size(), 2u);
  EXPECT_EQ(c.hard_negatives.size(), 13u);
  EXPECT_EQ(c.easy_negatives.size(), 5u);
  EXPECT_EQ(c.presented.size(), 20u);
  EXPECT_EQ(names(c.presented).size(), 20u);
}

TEST(HybridTest, FifteenAnchorsGiveNoHard) {
  const auto pool = make_pool(60);
  CachingEmbedder e(hashing());
  const std::vector<ToolSpec> gt(pool.begin(), pool.begin() + 15);
  const CandidateList c = assemble_hybrid(gt, pool, e, 1);
  EXPECT_TRUE(c.hard_negatives.empty());
  EXPECT_EQ(c.presented.size(), 20u);
}

TEST(HybridTest, Errors) {
  const auto pool = make_pool(60);
  CachingEmbedder e(hashing());
  const std::vector<ToolSpec> gt(pool.begin(), pool.begin() + 16);
  EXPECT_EQ(code_of([&] { assemble_hybrid(gt, pool, e, 1); }), ErrorCode::kTooManyAnchors);
  const auto small = make_pool(19);
  EXPECT_EQ(code_of([&] { assemble_hybrid({small[0]}, small, e, 1); }),
            ErrorCode::kPoolTooSmall);
  EXPECT_EQ(code_of([&] { assemble_hybrid({}, pool, e, 1); }),
            ErrorCode::kEmptyGroundTruth);
}

TEST(HybridTest, SameSeedSameList) {
  const auto pool = make_pool(60);
  CachingEmbedder e1(hashing()), e2(hashing());
  const auto a = assemble_hybrid({pool[3]}, pool, e1, 9);
  const auto b = assemble_hybrid({pool[3]}, pool, e2, 9);
  EXPECT_EQ(a.presented, b.presented);
}

TEST(HybridTest, SeedChangesOnlyEasyAndOrder) {
  const auto pool = make_pool(60);
  CachingEmbedder e(hashing());
  const auto a = assemble_hybrid({pool[3]}, pool, e, 9);
  const auto b = assemble_hybrid({pool[3]}, pool, e, 10);
  EXPECT_EQ(a.hard_negatives, b.hard_negatives);
  EXPECT_NE(a.presented, b.presented);
}

TEST(HybridTest, HardNegativesAreClosestToCentroid) {
  std::vector<ToolSpec> pool;
  std::map<std::string, Vector> table;
  for (int i = 0; i < 25; ++i) {
    ToolSpec t = tool("n" + std::to_string(100 + i), "d");
    pool.push_back(t);
    // Similarity to (1, 0) falls as i grows.
    table[embedding_text(t)] = {1.0, static_cast<double>(i)};
  }
  ToolSpec anchor = tool("anchor", "a");
  table[embedding_text(anchor)] = {1.0, 0.0};
  // A tie with n100, broken by name.
  ToolSpec tie = tool("m_tie", "d");
  table[embedding_text(tie)] = {2.0, 0.0};
  pool.push_back(tie);
  CachingEmbedder e(std::make_shared<TableEmbedder>(table));
  const auto c = assemble_hybrid({anchor}, pool, e, 3);
  ASSERT_EQ(c.hard_negatives.size(), 14u);
  EXPECT_EQ(c.hard_negatives[0].name, "m_tie");
  EXPECT_EQ(c.hard_negatives[1].name, "n100");
  EXPECT_EQ(c.hard_negatives[13].name, "n112");
  for (const ToolSpec& t : c.easy_negatives) EXPECT_GE(t.name, "n113");
}

TEST(GtTest, Sizes) {
  EXPECT_EQ(assemble_gt({tool("a")}).presented.size(), 1u);
  const auto c = assemble_gt({tool("a"), tool("b"), tool("c"), tool("d")});
  EXPECT_EQ(c.presented.size(), 4u);
  EXPECT_TRUE(c.hard_negatives.empty());
  EXPECT_TRUE(c.easy_negatives.empty());
  EXPECT_EQ(assemble_gt({tool("a"), tool("a")}).anchors.size(), 1u);
  EXPECT_THROW(assemble_gt({}), Error);
}

TEST(GroundTruthTest, ResolvesFromConversationThenPool) {
  Conversation c = testing::make_conversation(
      {{"q", {{testing::call("a"), ""}, {testing::call("b"), ""}, {testing::call("a"), ""}}, "x"}});
  c.tools = {tool("a", "local")};
  const auto gt = ground_truth_tools(c, {tool("a", "pool"), tool("b", "pool")});
  ASSERT_EQ(gt.size(), 2u);
  EXPECT_EQ(gt[0].description, "local");
  EXPECT_EQ(gt[1].description, "pool");
  EXPECT_THROW(ground_truth_tools(c, {}), Error);
}

TEST(HybridProperty, FiveHundredSeededAssemblies) {
  const auto pool = make_pool(80);
  CachingEmbedder e(hashing());
  SeededRng rng(500);
  for (int n = 0; n < 500; ++n) {
    const size_t k = 1 + rng.uniform_index(kMaxAnchors);
    std::vector<ToolSpec> gt;
    for (size_t i : rng.sample_indices(pool.size(), k)) gt.push_back(pool[i]);
    const uint64_t seed = rng.next();
    const CandidateList c = assemble_hybrid(gt, pool, e, seed);
    ASSERT_EQ(c.presented.size(), kHybridListSize);
    ASSERT_EQ(names(c.presented).size(), kHybridListSize);
    ASSERT_EQ(c.easy_negatives.size(), kEasyNegatives);
    ASSERT_EQ(c.anchors.size() + c.hard_negatives.size() + c.easy_negatives.size(),
              kHybridListSize);
    const auto shown = names(c.presented);
    for (const ToolSpec& t : gt) ASSERT_TRUE(shown.contains(t.name));
    ASSERT_EQ(assemble_hybrid(gt, pool, e, seed).presented, c.presented);
  }
}

}  // namespace
}  // namespace toolcall
