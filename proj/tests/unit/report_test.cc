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

#include "toolcall/report/report.h"

#include <gtest/gtest.h>

#include "toolcall/error.h"
#include "toolcall/model/structure.h"
#include "toolcall/util/rng.h"
#include "unit/test_util.h"

namespace toolcall {
namespace {

using testing::call;
using testing::make_conversation;

Conversation single(const std::string& id) {
  return make_conversation({{"q", {{call("a", {{"x", "v"}}), "{}"}}, "ok"}},
                           id);
}

Conversation serial(const std::string& id) {
  return make_conversation(
      {{"find then book",
        {{call("find", {{"x", "Oslo"}}), R"({"id": "R-)" + id + R"("})"},
         {call("book", {{"x", "R-" + id}}), "{}"}},
        "ok"}},
      id);
}

Conversation parallel(const std::string& id) {
  return make_conversation({{"weather in Oslo and Lima",
                             {{call("w", {{"x", "Oslo"}}), "{}"},
                              {call("w2", {{"x", "Lima"}}), "{}"}},
                             "ok"}},
                           id);
}

Conversation multi_turn(const std::string& id) {
  return make_conversation(
      {{"q1", {{call("a"), R"({"id": "T-1"})"}}, "ok"},
       {"q2 with T-1", {{call("b", {{"x", "T-1"}}), "{}"}}, "ok"}},
      id);
}

TEST(Stats, TwoOfFourMultiTurn) {
  const DatasetStats s = compute_stats(
      {single("a"), serial("b"), multi_turn("c"), multi_turn("d")});
  EXPECT_EQ(s.conversations, 4u);
  EXPECT_DOUBLE_EQ(s.multi_turn_proportion(), 0.5);
  EXPECT_EQ(s.turns, 6u);
  EXPECT_EQ(s.calls, 7u);
  EXPECT_EQ(s.multi_hop_turns, 1u);
  EXPECT_EQ(s.serial_turns, 1u);
  EXPECT_DOUBLE_EQ(s.multi_hop_proportion(), 0.25);
  EXPECT_EQ(s.calls_per_sample.at(2), 3u);
  EXPECT_EQ(s.calls_per_sample.at(1), 1u);
}

TEST(Stats, EmptyDatasetIsAllZero) {
  const DatasetStats s = compute_stats({});
  EXPECT_EQ(s.conversations, 0u);
  EXPECT_EQ(s.turns, 0u);
  EXPECT_EQ(s.calls, 0u);
  EXPECT_EQ(s.multi_turn_proportion(), 0.0);
  EXPECT_TRUE(s.calls_per_sample.empty());
}

TEST(Stats, MixedTurnsCountedSeparately) {
  Conversation mixed = make_conversation(
      {{"start with Oslo and Lima",
        {{call("a", {{"x", "Oslo"}}), R"({"id": "R-77"})"},
         {call("b", {{"x", "R-77"}}), "{}"},
         {call("c", {{"x", "Lima"}}), "{}"}},
        "ok"}});
  ASSERT_EQ(classify_structure(mixed).routing, Routing::kMixed);
  const DatasetStats s = compute_stats({mixed, serial("s"), parallel("p")});
  EXPECT_EQ(s.serial_turns, 1u);
  EXPECT_EQ(s.parallel_turns, 1u);
  EXPECT_EQ(s.mixed_turns, 1u);
}

TEST(StatsProperty, TotalsBalanceAndIgnoreOrder) {
  SeededRng rng(11);
  for (int round = 0; round < 200; ++round) {
    std::vector<Conversation> data;
    const size_t n = rng.uniform_index(12);
    for (size_t i = 0; i < n; ++i) {
      const std::string id = std::to_string(i);
      switch (rng.uniform_index(4)) {
        case 0: data.push_back(single(id)); break;
        case 1: data.push_back(serial(id)); break;
        case 2: data.push_back(parallel(id)); break;
        default: data.push_back(multi_turn(id)); break;
      }
      ToolSpec t = testing::tool("tool" + std::to_string(rng.uniform_index(5)));
      if (rng.uniform_index(2)) t.domain = Domain::kFinance;
      data.back().tools.push_back(t);
    }
    const DatasetStats s = compute_stats(data);
    EXPECT_EQ(s.conversations,
              s.single_turn_conversations + s.multi_turn_conversations);
    EXPECT_EQ(s.turns, s.single_hop_turns + s.multi_hop_turns);
    EXPECT_EQ(s.multi_hop_turns,
              s.serial_turns + s.parallel_turns + s.mixed_turns);
    size_t hist_total = 0, hist_calls = 0;
    for (const auto& [k, v] : s.calls_per_sample) {
      hist_total += v;
      hist_calls += k * v;
    }
    EXPECT_EQ(hist_total, s.conversations);
    EXPECT_EQ(hist_calls, s.calls);

    rng.shuffle(data);
    EXPECT_EQ(compute_stats(data).to_json(), s.to_json());
  }
}

TEST(Manifest, TrainingCorpusArithmetic) {
  EXPECT_EQ(kPublicTrainingInstances + kSyntheticTrainingInstances,
            kTrainingInstances);
  Conversation syn = single("s");
  syn.source = "synthetic";
  CorpusManifest m = manifest_of({single("a"), syn, single("b")}, 3);
  EXPECT_EQ(m.public_instances, 2u);
  EXPECT_EQ(m.synthetic_instances, 1u);
  EXPECT_TRUE(m.balanced());
  EXPECT_FALSE(manifest_of({syn}, 2).balanced());
}

std::vector<Conversation> ten_and_ten() {
  std::vector<Conversation> out;
  for (int i = 0; i < 10; ++i) {
    out.push_back(serial("s" + std::to_string(i)));
    out.push_back(parallel("p" + std::to_string(i)));
  }
  out.push_back(single("x"));
  return out;
}

std::pair<size_t, size_t> routing_counts(const std::vector<Conversation>& cs) {
  size_t s = 0, p = 0;
  for (const Conversation& c : cs) {
    const Routing r = classify_structure(c).routing;
    s += r == Routing::kSerial;
    p += r == Routing::kParallel;
  }
  return {s, p};
}

TEST(Stratify, IdentityRatioKeepsEverything) {
  auto out = stratify_by_ratio(ten_and_ten(), {1, 1}, 3);
  EXPECT_EQ(out.size(), 20u);
  EXPECT_EQ(routing_counts(out), std::make_pair(size_t{10}, size_t{10}));
}

TEST(Stratify, OneToFourTakesLargestExactFit) {
  auto out = stratify_by_ratio(ten_and_ten(), parse_ratio("1:4"), 3);
  EXPECT_EQ(routing_counts(out), std::make_pair(size_t{2}, size_t{8}));
  EXPECT_EQ(stratify_by_ratio(ten_and_ten(), {1, 4}, 3), out);
  EXPECT_NE(stratify_by_ratio(ten_and_ten(), {1, 4}, 4), out);
}

TEST(Stratify, EmptyStratumIsUnachievable) {
  std::vector<Conversation> only_serial = {serial("a"), serial("b")};
  try {
    stratify_by_ratio(only_serial, {1, 4}, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kRatioUnachievable);
  }
}

TEST(Stratify, RatioParsing) {
  EXPECT_EQ(parse_ratio("3:2").serial, 3u);
  EXPECT_EQ(parse_ratio("3:2").parallel, 2u);
  for (const char* bad : {"3", "0:1", "a:b", "1:", "1:2:3"}) {
    EXPECT_THROW(parse_ratio(bad), Error) << bad;
  }
}

}  // namespace
}  // namespace toolcall
