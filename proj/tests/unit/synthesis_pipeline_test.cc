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

#include <memory>
#include <set>

#include "toolcall/candidates/candidates.h"
#include "toolcall/error.h"
#include "toolcall/model/structure.h"
#include "toolcall/model/wire.h"
#include "toolcall/synthesis/gate.h"
#include "toolcall/synthesis/pipeline.h"
#include "toolcall/synthesis/prompts.h"
#include "toolcall/synthesis/simulator.h"
#include "unit/test_util.h"

namespace toolcall {
namespace {

using testing::tool;

RubricScores scores(double a, double b, double c, double d, double e,
                    double f, std::optional<double> anchor = std::nullopt) {
  RubricScores s;
  s.tool_fit = a;
  s.clarity = b;
  s.naturalness = c;
  s.success = d;
  s.grounding = e;
  s.efficiency = f;
  s.anchor = anchor;
  return s;
}

std::string rubric_text(double v, bool anchor = false) {
  Json j = {{"tool_fit", v},  {"clarity", v},   {"naturalness", v},
            {"success", v},   {"grounding", v}, {"efficiency", v}};
  if (anchor) j["anchor"] = v;
  return j.dump();
}

// ---- thresholds ----

TEST(Gate, LowDimensionRejectsDespiteHighMean) {
  GateDecision d = apply_thresholds(scores(9, 9, 9, 9, 9, 3), false);
  EXPECT_FALSE(d.accepted);
  EXPECT_NE(d.reason.find("lowest"), std::string::npos);
}

TEST(Gate, AllEightsAcceptAtTheBoundary) {
  EXPECT_TRUE(apply_thresholds(scores(8, 8, 8, 8, 8, 8), false).accepted);
  EXPECT_FALSE(apply_thresholds(scores(8, 8, 8, 8, 8, 7.9), false).accepted);
  EXPECT_TRUE(apply_thresholds(scores(4, 10, 10, 10, 10, 10), false).accepted);
}

TEST(Gate, MultiTurnCompositeBoundary) {
  RubricScores s = scores(9, 9, 9, 9, 9, 9, 4.0);
  EXPECT_NEAR(s.composite(), 8.0, 1e-12);
  EXPECT_TRUE(apply_thresholds(s, true).accepted);
  EXPECT_FALSE(apply_thresholds(scores(9, 9, 9, 9, 9, 9, 3.9), true).accepted);
  // Composite high but one dimension under the floor.
  EXPECT_FALSE(apply_thresholds(scores(10, 10, 3, 10, 10, 10, 10), true)
                   .accepted);
}

TEST(Gate, CompositeMatchesWeightedMeans) {
  RubricScores s = scores(7, 8, 9, 6, 10, 8, 5);
  EXPECT_DOUBLE_EQ(s.query_mean(), 8.0);
  EXPECT_DOUBLE_EQ(s.trajectory_mean(), 8.0);
  EXPECT_NEAR(s.composite(), 0.4 * 8 + 0.4 * 8 + 0.2 * 5, 1e-12);
  EXPECT_EQ(s.min_score(), 5.0);
}

// ---- parsing ----

TEST(Rubric, ParsesObjectInsideProse) {
  RubricScores s = parse_rubric("Scores: " + rubric_text(7) + " thanks", false);
  EXPECT_EQ(s.six_mean(), 7.0);
  EXPECT_FALSE(s.anchor);
  EXPECT_EQ(parse_rubric(rubric_text(6, true), true).anchor, 6.0);
}

TEST(Rubric, RejectsBadPayloads) {
  auto code = [](const std::string& text, bool mt) {
    try {
      parse_rubric(text, mt);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInternal;
  };
  EXPECT_EQ(code("great work", false), ErrorCode::kJudgeError);
  EXPECT_EQ(code(rubric_text(11), false), ErrorCode::kJudgeError);
  EXPECT_EQ(code(rubric_text(0.5), false), ErrorCode::kJudgeError);
  EXPECT_EQ(code(R"({"tool_fit": "high"})", false), ErrorCode::kJudgeError);
  EXPECT_EQ(code(rubric_text(8), true), ErrorCode::kJudgeError);
}

TrajectoryDraft tiny_draft(Scenario sc = Scenario::kSingleHop) {
  TrajectoryDraft d;
  d.scenario = sc;
  d.conversation = testing::make_conversation(
      {{"q", {{testing::call("a", {{"x", "v"}}), "{}"}}, "done"}});
  return d;
}

TEST(QualityGate, ReasksOnceThenSucceeds) {
  ScriptedChatProvider judge({"no idea", rubric_text(9)});
  std::vector<ChatExchange> log;
  GateDecision d = quality_gate(tiny_draft(), judge, &log);
  EXPECT_TRUE(d.accepted);
  ASSERT_EQ(log.size(), 2u);
  EXPECT_EQ(log[1].request.messages.size(), 3u);
  EXPECT_EQ(log[1].request.context["reask"], true);
}

TEST(QualityGate, SecondUnreadableReplyIsJudgeError) {
  ScriptedChatProvider judge({"no idea", "still no idea", rubric_text(9)});
  try {
    quality_gate(tiny_draft(), judge);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kJudgeError);
  }
  EXPECT_EQ(judge.calls(), 2u);
}

TEST(QualityGate, MultiTurnPromptAsksForAnchorScore) {
  ScriptedChatProvider judge({rubric_text(9, true)});
  std::vector<ChatExchange> log;
  EXPECT_TRUE(quality_gate(tiny_draft(Scenario::kMultiTurn), judge, &log)
                  .accepted);
  EXPECT_NE(log[0].request.messages[0].content.find("\"anchor\""),
            std::string::npos);
  EXPECT_EQ(log[0].request.context["multi_turn"], true);
}

// ---- retry loop ----

struct Fixture {
  std::vector<ToolSpec> pool;
  std::shared_ptr<HashingEmbedder> backend = std::make_shared<HashingEmbedder>();
  CachingEmbedder embedder{backend};

  Fixture() {
    const char* words[] = {"flight", "hotel",  "weather", "stock",  "news",
                           "recipe", "movie",  "music",   "email",  "calendar",
                           "map",    "taxi",   "bank",    "doctor", "school",
                           "game",   "ticket", "crypto",  "garden", "fitness"};
    const Domain domains[] = {Domain::kTravel, Domain::kFinance,
                              Domain::kLifestyle, Domain::kTechnology};
    size_t i = 0;
    for (const char* w : words) {
      for (const char* verb : {"search", "book"}) {
        ToolSpec t = tool(std::string(verb) + "_" + w,
                          std::string(verb) + " " + w + " records",
                          {"query", "limit"});
        t.input_schema->properties[1].schema.type = "integer";
        t.input_schema->required = {"query"};
        t.domain = domains[i++ % 4];
        pool.push_back(std::move(t));
      }
    }
  }

  AssemblyInputs inputs() { return {&pool, &embedder}; }

  GenerationTask task(Scenario sc, uint64_t seed) const {
    GenerationTask t;
    t.scenario = sc;
    t.seed = seed;
    t.tools = sample_tool_subset(pool, sc, seed);
    if (sc == Scenario::kMultiTurn) t.turns = 2 + seed % 3;
    return t;
  }
};

TEST(Retry, JudgeRejectsTwiceThenAccepts) {
  Fixture f;
  SimulatedGenerator gen;
  ScriptedChatProvider judge({rubric_text(5), rubric_text(6), rubric_text(9)});
  SynthesisResult r = synthesize_with_retry(
      f.task(Scenario::kSingleHop, 3), gen, judge, f.inputs());
  ASSERT_TRUE(r.accepted());
  EXPECT_EQ(r.attempts, 3);
  ASSERT_EQ(r.rejections.size(), 2u);
  EXPECT_EQ(r.rejections[0].stage, "gate");
  ASSERT_TRUE(r.rejections[0].scores);
  EXPECT_EQ(r.rejections[0].scores->six_mean(), 5.0);
  EXPECT_TRUE(r.excluded_tools.empty());
  // The retry prompt explains the previous rejection.
  const auto& last_prompt =
      r.draft->generation_log.front().request.messages[0].content;
  EXPECT_NE(last_prompt.find("rejected"), std::string::npos);
}

TEST(Retry, AlwaysRejectingJudgeExcludesTheTool) {
  Fixture f;
  SimulatedGenerator gen;
  SimulatedJudge judge(3.0);
  GenerationTask task = f.task(Scenario::kSingleHop, 4);
  SynthesisResult r = synthesize_with_retry(task, gen, judge, f.inputs());
  EXPECT_FALSE(r.accepted());
  EXPECT_EQ(r.attempts, 3);
  EXPECT_EQ(r.rejections.size(), 3u);
  EXPECT_EQ(r.excluded_tools, std::vector<std::string>{task.tools[0].name});
  EXPECT_EQ(gen.calls(), 3u);
}

TEST(Retry, ValidationFailuresCountAsAttempts) {
  Fixture f;
  GenerationTask task = f.task(Scenario::kSingleHop, 5);
  ScriptedChatProvider gen({"nothing", "still nothing", "nope"});
  SimulatedJudge judge;
  SynthesisResult r = synthesize_with_retry(task, gen, judge, f.inputs());
  EXPECT_FALSE(r.accepted());
  EXPECT_EQ(r.rejections.size(), 3u);
  EXPECT_EQ(r.rejections[0].stage, "validation");
  EXPECT_EQ(judge.calls(), 0u);
}

TEST(Retry, UnreadableJudgeCountsAsAttempt) {
  Fixture f;
  SimulatedGenerator gen;
  ScriptedChatProvider judge({"?", "?", rubric_text(9)});
  SynthesisResult r = synthesize_with_retry(
      f.task(Scenario::kSingleHop, 6), gen, judge, f.inputs());
  ASSERT_TRUE(r.accepted());
  EXPECT_EQ(r.attempts, 2);
  EXPECT_EQ(r.rejections[0].stage, "judge");
}

class FailingProvider : public ChatProvider {
 public:
  ChatResponse chat(const ChatRequest&) override {
    throw Error(ErrorCode::kProviderError, "down");
  }
};

TEST(Retry, ProviderErrorsPropagate) {
  Fixture f;
  FailingProvider gen;
  SimulatedJudge judge;
  EXPECT_THROW(synthesize_with_retry(f.task(Scenario::kSingleHop, 1), gen,
                                     judge, f.inputs()),
               Error);
}

// ---- end to end with the offline simulators ----

class EndToEnd : public ::testing::TestWithParam<Scenario> {};

TEST_P(EndToEnd, AcceptedInstancesSatisfyInvariants) {
  Fixture f;
  SimulatedGenerator gen;
  SimulatedJudge judge;
  const Scenario sc = GetParam();
  for (uint64_t seed = 0; seed < 10; ++seed) {
    GenerationTask task = f.task(sc, seed);
    SynthesisResult r = synthesize_with_retry(task, gen, judge, f.inputs());
    ASSERT_TRUE(r.accepted()) << "seed " << seed;
    const Conversation& inst = *r.instance;
    EXPECT_NO_THROW(validate_conversation(inst));
    EXPECT_EQ(inst.tools.size(), kHybridListSize);
    EXPECT_EQ(inst.system_prompt, std::string(instance_system_prompt()));
    std::set<std::string> listed;
    for (const ToolSpec& t : inst.tools) listed.insert(t.name);
    EXPECT_EQ(listed.size(), kHybridListSize);
    for (const FunctionCall& c : inst.all_calls()) {
      EXPECT_TRUE(listed.count(c.tool_name)) << c.tool_name;
    }
    const StructureLabel label = classify_structure(inst);
    switch (sc) {
      case Scenario::kSingleHop:
        EXPECT_EQ(label.hop_class, HopClass::kSingleHop);
        break;
      case Scenario::kMultiHopSerial:
        EXPECT_EQ(label.routing, Routing::kSerial);
        break;
      case Scenario::kMultiHopParallel:
        EXPECT_EQ(label.routing, Routing::kParallel);
        break;
      case Scenario::kMultiTurn:
        EXPECT_EQ(inst.turn_count(), task.turns);
        EXPECT_TRUE(check_anchor_linkage(inst).passed());
        break;
    }
    // The wire form survives a round trip.
    EXPECT_EQ(parse_conversation(serialize_conversation(inst)), inst);
  }
}

INSTANTIATE_TEST_SUITE_P(Scenarios, EndToEnd,
                         ::testing::Values(Scenario::kSingleHop,
                                           Scenario::kMultiHopSerial,
                                           Scenario::kMultiHopParallel,
                                           Scenario::kMultiTurn),
                         [](const auto& info) {
                           std::string n(to_string(info.param));
                           for (char& c : n) {
                             if (c == '-') c = '_';
                           }
                           return n;
                         });

TEST(Reproducibility, SameSeedSameBytes) {
  auto run = [](Scenario sc) {
    Fixture f;
    SimulatedGenerator gen;
    SimulatedJudge judge;
    SynthesisResult r =
        synthesize_with_retry(f.task(sc, 77), gen, judge, f.inputs());
    return serialize_conversation(*r.instance).dump() +
           draft_to_json(*r.draft).dump();
  };
  for (Scenario sc : {Scenario::kMultiHopSerial, Scenario::kMultiTurn}) {
    EXPECT_EQ(run(sc), run(sc));
  }
}

}  // namespace
}  // namespace toolcall
