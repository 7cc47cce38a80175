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

#include "toolcall/synthesis/gate.h"

#include <algorithm>
#include <cstdio>

#include "toolcall/error.h"
#include "toolcall/model/wire.h"
#include "toolcall/synthesis/prompts.h"

namespace toolcall {
namespace {

// Keeps boundary scores such as 0.4*9 + 0.4*9 + 0.2*4 from falling just
// under a threshold through rounding.
constexpr double kTolerance = 1e-9;

constexpr const char* kDimensions[] = {"tool_fit", "clarity",   "naturalness",
                                       "success",  "grounding", "efficiency"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

double read_score(const Json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_number()) {
    throw Error(ErrorCode::kJudgeError,
                std::string("score '") + key + "' is missing or not a number");
  }
  const double v = it->get<double>();
  if (!(v >= 1.0 && v <= 10.0)) {
    throw Error(ErrorCode::kJudgeError,
                std::string("score '") + key + "' is outside [1, 10]");
  }
  return v;
}

}  // namespace

double RubricScores::query_mean() const {
  return (tool_fit + clarity + naturalness) / 3.0;
}

double RubricScores::trajectory_mean() const {
  return (success + grounding + efficiency) / 3.0;
}

double RubricScores::six_mean() const {
  return (tool_fit + clarity + naturalness + success + grounding +
          efficiency) /
         6.0;
}

double RubricScores::min_score() const {
  double m = std::min({tool_fit, clarity, naturalness, success, grounding,
                       efficiency});
  if (anchor) m = std::min(m, *anchor);
  return m;
}

double RubricScores::composite() const {
  if (!anchor) {
    throw Error(ErrorCode::kInvalidArgument,
                "composite score needs the anchor dimension");
  }
  return 0.4 * query_mean() + 0.4 * trajectory_mean() + 0.2 * *anchor;
}

Json RubricScores::to_json() const {
  Json j = {{"tool_fit", tool_fit},   {"clarity", clarity},
            {"naturalness", naturalness}, {"success", success},
            {"grounding", grounding}, {"efficiency", efficiency}};
  if (anchor) {
    j["anchor"] = *anchor;
    j["composite"] = composite();
  } else {
    j["mean"] = six_mean();
  }
  return j;
}

GateDecision apply_thresholds(const RubricScores& scores, bool multi_turn) {
  GateDecision d;
  d.scores = scores;
  const double min = scores.min_score();
  const double overall = multi_turn ? scores.composite() : scores.six_mean();
  if (min + kTolerance < kMinDimensionScore) {
    d.reason = "lowest score " + fmt(min) + " is below 4.00";
  } else if (overall + kTolerance < kAcceptScore) {
    d.reason = std::string(multi_turn ? "composite" : "mean") + " score " +
               fmt(overall) + " is below 8.00";
  } else {
    d.accepted = true;
  }
  return d;
}

RubricScores parse_rubric(std::string_view text, bool multi_turn) {
  std::optional<Json> obj = find_json_object(text);
  if (!obj) throw Error(ErrorCode::kJudgeError, "no JSON object in reply");
  RubricScores s;
  double* fields[] = {&s.tool_fit, &s.clarity,   &s.naturalness,
                      &s.success,  &s.grounding, &s.efficiency};
  for (size_t i = 0; i < 6; ++i) *fields[i] = read_score(*obj, kDimensions[i]);
  if (multi_turn) {
    s.anchor = read_score(*obj, obj->contains("s_anchor") ? "s_anchor"
                                                          : "anchor");
  }
  return s;
}

GateDecision quality_gate(const TrajectoryDraft& draft, ChatProvider& judge,
                          std::vector<ChatExchange>* log) {
  const bool multi_turn = draft.scenario == Scenario::kMultiTurn;
  ChatRequest req;
  req.system = std::string(prompt_template("judge_system"));
  req.messages.push_back(
      {"user",
       render_prompt(
           prompt_template("judge"),
           {{"anchor_dimension",
             multi_turn ? "\nAnchor dimension:\n- anchor: each later turn "
                          "reuses concrete values produced by the turn "
                          "before it.\n"
                        : ""},
            {"anchor_example", multi_turn ? ", \"anchor\": 8" : ""},
            {"scenario", std::string(to_string(draft.scenario))},
            {"sample", serialize_conversation(draft.conversation).dump(2)}})});
  req.context = {{"task", "judge"},
                 {"scenario", to_string(draft.scenario)},
                 {"multi_turn", multi_turn},
                 {"attempt", 1}};

  ChatResponse first = judge.chat(req);
  if (log) log->push_back({req, first});
  try {
    return apply_thresholds(parse_rubric(first.text, multi_turn), multi_turn);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kJudgeError) throw;
    req.messages.push_back({"assistant", first.text});
    req.messages.push_back(
        {"user", render_prompt(prompt_template("judge_reask"),
                               {{"problem", e.message()}})});
    req.context["attempt"] = 2;
    req.context["reask"] = true;
  }
  ChatResponse second = judge.chat(req);
  if (log) log->push_back({req, second});
  try {
    return apply_thresholds(parse_rubric(second.text, multi_turn), multi_turn);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kJudgeError) throw;
    throw Error(ErrorCode::kJudgeError,
                "judge reply unreadable after a re-ask: " + e.message());
  }
}

}  // namespace toolcall
