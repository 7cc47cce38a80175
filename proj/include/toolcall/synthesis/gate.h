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

#ifndef TOOLCALL_SYNTHESIS_GATE_H_
#define TOOLCALL_SYNTHESIS_GATE_H_

#include <optional>
#include <string>
#include <string_view>

#include "toolcall/providers/chat.h"
#include "toolcall/synthesis/synthesis.h"

namespace toolcall {

inline constexpr double kMinDimensionScore = 4.0;
inline constexpr double kAcceptScore = 8.0;

struct RubricScores {
  double tool_fit = 0, clarity = 0, naturalness = 0;  // query
  double success = 0, grounding = 0, efficiency = 0;  // trajectory
  std::optional<double> anchor;                       // multi-turn only

  double query_mean() const;
  double trajectory_mean() const;
  double six_mean() const;
  double min_score() const;  // over every present dimension
  // 0.4 query mean + 0.4 trajectory mean + 0.2 anchor; requires anchor.
  double composite() const;
  Json to_json() const;
};

struct GateDecision {
  bool accepted = false;
  RubricScores scores;
  std::string reason;  // empty when accepted
};

// Single and multi-hop: min >= 4 and six-score mean >= 8. Multi-turn:
// composite >= 8 and min >= 4. Boundaries are inclusive.
GateDecision apply_thresholds(const RubricScores& scores, bool multi_turn);

// Reads the first JSON object of a judge reply. Every dimension must be a
// number in [1, 10]; the anchor score is required iff `multi_turn`.
// Throws Error(kJudgeError).
RubricScores parse_rubric(std::string_view text, bool multi_turn);

// Asks the judge for scores, re-asking once when the reply cannot be
// parsed. Throws Error(kJudgeError) after the second failure.
GateDecision quality_gate(const TrajectoryDraft& draft, ChatProvider& judge,
                          std::vector<ChatExchange>* log = nullptr);

}  // namespace toolcall

#endif  // TOOLCALL_SYNTHESIS_GATE_H_
