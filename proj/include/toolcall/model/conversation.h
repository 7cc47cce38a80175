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

#ifndef TOOLCALL_MODEL_CONVERSATION_H_
#define TOOLCALL_MODEL_CONVERSATION_H_

#include <string>
#include <variant>
#include <vector>

#include "toolcall/model/tool_spec.h"
#include "toolcall/util/io.h"

namespace toolcall {

struct FunctionCall {
  std::string tool_name;
  Json arguments = Json::object();  // ordered, unique keys

  friend bool operator==(const FunctionCall&, const FunctionCall&) = default;
};

// {"name": ..., "arguments": {...}}. `arguments` may itself arrive as an
// encoded object string. Throws Error(kMalformedRecord).
FunctionCall call_from_json(const Json& j);
Json call_to_json(const FunctionCall& call);

struct Query {
  std::string text;
  friend bool operator==(const Query&, const Query&) = default;
};
struct Action {
  FunctionCall call;
  friend bool operator==(const Action&, const Action&) = default;
};
struct Observation {
  std::string text;
  friend bool operator==(const Observation&, const Observation&) = default;
};
struct Answer {
  std::string text;
  friend bool operator==(const Answer&, const Answer&) = default;
};

using Event = std::variant<Query, Action, Observation, Answer>;

// Half-open event range [begin, end) of one turn.
struct TurnSpan {
  size_t begin = 0;
  size_t end = 0;
};

// A Query-Action-Observation-Answer trajectory. Each turn has the shape
//   Query (Action Observation)+ Answer
// and a new turn starts at every Query.
struct Conversation {
  std::string id;
  std::string source;  // originating benchmark or subset; may be empty
  std::string system_prompt;
  std::vector<Event> events;
  std::vector<ToolSpec> tools;  // candidate list in presentation order

  std::vector<TurnSpan> turns() const;
  size_t turn_count() const { return turns().size(); }

  const std::string& query(const TurnSpan& turn) const;
  std::vector<FunctionCall> calls(const TurnSpan& turn) const;
  std::vector<std::string> observations(const TurnSpan& turn) const;
  std::vector<FunctionCall> all_calls() const;

  friend bool operator==(const Conversation&, const Conversation&) = default;
};

// Throws Error(kRoleOrderViolation) naming the offending event index.
void validate_conversation(const Conversation& conv);

}  // namespace toolcall

#endif  // TOOLCALL_MODEL_CONVERSATION_H_
