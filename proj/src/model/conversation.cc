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

#include "toolcall/model/conversation.h"

#include "toolcall/error.h"
#include "toolcall/util/text.h"

namespace toolcall {

FunctionCall call_from_json(const Json& j) {
  if (!j.is_object()) {
    throw Error(ErrorCode::kMalformedRecord, "function call is not an object");
  }
  FunctionCall call;
  auto name = j.find("name");
  if (name == j.end() || !name->is_string() ||
      trim(name->get<std::string>()).empty()) {
    throw Error(ErrorCode::kMalformedRecord, "function call has no name");
  }
  call.tool_name = name->get<std::string>();
  auto args = j.find("arguments");
  if (args == j.end()) args = j.find("parameters");
  if (args == j.end() || args->is_null()) return call;
  if (args->is_object()) {
    call.arguments = *args;
  } else if (args->is_string()) {
    const std::string& s = args->get_ref<const std::string&>();
    if (trim(s).empty()) return call;
    Json parsed = Json::parse(s, nullptr, false);
    if (parsed.is_discarded() || !parsed.is_object()) {
      throw Error(ErrorCode::kMalformedRecord,
                  "arguments of '" + call.tool_name + "' are not an object");
    }
    call.arguments = std::move(parsed);
  } else {
    throw Error(ErrorCode::kMalformedRecord,
                "arguments of '" + call.tool_name + "' are not an object");
  }
  return call;
}

Json call_to_json(const FunctionCall& call) {
  Json j = Json::object();
  j["name"] = call.tool_name;
  j["arguments"] = call.arguments.is_object() ? call.arguments : Json::object();
  return j;
}

std::vector<TurnSpan> Conversation::turns() const {
  std::vector<TurnSpan> out;
  for (size_t i = 0; i < events.size(); ++i) {
    if (std::holds_alternative<Query>(events[i]) || out.empty()) {
      if (!out.empty()) out.back().end = i;
      out.push_back({i, events.size()});
    }
  }
  return out;
}

const std::string& Conversation::query(const TurnSpan& turn) const {
  static const std::string kEmpty;
  if (turn.begin < events.size()) {
    if (const auto* q = std::get_if<Query>(&events[turn.begin])) return q->text;
  }
  return kEmpty;
}

std::vector<FunctionCall> Conversation::calls(const TurnSpan& turn) const {
  std::vector<FunctionCall> out;
  for (size_t i = turn.begin; i < turn.end; ++i) {
    if (const auto* a = std::get_if<Action>(&events[i])) out.push_back(a->call);
  }
  return out;
}

std::vector<std::string> Conversation::observations(
    const TurnSpan& turn) const {
  std::vector<std::string> out;
  for (size_t i = turn.begin; i < turn.end; ++i) {
    if (const auto* o = std::get_if<Observation>(&events[i])) {
      out.push_back(o->text);
    }
  }
  return out;
}

std::vector<FunctionCall> Conversation::all_calls() const {
  std::vector<FunctionCall> out;
  for (const Event& e : events) {
    if (const auto* a = std::get_if<Action>(&e)) out.push_back(a->call);
  }
  return out;
}

void validate_conversation(const Conversation& conv) {
  enum class State { kStart, kAfterQuery, kAfterAction, kAfterObservation,
                     kAfterAnswer };
  auto fail = [](size_t index, const std::string& what) {
    throw Error(ErrorCode::kRoleOrderViolation,
                "event " + std::to_string(index) + ": " + what);
  };
  if (conv.events.empty()) fail(0, "conversation has no events");

  State state = State::kStart;
  for (size_t i = 0; i < conv.events.size(); ++i) {
    const Event& e = conv.events[i];
    if (std::holds_alternative<Query>(e)) {
      if (state == State::kStart || state == State::kAfterAnswer) {
        state = State::kAfterQuery;
      } else if (state == State::kAfterQuery) {
        fail(i, "query follows a query with no tool call");
      } else {
        fail(i, "query begins a new turn before the previous turn's answer");
      }
    } else if (const auto* a = std::get_if<Action>(&e)) {
      if (a->call.tool_name.empty()) fail(i, "action has an empty tool name");
      if (state == State::kAfterQuery || state == State::kAfterObservation) {
        state = State::kAfterAction;
      } else if (state == State::kAfterAction) {
        fail(i, "action follows an action with no observation");
      } else {
        fail(i, "action outside a turn");
      }
    } else if (std::holds_alternative<Observation>(e)) {
      if (state != State::kAfterAction) {
        fail(i, "observation does not follow an action");
      }
      state = State::kAfterObservation;
    } else {
      if (state == State::kAfterObservation) {
        state = State::kAfterAnswer;
      } else if (state == State::kAfterAction) {
        fail(i, "answer follows an action with no observation");
      } else if (state == State::kAfterQuery) {
        fail(i, "turn has no tool call before its answer");
      } else {
        fail(i, "answer outside a turn");
      }
    }
  }
  if (state != State::kAfterAnswer) {
    fail(conv.events.size() - 1, "last turn does not end with an answer");
  }
}

}  // namespace toolcall
