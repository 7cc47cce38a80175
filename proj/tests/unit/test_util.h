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

#ifndef TOOLCALL_TESTS_UNIT_TEST_UTIL_H_
#define TOOLCALL_TESTS_UNIT_TEST_UTIL_H_

#include <filesystem>
#include <string>
#include <vector>

#include "toolcall/model/conversation.h"
#include "toolcall/model/tool_spec.h"

namespace toolcall::testing {

inline std::filesystem::path data_path(const std::string& name) {
  return std::filesystem::path(TOOLCALL_TEST_DATA) / name;
}

inline FunctionCall call(std::string name, Json args = Json::object()) {
  return FunctionCall{std::move(name), std::move(args)};
}

inline ToolSpec tool(std::string name, std::string description = "does things",
                     std::vector<std::string> params = {"x"}) {
  ToolSpec t;
  t.name = std::move(name);
  t.description = std::move(description);
  Schema s;
  s.type = "object";
  s.has_properties = true;
  for (auto& p : params) {
    Schema ps;
    ps.type = "string";
    s.properties.push_back({p, ps});
  }
  t.input_schema = s;
  return t;
}

// Builds a conversation from turns of (query, [(call, observation)], answer).
struct TurnSpec {
  std::string query;
  std::vector<std::pair<FunctionCall, std::string>> steps;
  std::string answer;
};

inline Conversation make_conversation(const std::vector<TurnSpec>& turns,
                                      std::string id = "c0") {
  Conversation c;
  c.id = std::move(id);
  c.system_prompt = "system";
  for (const TurnSpec& t : turns) {
    c.events.push_back(Query{t.query});
    for (const auto& [fc, obs] : t.steps) {
      c.events.push_back(Action{fc});
      c.events.push_back(Observation{obs});
    }
    c.events.push_back(Answer{t.answer});
  }
  return c;
}

}  // namespace toolcall::testing

#endif  // TOOLCALL_TESTS_UNIT_TEST_UTIL_H_
