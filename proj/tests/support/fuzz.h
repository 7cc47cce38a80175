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

#ifndef TOOLCALL_TESTS_SUPPORT_FUZZ_H_
#define TOOLCALL_TESTS_SUPPORT_FUZZ_H_

// Seeded generators of valid conversations and call lists.

#include <string>
#include <vector>

#include "toolcall/model/conversation.h"
#include "toolcall/util/rng.h"
#include "unit/test_util.h"

namespace toolcall::fuzz {

inline const char* const kFragments[] = {
    "hello", " ", "\"quoted\"", "<answer>", "</answer>", "<tool_call>",
    "\n",    "é",  "東京",       "\\",       "{",         "}",
    "42",    "a b", "\t",        "null",     "[1, 2]",    "2023-04-01"};

inline std::string random_text(SeededRng& rng, size_t max_parts) {
  std::string s;
  const size_t n = rng.uniform_index(max_parts + 1);
  for (size_t i = 0; i < n; ++i) {
    s += kFragments[rng.uniform_index(std::size(kFragments))];
  }
  return s;
}

inline Json random_value(SeededRng& rng, int depth) {
  switch (rng.uniform_index(depth > 0 ? 7 : 5)) {
    case 0: return random_text(rng, 3);
    case 1: return static_cast<int64_t>(rng.uniform_index(100000)) - 50000;
    case 2: return rng.uniform_real() * 1000.0;
    case 3: return rng.uniform_index(2) == 1;
    case 4: return nullptr;
    case 5: {
      Json a = Json::array();
      for (size_t i = rng.uniform_index(4); i > 0; --i) {
        a.push_back(random_value(rng, depth - 1));
      }
      return a;
    }
    default: {
      Json o = Json::object();
      for (size_t i = rng.uniform_index(4); i > 0; --i) {
        o["k" + std::to_string(rng.uniform_index(50))] =
            random_value(rng, depth - 1);
      }
      return o;
    }
  }
}

inline ToolSpec random_tool(SeededRng& rng, size_t i) {
  ToolSpec t = testing::tool("tool_" + std::to_string(i), random_text(rng, 3),
                             {"p" + std::to_string(rng.uniform_index(9))});
  if (rng.uniform_index(2)) {
    t.category = kAllCategories[rng.uniform_index(std::size(kAllCategories))];
  }
  if (rng.uniform_index(2)) {
    t.domain = kAllDomains[rng.uniform_index(std::size(kAllDomains))];
  }
  if (rng.uniform_index(3) == 0) t.input_schema->required = {t.input_schema->properties[0].name};
  return t;
}

inline Conversation random_conversation(SeededRng& rng, size_t index) {
  std::vector<testing::TurnSpec> turns;
  for (size_t t = 1 + rng.uniform_index(4); t > 0; --t) {
    testing::TurnSpec spec;
    spec.query = random_text(rng, 5);
    for (size_t k = 1 + rng.uniform_index(4); k > 0; --k) {
      Json args = Json::object();
      for (size_t a = rng.uniform_index(4); a > 0; --a) {
        args["arg" + std::to_string(rng.uniform_index(20))] = random_value(rng, 2);
      }
      spec.steps.push_back({testing::call("fn" + std::to_string(k), args),
                            random_text(rng, 4)});
    }
    spec.answer = random_text(rng, 4);
    turns.push_back(std::move(spec));
  }
  Conversation c = testing::make_conversation(
      turns, rng.uniform_index(2) ? "conv-" + std::to_string(index) : "");
  c.system_prompt = random_text(rng, 6);
  if (rng.uniform_index(2)) c.source = "bench" + std::to_string(rng.uniform_index(3));
  for (size_t i = rng.uniform_index(4); i > 0; --i) {
    c.tools.push_back(random_tool(rng, i));
  }
  return c;
}

inline std::vector<FunctionCall> random_calls(SeededRng& rng, size_t max_n) {
  static const char* names[] = {"search", "book", "pay"};
  static const char* values[] = {"new york city", "york city", "Paris", "the paris", "7"};
  std::vector<FunctionCall> out(rng.uniform_index(max_n + 1));
  for (auto& c : out) {
    Json args = Json::object();
    args["q"] = values[rng.uniform_index(5)];
    if (rng.uniform_index(3) == 0) args["n"] = static_cast<int>(rng.uniform_index(2));
    c = testing::call(names[rng.uniform_index(3)], args);
  }
  return out;
}

}  // namespace toolcall::fuzz

#endif  // TOOLCALL_TESTS_SUPPORT_FUZZ_H_
