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

#include "toolcall/synthesis/prompts.h"

#include <utility>

#include "toolcall/error.h"

namespace toolcall {
namespace prompt_data {
// Generated from prompts/*.txt at configure time.
extern const std::pair<std::string_view, std::string_view> kPrompts[];
extern const size_t kPromptCount;
}  // namespace prompt_data

std::string_view prompt_template(std::string_view name) {
  for (size_t i = 0; i < prompt_data::kPromptCount; ++i) {
    if (prompt_data::kPrompts[i].first == name) {
      return prompt_data::kPrompts[i].second;
    }
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown prompt template '" + std::string(name) + "'");
}

std::string_view instance_system_prompt() {
  return prompt_template("system_prompt");
}

std::string render_prompt(std::string_view tmpl,
                          const std::map<std::string, std::string>& values) {
  std::string out;
  size_t pos = 0;
  while (pos < tmpl.size()) {
    const size_t open = tmpl.find("{{", pos);
    if (open == std::string_view::npos) break;
    const size_t close = tmpl.find("}}", open + 2);
    if (close == std::string_view::npos) break;
    out.append(tmpl.substr(pos, open - pos));
    const std::string key(tmpl.substr(open + 2, close - open - 2));
    auto it = values.find(key);
    if (it != values.end()) {
      out += it->second;
    } else {
      out.append(tmpl.substr(open, close + 2 - open));
    }
    pos = close + 2;
  }
  out.append(tmpl.substr(pos));
  return out;
}

}  // namespace toolcall
