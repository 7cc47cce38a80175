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

#ifndef TOOLCALL_MODEL_RESPONSE_H_
#define TOOLCALL_MODEL_RESPONSE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toolcall/model/conversation.h"

namespace toolcall {

struct ParsedResponse {
  std::vector<FunctionCall> calls;
  std::optional<std::string> answer;
  std::vector<std::string> parse_errors;

  // Calls xor a non-empty answer.
  bool well_formed() const;
};

// Extracts every <tool_call>...</tool_call> block and the <answer> block
// from raw model output. Never throws; problems land in parse_errors.
ParsedResponse parse_model_response(std::string_view text);

}  // namespace toolcall

#endif  // TOOLCALL_MODEL_RESPONSE_H_
