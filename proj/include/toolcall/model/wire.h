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

// Line-delimited conversation records:
//
//   {"conversations": [{"from": "human"|"function_call"|"observation"|"gpt",
//                       "value": "..."}, ...],
//    "system": "...",
//    "tools": "[{\"name\": ..., \"inputSchema\": {...}}, ...]",
//    "id": "...", "source": "..."}          (id and source optional)
//
// function_call values hold a compact {"name","arguments"} object; gpt
// values wrap the answer in <answer></answer>.

#ifndef TOOLCALL_MODEL_WIRE_H_
#define TOOLCALL_MODEL_WIRE_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "toolcall/model/conversation.h"

namespace toolcall {

// Throws Error(kMalformedRecord) or Error(kRoleOrderViolation).
Conversation parse_conversation(const Json& record);
Conversation parse_conversation(std::string_view line);

// Precondition: validate_conversation(conv) passes; otherwise throws
// Error(kInvalidArgument).
Json serialize_conversation(const Conversation& conv);

// Records without an id get "<file stem>-<line number>".
std::vector<Conversation> load_conversations(const std::filesystem::path& path);
std::string dump_conversations(const std::vector<Conversation>& convs);

// Text between the first <answer> and the last </answer>, verbatim; the
// whole value when no answer tag is present.
std::string extract_answer_text(std::string_view value);
std::string wrap_answer(std::string_view text);

}  // namespace toolcall

#endif  // TOOLCALL_MODEL_WIRE_H_
