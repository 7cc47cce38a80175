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

#include "toolcall/model/response.h"

#include <exception>

#include "toolcall/error.h"
#include "toolcall/util/text.h"

namespace toolcall {
namespace {

constexpr std::string_view kCallOpen = "<tool_call>";
constexpr std::string_view kCallClose = "</tool_call>";
constexpr std::string_view kAnswerOpen = "<answer>";
constexpr std::string_view kAnswerClose = "</answer>";

void parse_call_payload(std::string_view payload, size_t block,
                        ParsedResponse& out) {
  const std::string prefix = "tool_call block " + std::to_string(block) + ": ";
  Json j = Json::parse(trim(payload), nullptr, false);
  if (j.is_discarded()) {
    out.parse_errors.push_back(prefix + "payload is not valid JSON");
    return;
  }
  try {
    out.calls.push_back(call_from_json(j));
  } catch (const std::exception& e) {
    out.parse_errors.push_back(prefix + e.what());
  }
}

}  // namespace

bool ParsedResponse::well_formed() const {
  const bool has_answer = answer.has_value() && !answer->empty();
  return parse_errors.empty() && (calls.empty() != !has_answer);
}

ParsedResponse parse_model_response(std::string_view text) {
  ParsedResponse out;
  size_t pos = 0;
  size_t block = 0;
  while (true) {
    const size_t open = text.find(kCallOpen, pos);
    if (open == std::string_view::npos) break;
    const size_t start = open + kCallOpen.size();
    const size_t close = text.find(kCallClose, start);
    // A nested opener before the closer means this block was cut short.
    const size_t next_open = text.find(kCallOpen, start);
    if (close == std::string_view::npos ||
        (next_open != std::string_view::npos && next_open < close)) {
      out.parse_errors.push_back("tool_call block " + std::to_string(block) +
                                 ": missing </tool_call>");
      if (next_open == std::string_view::npos) break;
      pos = next_open;
      ++block;
      continue;
    }
    parse_call_payload(text.substr(start, close - start), block, out);
    pos = close + kCallClose.size();
    ++block;
  }

  const size_t aopen = text.find(kAnswerOpen);
  if (aopen != std::string_view::npos) {
    const size_t start = aopen + kAnswerOpen.size();
    const size_t close = text.find(kAnswerClose, start);
    if (close == std::string_view::npos) {
      out.parse_errors.push_back("answer block: missing </answer>");
      out.answer = std::string(trim(text.substr(start)));
    } else {
      out.answer = std::string(trim(text.substr(start, close - start)));
    }
  }
  if (!out.calls.empty() && out.answer && !out.answer->empty()) {
    out.parse_errors.push_back(
        "response contains both a function call and an answer");
  }
  return out;
}

}  // namespace toolcall
