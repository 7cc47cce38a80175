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

#include "toolcall/providers/chat.h"

#include <memory>

#include "toolcall/error.h"

namespace toolcall {

Json exchange_to_json(const ChatExchange& exchange) {
  Json messages = Json::array();
  for (const ChatMessage& m : exchange.request.messages) {
    messages.push_back({{"role", m.role}, {"content", m.content}});
  }
  Json request = {{"system", exchange.request.system}, {"messages", messages}};
  if (exchange.request.params.temperature) {
    request["temperature"] = *exchange.request.params.temperature;
  }
  if (exchange.request.params.max_tokens) {
    request["max_tokens"] = *exchange.request.params.max_tokens;
  }
  return {{"request", request},
          {"response",
           {{"text", exchange.response.text},
            {"finish_reason", exchange.response.finish_reason}}},
          {"attempts", exchange.response.attempts},
          {"latency_ms", exchange.response.latency_ms}};
}

void check_request(const ChatRequest& request) {
  if (request.system.empty() && request.messages.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "chat request is empty");
  }
}

ScriptedChatProvider::ScriptedChatProvider(std::vector<std::string> responses)
    : responses_(std::move(responses)) {}

std::unique_ptr<ScriptedChatProvider> ScriptedChatProvider::load(
    const std::filesystem::path& path) {
  const std::string text = read_file(path);
  std::vector<std::string> out;
  Json whole = Json::parse(text, nullptr, false);
  if (!whole.is_discarded() && whole.is_array()) {
    for (const Json& item : whole) {
      if (!item.is_string()) {
        throw Error(ErrorCode::kParseError,
                    path.string() + ": script entries must be strings");
      }
      out.push_back(item.get<std::string>());
    }
    return std::make_unique<ScriptedChatProvider>(std::move(out));
  }
  for (const Line& line : read_lines(path)) {
    Json j = Json::parse(line.text, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("response") ||
        !j["response"].is_string()) {
      throw Error(ErrorCode::kParseError,
                  path.string() + ":" + std::to_string(line.number) +
                      ": expected {\"response\": \"...\"}");
    }
    out.push_back(j["response"].get<std::string>());
  }
  return std::make_unique<ScriptedChatProvider>(std::move(out));
}

ChatResponse ScriptedChatProvider::chat(const ChatRequest& request) {
  check_request(request);
  std::lock_guard<std::mutex> lock(mu_);
  if (next_ >= responses_.size()) {
    throw Error(ErrorCode::kProviderError,
                "scripted transcript exhausted after " +
                    std::to_string(responses_.size()) + " responses");
  }
  ChatResponse r;
  r.text = responses_[next_++];
  r.finish_reason = "stop";
  return r;
}

size_t ScriptedChatProvider::calls() const {
  std::lock_guard<std::mutex> lock(mu_);
  return next_;
}

}  // namespace toolcall
