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

#ifndef TOOLCALL_PROVIDERS_CHAT_H_
#define TOOLCALL_PROVIDERS_CHAT_H_

#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "toolcall/util/io.h"

namespace toolcall {

struct ChatMessage {
  std::string role;  // "user" or "assistant"
  std::string content;
};

struct DecodingParams {
  std::optional<double> temperature;
  std::optional<int> max_tokens;
};

struct ChatRequest {
  std::string system;
  std::vector<ChatMessage> messages;
  DecodingParams params;
  // Structured description of what is being asked. Never sent over the
  // wire; offline simulators read it instead of parsing prompt text.
  Json context = Json::object();
};

struct ChatResponse {
  std::string text;
  std::string finish_reason;
  int attempts = 1;
  double latency_ms = 0.0;
};

// One request/response pair as recorded in a generation log.
struct ChatExchange {
  ChatRequest request;
  ChatResponse response;
};

Json exchange_to_json(const ChatExchange& exchange);

// Implementations must be safe to call from several threads at once.
class ChatProvider {
 public:
  virtual ~ChatProvider() = default;
  // Throws Error(kProviderError) once retries are exhausted and
  // Error(kAuthError) for rejected credentials.
  virtual ChatResponse chat(const ChatRequest& request) = 0;
};

// Throws Error(kInvalidArgument) for a request with no system text and no
// messages.
void check_request(const ChatRequest& request);

// Replays canned responses in order. Running past the end is a provider
// error.
class ScriptedChatProvider : public ChatProvider {
 public:
  explicit ScriptedChatProvider(std::vector<std::string> responses);
  // A JSON array of strings, or one {"response": "..."} object per line.
  static std::unique_ptr<ScriptedChatProvider> load(const std::filesystem::path& path);

  ChatResponse chat(const ChatRequest& request) override;
  size_t calls() const;

 private:
  mutable std::mutex mu_;
  std::vector<std::string> responses_;
  size_t next_ = 0;
};

}  // namespace toolcall

#endif  // TOOLCALL_PROVIDERS_CHAT_H_
