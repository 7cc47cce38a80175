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

#ifndef TOOLCALL_PROVIDERS_HTTP_H_
#define TOOLCALL_PROVIDERS_HTTP_H_

#include <chrono>
#include <functional>
#include <string>

#include "toolcall/providers/chat.h"
#include "toolcall/providers/embedder.h"

namespace toolcall {

// Endpoint, credential, and model for one provider role.
struct ProviderSettings {
  std::string base_url;  // e.g. https://host/v1
  std::string api_key;
  std::string model;

  bool configured() const { return !base_url.empty() && !model.empty(); }
};

// Reads <prefix>_URL, <prefix>_KEY, <prefix>_MODEL; unset variables leave
// the field empty.
ProviderSettings settings_from_env(const std::string& prefix);

struct RetryPolicy {
  std::chrono::milliseconds initial_delay{1000};
  double factor = 2.0;
  int max_attempts = 5;
};

using Sleeper = std::function<void(std::chrono::milliseconds)>;
Sleeper real_sleeper();

struct HttpOptions {
  RetryPolicy retry;
  Sleeper sleeper;  // real_sleeper() when empty
  std::chrono::seconds connect_timeout{10};
  std::chrono::seconds read_timeout{120};
};

// Chat-completions client for the common OpenAI-style HTTP shape.
class HttpChatProvider : public ChatProvider {
 public:
  HttpChatProvider(ProviderSettings settings, HttpOptions options = {});
  ChatResponse chat(const ChatRequest& request) override;

 private:
  ProviderSettings settings_;
  HttpOptions options_;
};

// Embeddings client for the same HTTP shape.
class HttpEmbedder : public Embedder {
 public:
  HttpEmbedder(ProviderSettings settings, HttpOptions options = {});
  std::vector<Vector> embed_batch(std::span<const std::string> texts) override;

 private:
  ProviderSettings settings_;
  HttpOptions options_;
};

}  // namespace toolcall

#endif  // TOOLCALL_PROVIDERS_HTTP_H_
