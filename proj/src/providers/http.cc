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

#include "toolcall/providers/http.h"

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <cstdlib>
#include <thread>

#include "toolcall/error.h"

namespace toolcall {
namespace {

struct Endpoint {
  std::string origin;  // scheme://host[:port]
  std::string path;    // prefix without trailing slash
};

Endpoint split_url(const std::string& url) {
  const size_t scheme = url.find("://");
  if (scheme == std::string::npos) {
    throw Error(ErrorCode::kConfigError, "provider URL lacks a scheme: " + url);
  }
  const size_t slash = url.find('/', scheme + 3);
  Endpoint e;
  e.origin = url.substr(0, slash);
  e.path = slash == std::string::npos ? "" : url.substr(slash);
  while (!e.path.empty() && e.path.back() == '/') e.path.pop_back();
  return e;
}

bool retryable_status(int status) {
  return status == 408 || status == 409 || status == 429 || status >= 500;
}

// POSTs `body` with retries on transport failures and retryable statuses.
// Returns the response body and the number of attempts made.
std::pair<std::string, int> post_json(const ProviderSettings& settings,
                                      const HttpOptions& options,
                                      const std::string& route,
                                      const std::string& body) {
  const Endpoint ep = split_url(settings.base_url);
  const Sleeper sleep = options.sleeper ? options.sleeper : real_sleeper();
  httplib::Headers headers;
  if (!settings.api_key.empty()) {
    headers.emplace("Authorization", "Bearer " + settings.api_key);
  }
  const int max_attempts = std::max(1, options.retry.max_attempts);
  double delay_ms = static_cast<double>(options.retry.initial_delay.count());
  std::string last_error;
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    httplib::Client client(ep.origin);
    client.set_connection_timeout(options.connect_timeout);
    client.set_read_timeout(options.read_timeout);
    auto res = client.Post(ep.path + route, headers, body, "application/json");
    if (res) {
      if (res->status == 401 || res->status == 403) {
        throw Error(ErrorCode::kAuthError,
                    "provider rejected credentials (HTTP " +
                        std::to_string(res->status) + ")");
      }
      if (res->status >= 200 && res->status < 300) {
        return {res->body, attempt};
      }
      last_error = "HTTP " + std::to_string(res->status);
      if (!retryable_status(res->status)) {
        throw Error(ErrorCode::kProviderError,
                    last_error + ": " + res->body.substr(0, 500));
      }
    } else {
      last_error = httplib::to_string(res.error());
    }
    if (attempt < max_attempts) {
      sleep(std::chrono::milliseconds(static_cast<int64_t>(delay_ms)));
      delay_ms *= options.retry.factor;
    }
  }
  throw Error(ErrorCode::kProviderError,
              "giving up after " + std::to_string(max_attempts) +
                  " attempts: " + last_error);
}

Json parse_body(const std::string& body) {
  Json j = Json::parse(body, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw Error(ErrorCode::kProviderError, "provider returned non-JSON body");
  }
  return j;
}

}  // namespace

ProviderSettings settings_from_env(const std::string& prefix) {
  auto get = [&](const char* suffix) {
    const char* v = std::getenv((prefix + suffix).c_str());
    return v ? std::string(v) : std::string();
  };
  return {get("_URL"), get("_KEY"), get("_MODEL")};
}

Sleeper real_sleeper() {
  return [](std::chrono::milliseconds d) { std::this_thread::sleep_for(d); };
}

HttpChatProvider::HttpChatProvider(ProviderSettings settings,
                                   HttpOptions options)
    : settings_(std::move(settings)), options_(std::move(options)) {}

ChatResponse HttpChatProvider::chat(const ChatRequest& request) {
  check_request(request);
  Json messages = Json::array();
  if (!request.system.empty()) {
    messages.push_back({{"role", "system"}, {"content", request.system}});
  }
  for (const ChatMessage& m : request.messages) {
    messages.push_back({{"role", m.role}, {"content", m.content}});
  }
  Json body = {{"model", settings_.model}, {"messages", messages}};
  if (request.params.temperature) body["temperature"] = *request.params.temperature;
  if (request.params.max_tokens) body["max_tokens"] = *request.params.max_tokens;

  const auto start = std::chrono::steady_clock::now();
  auto [text, attempts] =
      post_json(settings_, options_, "/chat/completions", body.dump());
  const Json j = parse_body(text);
  const auto choices = j.find("choices");
  if (choices == j.end() || !choices->is_array() || choices->empty()) {
    throw Error(ErrorCode::kProviderError, "chat response has no choices");
  }
  const Json& choice = (*choices)[0];
  ChatResponse r;
  const Json content = choice.value("message", Json::object()).value("content", Json());
  r.text = content.is_string() ? content.get<std::string>() : std::string();
  const Json finish = choice.value("finish_reason", Json());
  r.finish_reason = finish.is_string() ? finish.get<std::string>() : "";
  r.attempts = attempts;
  r.latency_ms = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  return r;
}

HttpEmbedder::HttpEmbedder(ProviderSettings settings, HttpOptions options)
    : settings_(std::move(settings)), options_(std::move(options)) {}

std::vector<Vector> HttpEmbedder::embed_batch(
    std::span<const std::string> texts) {
  Json body = {{"model", settings_.model},
               {"input", std::vector<std::string>(texts.begin(), texts.end())}};
  const Json j =
      parse_body(post_json(settings_, options_, "/embeddings", body.dump()).first);
  const auto data = j.find("data");
  if (data == j.end() || !data->is_array() || data->size() != texts.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "embedding response does not hold one vector per input");
  }
  std::vector<Vector> out(texts.size());
  for (size_t i = 0; i < data->size(); ++i) {
    const Json& item = (*data)[i];
    const size_t index = item.value("index", i);
    if (index >= out.size() || !item.contains("embedding")) {
      throw Error(ErrorCode::kProviderError, "malformed embedding item");
    }
    out[index] = item["embedding"].get<Vector>();
  }
  return out;
}

}  // namespace toolcall
