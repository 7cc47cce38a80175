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

#include "toolcall/model/wire.h"

#include "toolcall/error.h"
#include "toolcall/util/text.h"

namespace toolcall {
namespace {

constexpr std::string_view kAnswerOpen = "<answer>";
constexpr std::string_view kAnswerClose = "</answer>";

const Json& require(const Json& record, const char* key, Json::value_t type) {
  auto it = record.find(key);
  if (it == record.end()) {
    throw Error(ErrorCode::kMalformedRecord,
                std::string("record has no '") + key + "' field");
  }
  if (it->type() != type) {
    throw Error(ErrorCode::kMalformedRecord,
                std::string("record field '") + key + "' has the wrong type");
  }
  return *it;
}

Event parse_event(const Json& message, size_t index) {
  auto fail = [index](const std::string& what) {
    throw Error(ErrorCode::kMalformedRecord,
                "event " + std::to_string(index) + ": " + what);
  };
  if (!message.is_object()) fail("message is not an object");
  auto from = message.find("from");
  auto value = message.find("value");
  if (from == message.end() || !from->is_string()) fail("message has no role");
  if (value == message.end()) fail("message has no value");
  std::string text;
  if (value->is_string()) {
    text = value->get<std::string>();
  } else if (!value->is_null()) {
    text = value->dump();
  }

  const std::string& role = from->get_ref<const std::string&>();
  if (role == "human") return Query{std::move(text)};
  if (role == "observation") return Observation{std::move(text)};
  if (role == "gpt") return Answer{extract_answer_text(text)};
  if (role == "function_call") {
    Json obj = value->is_object() ? *value : Json::parse(text, nullptr, false);
    if (obj.is_discarded()) fail("function_call value is not an encoded object");
    try {
      return Action{call_from_json(obj)};
    } catch (const Error& e) {
      fail(e.what());
    }
  }
  fail("unknown role '" + role + "'");
  return Query{};  // unreachable
}

}  // namespace

std::string extract_answer_text(std::string_view value) {
  const size_t open = value.find(kAnswerOpen);
  if (open == std::string_view::npos) return std::string(value);
  const size_t start = open + kAnswerOpen.size();
  size_t close = value.rfind(kAnswerClose);
  if (close == std::string_view::npos || close < start) close = value.size();
  return std::string(value.substr(start, close - start));
}

std::string wrap_answer(std::string_view text) {
  std::string out(kAnswerOpen);
  out += text;
  out += kAnswerClose;
  return out;
}

Conversation parse_conversation(const Json& record) {
  if (!record.is_object()) {
    throw Error(ErrorCode::kMalformedRecord, "record is not an object");
  }
  const Json& messages =
      require(record, "conversations", Json::value_t::array);
  const Json& system = require(record, "system", Json::value_t::string);
  const Json& tools = require(record, "tools", Json::value_t::string);
  if (messages.empty()) {
    throw Error(ErrorCode::kMalformedRecord, "conversations list is empty");
  }

  Conversation conv;
  conv.system_prompt = system.get<std::string>();
  if (auto id = record.find("id"); id != record.end()) {
    conv.id = id->is_string() ? id->get<std::string>() : id->dump();
  }
  if (auto src = record.find("source"); src != record.end() && src->is_string()) {
    conv.source = src->get<std::string>();
  }
  conv.events.reserve(messages.size());
  for (size_t i = 0; i < messages.size(); ++i) {
    conv.events.push_back(parse_event(messages[i], i));
  }
  conv.tools = tools_from_string(tools.get_ref<const std::string&>());
  validate_conversation(conv);
  return conv;
}

Conversation parse_conversation(std::string_view line) {
  Json record = Json::parse(line, nullptr, false);
  if (record.is_discarded()) {
    throw Error(ErrorCode::kMalformedRecord, "record is not valid JSON");
  }
  return parse_conversation(record);
}

Json serialize_conversation(const Conversation& conv) {
  try {
    validate_conversation(conv);
  } catch (const Error& e) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("cannot serialize invalid conversation: ") +
                    e.what());
  }
  Json messages = Json::array();
  for (const Event& e : conv.events) {
    Json m = Json::object();
    if (const auto* q = std::get_if<Query>(&e)) {
      m["from"] = "human";
      m["value"] = q->text;
    } else if (const auto* a = std::get_if<Action>(&e)) {
      m["from"] = "function_call";
      m["value"] = call_to_json(a->call).dump();
    } else if (const auto* o = std::get_if<Observation>(&e)) {
      m["from"] = "observation";
      m["value"] = o->text;
    } else {
      m["from"] = "gpt";
      m["value"] = wrap_answer(std::get<Answer>(e).text);
    }
    messages.push_back(std::move(m));
  }
  Json record = Json::object();
  record["conversations"] = std::move(messages);
  record["system"] = conv.system_prompt;
  record["tools"] = tools_to_string(conv.tools);
  if (!conv.id.empty()) record["id"] = conv.id;
  if (!conv.source.empty()) record["source"] = conv.source;
  return record;
}

std::vector<Conversation> load_conversations(
    const std::filesystem::path& path) {
  std::vector<Conversation> out;
  const std::string stem = path.stem().string();
  for (const Line& line : read_lines(path)) {
    try {
      Conversation c = parse_conversation(std::string_view(line.text));
      if (c.id.empty()) c.id = stem + "-" + std::to_string(line.number);
      out.push_back(std::move(c));
    } catch (const Error& e) {
      throw Error(e.code(), path.string() + ":" +
                                std::to_string(line.number) + ": " + e.what());
    }
  }
  return out;
}

std::string dump_conversations(const std::vector<Conversation>& convs) {
  std::string out;
  for (const Conversation& c : convs) {
    out += serialize_conversation(c).dump();
    out += '\n';
  }
  return out;
}

}  // namespace toolcall
