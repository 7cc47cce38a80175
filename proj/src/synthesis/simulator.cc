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

#include "toolcall/synthesis/simulator.h"

#include <string>

#include "toolcall/error.h"
#include "toolcall/model/tool_spec.h"
#include "toolcall/util/rng.h"
#include "toolcall/util/text.h"

namespace toolcall {
namespace {

// Argument words. None is a substring of another simulated value, so the
// simulated trajectories never create accidental dependencies.
constexpr const char* kWords[] = {"Lisbon", "Oslo",  "Nairobi", "Quito",
                                  "Hanoi",  "Dakar", "Lima",    "Riga",
                                  "Accra",  "Perth", "Bergen",  "Cusco"};

std::string type_of(const Schema& s) {
  return s.type ? to_lower(*s.type) : "string";
}

Json sample_value(const Schema& s, SeededRng& rng) {
  const std::string t = type_of(s);
  if (t == "integer" || t == "int") {
    return static_cast<int64_t>(100 + rng.uniform_index(900));
  }
  if (t == "number" || t == "float" || t == "double") {
    return 100.5 + static_cast<double>(rng.uniform_index(900));
  }
  if (t == "boolean" || t == "bool") return true;
  if (t == "array" || t == "list") {
    return Json::array({kWords[rng.uniform_index(std::size(kWords))]});
  }
  if (t == "object" || t == "dict") return Json::object();
  return kWords[rng.uniform_index(std::size(kWords))];
}

// Puts `ref` into the first argument able to carry a text or numeric value.
void carry_reference(const Schema& schema, const std::string& ref,
                     Json& args) {
  for (const SchemaProperty& p : schema.properties) {
    const std::string t = type_of(p.schema);
    if (t == "integer" || t == "int" || t == "number" || t == "float" ||
        t == "double") {
      args[p.name] = std::stoll(ref);
      return;
    }
    if (t == "array" || t == "list") {
      args[p.name] = Json::array({ref});
      return;
    }
    if (t == "string" || t == "str" || !p.schema.type) {
      args[p.name] = ref;
      return;
    }
  }
}

struct SimCall {
  Json call;
  std::string observation;
  std::string reference;
};

SimCall simulate_call(const Json& tool_json, SeededRng& rng,
                      const std::string& carried = "") {
  const ToolSpec tool = tool_from_json(tool_json);
  Json args = Json::object();
  if (tool.input_schema) {
    for (const SchemaProperty& p : tool.input_schema->properties) {
      args[p.name] = sample_value(p.schema, rng);
    }
    if (!carried.empty()) carry_reference(*tool.input_schema, carried, args);
  }
  SimCall out;
  out.reference = std::to_string(100000 + rng.uniform_index(900000));
  out.observation =
      Json{{"reference_id", out.reference}, {"status", "completed"}}.dump();
  out.call = {{"name", tool.name}, {"arguments", std::move(args)}};
  return out;
}

std::string describe(const Json& call) {
  std::string s = call["name"].get<std::string>();
  const Json& args = call["arguments"];
  if (args.empty()) return s;
  s += " with";
  bool first = true;
  for (auto it = args.begin(); it != args.end(); ++it) {
    if (it->is_boolean() || it->is_object()) continue;
    s += first ? " " : ", ";
    first = false;
    s += it.key() + " " +
         (it->is_string()  ? it->get<std::string>()
          : it->is_array() ? (*it)[0].get<std::string>()
                           : it->dump());
  }
  return s;
}

Json simulate(const Json& ctx) {
  const std::string task = ctx.value("task", "");
  const uint64_t seed = ctx.value("seed", uint64_t{0});
  const size_t step = ctx.value("step", size_t{0});
  const size_t turn = ctx.value("turn", size_t{0});
  SeededRng rng(derive_seed(seed, step * 16 + turn));
  const Json& tools = ctx.at("tools");

  if (task == "single_hop") {
    SimCall c = simulate_call(tools.at(0), rng);
    return {{"query", "Please run " + describe(c.call) + "."},
            {"call", c.call},
            {"observation", c.observation},
            {"answer", "Done, the reference is " + c.reference + "."}};
  }
  if (task == "serial_step") {
    const size_t steps = ctx.at("steps").get<size_t>();
    const Json& history = ctx.at("history");
    std::string carried;
    if (!history.empty()) {
      const Json prev = Json::parse(
          history.back().at("observation").get<std::string>());
      carried = prev.at("reference_id").get<std::string>();
    }
    SimCall c = simulate_call(tools.at((step - 1) % tools.size()), rng,
                              carried);
    Json reply = {{"call", c.call}, {"observation", c.observation}};
    if (step == 1) {
      reply["query"] = "Start with " + describe(c.call) +
                       ", then feed each result into the next tool.";
    }
    if (step == steps) {
      reply["answer"] = "All steps finished; last reference " + c.reference +
                        ".";
    }
    return reply;
  }
  if (task == "parallel") {
    const size_t steps = ctx.at("steps").get<size_t>();
    Json calls = Json::array();
    std::string query = "Independently run";
    for (size_t i = 0; i < steps; ++i) {
      SimCall c = simulate_call(tools.at(i), rng);
      query += (i ? "; " : " ") + describe(c.call);
      Json entry = c.call;
      entry["observation"] = c.observation;
      calls.push_back(std::move(entry));
    }
    return {{"query", query + "."},
            {"calls", std::move(calls)},
            {"answer", "Each request completed."}};
  }
  if (task == "storyline") {
    const size_t turns = ctx.at("turns").get<size_t>();
    Json intents = Json::array();
    for (size_t t = 1; t <= turns; ++t) {
      intents.push_back("Carry out stage " + std::to_string(t) +
                        " of the plan");
    }
    return {{"storyline", "A user completes a multi-stage errand."},
            {"intents", std::move(intents)}};
  }
  if (task == "turn") {
    SimCall c = simulate_call(tools.at(rng.uniform_index(tools.size())), rng);
    std::string query =
        ctx.at("intent").get<std::string>() + ": " + describe(c.call) + ".";
    const Json& anchors = ctx.at("anchors");
    if (!anchors.empty()) {
      query += " Use reference " + anchors[0].get<std::string>() + ".";
    }
    Json step_entry = c.call;
    step_entry["observation"] = c.observation;
    return {{"query", query},
            {"steps", Json::array({std::move(step_entry)})},
            {"answer", "Stage done, reference " + c.reference + "."}};
  }
  throw Error(ErrorCode::kProviderError,
              "simulated generator cannot handle task '" + task + "'");
}

}  // namespace

ChatResponse SimulatedGenerator::chat(const ChatRequest& request) {
  check_request(request);
  ++calls_;
  ChatResponse r;
  r.text = simulate(request.context).dump();
  r.finish_reason = "stop";
  return r;
}

ChatResponse SimulatedJudge::chat(const ChatRequest& request) {
  check_request(request);
  ++calls_;
  Json scores = {{"tool_fit", score_},  {"clarity", score_},
                 {"naturalness", score_}, {"success", score_},
                 {"grounding", score_}, {"efficiency", score_}};
  if (request.context.value("multi_turn", false)) scores["anchor"] = score_;
  ChatResponse r;
  r.text = scores.dump();
  r.finish_reason = "stop";
  return r;
}

}  // namespace toolcall
