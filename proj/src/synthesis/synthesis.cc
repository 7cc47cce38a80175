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

#include "toolcall/synthesis/synthesis.h"

#include <algorithm>
#include <set>

#include "toolcall/error.h"
#include "toolcall/model/value_tokens.h"
#include "toolcall/model/wire.h"
#include "toolcall/synthesis/prompts.h"
#include "toolcall/util/rng.h"
#include "toolcall/util/text.h"

namespace toolcall {
namespace {

constexpr std::pair<Scenario, std::string_view> kScenarioNames[] = {
    {Scenario::kSingleHop, "sh"},
    {Scenario::kMultiHopSerial, "mh-serial"},
    {Scenario::kMultiHopParallel, "mh-parallel"},
    {Scenario::kMultiTurn, "mt"},
};

std::vector<ToolSpec> unique_by_name(const std::vector<ToolSpec>& pool) {
  std::vector<ToolSpec> out;
  std::set<std::string> seen;
  for (const ToolSpec& t : pool) {
    if (seen.insert(t.name).second) out.push_back(t);
  }
  return out;
}

const ToolSpec* find_tool(const std::vector<ToolSpec>& tools,
                          std::string_view name) {
  for (const ToolSpec& t : tools) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

bool type_matches(std::string_view declared, const Json& v) {
  const std::string t = to_lower(declared);
  if (t == "string" || t == "str") return v.is_string();
  if (t == "integer" || t == "int") return v.is_number_integer();
  if (t == "number" || t == "float" || t == "double") return v.is_number();
  if (t == "boolean" || t == "bool") return v.is_boolean();
  if (t == "array" || t == "list") return v.is_array();
  if (t == "object" || t == "dict") return v.is_object();
  if (t == "null") return v.is_null();
  return true;  // unrecognised type names are not enforced
}

bool allows_additional(const Schema& s) {
  auto it = s.extras.find("additionalProperties");
  return it != s.extras.end() && (it->is_object() ||
                                  (it->is_boolean() && it->get<bool>()));
}

[[noreturn]] void schema_error(const std::string& msg) {
  throw Error(ErrorCode::kSchemaViolation, msg);
}

std::string required_string(const Json& reply, const char* key) {
  auto it = reply.find(key);
  if (it == reply.end() || !it->is_string() ||
      trim(it->get<std::string>()).empty()) {
    schema_error(std::string("reply has no non-empty string '") + key + "'");
  }
  return it->get<std::string>();
}

std::string observation_text(const Json& node) {
  if (node.is_string()) return node.get<std::string>();
  return node.dump();
}

std::string required_observation(const Json& reply) {
  auto it = reply.find("observation");
  if (it == reply.end() || it->is_null()) {
    schema_error("reply has no 'observation'");
  }
  return observation_text(*it);
}

FunctionCall parse_call(const Json& node) {
  try {
    return call_from_json(node);
  } catch (const Error& e) {
    schema_error("malformed call: " + e.message());
  }
}

Json tools_json(const std::vector<ToolSpec>& tools) {
  Json out = Json::array();
  for (const ToolSpec& t : tools) out.push_back(tool_to_json(t));
  return out;
}

ChatRequest make_request(const std::string& user, Json context,
                         const GenerationContext& ctx) {
  ChatRequest req;
  req.system = std::string(prompt_template("gen_system"));
  req.messages.push_back({"user", user});
  context["seed"] = ctx.seed;
  context["attempt"] = ctx.attempt;
  req.context = std::move(context);
  return req;
}

std::string feedback_text(const GenerationContext& ctx) {
  if (ctx.feedback.empty()) return "";
  return "\nThe previous attempt was rejected: " + ctx.feedback +
         "\nFix this problem in the new sample.\n";
}

Json ask(ChatProvider& chat, ChatRequest req, TrajectoryDraft& draft) {
  ChatResponse resp = chat.chat(req);
  draft.generation_log.push_back({std::move(req), resp});
  return parse_generator_reply(resp.text);
}

Json step_json(const FunctionCall& call, const std::string& observation) {
  Json j = call_to_json(call);
  j["observation"] = observation;
  return j;
}

std::string history_text(const Json& history) {
  return history.empty() ? "(none)" : history.dump(2);
}

void require_subset_size(const std::vector<ToolSpec>& subset, size_t lo,
                         size_t hi) {
  if (subset.size() < lo || subset.size() > hi) {
    throw Error(ErrorCode::kInvalidArgument,
                "subset has " + std::to_string(subset.size()) +
                    " tools; expected " + std::to_string(lo) +
                    (lo == hi ? "" : " to " + std::to_string(hi)));
  }
}

}  // namespace

std::string_view to_string(Scenario s) {
  for (const auto& [v, name] : kScenarioNames) {
    if (v == s) return name;
  }
  return "unknown";
}

std::optional<Scenario> parse_scenario(std::string_view s) {
  for (const auto& [v, name] : kScenarioNames) {
    if (name == s) return v;
  }
  return std::nullopt;
}

void validate_task(const GenerationTask& task) {
  if (task.max_retries < 1) {
    throw Error(ErrorCode::kInvalidArgument, "max_retries must be >= 1");
  }
  switch (task.scenario) {
    case Scenario::kSingleHop:
      require_subset_size(task.tools, 1, 1);
      break;
    case Scenario::kMultiHopSerial:
    case Scenario::kMultiHopParallel: {
      require_subset_size(task.tools, kMinHopTools, kMaxHopTools);
      const size_t k = task.effective_steps();
      if (k < 2) throw Error(ErrorCode::kInvalidArgument, "K must be >= 2");
      if (task.scenario == Scenario::kMultiHopParallel &&
          k > task.tools.size()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "parallel K exceeds the subset size");
      }
      break;
    }
    case Scenario::kMultiTurn:
      require_subset_size(task.tools, kMultiTurnTools, kMultiTurnTools);
      if (task.turns < kMinTurns || task.turns > kMaxTurns) {
        throw Error(ErrorCode::kInvalidArgument,
                    "T must be in [2, 4], got " + std::to_string(task.turns));
      }
      break;
  }
}

size_t UsageCounter::count(const std::string& tool_name) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = counts_.find(tool_name);
  return it == counts_.end() ? 0 : it->second;
}

std::vector<ToolSpec> sample_tool_subset(const std::vector<ToolSpec>& pool,
                                         Scenario scenario, uint64_t seed,
                                         UsageCounter* usage) {
  const std::vector<ToolSpec> tools = unique_by_name(pool);
  SeededRng rng(seed);
  switch (scenario) {
    case Scenario::kSingleHop:
      if (tools.empty()) throw Error(ErrorCode::kPoolTooSmall, "empty pool");
      return {tools[rng.uniform_index(tools.size())]};

    case Scenario::kMultiHopSerial:
    case Scenario::kMultiHopParallel: {
      if (tools.size() < kMinHopTools) {
        throw Error(ErrorCode::kPoolTooSmall,
                    "multi-hop needs at least 2 tools");
      }
      std::vector<std::vector<size_t>> eligible;
      for (Domain d : kAllDomains) {
        std::vector<size_t> members;
        for (size_t i = 0; i < tools.size(); ++i) {
          if (tools[i].domain == d) members.push_back(i);
        }
        if (members.size() >= kMinHopTools) eligible.push_back(members);
      }
      if (eligible.empty()) {
        throw Error(ErrorCode::kNoDomainWithEnoughTools,
                    "no domain has two or more tools");
      }
      const auto& members = eligible[rng.uniform_index(eligible.size())];
      // Target size is uniform in [2, 5], capped by the domain's size.
      const size_t target =
          kMinHopTools + rng.uniform_index(kMaxHopTools - kMinHopTools + 1);
      const size_t size = std::min(target, members.size());
      std::vector<ToolSpec> out;
      for (size_t i : rng.sample_indices(members.size(), size)) {
        out.push_back(tools[members[i]]);
      }
      return out;
    }

    case Scenario::kMultiTurn: {
      if (tools.size() < kMultiTurnTools) {
        throw Error(ErrorCode::kPoolTooSmall,
                    "multi-turn needs at least 10 tools, pool has " +
                        std::to_string(tools.size()));
      }
      UsageCounter local;
      UsageCounter& counter = usage ? *usage : local;
      std::lock_guard<std::mutex> lock(counter.mu_);
      std::vector<size_t> remaining(tools.size());
      for (size_t i = 0; i < tools.size(); ++i) remaining[i] = i;
      std::vector<ToolSpec> out;
      while (out.size() < kMultiTurnTools) {
        std::vector<double> weights;
        double total = 0.0;
        for (size_t i : remaining) {
          auto it = counter.counts_.find(tools[i].name);
          const double uses = it == counter.counts_.end() ? 0.0 : it->second;
          weights.push_back(1.0 / (1.0 + uses));
          total += weights.back();
        }
        const double r = rng.uniform_real() * total;
        size_t pick = remaining.size() - 1;
        double acc = 0.0;
        for (size_t j = 0; j < remaining.size(); ++j) {
          acc += weights[j];
          if (r < acc) {
            pick = j;
            break;
          }
        }
        out.push_back(tools[remaining[pick]]);
        remaining.erase(remaining.begin() + static_cast<long>(pick));
      }
      for (const ToolSpec& t : out) ++counter.counts_[t.name];
      return out;
    }
  }
  throw Error(ErrorCode::kInternal, "unknown scenario");
}

Json draft_to_json(const TrajectoryDraft& draft) {
  Json anchors = Json::array();
  for (const auto& turn : draft.anchors) {
    Json links = Json::array();
    for (const AnchorLink& a : turn) {
      links.push_back({{"value", a.value},
                       {"observation_event", a.observation_event},
                       {"query_event", a.query_event}});
    }
    anchors.push_back(std::move(links));
  }
  Json log = Json::array();
  for (const ChatExchange& e : draft.generation_log) {
    log.push_back(exchange_to_json(e));
  }
  Json out = {{"scenario", to_string(draft.scenario)},
              {"conversation", serialize_conversation(draft.conversation)},
              {"anchors", std::move(anchors)},
              {"generation_log", std::move(log)}};
  if (!draft.storyline.empty()) out["storyline"] = draft.storyline;
  return out;
}

void validate_call(const FunctionCall& call,
                   const std::vector<ToolSpec>& subset) {
  const ToolSpec* tool = find_tool(subset, call.tool_name);
  if (!tool) {
    schema_error("tool '" + call.tool_name + "' is not in the sampled subset");
  }
  if (!call.arguments.is_object()) {
    schema_error("arguments of '" + call.tool_name + "' are not an object");
  }
  if (!tool->input_schema) return;
  const Schema& schema = *tool->input_schema;
  for (const std::string& req : schema.required) {
    if (!call.arguments.contains(req)) {
      schema_error("missing required argument '" + req + "' for tool '" +
                   call.tool_name + "'");
    }
  }
  for (auto it = call.arguments.begin(); it != call.arguments.end(); ++it) {
    const Schema* prop = schema.find_property(it.key());
    if (!prop) {
      if (schema.has_properties && !allows_additional(schema)) {
        schema_error("unknown argument '" + it.key() + "' for tool '" +
                     call.tool_name + "'");
      }
      continue;
    }
    if (prop->type && !type_matches(*prop->type, it.value())) {
      schema_error("argument '" + it.key() + "' of '" + call.tool_name +
                   "' is not of type " + *prop->type);
    }
  }
}

std::optional<Json> find_json_object(std::string_view text) {
  for (size_t start = text.find('{'); start != std::string_view::npos;
       start = text.find('{', start + 1)) {
    int depth = 0;
    bool in_string = false;
    bool escaped = false;
    for (size_t i = start; i < text.size(); ++i) {
      const char c = text[i];
      if (in_string) {
        if (escaped) {
          escaped = false;
        } else if (c == '\\') {
          escaped = true;
        } else if (c == '"') {
          in_string = false;
        }
        continue;
      }
      if (c == '"') {
        in_string = true;
      } else if (c == '{') {
        ++depth;
      } else if (c == '}' && --depth == 0) {
        Json j = Json::parse(text.substr(start, i - start + 1), nullptr, false);
        if (!j.is_discarded() && j.is_object()) return j;
        break;
      }
    }
  }
  return std::nullopt;
}

Json parse_generator_reply(std::string_view text) {
  std::optional<Json> j = find_json_object(text);
  if (!j) schema_error("generator reply contains no JSON object");
  return *std::move(j);
}

TrajectoryDraft generate_single_hop(const std::vector<ToolSpec>& subset,
                                    ChatProvider& chat,
                                    const GenerationContext& ctx) {
  require_subset_size(subset, 1, 1);
  TrajectoryDraft draft;
  draft.scenario = Scenario::kSingleHop;
  const Json tools = tools_json(subset);
  const std::string prompt =
      render_prompt(prompt_template("gen_single_hop"),
                    {{"tools", tools.dump(2)}, {"feedback", feedback_text(ctx)}});
  const Json reply = ask(
      chat, make_request(prompt, {{"task", "single_hop"}, {"tools", tools}}, ctx),
      draft);

  const std::string query = required_string(reply, "query");
  if (!reply.contains("call")) schema_error("reply has no 'call'");
  FunctionCall call = parse_call(reply["call"]);
  validate_call(call, subset);
  const std::string observation = required_observation(reply);
  const std::string answer = required_string(reply, "answer");

  draft.conversation.tools = subset;
  draft.conversation.events = {Query{query}, Action{std::move(call)},
                               Observation{observation}, Answer{answer}};
  draft.anchors.resize(1);
  return draft;
}

namespace {

TrajectoryDraft generate_serial(const std::vector<ToolSpec>& subset,
                                size_t steps, ChatProvider& chat,
                                const GenerationContext& ctx) {
  TrajectoryDraft draft;
  draft.scenario = Scenario::kMultiHopSerial;
  const Json tools = tools_json(subset);
  std::string query, answer;
  std::vector<FunctionCall> calls;
  std::vector<std::string> observations;
  Json history = Json::array();

  for (size_t k = 1; k <= steps; ++k) {
    const std::string prompt = render_prompt(
        prompt_template("gen_serial_step"),
        {{"tools", tools.dump(2)},
         {"steps", std::to_string(steps)},
         {"step", std::to_string(k)},
         {"history", k == 1 ? "(none)"
                            : "query: " + query + "\n" + history.dump(2)},
         {"feedback", feedback_text(ctx)}});
    Json context = {{"task", "serial_step"}, {"tools", tools},
                    {"step", k},             {"steps", steps},
                    {"query", query},        {"history", history}};
    const Json reply = ask(chat, make_request(prompt, context, ctx), draft);

    if (k == 1) query = required_string(reply, "query");
    if (!reply.contains("call")) schema_error("reply has no 'call'");
    FunctionCall call = parse_call(reply["call"]);
    validate_call(call, subset);
    const std::string observation = required_observation(reply);
    history.push_back(step_json(call, observation));
    calls.push_back(std::move(call));
    observations.push_back(observation);

    if (k >= 2) {
      const TurnLabel label = classify_turn(query, calls, observations);
      if (!label.depends_on_observation[k - 2]) {
        throw Error(ErrorCode::kDependencyViolation,
                    "step " + std::to_string(k) +
                        " uses no value returned by an earlier observation");
      }
    }
    if (k == steps) answer = required_string(reply, "answer");
  }

  if (classify_turn(query, calls, observations).routing != Routing::kSerial) {
    throw Error(ErrorCode::kDependencyViolation,
                "trajectory does not classify as serial");
  }
  draft.conversation.tools = subset;
  draft.conversation.events.push_back(Query{query});
  for (size_t i = 0; i < calls.size(); ++i) {
    draft.conversation.events.push_back(Action{calls[i]});
    draft.conversation.events.push_back(Observation{observations[i]});
  }
  draft.conversation.events.push_back(Answer{answer});
  draft.anchors.resize(1);
  return draft;
}

TrajectoryDraft generate_parallel(const std::vector<ToolSpec>& subset,
                                  size_t steps, ChatProvider& chat,
                                  const GenerationContext& ctx) {
  if (steps > subset.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "parallel K exceeds the subset size");
  }
  TrajectoryDraft draft;
  draft.scenario = Scenario::kMultiHopParallel;
  const Json tools = tools_json(subset);
  const std::string prompt = render_prompt(
      prompt_template("gen_parallel"),
      {{"tools", tools.dump(2)},
       {"steps", std::to_string(steps)},
       {"feedback", feedback_text(ctx)}});
  const Json reply = ask(
      chat,
      make_request(prompt,
                   {{"task", "parallel"}, {"tools", tools}, {"steps", steps}},
                   ctx),
      draft);

  const std::string query = required_string(reply, "query");
  auto it = reply.find("calls");
  if (it == reply.end() || !it->is_array()) {
    schema_error("reply has no 'calls' list");
  }
  if (it->size() != steps) {
    schema_error("expected " + std::to_string(steps) + " calls, got " +
                 std::to_string(it->size()));
  }
  std::vector<FunctionCall> calls;
  std::vector<std::string> observations;
  std::set<std::string> used;
  const std::string lowered_query = to_lower(query);
  for (const Json& node : *it) {
    if (!node.is_object()) schema_error("call entry is not an object");
    FunctionCall call = parse_call(node);
    validate_call(call, subset);
    if (!used.insert(call.tool_name).second) {
      schema_error("tool '" + call.tool_name + "' is called more than once");
    }
    for (const std::string& text : argument_texts(call.arguments)) {
      if (!contains(lowered_query, to_lower(text))) {
        throw Error(ErrorCode::kDependencyViolation,
                    "argument '" + text + "' of '" + call.tool_name +
                        "' does not appear in the query");
      }
    }
    observations.push_back(required_observation(node));
    calls.push_back(std::move(call));
  }
  const std::string answer = required_string(reply, "answer");

  if (classify_turn(query, calls, observations).routing !=
      Routing::kParallel) {
    throw Error(ErrorCode::kDependencyViolation,
                "calls consume values from each other's observations");
  }
  draft.conversation.tools = subset;
  draft.conversation.events.push_back(Query{query});
  for (size_t i = 0; i < calls.size(); ++i) {
    draft.conversation.events.push_back(Action{calls[i]});
    draft.conversation.events.push_back(Observation{observations[i]});
  }
  draft.conversation.events.push_back(Answer{answer});
  draft.anchors.resize(1);
  return draft;
}

}  // namespace

TrajectoryDraft generate_multi_hop(const std::vector<ToolSpec>& subset,
                                   Routing mode, size_t steps,
                                   ChatProvider& chat,
                                   const GenerationContext& ctx) {
  require_subset_size(subset, kMinHopTools, kMaxHopTools);
  if (steps < 2) throw Error(ErrorCode::kInvalidArgument, "K must be >= 2");
  if (mode == Routing::kSerial) {
    return generate_serial(subset, steps, chat, ctx);
  }
  if (mode == Routing::kParallel) {
    return generate_parallel(subset, steps, chat, ctx);
  }
  throw Error(ErrorCode::kInvalidArgument,
              "multi-hop mode must be serial or parallel");
}

TrajectoryDraft generate_multi_turn(const std::vector<ToolSpec>& subset,
                                    size_t turns, ChatProvider& chat,
                                    const GenerationContext& ctx) {
  require_subset_size(subset, kMultiTurnTools, kMultiTurnTools);
  if (turns < kMinTurns || turns > kMaxTurns) {
    throw Error(ErrorCode::kInvalidArgument,
                "T must be in [2, 4], got " + std::to_string(turns));
  }
  TrajectoryDraft draft;
  draft.scenario = Scenario::kMultiTurn;
  const Json tools = tools_json(subset);

  // Stage one: the episode plan.
  const Json plan = ask(
      chat,
      make_request(render_prompt(prompt_template("gen_storyline"),
                                 {{"tools", tools.dump(2)},
                                  {"turns", std::to_string(turns)},
                                  {"feedback", feedback_text(ctx)}}),
                   {{"task", "storyline"}, {"tools", tools}, {"turns", turns}},
                   ctx),
      draft);
  draft.storyline = required_string(plan, "storyline");
  auto intents = plan.find("intents");
  if (intents == plan.end() || !intents->is_array() ||
      intents->size() != turns) {
    schema_error("storyline must list exactly " + std::to_string(turns) +
                 " intents");
  }
  for (const Json& i : *intents) {
    if (!i.is_string()) schema_error("intents must be strings");
  }

  // Stage two: one exchange per turn.
  struct Harvested {
    std::string value;
    size_t observation_event;
  };
  std::vector<Harvested> previous;
  Json history = Json::array();
  auto& events = draft.conversation.events;
  for (size_t t = 0; t < turns; ++t) {
    Json anchor_values = Json::array();
    for (const Harvested& h : previous) anchor_values.push_back(h.value);
    const std::string intent = (*intents)[t].get<std::string>();
    const std::string prompt = render_prompt(
        prompt_template("gen_turn"),
        {{"storyline", draft.storyline},
         {"turn", std::to_string(t + 1)},
         {"turns", std::to_string(turns)},
         {"intent", intent},
         {"history", history_text(history)},
         {"anchors", t == 0 ? "(none)" : anchor_values.dump()},
         {"tools", tools.dump(2)},
         {"feedback", feedback_text(ctx)}});
    Json context = {{"task", "turn"},         {"tools", tools},
                    {"turn", t + 1},          {"turns", turns},
                    {"storyline", draft.storyline}, {"intent", intent},
                    {"anchors", anchor_values},     {"history", history}};
    const Json reply = ask(chat, make_request(prompt, context, ctx), draft);

    const std::string query = required_string(reply, "query");
    auto steps = reply.find("steps");
    if (steps == reply.end() || !steps->is_array() || steps->empty()) {
      schema_error("turn " + std::to_string(t + 1) + " has no steps");
    }
    const size_t query_event = events.size();
    events.push_back(Query{query});
    Json turn_steps = Json::array();
    std::vector<Harvested> current;
    std::set<std::string> seen;
    for (const Json& node : *steps) {
      if (!node.is_object()) schema_error("step entry is not an object");
      FunctionCall call = parse_call(node);
      validate_call(call, subset);
      const std::string observation = required_observation(node);
      turn_steps.push_back(step_json(call, observation));
      events.push_back(Action{std::move(call)});
      const size_t obs_event = events.size();
      events.push_back(Observation{observation});
      for (std::string& a : extract_anchors(observation)) {
        if (seen.insert(a).second) current.push_back({std::move(a), obs_event});
      }
    }
    const std::string answer = required_string(reply, "answer");
    events.push_back(Answer{answer});

    std::vector<AnchorLink> links;
    for (const Harvested& h : previous) {
      if (contains(query, h.value)) {
        links.push_back({h.value, h.observation_event, query_event});
      }
    }
    if (t > 0 && links.empty()) {
      throw Error(ErrorCode::kAnchorViolation,
                  "turn " + std::to_string(t + 1) +
                      " query quotes no value from turn " + std::to_string(t));
    }
    draft.anchors.push_back(std::move(links));
    history.push_back(
        {{"query", query}, {"steps", std::move(turn_steps)}, {"answer", answer}});
    previous = std::move(current);
  }
  draft.conversation.tools = subset;
  return draft;
}

std::vector<std::string> extract_anchors(std::string_view observation) {
  return extract_value_tokens(observation);
}

bool LinkageReport::passed() const { return !first_failure().has_value(); }

std::optional<size_t> LinkageReport::first_failure() const {
  for (const TurnLinkage& t : turns) {
    if (!t.linked()) return t.turn;
  }
  return std::nullopt;
}

Json LinkageReport::to_json() const {
  Json rows = Json::array();
  for (const TurnLinkage& t : turns) {
    rows.push_back({{"turn", t.turn},
                    {"available", t.available},
                    {"in_query", t.in_query},
                    {"in_arguments", t.in_arguments},
                    {"linked", t.linked()}});
  }
  return {{"passed", passed()}, {"turns", std::move(rows)}};
}

LinkageReport check_anchor_linkage(const Conversation& conv) {
  const std::vector<TurnSpan> spans = conv.turns();
  if (spans.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "anchor linkage needs at least two turns");
  }
  LinkageReport report;
  for (size_t t = 1; t < spans.size(); ++t) {
    TurnLinkage row;
    row.turn = t;
    std::set<std::string> seen;
    for (const std::string& obs : conv.observations(spans[t - 1])) {
      for (std::string& a : extract_anchors(obs)) {
        if (seen.insert(a).second) row.available.push_back(std::move(a));
      }
    }
    const std::string& query = conv.query(spans[t]);
    const std::vector<FunctionCall> calls = conv.calls(spans[t]);
    for (const std::string& a : row.available) {
      if (contains(query, a)) row.in_query.push_back(a);
      if (std::any_of(calls.begin(), calls.end(), [&](const FunctionCall& c) {
            return call_uses_value(c, a);
          })) {
        row.in_arguments.push_back(a);
      }
    }
    report.turns.push_back(std::move(row));
  }
  return report;
}

}  // namespace toolcall
