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

#ifndef TOOLCALL_SYNTHESIS_SYNTHESIS_H_
#define TOOLCALL_SYNTHESIS_SYNTHESIS_H_

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toolcall/model/conversation.h"
#include "toolcall/model/structure.h"
#include "toolcall/providers/chat.h"

namespace toolcall {

enum class Scenario { kSingleHop, kMultiHopSerial, kMultiHopParallel,
                      kMultiTurn };

// "sh", "mh-serial", "mh-parallel", "mt".
std::string_view to_string(Scenario s);
std::optional<Scenario> parse_scenario(std::string_view s);

inline constexpr size_t kMinHopTools = 2;
inline constexpr size_t kMaxHopTools = 5;
inline constexpr size_t kMultiTurnTools = 10;
inline constexpr size_t kMinTurns = 2;
inline constexpr size_t kMaxTurns = 4;

struct GenerationTask {
  Scenario scenario = Scenario::kSingleHop;
  std::vector<ToolSpec> tools;  // the sampled subset S
  size_t steps = 0;             // K for multi-hop; 0 means |S|
  size_t turns = 0;             // T for multi-turn
  uint64_t seed = 0;
  int max_retries = 3;  // total generation attempts

  size_t effective_steps() const { return steps ? steps : tools.size(); }
};

// Checks the subset size, K and T for the scenario. Throws
// Error(kInvalidArgument).
void validate_task(const GenerationTask& task);

// Running per-tool draw counts shared by a batch of multi-turn draws.
class UsageCounter {
 public:
  size_t count(const std::string& tool_name) const;

 private:
  friend std::vector<ToolSpec> sample_tool_subset(
      const std::vector<ToolSpec>&, Scenario, uint64_t, UsageCounter*);
  mutable std::mutex mu_;
  std::map<std::string, size_t> counts_;
};

// Single-hop: one tool, uniform. Multi-hop: 2 to 5 tools that share a
// domain label. Multi-turn: 10 tools drawn without replacement with weight
// 1 / (1 + uses); the draw and the counter update happen under one lock.
// Tools are deduplicated by name before drawing. Throws
// Error(kPoolTooSmall) and Error(kNoDomainWithEnoughTools).
std::vector<ToolSpec> sample_tool_subset(const std::vector<ToolSpec>& pool,
                                         Scenario scenario, uint64_t seed,
                                         UsageCounter* usage = nullptr);

struct AnchorLink {
  std::string value;
  size_t observation_event = 0;  // event index of the producing observation
  size_t query_event = 0;        // event index of the consuming turn's query
};

struct TrajectoryDraft {
  Scenario scenario = Scenario::kSingleHop;
  Conversation conversation;  // events only; tools are attached on accept
  std::vector<ChatExchange> generation_log;
  // Entry t lists the turn-(t-1) anchors consumed by turn t; entry 0 is
  // always empty.
  std::vector<std::vector<AnchorLink>> anchors;
  // Storyline of a multi-turn draft.
  std::string storyline;
};

Json draft_to_json(const TrajectoryDraft& draft);

// Per-attempt inputs threaded into prompts and request context.
struct GenerationContext {
  uint64_t seed = 0;
  int attempt = 1;
  std::string feedback;  // why the previous attempt was rejected
};

// Throws Error(kSchemaViolation) when the tool is not in `subset`, a
// required argument is missing, an argument is not declared by a schema
// that lists properties, or a value does not fit its declared type.
void validate_call(const FunctionCall& call,
                   const std::vector<ToolSpec>& subset);

// The first balanced {...} span of `text` that parses as a JSON object.
std::optional<Json> find_json_object(std::string_view text);

// The first JSON object in a provider reply. Throws
// Error(kSchemaViolation) when there is none.
Json parse_generator_reply(std::string_view text);

TrajectoryDraft generate_single_hop(const std::vector<ToolSpec>& subset,
                                    ChatProvider& chat,
                                    const GenerationContext& ctx = {});

// Serial: K exchanges, each step after the first must consume a value an
// earlier observation introduced. Parallel: one exchange with K calls to
// distinct tools whose arguments all appear in the query. Throws
// Error(kDependencyViolation) and Error(kSchemaViolation).
TrajectoryDraft generate_multi_hop(const std::vector<ToolSpec>& subset,
                                   Routing mode, size_t steps,
                                   ChatProvider& chat,
                                   const GenerationContext& ctx = {});

// A storyline exchange, then one exchange per turn. Each turn after the
// first must quote a value from the previous turn's observations in its
// query (Error(kAnchorViolation)).
TrajectoryDraft generate_multi_turn(const std::vector<ToolSpec>& subset,
                                    size_t turns, ChatProvider& chat,
                                    const GenerationContext& ctx = {});

// Value-like tokens of an observation; see extract_value_tokens.
std::vector<std::string> extract_anchors(std::string_view observation);

struct TurnLinkage {
  size_t turn = 0;                         // 0-based; always >= 1
  std::vector<std::string> available;      // anchors of the previous turn
  std::vector<std::string> in_query;       // consumed by the query text
  std::vector<std::string> in_arguments;   // consumed by call arguments
  bool linked() const { return !in_query.empty() || !in_arguments.empty(); }
};

struct LinkageReport {
  std::vector<TurnLinkage> turns;
  bool passed() const;
  std::optional<size_t> first_failure() const;
  Json to_json() const;
};

// Throws Error(kInvalidArgument) for fewer than two turns.
LinkageReport check_anchor_linkage(const Conversation& conv);

}  // namespace toolcall

#endif  // TOOLCALL_SYNTHESIS_SYNTHESIS_H_
