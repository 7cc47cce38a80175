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

#include "toolcall/synthesis/pipeline.h"

#include "toolcall/error.h"
#include "toolcall/synthesis/prompts.h"
#include "toolcall/util/rng.h"

namespace toolcall {
namespace {

constexpr uint64_t kAssemblyStream = 0x100;

bool is_validation_failure(ErrorCode code) {
  return code == ErrorCode::kSchemaViolation ||
         code == ErrorCode::kDependencyViolation ||
         code == ErrorCode::kAnchorViolation;
}

TrajectoryDraft generate(const GenerationTask& task, ChatProvider& chat,
                         const GenerationContext& ctx) {
  switch (task.scenario) {
    case Scenario::kSingleHop:
      return generate_single_hop(task.tools, chat, ctx);
    case Scenario::kMultiHopSerial:
      return generate_multi_hop(task.tools, Routing::kSerial,
                                task.effective_steps(), chat, ctx);
    case Scenario::kMultiHopParallel:
      return generate_multi_hop(task.tools, Routing::kParallel,
                                task.effective_steps(), chat, ctx);
    case Scenario::kMultiTurn:
      return generate_multi_turn(task.tools, task.turns, chat, ctx);
  }
  throw Error(ErrorCode::kInternal, "unknown scenario");
}

}  // namespace

Json rejection_to_json(const Rejection& r) {
  Json j = {{"attempt", r.attempt}, {"stage", r.stage}, {"reason", r.reason}};
  j["scores"] = r.scores ? r.scores->to_json() : Json(nullptr);
  return j;
}

SynthesisResult synthesize_with_retry(const GenerationTask& task,
                                      ChatProvider& chat, ChatProvider& judge,
                                      const AssemblyInputs& assembly) {
  validate_task(task);
  if (!assembly.pool || !assembly.embedder) {
    throw Error(ErrorCode::kInvalidArgument,
                "candidate assembly needs a pool and an embedder");
  }
  SynthesisResult result;
  std::string feedback;
  for (int attempt = 1; attempt <= task.max_retries; ++attempt) {
    result.attempts = attempt;
    const GenerationContext ctx{derive_seed(task.seed, attempt), attempt,
                                feedback};
    TrajectoryDraft draft;
    try {
      draft = generate(task, chat, ctx);
    } catch (const Error& e) {
      if (!is_validation_failure(e.code())) throw;
      result.rejections.push_back({attempt, "validation", e.what(), {}});
      feedback = e.message();
      continue;
    }

    GateDecision decision;
    try {
      decision = quality_gate(draft, judge, &draft.generation_log);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kJudgeError) throw;
      result.rejections.push_back({attempt, "judge", e.what(), {}});
      continue;
    }
    if (!decision.accepted) {
      result.rejections.push_back(
          {attempt, "gate", decision.reason, decision.scores});
      feedback = "quality review: " + decision.reason;
      continue;
    }

    Conversation instance = draft.conversation;
    instance.system_prompt = std::string(instance_system_prompt());
    instance.source = "synthetic";
    CandidateList candidates = assemble_hybrid(
        ground_truth_tools(instance, task.tools), *assembly.pool,
        *assembly.embedder, derive_seed(task.seed, kAssemblyStream));
    instance.tools = candidates.presented;
    validate_conversation(instance);
    if (task.scenario == Scenario::kMultiTurn &&
        !check_anchor_linkage(instance).passed()) {
      throw Error(ErrorCode::kInternal,
                  "accepted multi-turn instance fails anchor linkage");
    }
    result.instance = std::move(instance);
    result.draft = std::move(draft);
    result.scores = decision.scores;
    result.candidates = std::move(candidates);
    return result;
  }
  for (const ToolSpec& t : task.tools) result.excluded_tools.push_back(t.name);
  return result;
}

}  // namespace toolcall
