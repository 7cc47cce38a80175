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

#ifndef TOOLCALL_SYNTHESIS_PIPELINE_H_
#define TOOLCALL_SYNTHESIS_PIPELINE_H_

#include <optional>
#include <string>
#include <vector>

#include "toolcall/candidates/candidates.h"
#include "toolcall/providers/chat.h"
#include "toolcall/providers/embedder.h"
#include "toolcall/synthesis/gate.h"
#include "toolcall/synthesis/synthesis.h"

namespace toolcall {

struct Rejection {
  int attempt = 0;
  std::string stage;  // "validation", "judge" or "gate"
  std::string reason;
  std::optional<RubricScores> scores;
};

struct SynthesisResult {
  // Set when a draft was accepted: the final instance with its Hybrid-20
  // candidate list and system prompt.
  std::optional<Conversation> instance;
  std::optional<TrajectoryDraft> draft;
  std::optional<RubricScores> scores;
  std::optional<CandidateList> candidates;
  int attempts = 0;
  std::vector<Rejection> rejections;
  // Names of the subset's tools when every attempt failed.
  std::vector<std::string> excluded_tools;

  bool accepted() const { return instance.has_value(); }
};

struct AssemblyInputs {
  const std::vector<ToolSpec>* pool = nullptr;
  CachingEmbedder* embedder = nullptr;
};

// Generate, validate and gate, up to task.max_retries attempts. Each retry
// tells the generator why the previous attempt failed. Provider failures
// propagate. Throws Error(kInvalidArgument) for an invalid task.
SynthesisResult synthesize_with_retry(const GenerationTask& task,
                                      ChatProvider& chat, ChatProvider& judge,
                                      const AssemblyInputs& assembly);

Json rejection_to_json(const Rejection& r);

}  // namespace toolcall

#endif  // TOOLCALL_SYNTHESIS_PIPELINE_H_
