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

#ifndef TOOLCALL_CANDIDATES_CANDIDATES_H_
#define TOOLCALL_CANDIDATES_CANDIDATES_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include "toolcall/model/conversation.h"
#include "toolcall/model/tool_spec.h"
#include "toolcall/providers/embedder.h"

namespace toolcall {

enum class CandidateMode { kHybrid20, kGt };
std::string_view to_string(CandidateMode m);

inline constexpr size_t kHybridListSize = 20;
inline constexpr size_t kEasyNegatives = 5;
inline constexpr size_t kMaxAnchors = kHybridListSize - kEasyNegatives;

struct CandidateList {
  std::vector<ToolSpec> anchors;
  std::vector<ToolSpec> hard_negatives;
  std::vector<ToolSpec> easy_negatives;
  CandidateMode mode = CandidateMode::kGt;
  uint64_t seed = 0;
  // All candidates in the order they are shown to the model.
  std::vector<ToolSpec> presented;
};

// Anchors are the ground-truth tools (duplicates by name collapsed). Hard
// negatives are the pool tools closest to the centroid of the anchors'
// normalized embeddings, ties broken by name; 5 easy negatives are drawn
// from the rest with `seed`, and the 20 are shown in a seeded order.
// Throws Error(kTooManyAnchors) above 15 anchors, Error(kPoolTooSmall)
// when the pool cannot fill the list, and Error(kEmptyGroundTruth).
CandidateList assemble_hybrid(const std::vector<ToolSpec>& gt_tools,
                              const std::vector<ToolSpec>& pool,
                              CachingEmbedder& embedder, uint64_t seed);

// Ground-truth tools only, in input order, duplicates collapsed.
CandidateList assemble_gt(const std::vector<ToolSpec>& gt_tools);

// Tools named by the conversation's calls, in first-call order, resolved
// against the conversation's own tool list and then `pool`. Throws
// Error(kMalformedRecord) for a call to a tool found in neither.
std::vector<ToolSpec> ground_truth_tools(const Conversation& conv,
                                         const std::vector<ToolSpec>& pool);

}  // namespace toolcall

#endif  // TOOLCALL_CANDIDATES_CANDIDATES_H_
