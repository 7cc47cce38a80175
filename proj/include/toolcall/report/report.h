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

#ifndef TOOLCALL_REPORT_REPORT_H_
#define TOOLCALL_REPORT_REPORT_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "toolcall/model/conversation.h"

namespace toolcall {

struct DatasetStats {
  size_t conversations = 0;
  size_t turns = 0;
  size_t calls = 0;

  size_t single_turn_conversations = 0;
  size_t multi_turn_conversations = 0;
  size_t multi_hop_conversations = 0;  // at least one multi-call turn

  size_t single_hop_turns = 0;
  size_t multi_hop_turns = 0;
  // Routing of the multi-hop turns. Mixed turns are kept out of the
  // serial:parallel ratio.
  size_t serial_turns = 0;
  size_t parallel_turns = 0;
  size_t mixed_turns = 0;

  std::map<size_t, size_t> calls_per_sample;     // calls -> conversations
  std::map<size_t, size_t> messages_per_sample;  // events -> conversations

  // Distinct tools (by name) across every candidate list. Missing labels
  // are counted under "unlabelled".
  std::map<std::string, size_t> tools_by_domain;
  std::map<std::string, size_t> tools_by_category;

  double multi_turn_proportion() const;
  double multi_hop_proportion() const;
  Json to_json() const;
};

DatasetStats compute_stats(const std::vector<Conversation>& conversations);

// Training-corpus composition: public instances plus synthetic
// trajectories.
inline constexpr size_t kPublicTrainingInstances = 387'123;
inline constexpr size_t kSyntheticTrainingInstances = 2'937;
inline constexpr size_t kTrainingInstances = 390'060;

struct CorpusManifest {
  size_t public_instances = 0;
  size_t synthetic_instances = 0;
  size_t declared_total = 0;

  bool balanced() const {
    return public_instances + synthetic_instances == declared_total;
  }
};

// Counts conversations by source ("synthetic" versus everything else).
CorpusManifest manifest_of(const std::vector<Conversation>& conversations,
                           size_t declared_total);

struct RoutingRatio {
  size_t serial = 1;
  size_t parallel = 1;
};

// Parses "S:P" (serial:parallel) with positive integers. Throws
// Error(kInvalidArgument).
RoutingRatio parse_ratio(const std::string& text);

// The largest subset whose serial and parallel conversation counts are
// exactly m*serial and m*parallel, drawn without replacement within each
// stratum. Conversations whose routing is mixed or not applicable are
// never selected. Output keeps input order. Throws
// Error(kRatioUnachievable) when a needed stratum is too small for m >= 1.
std::vector<Conversation> stratify_by_ratio(
    const std::vector<Conversation>& conversations, RoutingRatio ratio,
    uint64_t seed);

}  // namespace toolcall

#endif  // TOOLCALL_REPORT_REPORT_H_
