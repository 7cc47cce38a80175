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

#ifndef TOOLCALL_METRICS_ALIGN_H_
#define TOOLCALL_METRICS_ALIGN_H_

#include <optional>
#include <vector>

#include "toolcall/matching/match.h"
#include "toolcall/model/conversation.h"

namespace toolcall {

struct AlignedPrediction {
  // Index into P; nullopt for a null prediction padded in for an omission.
  std::optional<size_t> pred_index;
  std::optional<size_t> gold_index;
  MatchVerdict verdict;  // all-false when unassigned or padded
};

struct Alignment {
  std::vector<AlignedPrediction> predictions;  // size max(|P|, |G|)
  size_t unpadded_size = 0;                    // |P| before padding

  size_t count_name() const;
  size_t count_strict() const;
  size_t count_flexible() const;
};

// One-to-one assignment of predictions to gold calls, each gold call used
// at most once. Among all assignments it maximizes the number of strict
// matches, then flexible matches, then name matches; ties are broken
// deterministically. When |P| < |G| the result is padded with null
// predictions up to |G|.
Alignment align_calls(const std::vector<FunctionCall>& predictions,
                      const std::vector<FunctionCall>& gold,
                      const CallMatcher& matcher);

}  // namespace toolcall

#endif  // TOOLCALL_METRICS_ALIGN_H_
