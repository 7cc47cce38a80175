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

#ifndef TOOLCALL_MATCHING_MATCH_H_
#define TOOLCALL_MATCHING_MATCH_H_

#include <string>
#include <string_view>
#include <vector>

#include "toolcall/matching/normalize.h"
#include "toolcall/model/conversation.h"

namespace toolcall {

inline constexpr double kDefaultSemanticThreshold = 0.7;

enum class ArgOutcome { kExact, kSemantic, kFailed, kMissing, kExtra };
std::string_view to_string(ArgOutcome o);

struct ArgumentDetail {
  std::string key;
  ArgOutcome outcome = ArgOutcome::kFailed;
  double score = 0.0;  // ROUGE-L score for text pairs that were compared
};

// Call-level verdict. strict_match implies flexible_match implies
// name_match.
struct MatchVerdict {
  bool name_match = false;
  bool strict_match = false;
  bool flexible_match = false;
  std::vector<ArgumentDetail> detail;
};

// Normalized names equal and normalized argument maps equal.
bool rule_match(const FunctionCall& pred, const FunctionCall& gold);

// Text prepared for ROUGE-L on a raw argument string: articles dropped so
// the comparison agrees with the text canonicalization rule.
std::vector<std::string> semantic_tokens(std::string_view raw);

// Threshold must lie in (0, 1]; throws Error(kInvalidArgument) otherwise.
MatchVerdict cascaded_match(const FunctionCall& pred, const FunctionCall& gold,
                            double threshold = kDefaultSemanticThreshold);

// cascaded_match bound to one semantic threshold.
class CallMatcher {
 public:
  explicit CallMatcher(double threshold = kDefaultSemanticThreshold);

  double threshold() const { return threshold_; }
  MatchVerdict match(const FunctionCall& pred, const FunctionCall& gold) const;

 private:
  double threshold_;
};

}  // namespace toolcall

#endif  // TOOLCALL_MATCHING_MATCH_H_
