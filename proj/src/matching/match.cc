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

#include "toolcall/matching/match.h"

#include "toolcall/error.h"
#include "toolcall/matching/rouge.h"
#include "toolcall/util/text.h"

namespace toolcall {
namespace {

const Json kEmptyArgs = Json::object();

const Json& args_of(const FunctionCall& call) {
  return call.arguments.is_object() ? call.arguments : kEmptyArgs;
}

}  // namespace

std::string_view to_string(ArgOutcome o) {
  switch (o) {
    case ArgOutcome::kExact: return "exact";
    case ArgOutcome::kSemantic: return "semantic";
    case ArgOutcome::kFailed: return "failed";
    case ArgOutcome::kMissing: return "missing";
    case ArgOutcome::kExtra: return "extra";
  }
  return "failed";
}

bool rule_match(const FunctionCall& pred, const FunctionCall& gold) {
  return normalize_call(pred) == normalize_call(gold);
}

std::vector<std::string> semantic_tokens(std::string_view raw) {
  std::vector<std::string> out;
  for (std::string& t : rouge_tokens(raw)) {
    if (t == "a" || t == "an" || t == "the") continue;
    out.push_back(std::move(t));
  }
  return out;
}

MatchVerdict cascaded_match(const FunctionCall& pred, const FunctionCall& gold,
                            double threshold) {
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "semantic threshold must lie in (0, 1]");
  }
  MatchVerdict v;
  v.name_match =
      normalize_tool_name(pred.tool_name) == normalize_tool_name(gold.tool_name);

  const Json& pargs = args_of(pred);
  const Json& gargs = args_of(gold);
  bool all_exact = true;
  bool all_pass = true;
  for (auto g = gargs.begin(); g != gargs.end(); ++g) {
    ArgumentDetail d{g.key(), ArgOutcome::kFailed, 0.0};
    auto p = pargs.find(g.key());
    if (p == pargs.end()) {
      d.outcome = ArgOutcome::kMissing;
      all_exact = all_pass = false;
    } else {
      const NormalizedValue pn = normalize_value(*p);
      const NormalizedValue gn = normalize_value(g.value());
      if (pn == gn) {
        d.outcome = ArgOutcome::kExact;
        d.score = 1.0;
      } else {
        all_exact = false;
        if (pn.is_text() && gn.is_text() && p->is_string() &&
            g.value().is_string()) {
          const auto pt = semantic_tokens(p->get_ref<const std::string&>());
          const auto gt =
              semantic_tokens(g.value().get_ref<const std::string&>());
          d.score = rouge_l(std::span<const std::string>(pt),
                            std::span<const std::string>(gt));
          d.outcome = d.score >= threshold ? ArgOutcome::kSemantic
                                           : ArgOutcome::kFailed;
        }
        if (d.outcome != ArgOutcome::kSemantic) all_pass = false;
      }
    }
    v.detail.push_back(std::move(d));
  }
  for (auto p = pargs.begin(); p != pargs.end(); ++p) {
    if (!gargs.contains(p.key())) {
      v.detail.push_back({p.key(), ArgOutcome::kExtra, 0.0});
      all_exact = all_pass = false;
    }
  }
  v.strict_match = v.name_match && all_exact;
  v.flexible_match = v.name_match && all_pass;
  return v;
}

CallMatcher::CallMatcher(double threshold) : threshold_(threshold) {
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "semantic threshold must lie in (0, 1]");
  }
}

MatchVerdict CallMatcher::match(const FunctionCall& pred,
                                const FunctionCall& gold) const {
  return cascaded_match(pred, gold, threshold_);
}

}  // namespace toolcall
