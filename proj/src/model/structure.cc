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

#include "toolcall/model/structure.h"

#include <algorithm>

#include "toolcall/model/value_tokens.h"

namespace toolcall {

std::string_view to_string(HopClass h) {
  return h == HopClass::kSingleHop ? "single_hop" : "multi_hop";
}

std::string_view to_string(TurnClass t) {
  return t == TurnClass::kSingleTurn ? "single_turn" : "multi_turn";
}

std::string_view to_string(Routing r) {
  switch (r) {
    case Routing::kSerial: return "serial";
    case Routing::kParallel: return "parallel";
    case Routing::kMixed: return "mixed";
    case Routing::kNotApplicable: return "n/a";
  }
  return "n/a";
}

TurnLabel classify_turn(std::string_view query,
                        const std::vector<FunctionCall>& calls,
                        const std::vector<std::string>& observations) {
  TurnLabel label;
  label.call_count = calls.size();
  label.hop_class =
      calls.size() >= 2 ? HopClass::kMultiHop : HopClass::kSingleHop;
  if (calls.size() < 2) return label;

  // Values known before each call: the query plus earlier arguments.
  std::vector<std::string> context{std::string(query)};
  std::vector<std::string> introduced;
  for (size_t k = 0; k < calls.size(); ++k) {
    if (k > 0) {
      const bool depends = std::any_of(
          introduced.begin(), introduced.end(),
          [&](const std::string& v) { return call_uses_value(calls[k], v); });
      label.depends_on_observation.push_back(depends);
    }
    for (std::string& t : argument_texts(calls[k].arguments)) {
      context.push_back(std::move(t));
    }
    if (k < observations.size()) {
      for (std::string& v : introduced_values(observations[k], context)) {
        introduced.push_back(std::move(v));
      }
    }
  }

  const auto& deps = label.depends_on_observation;
  const bool all = std::all_of(deps.begin(), deps.end(), [](bool b) { return b; });
  const bool none = std::none_of(deps.begin(), deps.end(), [](bool b) { return b; });
  label.routing = all ? Routing::kSerial
                      : none ? Routing::kParallel : Routing::kMixed;
  return label;
}

StructureLabel classify_structure(const Conversation& conv) {
  StructureLabel out;
  const std::vector<TurnSpan> turns = conv.turns();
  out.turn_class =
      turns.size() >= 2 ? TurnClass::kMultiTurn : TurnClass::kSingleTurn;

  bool any_serial = false;
  bool any_parallel = false;
  bool any_mixed = false;
  for (const TurnSpan& span : turns) {
    TurnLabel t = classify_turn(conv.query(span), conv.calls(span),
                                conv.observations(span));
    if (t.hop_class == HopClass::kMultiHop) out.hop_class = HopClass::kMultiHop;
    any_serial |= t.routing == Routing::kSerial;
    any_parallel |= t.routing == Routing::kParallel;
    any_mixed |= t.routing == Routing::kMixed;
    out.turns.push_back(std::move(t));
  }
  if (any_mixed || (any_serial && any_parallel)) {
    out.routing = Routing::kMixed;
  } else if (any_serial) {
    out.routing = Routing::kSerial;
  } else if (any_parallel) {
    out.routing = Routing::kParallel;
  }
  return out;
}

}  // namespace toolcall
