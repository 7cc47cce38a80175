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

#ifndef TOOLCALL_MODEL_STRUCTURE_H_
#define TOOLCALL_MODEL_STRUCTURE_H_

#include <string_view>
#include <vector>

#include "toolcall/model/conversation.h"

namespace toolcall {

enum class HopClass { kSingleHop, kMultiHop };
enum class TurnClass { kSingleTurn, kMultiTurn };
enum class Routing { kSerial, kParallel, kMixed, kNotApplicable };

std::string_view to_string(HopClass h);
std::string_view to_string(TurnClass t);
std::string_view to_string(Routing r);

struct TurnLabel {
  HopClass hop_class = HopClass::kSingleHop;
  Routing routing = Routing::kNotApplicable;
  size_t call_count = 0;
  // For each call after the first: whether it consumes a value that an
  // earlier observation of the same turn introduced.
  std::vector<bool> depends_on_observation;

  friend bool operator==(const TurnLabel&, const TurnLabel&) = default;
};

struct StructureLabel {
  // Multi-hop if any turn is multi-hop.
  HopClass hop_class = HopClass::kSingleHop;
  TurnClass turn_class = TurnClass::kSingleTurn;
  // Combined over the multi-call turns; n/a when there are none.
  Routing routing = Routing::kNotApplicable;
  std::vector<TurnLabel> turns;

  friend bool operator==(const StructureLabel&, const StructureLabel&) =
      default;
};

// Routing of one turn given its query, calls, and the observation that
// followed each call.
TurnLabel classify_turn(std::string_view query,
                        const std::vector<FunctionCall>& calls,
                        const std::vector<std::string>& observations);

StructureLabel classify_structure(const Conversation& conv);

}  // namespace toolcall

#endif  // TOOLCALL_MODEL_STRUCTURE_H_
