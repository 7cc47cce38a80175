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

#include "toolcall/report/report.h"

#include <algorithm>
#include <charconv>

#include "toolcall/error.h"
#include "toolcall/model/structure.h"
#include "toolcall/util/rng.h"

namespace toolcall {
namespace {

Json histogram_json(const std::map<size_t, size_t>& h) {
  Json out = Json::object();
  for (const auto& [k, v] : h) out[std::to_string(k)] = v;
  return out;
}

double ratio_of(size_t num, size_t den) {
  return den ? static_cast<double>(num) / static_cast<double>(den) : 0.0;
}

size_t parse_positive(std::string_view s, const std::string& whole) {
  size_t v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size() || v == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "ratio must look like 1:4 with positive integers, got '" +
                    whole + "'");
  }
  return v;
}

}  // namespace

double DatasetStats::multi_turn_proportion() const {
  return ratio_of(multi_turn_conversations, conversations);
}

double DatasetStats::multi_hop_proportion() const {
  return ratio_of(multi_hop_conversations, conversations);
}

Json DatasetStats::to_json() const {
  return {
      {"conversations", conversations},
      {"turns", turns},
      {"calls", calls},
      {"single_turn_conversations", single_turn_conversations},
      {"multi_turn_conversations", multi_turn_conversations},
      {"multi_hop_conversations", multi_hop_conversations},
      {"multi_turn_proportion", multi_turn_proportion()},
      {"multi_hop_proportion", multi_hop_proportion()},
      {"single_hop_turns", single_hop_turns},
      {"multi_hop_turns", multi_hop_turns},
      {"routing",
       {{"serial", serial_turns},
        {"parallel", parallel_turns},
        {"mixed", mixed_turns}}},
      {"calls_per_sample", histogram_json(calls_per_sample)},
      {"messages_per_sample", histogram_json(messages_per_sample)},
      {"tools_by_domain", tools_by_domain},
      {"tools_by_category", tools_by_category},
  };
}

DatasetStats compute_stats(const std::vector<Conversation>& conversations) {
  DatasetStats s;
  // name -> (serialised spec, spec); the smallest serialisation wins so
  // conflicting duplicates resolve the same way in any order.
  std::map<std::string, std::pair<std::string, const ToolSpec*>> tools;
  for (const Conversation& conv : conversations) {
    const StructureLabel label = classify_structure(conv);
    ++s.conversations;
    const size_t calls = conv.all_calls().size();
    s.calls += calls;
    ++s.calls_per_sample[calls];
    ++s.messages_per_sample[conv.events.size()];
    (label.turn_class == TurnClass::kMultiTurn ? s.multi_turn_conversations
                                               : s.single_turn_conversations)++;
    if (label.hop_class == HopClass::kMultiHop) ++s.multi_hop_conversations;
    for (const TurnLabel& t : label.turns) {
      ++s.turns;
      if (t.hop_class == HopClass::kSingleHop) {
        ++s.single_hop_turns;
        continue;
      }
      ++s.multi_hop_turns;
      switch (t.routing) {
        case Routing::kSerial: ++s.serial_turns; break;
        case Routing::kParallel: ++s.parallel_turns; break;
        default: ++s.mixed_turns; break;
      }
    }
    for (const ToolSpec& t : conv.tools) {
      std::string dump = tool_to_json(t).dump();
      auto [it, inserted] = tools.try_emplace(t.name, dump, &t);
      if (!inserted && dump < it->second.first) it->second = {dump, &t};
    }
  }
  for (const auto& [name, entry] : tools) {
    (void)name;
    const ToolSpec& t = *entry.second;
    ++s.tools_by_domain[t.domain ? std::string(to_string(*t.domain))
                                 : "unlabelled"];
    ++s.tools_by_category[t.category ? std::string(to_string(*t.category))
                                     : "unlabelled"];
  }
  return s;
}

CorpusManifest manifest_of(const std::vector<Conversation>& conversations,
                           size_t declared_total) {
  CorpusManifest m;
  m.declared_total = declared_total;
  for (const Conversation& c : conversations) {
    (c.source == "synthetic" ? m.synthetic_instances : m.public_instances)++;
  }
  return m;
}

RoutingRatio parse_ratio(const std::string& text) {
  const size_t colon = text.find(':');
  if (colon == std::string::npos) {
    throw Error(ErrorCode::kInvalidArgument,
                "ratio must look like 1:4, got '" + text + "'");
  }
  RoutingRatio r;
  r.serial = parse_positive(std::string_view(text).substr(0, colon), text);
  r.parallel = parse_positive(std::string_view(text).substr(colon + 1), text);
  return r;
}

std::vector<Conversation> stratify_by_ratio(
    const std::vector<Conversation>& conversations, RoutingRatio ratio,
    uint64_t seed) {
  if (ratio.serial == 0 || ratio.parallel == 0) {
    throw Error(ErrorCode::kInvalidArgument, "ratio parts must be positive");
  }
  std::vector<size_t> serial, parallel;
  for (size_t i = 0; i < conversations.size(); ++i) {
    const Routing r = classify_structure(conversations[i]).routing;
    if (r == Routing::kSerial) serial.push_back(i);
    if (r == Routing::kParallel) parallel.push_back(i);
  }
  const size_t m =
      std::min(serial.size() / ratio.serial, parallel.size() / ratio.parallel);
  if (m == 0) {
    throw Error(ErrorCode::kRatioUnachievable,
                "cannot reach " + std::to_string(ratio.serial) + ":" +
                    std::to_string(ratio.parallel) + " with " +
                    std::to_string(serial.size()) + " serial and " +
                    std::to_string(parallel.size()) +
                    " parallel conversations");
  }
  SeededRng rng(seed);
  std::vector<size_t> chosen;
  for (size_t j : rng.sample_indices(serial.size(), m * ratio.serial)) {
    chosen.push_back(serial[j]);
  }
  for (size_t j : rng.sample_indices(parallel.size(), m * ratio.parallel)) {
    chosen.push_back(parallel[j]);
  }
  std::sort(chosen.begin(), chosen.end());
  std::vector<Conversation> out;
  for (size_t i : chosen) out.push_back(conversations[i]);
  return out;
}

}  // namespace toolcall
