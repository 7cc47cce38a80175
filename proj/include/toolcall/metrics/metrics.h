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

#ifndef TOOLCALL_METRICS_METRICS_H_
#define TOOLCALL_METRICS_METRICS_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "toolcall/metrics/align.h"
#include "toolcall/model/conversation.h"

namespace toolcall {

enum class Granularity { kTurn, kConversation };
// SH/MH are turn-level buckets; ST/MT are conversation-level buckets.
enum class Bucket { kSingleHop, kMultiHop, kSingleTurn, kMultiTurn };

std::string_view to_string(Granularity g);
std::string_view to_string(Bucket b);  // "SH", "MH", "ST", "MT"
Granularity granularity_of(Bucket b);

struct InstanceScores {
  std::string instance_id;
  std::optional<size_t> turn_index;  // set for turn-granularity instances
  std::string subset;
  Granularity granularity = Granularity::kTurn;
  Bucket bucket = Bucket::kSingleHop;
  size_t p_size = 0;  // |P_i| after padding
  size_t g_size = 0;
  size_t n_name = 0;
  size_t n_strict = 0;
  size_t n_flex = 0;
  int sp_indicator = 0;

  double fp() const { return p_size ? double(n_name) / double(p_size) : 0.0; }
  double spa() const {
    return p_size ? double(n_strict) / double(p_size) : 0.0;
  }
  double fpa() const { return p_size ? double(n_flex) / double(p_size) : 0.0; }
};

// Scores one instance. `alignment_out`, when given, receives the call
// alignment for diagnostics. Throws Error(kEmptyGroundTruth) when G is
// empty.
InstanceScores score_instance(const std::vector<FunctionCall>& predictions,
                              const std::vector<FunctionCall>& gold,
                              const CallMatcher& matcher,
                              Alignment* alignment_out = nullptr);

// Macro averages as fractions in [0, 1]; absent when n == 0.
struct MetricValues {
  size_t n = 0;
  std::optional<double> sp, fp, spa, fpa;
};

struct MetricReport {
  std::string setting;  // e.g. "hybrid20" or "gt"
  // Keyed by "SH", "MH", "ST", "MT", and "turn_overall" /
  // "conversation_overall".
  std::map<std::string, MetricValues> buckets;
  // subset -> bucket key -> values
  std::map<std::string, std::map<std::string, MetricValues>> subsets;
  struct Missing {
    std::string instance_id;
    size_t turn_index;
  };
  std::vector<Missing> missing_predictions;
};

// Macro-averages instance scores per bucket, overall, and per subset. All
// scores must share one granularity (Error(kMixedGranularity)).
MetricReport aggregate(const std::vector<InstanceScores>& scores);

// Raw model responses keyed by (instance id, turn index). Several records
// for the same key are concatenated in order.
class PredictionSet {
 public:
  void add(const std::string& instance_id, size_t turn_index,
           std::string response);
  const std::string* find(const std::string& instance_id,
                          size_t turn_index) const;
  size_t size() const { return responses_.size(); }

  // Lines of {"id": ..., "turn": <0-based>, "response": "..."}.
  static PredictionSet load(const std::filesystem::path& path);

 private:
  std::map<std::pair<std::string, size_t>, std::string> responses_;
};

struct EvaluationResult {
  MetricReport report;
  std::vector<InstanceScores> turn_scores;
  std::vector<InstanceScores> conversation_scores;
  Json diagnostics = Json::array();  // one entry per scored instance
};

// Scores every turn (SH/MH) and every conversation (ST/MT). Turns with no
// prediction record score as P = [] and are listed in
// report.missing_predictions.
EvaluationResult bucket_metrics(const std::vector<Conversation>& conversations,
                                const PredictionSet& predictions,
                                const CallMatcher& matcher);

// Percent with one decimal, rounded half up.
double to_percent(double fraction);

Json report_to_json(const MetricReport& report);
// Plain-text table with SP/FP/SPA/FPA under SH, MH, ST, MT.
std::string report_to_table(const MetricReport& report);

}  // namespace toolcall

#endif  // TOOLCALL_METRICS_METRICS_H_
