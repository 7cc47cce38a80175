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

#ifndef TOOLCALL_CURATION_CURATION_H_
#define TOOLCALL_CURATION_CURATION_H_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "toolcall/error.h"
#include "toolcall/model/tool_spec.h"
#include "toolcall/providers/embedder.h"

namespace toolcall {

struct StageCount {
  std::string stage;
  size_t in = 0;
  size_t removed = 0;
  size_t out = 0;
};

struct Removal {
  std::string stage;
  std::string tool;
  std::string reason;
};

struct CurationReport {
  std::vector<StageCount> stage_counts;
  std::vector<Removal> removed;

  // Appends another report's stages after this one's.
  void append(const CurationReport& other);
  // in - removed == out per stage, and each stage starts where the
  // previous one ended.
  bool balanced() const;
  Json to_json() const;
};

struct StageResult {
  std::vector<ToolSpec> tools;
  CurationReport report;
};

enum class NamingConvention { kSnake, kKebab, kCamel, kWordBoundary };
std::string_view to_string(NamingConvention c);

struct TemporalFilterConfig {
  std::vector<std::string> core_keywords{"date", "dates", "time", "times",
                                         "datetime", "timestamp"};
  std::vector<std::string> unit_keywords{"day",    "days",    "hour",
                                         "hours",  "minute",  "minutes",
                                         "second", "seconds"};
  std::vector<std::string> period_keywords{"year",  "years", "month",
                                           "months", "week", "weeks"};
  std::vector<std::string> action_keywords{"when",     "schedule", "scheduled",
                                           "duration", "period",   "periods"};
  std::vector<std::string> scenario_keywords{"start_time", "end_time",
                                             "start_date", "end_date",
                                             "pickup_time", "dropoff_time"};
  std::set<NamingConvention> conventions{
      NamingConvention::kSnake, NamingConvention::kKebab,
      NamingConvention::kCamel, NamingConvention::kWordBoundary};

  std::vector<std::string> all_keywords() const;

  // Overrides from {"core": [...], "units": [...], "periods": [...],
  // "actions": [...], "scenarios": [...], "conventions": [...]}; absent
  // keys keep their defaults. Throws Error(kConfigError) for keywords that
  // are not lowercase or unknown conventions.
  static TemporalFilterConfig from_json(const Json& j);
};

struct TemporalHit {
  std::string parameter;  // path such as input_schema.properties.when
  std::string keyword;
  NamingConvention convention;
};

// Matches one parameter name against the configured keywords.
std::optional<TemporalHit> match_temporal_name(std::string_view name,
                                               const TemporalFilterConfig& cfg);
// First parameter, at any nesting depth, whose name matches.
std::optional<TemporalHit> find_temporal_parameter(
    const ToolSpec& tool, const TemporalFilterConfig& cfg);

struct SchemaCheck {
  bool valid = true;
  std::vector<std::string> violations;  // "<path>: <problem>"
};

SchemaCheck validate_schema(const ToolSpec& tool);

// Keeps one copy per (name, description); a train/test copy wins over
// external ones, otherwise the first seen.
StageResult exact_dedup(const std::vector<ToolSpec>& tools);
StageResult temporal_filter(const std::vector<ToolSpec>& tools,
                            const TemporalFilterConfig& cfg);
StageResult schema_filter(const std::vector<ToolSpec>& tools);

inline constexpr double kDefaultDedupThreshold = 0.9;

// Two tools are duplicates when their embeddings are identical or their
// cosine similarity exceeds `threshold`. Train/test tools are kept in
// preference to external ones; otherwise the earliest survives. Throws
// Error(kInvalidArgument) for a threshold outside (0, 1] and
// Error(kEmbedderUnavailable) when embedding fails.
StageResult semantic_dedup(const std::vector<ToolSpec>& tools,
                           CachingEmbedder& embedder,
                           double threshold = kDefaultDedupThreshold);

struct CurationConfig {
  TemporalFilterConfig temporal;
  double semantic_threshold = kDefaultDedupThreshold;
  bool skip_semantic = false;
};

// Raised when the semantic stage cannot embed; carries the stages that
// completed.
class CurationAborted : public Error {
 public:
  CurationAborted(const std::string& message, CurationReport partial)
      : Error(ErrorCode::kEmbedderUnavailable, message),
        partial_(std::move(partial)) {}
  const CurationReport& partial_report() const { return partial_; }

 private:
  CurationReport partial_;
};

// exact_dedup, temporal_filter, schema_filter, then semantic_dedup. The
// embedder may be null only when cfg.skip_semantic is set.
StageResult run_curation(const std::vector<ToolSpec>& tools,
                         const CurationConfig& cfg, CachingEmbedder* embedder);

}  // namespace toolcall

#endif  // TOOLCALL_CURATION_CURATION_H_
