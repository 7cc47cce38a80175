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

#ifndef TOOLCALL_MODEL_TOOL_SPEC_H_
#define TOOLCALL_MODEL_TOOL_SPEC_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toolcall/util/io.h"

namespace toolcall {

// Functional role of a tool.
enum class Category { kAnalysis, kOperations, kSystem, kVisualization, kSearch,
                      kGenerate };

// Application area of a tool.
enum class Domain { kFinance, kTechnology, kEducation, kHealthcare,
                    kEntertainment, kTravel, kBusiness, kLifestyle, kScience,
                    kSocial, kSports, kEnvironment, kCulture };

// Which subset of the raw pool a tool was collected from.
enum class Source { kFc, kRet, kMcpSo, kMcpUni, kTrain, kTest, kSynthetic };

inline constexpr Category kAllCategories[] = {
    Category::kAnalysis, Category::kOperations,    Category::kSystem,
    Category::kVisualization, Category::kSearch,   Category::kGenerate};
inline constexpr Domain kAllDomains[] = {
    Domain::kFinance,  Domain::kTechnology,    Domain::kEducation,
    Domain::kHealthcare, Domain::kEntertainment, Domain::kTravel,
    Domain::kBusiness, Domain::kLifestyle,     Domain::kScience,
    Domain::kSocial,   Domain::kSports,        Domain::kEnvironment,
    Domain::kCulture};

std::string_view to_string(Category c);
std::string_view to_string(Domain d);
std::string_view to_string(Source s);
// Case-insensitive; nullopt for labels outside the taxonomy.
std::optional<Category> parse_category(std::string_view s);
std::optional<Domain> parse_domain(std::string_view s);
std::optional<Source> parse_source(std::string_view s);

// Train/test tools survive deduplication against external copies.
inline bool is_protected_source(std::optional<Source> s) {
  return s == Source::kTrain || s == Source::kTest;
}

struct SchemaProperty;

// Recursive parameter schema. Keys the model does not interpret
// (additionalProperties, items, enum, ...) are carried in `extras` so a
// tool definition survives a parse/serialize cycle.
struct Schema {
  std::optional<std::string> type;
  std::optional<std::string> description;
  bool has_properties = false;
  std::vector<SchemaProperty> properties;
  std::vector<std::string> required;
  Json extras = Json::object();

  const Schema* find_property(std::string_view name) const;

  friend bool operator==(const Schema&, const Schema&);
};

struct SchemaProperty {
  std::string name;
  Schema schema;

  friend bool operator==(const SchemaProperty&, const SchemaProperty&) =
      default;
};

struct ToolSpec {
  std::string name;
  std::string description;
  std::optional<Schema> input_schema;
  std::optional<Category> category;
  std::optional<Domain> domain;
  std::optional<Source> source;

  friend bool operator==(const ToolSpec&, const ToolSpec&) = default;
};

// Text used to embed a tool for similarity search.
std::string embedding_text(const ToolSpec& tool);

Schema schema_from_json(const Json& j);
Json schema_to_json(const Schema& s);

// Wire shape: {name, description, category, domain, inputSchema[, source]}.
// Throws Error(kMalformedRecord) on a missing name or unknown label.
ToolSpec tool_from_json(const Json& j);
Json tool_to_json(const ToolSpec& tool);

// Tool lists as carried in a conversation's `tools` string.
std::vector<ToolSpec> tools_from_string(std::string_view encoded);
std::string tools_to_string(const std::vector<ToolSpec>& tools);

// One ToolSpec per line.
std::vector<ToolSpec> load_tool_pool(const std::filesystem::path& path);
std::string dump_tool_pool(const std::vector<ToolSpec>& tools);

}  // namespace toolcall

#endif  // TOOLCALL_MODEL_TOOL_SPEC_H_
