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

#include <gtest/gtest.h>

#include <cctype>

#include "test_util.h"
#include "toolcall/curation/curation.h"
#include "toolcall/util/rng.h"

namespace toolcall {
namespace {

using testing::tool;

ToolSpec with_source(ToolSpec t, Source s) {
  t.source = s;
  return t;
}

std::vector<std::string> names(const std::vector<ToolSpec>& tools) {
  std::vector<std::string> out;
  for (const ToolSpec& t : tools) out.push_back(t.name);
  return out;
}

std::shared_ptr<Embedder> hashing() { return std::make_shared<HashingEmbedder>(256, 11); }

TEST(ExactDedupTest, ProtectedCopyWins) {
  const auto r = exact_dedup({with_source(tool("t", "same"), Source::kRet),
                              with_source(tool("t", "same"), Source::kTrain)});
  ASSERT_EQ(r.tools.size(), 1u);
  EXPECT_EQ(r.tools[0].source, Source::kTrain);
  EXPECT_TRUE(r.report.balanced());
}

TEST(ExactDedupTest, EmptyAndDistinctDescriptions) {
  EXPECT_TRUE(exact_dedup({}).tools.empty());
  const auto r = exact_dedup({tool("t", "one"), tool("t", "two"), tool("t", "one")});
  EXPECT_EQ(r.tools.size(), 2u);
  EXPECT_EQ(r.tools[1].description, "two");
}

TEST(TemporalTest, CommonParameterNames) {
  const TemporalFilterConfig cfg;
  auto hit = match_temporal_name("travel_date", cfg);
  ASSERT_TRUE(hit);
  EXPECT_EQ(hit->keyword, "date");
  EXPECT_EQ(hit->convention, NamingConvention::kSnake);
  hit = match_temporal_name("startTime", cfg);
  ASSERT_TRUE(hit);
  EXPECT_EQ(hit->convention, NamingConvention::kCamel);
  EXPECT_FALSE(match_temporal_name("update", cfg));
  EXPECT_FALSE(match_temporal_name("updated_by", cfg));
  EXPECT_FALSE(match_temporal_name("timeline", cfg));
}

TEST(TemporalTest, NestedParametersAndReport) {
  ToolSpec t = tool("book", "books", {"trip"});
  Schema inner;
  inner.type = "object";
  inner.has_properties = true;
  inner.properties.push_back({"pickupTime", Schema{}});
  t.input_schema->properties[0].schema = inner;
  const auto r = temporal_filter({t, tool("ok")}, TemporalFilterConfig{});
  EXPECT_EQ(names(r.tools), std::vector<std::string>{"ok"});
  ASSERT_EQ(r.report.removed.size(), 1u);
  EXPECT_NE(r.report.removed[0].reason.find("input_schema.properties.trip.properties.pickupTime"),
            std::string::npos);
}

TEST(TemporalTest, DescriptionsAreIgnored) {
  const auto r = temporal_filter({tool("t", "returns the date and time", {"city"})},
                                 TemporalFilterConfig{});
  EXPECT_EQ(r.tools.size(), 1u);
}

std::string camel(const std::string& prefix, const std::string& kw) {
  std::string out = prefix;
  bool upper = true;
  for (char c : kw) {
    if (c == '_') {
      upper = true;
      continue;
    }
    out.push_back(upper ? static_cast<char>(std::toupper(c)) : c);
    upper = false;
  }
  return out;
}

std::string kebab(std::string kw) {
  std::replace(kw.begin(), kw.end(), '_', '-');
  return kw;
}

TEST(TemporalProperty, EveryKeywordUnderEveryConvention) {
  for (NamingConvention conv : {NamingConvention::kSnake, NamingConvention::kKebab,
                                NamingConvention::kCamel,
                                NamingConvention::kWordBoundary}) {
    TemporalFilterConfig cfg;
    cfg.conventions = {conv};
    for (const std::string& kw : cfg.all_keywords()) {
      std::vector<std::string> forms;
      switch (conv) {
        case NamingConvention::kSnake: forms = {"travel_" + kw, kw + "_value"}; break;
        case NamingConvention::kKebab: forms = {"travel-" + kebab(kw), kebab(kw) + "-value"}; break;
        case NamingConvention::kCamel: forms = {camel("travel", kw), camel("", kw) + "Value"}; break;
        case NamingConvention::kWordBoundary: forms = {kw, "travel " + kw}; break;
      }
      for (const std::string& name : forms) {
        const auto hit = match_temporal_name(name, cfg);
        ASSERT_TRUE(hit) << name << " under " << to_string(conv);
        EXPECT_EQ(hit->convention, conv);
      }
      EXPECT_FALSE(match_temporal_name("update", cfg)) << to_string(conv);
    }
  }
}

TEST(TemporalTest, ConfigOverride) {
  const auto cfg = TemporalFilterConfig::from_json(
      Json::parse(R"({"core": ["eta"], "units": [], "periods": [], "actions": [],
                      "scenarios": [], "conventions": ["snake"]})"));
  EXPECT_TRUE(match_temporal_name("pickup_eta", cfg));
  EXPECT_FALSE(match_temporal_name("pickup_date", cfg));
  EXPECT_THROW(TemporalFilterConfig::from_json(Json::parse(R"({"core": ["Date"]})")), Error);
  EXPECT_THROW(TemporalFilterConfig::from_json(Json::parse(R"({"conventions": ["pascal"]})")),
               Error);
}

TEST(SchemaTest, Validity) {
  ToolSpec none = tool("n");
  none.input_schema.reset();
  EXPECT_FALSE(validate_schema(none).valid);

  const Json sample = Json::parse(R"({"name": "MedicalRecordAccess",
    "description": "API for providing secure access to medical records.",
    "category": "operations", "domain": "healthcare",
    "inputSchema": {"type": "object", "properties": {"patient_name": {"type": "str",
    "description": "The name of the patient."}}, "required": ["patient_name"]}})");
  EXPECT_TRUE(validate_schema(tool_from_json(sample)).valid);

  ToolSpec dangling = tool("d", "d", {});
  dangling.input_schema->required = {"x"};
  const SchemaCheck c = validate_schema(dangling);
  EXPECT_FALSE(c.valid);
  ASSERT_EQ(c.violations.size(), 1u);
  EXPECT_EQ(c.violations[0].rfind("input_schema.required[0]", 0), 0u);

  ToolSpec no_props = tool("p", "p", {});
  no_props.input_schema->has_properties = false;
  EXPECT_FALSE(validate_schema(no_props).valid);
}

TEST(SemanticDedupTest, IdenticalAndProtected) {
  CachingEmbedder e(hashing());
  auto r = semantic_dedup({tool("same", "desc"), tool("same", "desc")}, e);
  EXPECT_EQ(r.tools.size(), 1u);

  r = semantic_dedup({with_source(tool("same", "desc"), Source::kMcpSo),
                      with_source(tool("same", "desc"), Source::kTest)},
                     e);
  ASSERT_EQ(r.tools.size(), 1u);
  EXPECT_EQ(r.tools[0].source, Source::kTest);
}

TEST(SemanticDedupTest, OrthogonalVectorsKeepEverything) {
  CachingEmbedder e(std::make_shared<TableEmbedder>(std::map<std::string, Vector>{
      {"a: x", {1, 0, 0}}, {"b: y", {0, 1, 0}}, {"c: z", {0, 0, 1}}}));
  const auto r = semantic_dedup({tool("a", "x"), tool("b", "y"), tool("c", "z")}, e);
  EXPECT_EQ(r.tools.size(), 3u);
}

TEST(SemanticDedupTest, ThresholdOneRemovesOnlyIdenticalEmbeddings) {
  CachingEmbedder e(std::make_shared<TableEmbedder>(std::map<std::string, Vector>{
      {"a: x", {1, 0}}, {"b: y", {1, 0}}, {"c: z", {1, 1e-6}}}));
  const auto r = semantic_dedup({tool("a", "x"), tool("b", "y"), tool("c", "z")}, e, 1.0);
  EXPECT_EQ(names(r.tools), (std::vector<std::string>{"a", "c"}));
  EXPECT_THROW(semantic_dedup({}, e, 0.0), Error);
}

ToolSpec schemaless(std::string name) {
  ToolSpec t = tool(std::move(name), "no schema");
  t.input_schema.reset();
  return t;
}

std::vector<ToolSpec> six_tool_fixture() {
  return {tool("alpha", "first tool"),
          tool("alpha", "first tool"),                          // exact duplicate
          tool("trip", "plans trips", {"travel_date"}),         // temporal
          schemaless("bare"),                                   // no schema
          tool("delta", "looks up stock prices"),
          tool("delta_v2", "looks up stock prices")};           // near duplicate
}

std::shared_ptr<Embedder> fixture_embedder() {
  return std::make_shared<TableEmbedder>(std::map<std::string, Vector>{
      {"alpha: first tool", {1, 0, 0}},
      {"delta: looks up stock prices", {0, 1, 0}},
      {"delta_v2: looks up stock prices", {0, 0.99, 0.05}}});
}

TEST(RunCurationTest, SixToolFixtureLeavesTwo) {
  CachingEmbedder e(fixture_embedder());
  const StageResult r = run_curation(six_tool_fixture(), CurationConfig{}, &e);
  EXPECT_EQ(names(r.tools), (std::vector<std::string>{"alpha", "delta"}));
  ASSERT_EQ(r.report.stage_counts.size(), 4u);
  const size_t expected_removed[] = {1, 1, 1, 1};
  for (size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(r.report.stage_counts[i].removed, expected_removed[i]);
  }
  EXPECT_EQ(r.report.stage_counts[0].in, 6u);
  EXPECT_EQ(r.report.stage_counts[3].out, 2u);
  EXPECT_TRUE(r.report.balanced());
}

TEST(RunCurationTest, DisjointValidToolsAreUntouched) {
  CachingEmbedder e(hashing());
  const std::vector<ToolSpec> in = {tool("weather", "current weather", {"city"}),
                                    tool("stocks", "share quotes", {"ticker"})};
  EXPECT_EQ(run_curation(in, CurationConfig{}, &e).tools, in);
}

TEST(RunCurationTest, TemporalDuplicateIsAttributedToDedup) {
  CurationConfig cfg;
  cfg.skip_semantic = true;
  const ToolSpec t = tool("trip", "plans", {"travel_date"});
  const StageResult r = run_curation({t, t}, cfg, nullptr);
  EXPECT_TRUE(r.tools.empty());
  ASSERT_EQ(r.report.removed.size(), 2u);
  EXPECT_EQ(r.report.removed[0].stage, "exact_dedup");
  EXPECT_EQ(r.report.removed[1].stage, "temporal_filter");
}

class BrokenEmbedder : public Embedder {
 public:
  std::vector<Vector> embed_batch(std::span<const std::string>) override {
    throw Error(ErrorCode::kProviderError, "offline");
  }
};

TEST(RunCurationTest, EmbedderFailureCarriesPartialReport) {
  CachingEmbedder e(std::make_shared<BrokenEmbedder>());
  try {
    run_curation(six_tool_fixture(), CurationConfig{}, &e);
    FAIL();
  } catch (const CurationAborted& a) {
    EXPECT_EQ(a.code(), ErrorCode::kEmbedderUnavailable);
    EXPECT_EQ(a.partial_report().stage_counts.size(), 3u);
    EXPECT_TRUE(a.partial_report().balanced());
  }
}

TEST(CurationProperty, IdempotentAndBalanced) {
  SeededRng rng(77);
  const char* words[] = {"search", "hotel", "price", "stock", "weather", "city",
                         "convert", "currency", "user", "profile"};
  const char* params[] = {"query", "city", "amount", "start_date", "userId",
                          "updateMode", "limit", "endTime"};
  for (int round = 0; round < 20; ++round) {
    std::vector<ToolSpec> pool;
    for (int i = 0; i < 60; ++i) {
      std::string desc = std::string(words[rng.uniform_index(10)]) + " " +
                         words[rng.uniform_index(10)];
      ToolSpec t = tool("t" + std::to_string(rng.uniform_index(40)), desc,
                        {params[rng.uniform_index(8)]});
      if (rng.uniform_index(10) == 0) t.input_schema.reset();
      if (rng.uniform_index(5) == 0) t.source = Source::kTrain;
      pool.push_back(t);
    }
    CachingEmbedder e(hashing());
    const StageResult once = run_curation(pool, CurationConfig{}, &e);
    const StageResult twice = run_curation(once.tools, CurationConfig{}, &e);
    ASSERT_EQ(twice.tools, once.tools);
    ASSERT_TRUE(once.report.balanced());
    for (const StageCount& s : twice.report.stage_counts) ASSERT_EQ(s.removed, 0u);
  }
}

}  // namespace
}  // namespace toolcall
