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

#include "toolcall/curation/curation.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "toolcall/util/text.h"

namespace toolcall {
namespace {

using Words = std::vector<std::string>;

Words split_on(std::string_view s, char sep) {
  Words out;
  for (const std::string& piece : split_nonempty(s, sep)) {
    out.push_back(to_lower(piece));
  }
  return out;
}

// Words at lower->upper and letter<->digit transitions.
Words camel_words(std::string_view s) {
  Words out;
  std::string cur;
  for (size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (!is_ascii_alpha(c) && !is_ascii_digit(c)) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
      continue;
    }
    if (i > 0 && !cur.empty()) {
      const char p = s[i - 1];
      const bool split = (is_ascii_lower(p) && is_ascii_upper(c)) ||
                         (is_ascii_digit(p) != is_ascii_digit(c));
      if (split) {
        out.push_back(std::move(cur));
        cur.clear();
      }
    }
    cur.push_back(ascii_lower(c));
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

// Tokens delimited the way a regex \b sees them: [A-Za-z0-9_] is a word.
Words boundary_words(std::string_view s) {
  Words out;
  std::string cur;
  for (char c : s) {
    if (is_ascii_alpha(c) || is_ascii_digit(c) || c == '_') {
      cur.push_back(ascii_lower(c));
    } else if (!cur.empty()) {
      out.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

bool contains_run(const Words& words, const Words& run) {
  if (run.empty() || run.size() > words.size()) return false;
  return std::search(words.begin(), words.end(), run.begin(), run.end()) !=
         words.end();
}

bool matches(NamingConvention conv, std::string_view name,
             const std::string& keyword) {
  const Words kw = split_on(keyword, '_');
  switch (conv) {
    case NamingConvention::kSnake: return contains_run(split_on(name, '_'), kw);
    case NamingConvention::kKebab: return contains_run(split_on(name, '-'), kw);
    case NamingConvention::kCamel: return contains_run(camel_words(name), kw);
    case NamingConvention::kWordBoundary: {
      const Words tokens = boundary_words(name);
      return contains_run(tokens, Words{keyword}) || contains_run(tokens, kw);
    }
  }
  return false;
}

void scan_schema(const Schema& schema, const std::string& path,
                 const TemporalFilterConfig& cfg,
                 std::optional<TemporalHit>& hit) {
  for (const SchemaProperty& p : schema.properties) {
    if (hit) return;
    const std::string here = path + ".properties." + p.name;
    if (auto h = match_temporal_name(p.name, cfg)) {
      h->parameter = here;
      hit = std::move(h);
      return;
    }
    scan_schema(p.schema, here, cfg, hit);
  }
  auto items = schema.extras.find("items");
  if (!hit && items != schema.extras.end() && items->is_object()) {
    scan_schema(schema_from_json(*items), path + ".items", cfg, hit);
  }
}

void check_schema(const Schema& schema, const std::string& path,
                  std::vector<std::string>& violations) {
  if (!schema.required.empty() && !schema.has_properties) {
    violations.push_back(path + ".properties: missing while required is set");
  }
  for (size_t i = 0; i < schema.required.size(); ++i) {
    if (!schema.find_property(schema.required[i])) {
      violations.push_back(path + ".required[" + std::to_string(i) + "]: '" +
                           schema.required[i] + "' is not a property");
    }
  }
  for (const SchemaProperty& p : schema.properties) {
    check_schema(p.schema, path + ".properties." + p.name, violations);
  }
}

StageCount count(std::string stage, size_t in, size_t out) {
  return {std::move(stage), in, in - out, out};
}

std::string describe_source(const ToolSpec& t) {
  return t.source ? std::string(to_string(*t.source)) : "unlabeled";
}

}  // namespace

void CurationReport::append(const CurationReport& other) {
  stage_counts.insert(stage_counts.end(), other.stage_counts.begin(),
                      other.stage_counts.end());
  removed.insert(removed.end(), other.removed.begin(), other.removed.end());
}

bool CurationReport::balanced() const {
  for (size_t i = 0; i < stage_counts.size(); ++i) {
    const StageCount& s = stage_counts[i];
    if (s.in < s.removed || s.in - s.removed != s.out) return false;
    if (i > 0 && stage_counts[i - 1].out != s.in) return false;
    const size_t listed = static_cast<size_t>(std::count_if(
        removed.begin(), removed.end(),
        [&](const Removal& r) { return r.stage == s.stage; }));
    if (listed != s.removed) return false;
  }
  return true;
}

Json CurationReport::to_json() const {
  Json stages = Json::array();
  for (const StageCount& s : stage_counts) {
    stages.push_back(
        {{"stage", s.stage}, {"in", s.in}, {"removed", s.removed}, {"out", s.out}});
  }
  Json rem = Json::array();
  for (const Removal& r : removed) {
    rem.push_back({{"stage", r.stage}, {"tool", r.tool}, {"reason", r.reason}});
  }
  return {{"stages", stages}, {"removed", rem}};
}

std::string_view to_string(NamingConvention c) {
  switch (c) {
    case NamingConvention::kSnake: return "snake";
    case NamingConvention::kKebab: return "kebab";
    case NamingConvention::kCamel: return "camel";
    case NamingConvention::kWordBoundary: return "word_boundary";
  }
  return "snake";
}

std::vector<std::string> TemporalFilterConfig::all_keywords() const {
  std::vector<std::string> out;
  for (const auto* list : {&core_keywords, &unit_keywords, &period_keywords,
                           &action_keywords, &scenario_keywords}) {
    out.insert(out.end(), list->begin(), list->end());
  }
  return out;
}

TemporalFilterConfig TemporalFilterConfig::from_json(const Json& j) {
  if (!j.is_object()) {
    throw Error(ErrorCode::kConfigError, "temporal keyword file must be an object");
  }
  TemporalFilterConfig cfg;
  auto load = [&](const char* key, std::vector<std::string>& dst) {
    auto it = j.find(key);
    if (it == j.end()) return;
    if (!it->is_array()) {
      throw Error(ErrorCode::kConfigError, std::string(key) + " must be a list");
    }
    dst.clear();
    for (const Json& k : *it) {
      if (!k.is_string() || k.get<std::string>().empty() ||
          to_lower(k.get<std::string>()) != k.get<std::string>()) {
        throw Error(ErrorCode::kConfigError,
                    std::string(key) + " entries must be lowercase strings");
      }
      dst.push_back(k.get<std::string>());
    }
  };
  load("core", cfg.core_keywords);
  load("units", cfg.unit_keywords);
  load("periods", cfg.period_keywords);
  load("actions", cfg.action_keywords);
  load("scenarios", cfg.scenario_keywords);
  if (auto it = j.find("conventions"); it != j.end()) {
    cfg.conventions.clear();
    for (const Json& c : *it) {
      const std::string name = c.is_string() ? c.get<std::string>() : "";
      bool known = false;
      for (auto conv : {NamingConvention::kSnake, NamingConvention::kKebab,
                        NamingConvention::kCamel, NamingConvention::kWordBoundary}) {
        if (to_string(conv) == name) {
          cfg.conventions.insert(conv);
          known = true;
        }
      }
      if (!known) {
        throw Error(ErrorCode::kConfigError, "unknown naming convention '" + name + "'");
      }
    }
  }
  return cfg;
}

std::optional<TemporalHit> match_temporal_name(std::string_view name,
                                               const TemporalFilterConfig& cfg) {
  for (NamingConvention conv : cfg.conventions) {
    for (const std::string& kw : cfg.all_keywords()) {
      if (matches(conv, name, kw)) return TemporalHit{std::string(name), kw, conv};
    }
  }
  return std::nullopt;
}

std::optional<TemporalHit> find_temporal_parameter(
    const ToolSpec& tool, const TemporalFilterConfig& cfg) {
  std::optional<TemporalHit> hit;
  if (tool.input_schema) scan_schema(*tool.input_schema, "input_schema", cfg, hit);
  return hit;
}

SchemaCheck validate_schema(const ToolSpec& tool) {
  SchemaCheck out;
  if (!tool.input_schema) {
    out.violations.push_back("input_schema: missing");
  } else if (!tool.input_schema->has_properties) {
    out.violations.push_back("input_schema.properties: missing");
    check_schema(*tool.input_schema, "input_schema", out.violations);
  } else {
    check_schema(*tool.input_schema, "input_schema", out.violations);
  }
  // The missing-properties case can be reported twice; keep one.
  auto& v = out.violations;
  v.erase(std::unique(v.begin(), v.end()), v.end());
  out.valid = v.empty();
  return out;
}

StageResult exact_dedup(const std::vector<ToolSpec>& tools) {
  // Chosen index per (name, description).
  std::map<std::pair<std::string, std::string>, size_t> keeper;
  for (size_t i = 0; i < tools.size(); ++i) {
    const auto key = std::make_pair(tools[i].name, tools[i].description);
    auto [it, inserted] = keeper.emplace(key, i);
    if (!inserted && is_protected_source(tools[i].source) &&
        !is_protected_source(tools[it->second].source)) {
      it->second = i;
    }
  }
  StageResult r;
  for (size_t i = 0; i < tools.size(); ++i) {
    const size_t k = keeper.at({tools[i].name, tools[i].description});
    if (k == i) {
      r.tools.push_back(tools[i]);
    } else {
      r.report.removed.push_back(
          {"exact_dedup", tools[i].name,
           "same name and description as entry " + std::to_string(k) + " (" +
               describe_source(tools[k]) + ")"});
    }
  }
  r.report.stage_counts.push_back(count("exact_dedup", tools.size(), r.tools.size()));
  return r;
}

StageResult temporal_filter(const std::vector<ToolSpec>& tools,
                            const TemporalFilterConfig& cfg) {
  StageResult r;
  for (const ToolSpec& t : tools) {
    if (auto hit = find_temporal_parameter(t, cfg)) {
      r.report.removed.push_back(
          {"temporal_filter", t.name,
           "parameter " + hit->parameter + " matches '" + hit->keyword +
               "' (" + std::string(to_string(hit->convention)) + ")"});
    } else {
      r.tools.push_back(t);
    }
  }
  r.report.stage_counts.push_back(
      count("temporal_filter", tools.size(), r.tools.size()));
  return r;
}

StageResult schema_filter(const std::vector<ToolSpec>& tools) {
  StageResult r;
  for (const ToolSpec& t : tools) {
    const SchemaCheck check = validate_schema(t);
    if (check.valid) {
      r.tools.push_back(t);
      continue;
    }
    std::string reason;
    for (const std::string& v : check.violations) {
      if (!reason.empty()) reason += "; ";
      reason += v;
    }
    r.report.removed.push_back({"schema_validation", t.name, reason});
  }
  r.report.stage_counts.push_back(
      count("schema_validation", tools.size(), r.tools.size()));
  return r;
}

StageResult semantic_dedup(const std::vector<ToolSpec>& tools,
                           CachingEmbedder& embedder, double threshold) {
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "dedup threshold must lie in (0, 1]");
  }
  StageResult r;
  if (tools.empty()) {
    r.report.stage_counts.push_back(count("semantic_dedup", 0, 0));
    return r;
  }
  std::vector<std::string> texts;
  for (const ToolSpec& t : tools) texts.push_back(embedding_text(t));
  std::vector<Vector> vectors;
  try {
    vectors = embedder.embed(texts).vectors;
  } catch (const Error& e) {
    throw Error(ErrorCode::kEmbedderUnavailable, "embedding failed: " + std::string(e.what()));
  }

  std::vector<double> norms;
  for (const Vector& v : vectors) {
    double s = 0.0;
    for (double x : v) s += x * x;
    norms.push_back(std::sqrt(s));
  }
  auto duplicate = [&](size_t a, size_t b) {
    if (vectors[a] == vectors[b]) return true;
    if (norms[a] == 0.0 || norms[b] == 0.0) return false;
    double dot = 0.0;
    for (size_t i = 0; i < vectors[a].size(); ++i) dot += vectors[a][i] * vectors[b][i];
    return dot / (norms[a] * norms[b]) > threshold;
  };

  // Protected tools claim their place first, then the rest in input order.
  std::vector<size_t> order(tools.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_partition(order.begin(), order.end(), [&](size_t i) {
    return is_protected_source(tools[i].source);
  });
  std::vector<size_t> kept;
  std::vector<std::optional<size_t>> dup_of(tools.size());
  for (size_t i : order) {
    for (size_t k : kept) {
      if (duplicate(i, k)) {
        dup_of[i] = k;
        break;
      }
    }
    if (!dup_of[i]) kept.push_back(i);
  }
  for (size_t i = 0; i < tools.size(); ++i) {
    if (!dup_of[i]) {
      r.tools.push_back(tools[i]);
    } else {
      const ToolSpec& k = tools[*dup_of[i]];
      r.report.removed.push_back({"semantic_dedup", tools[i].name,
                                  "near-duplicate of " + k.name + " (" +
                                      describe_source(k) + ")"});
    }
  }
  r.report.stage_counts.push_back(
      count("semantic_dedup", tools.size(), r.tools.size()));
  return r;
}

StageResult run_curation(const std::vector<ToolSpec>& tools,
                         const CurationConfig& cfg, CachingEmbedder* embedder) {
  StageResult acc = exact_dedup(tools);
  StageResult t = temporal_filter(acc.tools, cfg.temporal);
  acc.report.append(t.report);
  StageResult s = schema_filter(t.tools);
  acc.report.append(s.report);
  acc.tools = std::move(s.tools);
  if (cfg.skip_semantic) return acc;
  if (!embedder) {
    throw CurationAborted("semantic dedup needs an embedder", acc.report);
  }
  try {
    StageResult d = semantic_dedup(acc.tools, *embedder, cfg.semantic_threshold);
    acc.report.append(d.report);
    acc.tools = std::move(d.tools);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kEmbedderUnavailable) throw;
    throw CurationAborted(e.message(), acc.report);
  }
  return acc;
}

}  // namespace toolcall
