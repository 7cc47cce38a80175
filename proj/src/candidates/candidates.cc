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

#include "toolcall/candidates/candidates.h"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "toolcall/error.h"
#include "toolcall/util/rng.h"

namespace toolcall {
namespace {

std::vector<ToolSpec> unique_by_name(const std::vector<ToolSpec>& tools) {
  std::unordered_set<std::string> seen;
  std::vector<ToolSpec> out;
  for (const ToolSpec& t : tools) {
    if (seen.insert(t.name).second) out.push_back(t);
  }
  return out;
}

Vector normalized(const Vector& v) {
  double n = 0.0;
  for (double x : v) n += x * x;
  n = std::sqrt(n);
  Vector out(v.size(), 0.0);
  if (n == 0.0) return out;
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] / n;
  return out;
}

// Cosine to the centroid; vectors with no direction rank below everything.
double similarity(const Vector& centroid, const Vector& v) {
  double dot = 0.0, nc = 0.0, nv = 0.0;
  for (size_t i = 0; i < v.size(); ++i) {
    dot += centroid[i] * v[i];
    nc += centroid[i] * centroid[i];
    nv += v[i] * v[i];
  }
  if (nc == 0.0) return 0.0;
  if (nv == 0.0) return -2.0;
  return dot / (std::sqrt(nc) * std::sqrt(nv));
}

}  // namespace

std::string_view to_string(CandidateMode m) {
  return m == CandidateMode::kHybrid20 ? "hybrid20" : "gt";
}

CandidateList assemble_gt(const std::vector<ToolSpec>& gt_tools) {
  if (gt_tools.empty()) {
    throw Error(ErrorCode::kEmptyGroundTruth, "no ground-truth tools");
  }
  CandidateList out;
  out.mode = CandidateMode::kGt;
  out.anchors = unique_by_name(gt_tools);
  out.presented = out.anchors;
  return out;
}

CandidateList assemble_hybrid(const std::vector<ToolSpec>& gt_tools,
                              const std::vector<ToolSpec>& pool,
                              CachingEmbedder& embedder, uint64_t seed) {
  CandidateList out;
  out.mode = CandidateMode::kHybrid20;
  out.seed = seed;
  out.anchors = unique_by_name(gt_tools);
  if (out.anchors.empty()) {
    throw Error(ErrorCode::kEmptyGroundTruth, "no ground-truth tools");
  }
  if (out.anchors.size() > kMaxAnchors) {
    throw Error(ErrorCode::kTooManyAnchors,
                std::to_string(out.anchors.size()) + " ground-truth tools; at most " +
                    std::to_string(kMaxAnchors) + " fit a hybrid list");
  }
  std::unordered_set<std::string> taken;
  for (const ToolSpec& t : out.anchors) taken.insert(t.name);
  std::vector<ToolSpec> available;
  for (const ToolSpec& t : unique_by_name(pool)) {
    if (!taken.contains(t.name)) available.push_back(t);
  }
  const size_t hard_count = kMaxAnchors - out.anchors.size();
  const size_t needed = hard_count + kEasyNegatives;
  if (available.size() < needed) {
    throw Error(ErrorCode::kPoolTooSmall,
                "pool offers " + std::to_string(available.size()) +
                    " distinct negatives; " + std::to_string(needed) + " needed");
  }

  if (hard_count > 0) {
    std::vector<std::string> texts;
    for (const ToolSpec& t : out.anchors) texts.push_back(embedding_text(t));
    for (const ToolSpec& t : available) texts.push_back(embedding_text(t));
    const EmbeddingBatch batch = embedder.embed(texts);
    Vector centroid(batch.dimension, 0.0);
    for (size_t i = 0; i < out.anchors.size(); ++i) {
      const Vector n = normalized(batch.vectors[i]);
      for (size_t d = 0; d < centroid.size(); ++d) centroid[d] += n[d];
    }
    for (double& x : centroid) x /= static_cast<double>(out.anchors.size());

    std::vector<std::pair<double, size_t>> ranked;
    for (size_t i = 0; i < available.size(); ++i) {
      ranked.emplace_back(
          similarity(centroid, batch.vectors[out.anchors.size() + i]), i);
    }
    std::sort(ranked.begin(), ranked.end(), [&](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first > b.first;
      return available[a.second].name < available[b.second].name;
    });
    std::vector<bool> used(available.size(), false);
    for (size_t k = 0; k < hard_count; ++k) {
      out.hard_negatives.push_back(available[ranked[k].second]);
      used[ranked[k].second] = true;
    }
    std::vector<ToolSpec> rest;
    for (size_t i = 0; i < available.size(); ++i) {
      if (!used[i]) rest.push_back(available[i]);
    }
    available = std::move(rest);
  }

  SeededRng easy_rng(derive_seed(seed, 1));
  for (size_t i : easy_rng.sample_indices(available.size(), kEasyNegatives)) {
    out.easy_negatives.push_back(available[i]);
  }

  out.presented = out.anchors;
  out.presented.insert(out.presented.end(), out.hard_negatives.begin(),
                       out.hard_negatives.end());
  out.presented.insert(out.presented.end(), out.easy_negatives.begin(),
                       out.easy_negatives.end());
  SeededRng order_rng(derive_seed(seed, 2));
  order_rng.shuffle(out.presented);
  return out;
}

std::vector<ToolSpec> ground_truth_tools(const Conversation& conv,
                                         const std::vector<ToolSpec>& pool) {
  std::vector<ToolSpec> out;
  std::unordered_set<std::string> seen;
  for (const FunctionCall& c : conv.all_calls()) {
    if (!seen.insert(c.tool_name).second) continue;
    auto by_name = [&](const ToolSpec& t) { return t.name == c.tool_name; };
    auto it = std::find_if(conv.tools.begin(), conv.tools.end(), by_name);
    if (it != conv.tools.end()) {
      out.push_back(*it);
      continue;
    }
    auto jt = std::find_if(pool.begin(), pool.end(), by_name);
    if (jt == pool.end()) {
      throw Error(ErrorCode::kMalformedRecord,
                  "conversation " + conv.id + " calls unknown tool '" +
                      c.tool_name + "'");
    }
    out.push_back(*jt);
  }
  return out;
}

}  // namespace toolcall
