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

#include "toolcall/metrics/align.h"

#include <algorithm>
#include <cstdint>
#include <limits>

namespace toolcall {
namespace {

// Minimum-cost perfect assignment on a square matrix (Kuhn-Munkres with
// potentials). Returns the column assigned to each row.
std::vector<size_t> solve_assignment(
    const std::vector<std::vector<int64_t>>& cost) {
  const size_t n = cost.size();
  constexpr int64_t kInf = std::numeric_limits<int64_t>::max() / 4;
  std::vector<int64_t> u(n + 1, 0), v(n + 1, 0);
  std::vector<size_t> p(n + 1, 0), way(n + 1, 0);
  for (size_t i = 1; i <= n; ++i) {
    p[0] = i;
    size_t j0 = 0;
    std::vector<int64_t> minv(n + 1, kInf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const size_t i0 = p[j0];
      int64_t delta = kInf;
      size_t j1 = 0;
      for (size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const int64_t cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<size_t> row_to_col(n, 0);
  for (size_t j = 1; j <= n; ++j) {
    if (p[j] != 0) row_to_col[p[j] - 1] = j - 1;
  }
  return row_to_col;
}

}  // namespace

size_t Alignment::count_name() const {
  return static_cast<size_t>(std::count_if(
      predictions.begin(), predictions.end(),
      [](const AlignedPrediction& a) { return a.verdict.name_match; }));
}

size_t Alignment::count_strict() const {
  return static_cast<size_t>(std::count_if(
      predictions.begin(), predictions.end(),
      [](const AlignedPrediction& a) { return a.verdict.strict_match; }));
}

size_t Alignment::count_flexible() const {
  return static_cast<size_t>(std::count_if(
      predictions.begin(), predictions.end(),
      [](const AlignedPrediction& a) { return a.verdict.flexible_match; }));
}

Alignment align_calls(const std::vector<FunctionCall>& predictions,
                      const std::vector<FunctionCall>& gold,
                      const CallMatcher& matcher) {
  Alignment out;
  out.unpadded_size = predictions.size();
  const size_t np = predictions.size();
  const size_t ng = gold.size();
  const size_t n = std::max(np, ng);

  std::vector<std::vector<MatchVerdict>> verdicts(np,
                                                  std::vector<MatchVerdict>(ng));
  // Lexicographic (strict, flexible, name) as one integer weight: each
  // count is at most n, so base n + 1 keeps the digits separate.
  const int64_t base = static_cast<int64_t>(n) + 1;
  const int64_t max_weight = base * base + base + 1;
  std::vector<std::vector<int64_t>> cost(n, std::vector<int64_t>(n, max_weight));
  for (size_t i = 0; i < np; ++i) {
    for (size_t j = 0; j < ng; ++j) {
      verdicts[i][j] = matcher.match(predictions[i], gold[j]);
      const MatchVerdict& v = verdicts[i][j];
      if (!v.name_match) continue;
      const int64_t w = (v.strict_match ? base * base : 0) +
                        (v.flexible_match ? base : 0) + 1;
      cost[i][j] = max_weight - w;
    }
  }

  std::vector<size_t> assignment;
  if (n > 0) assignment = solve_assignment(cost);
  for (size_t i = 0; i < n; ++i) {
    AlignedPrediction a;
    if (i < np) a.pred_index = i;
    if (i < np && assignment[i] < ng &&
        verdicts[i][assignment[i]].name_match) {
      a.gold_index = assignment[i];
      a.verdict = verdicts[i][assignment[i]];
    }
    out.predictions.push_back(std::move(a));
  }
  return out;
}

}  // namespace toolcall
