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

#include "toolcall/matching/rouge.h"

#include <algorithm>

#include "toolcall/util/text.h"

namespace toolcall {

std::vector<std::string> rouge_tokens(std::string_view text) {
  return word_tokens(text);
}

size_t lcs_length(std::span<const std::string> a,
                  std::span<const std::string> b) {
  if (a.empty() || b.empty()) return 0;
  // Two-row DP over the shorter sequence.
  if (b.size() > a.size()) std::swap(a, b);
  std::vector<size_t> prev(b.size() + 1, 0);
  std::vector<size_t> cur(b.size() + 1, 0);
  for (size_t i = 1; i <= a.size(); ++i) {
    for (size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1
                                    : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

double rouge_l(std::span<const std::string> candidate,
               std::span<const std::string> reference) {
  if (candidate.empty() && reference.empty()) return 1.0;
  if (candidate.empty() || reference.empty()) return 0.0;
  const double lcs = static_cast<double>(lcs_length(candidate, reference));
  if (lcs == 0.0) return 0.0;
  const double precision = lcs / static_cast<double>(candidate.size());
  const double recall = lcs / static_cast<double>(reference.size());
  return 2.0 * precision * recall / (precision + recall);
}

double rouge_l(std::string_view candidate, std::string_view reference) {
  const std::vector<std::string> c = rouge_tokens(candidate);
  const std::vector<std::string> r = rouge_tokens(reference);
  return rouge_l(std::span<const std::string>(c),
                 std::span<const std::string>(r));
}

}  // namespace toolcall
