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

#ifndef TOOLCALL_MATCHING_ROUGE_H_
#define TOOLCALL_MATCHING_ROUGE_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace toolcall {

// Lowercased tokens split on runs of non-alphanumeric characters.
std::vector<std::string> rouge_tokens(std::string_view text);

size_t lcs_length(std::span<const std::string> a, std::span<const std::string> b);

// Token-level ROUGE-L F1 (beta = 1). Both empty scores 1; exactly one
// empty scores 0.
double rouge_l(std::span<const std::string> candidate,
               std::span<const std::string> reference);
double rouge_l(std::string_view candidate, std::string_view reference);

}  // namespace toolcall

#endif  // TOOLCALL_MATCHING_ROUGE_H_
