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

#ifndef TOOLCALL_MODEL_VALUE_TOKENS_H_
#define TOOLCALL_MODEL_VALUE_TOKENS_H_

#include <string>
#include <string_view>
#include <vector>

#include "toolcall/model/conversation.h"

namespace toolcall {

// Shortest value (after trimming) that counts as a carried-over state value.
inline constexpr size_t kMinValueTokenLength = 2;

// Value-like tokens of a tool observation, deduplicated in first-seen order.
//
// JSON observations: every string leaf, every numeric leaf with at least
// three digits, and any scalar stored under a key whose name ends in
// id / code / number (booking_id, orderId, ZipCode, ...).
// Plain-text observations: quoted strings, alphanumeric identifiers that
// contain a digit, numbers of three or more digits, and the value after
// `key:` or `key=` when the key ends in id / code / number.
std::vector<std::string> extract_value_tokens(std::string_view observation);

// Text forms of the scalar leaves of an argument object. Strings are
// taken verbatim; numbers use their JSON spelling; booleans and nulls are
// skipped.
std::vector<std::string> argument_texts(const Json& arguments);

// True when some argument text of `call` contains `value`.
bool call_uses_value(const FunctionCall& call, std::string_view value);

// Tokens of `observation` that are not already present in `context`
// (the turn's query and the arguments of earlier calls). These are the
// values the observation introduced.
std::vector<std::string> introduced_values(
    std::string_view observation, const std::vector<std::string>& context);

}  // namespace toolcall

#endif  // TOOLCALL_MODEL_VALUE_TOKENS_H_
