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

#ifndef TOOLCALL_MATCHING_NORMALIZE_H_
#define TOOLCALL_MATCHING_NORMALIZE_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "toolcall/model/conversation.h"

namespace toolcall {

struct NormalizedValue;

struct CanonicalDate {
  std::string iso;  // YYYY-MM-DD
  friend bool operator==(const CanonicalDate&, const CanonicalDate&) = default;
};
struct NumberValue {
  double value = 0.0;
  friend bool operator==(const NumberValue&, const NumberValue&) = default;
};
struct BooleanValue {
  bool value = false;
  friend bool operator==(const BooleanValue&, const BooleanValue&) = default;
};
struct TextValue {
  std::string canonical;
  friend bool operator==(const TextValue&, const TextValue&) = default;
};
struct NullValue {
  friend bool operator==(const NullValue&, const NullValue&) = default;
};
struct ArrayValue {
  std::vector<NormalizedValue> items;
  friend bool operator==(const ArrayValue&, const ArrayValue&);
};
// Nested objects keep their (raw) keys; values are normalized.
struct ObjectValue {
  std::map<std::string, NormalizedValue> fields;
  friend bool operator==(const ObjectValue&, const ObjectValue&);
};

struct NormalizedValue {
  std::variant<NullValue, BooleanValue, NumberValue, CanonicalDate, TextValue,
               ArrayValue, ObjectValue>
      v;

  bool is_text() const { return std::holds_alternative<TextValue>(v); }
  friend bool operator==(const NormalizedValue&, const NormalizedValue&);
};

struct NormalizedCall {
  std::string norm_name;
  std::map<std::string, NormalizedValue> norm_args;
  friend bool operator==(const NormalizedCall&, const NormalizedCall&) =
      default;
};

// Keeps letters only, lowercased: "uber.ride" and "uber_ride" both become
// "uberride". Non-ASCII bytes are kept as letters.
std::string normalize_tool_name(std::string_view name);

// Recognized grammars: "Month D, YYYY" (full or three-letter month, comma
// optional), "YYYY-MM-DD", "YYYY/MM/DD", "MM/DD/YYYY". Slash dates with the
// year last are read month-first. Calendar-invalid dates are rejected.
std::optional<std::string> canonical_date(std::string_view s);

// Lowercase, punctuation to spaces, drop the whole words a/an/the, drop
// whitespace: "A black cat" -> "blackcat".
std::string canonical_text(std::string_view s);

// Rules in order: date, bracketed list, numeric string, text. Raw numbers
// become Number; booleans and nulls pass through; "true"/"false" strings
// become Boolean.
NormalizedValue normalize_value(const Json& raw);

// Re-applies the canonical form of each variant. The identity on anything
// normalize_value produced.
NormalizedValue normalize_value(const NormalizedValue& value);

NormalizedCall normalize_call(const FunctionCall& call);
NormalizedCall normalize_call(const NormalizedCall& call);

// Renders a normalized value for diagnostics.
std::string debug_string(const NormalizedValue& value);

}  // namespace toolcall

#endif  // TOOLCALL_MATCHING_NORMALIZE_H_
