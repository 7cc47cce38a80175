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

#include "toolcall/matching/normalize.h"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <regex>

#include "toolcall/util/text.h"

namespace toolcall {
namespace {

constexpr std::array<std::string_view, 12> kMonths = {
    "january", "february", "march",     "april",   "may",      "june",
    "july",    "august",   "september", "october", "november", "december"};

int month_from_name(std::string_view name) {
  const std::string lower = to_lower(name);
  for (size_t i = 0; i < kMonths.size(); ++i) {
    if (lower == kMonths[i]) return static_cast<int>(i) + 1;
    if (lower.size() == 3 && kMonths[i].substr(0, 3) == lower) {
      return static_cast<int>(i) + 1;
    }
  }
  if (lower == "sept") return 9;
  return 0;
}

bool is_leap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

int days_in_month(int y, int m) {
  static constexpr int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  return m == 2 && is_leap(y) ? 29 : kDays[m - 1];
}

std::optional<std::string> format_date(int y, int m, int d) {
  if (m < 1 || m > 12 || d < 1 || d > days_in_month(y, m)) return std::nullopt;
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", y, m, d);
  return std::string(buf);
}

std::optional<double> parse_number(std::string_view s) {
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return std::nullopt;
  const char c = s.front();
  if (!is_ascii_digit(c) && c != '-' && c != '.') return std::nullopt;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

// Splits the inside of "[...]" on top-level commas, honoring quotes and
// nested brackets.
std::vector<std::string> split_list_body(std::string_view body) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  char quote = 0;
  for (char c : body) {
    if (quote) {
      if (c == quote) quote = 0;
      cur.push_back(c);
      continue;
    }
    if (c == '"' || c == '\'') {
      quote = c;
    } else if (c == '[' || c == '{') {
      ++depth;
    } else if (c == ']' || c == '}') {
      --depth;
    } else if (c == ',' && depth == 0) {
      out.push_back(std::move(cur));
      cur.clear();
      continue;
    }
    cur.push_back(c);
  }
  if (!trim(cur).empty() || !out.empty()) out.push_back(std::move(cur));
  return out;
}

std::string strip_quotes(std::string_view s) {
  s = trim(s);
  if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') &&
      s.back() == s.front()) {
    s = s.substr(1, s.size() - 2);
  }
  return std::string(s);
}

NormalizedValue from_string(std::string_view raw);

std::optional<NormalizedValue> parse_list(std::string_view s) {
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') return std::nullopt;
  Json j = Json::parse(s, nullptr, false);
  if (!j.is_discarded() && j.is_array()) return normalize_value(j);
  ArrayValue arr;
  for (const std::string& item : split_list_body(s.substr(1, s.size() - 2))) {
    arr.items.push_back(from_string(strip_quotes(item)));
  }
  return NormalizedValue{std::move(arr)};
}

NormalizedValue from_string(std::string_view raw) {
  const std::string_view s = trim(raw);
  if (auto d = canonical_date(s)) return {CanonicalDate{*d}};
  if (auto l = parse_list(s)) return std::move(*l);
  if (auto n = parse_number(s)) return {NumberValue{*n}};
  const std::string lower = to_lower(s);
  if (lower == "true") return {BooleanValue{true}};
  if (lower == "false") return {BooleanValue{false}};
  return {TextValue{canonical_text(s)}};
}

bool is_punct_byte(char c) {
  const auto u = static_cast<unsigned char>(c);
  return u < 0x80 && !is_ascii_alpha(c) && !is_ascii_digit(c);
}

}  // namespace

bool operator==(const ArrayValue& a, const ArrayValue& b) {
  return a.items == b.items;
}
bool operator==(const ObjectValue& a, const ObjectValue& b) {
  return a.fields == b.fields;
}
bool operator==(const NormalizedValue& a, const NormalizedValue& b) {
  return a.v == b.v;
}

std::string normalize_tool_name(std::string_view name) {
  std::string out;
  out.reserve(name.size());
  for (char c : name) {
    if (is_ascii_alpha(c) || static_cast<unsigned char>(c) >= 0x80) {
      out.push_back(ascii_lower(c));
    }
  }
  return out;
}

std::optional<std::string> canonical_date(std::string_view raw) {
  static const std::regex kMonthDay(
      R"(^([A-Za-z]+)\.?\s+(\d{1,2})(?:st|nd|rd|th)?\s*,?\s*(\d{4})$)");
  static const std::regex kIsoDash(R"(^(\d{4})-(\d{1,2})-(\d{1,2})$)");
  static const std::regex kIsoSlash(R"(^(\d{4})/(\d{1,2})/(\d{1,2})$)");
  static const std::regex kUsSlash(R"(^(\d{1,2})/(\d{1,2})/(\d{4})$)");

  const std::string s(trim(raw));
  if (s.size() < 8 || s.size() > 32) return std::nullopt;
  std::smatch m;
  if (std::regex_match(s, m, kMonthDay)) {
    const int month = month_from_name(m[1].str());
    if (month == 0) return std::nullopt;
    return format_date(std::stoi(m[3].str()), month, std::stoi(m[2].str()));
  }
  if (std::regex_match(s, m, kIsoDash) || std::regex_match(s, m, kIsoSlash)) {
    return format_date(std::stoi(m[1].str()), std::stoi(m[2].str()),
                       std::stoi(m[3].str()));
  }
  if (std::regex_match(s, m, kUsSlash)) {
    return format_date(std::stoi(m[3].str()), std::stoi(m[1].str()),
                       std::stoi(m[2].str()));
  }
  return std::nullopt;
}

std::string canonical_text(std::string_view s) {
  std::string spaced;
  spaced.reserve(s.size());
  for (char c : s) {
    spaced.push_back(is_punct_byte(c) ? ' ' : ascii_lower(c));
  }
  std::string out;
  for (const std::string& word : split_nonempty(spaced, ' ')) {
    if (word == "a" || word == "an" || word == "the") continue;
    out += word;
  }
  return out;
}

NormalizedValue normalize_value(const Json& raw) {
  switch (raw.type()) {
    case Json::value_t::null:
    case Json::value_t::discarded:
      return {NullValue{}};
    case Json::value_t::boolean:
      return {BooleanValue{raw.get<bool>()}};
    case Json::value_t::number_integer:
    case Json::value_t::number_unsigned:
    case Json::value_t::number_float:
      return {NumberValue{raw.get<double>()}};
    case Json::value_t::string:
      return from_string(raw.get_ref<const std::string&>());
    case Json::value_t::array: {
      ArrayValue arr;
      for (const Json& item : raw) arr.items.push_back(normalize_value(item));
      return {std::move(arr)};
    }
    case Json::value_t::object: {
      ObjectValue obj;
      for (auto it = raw.begin(); it != raw.end(); ++it) {
        obj.fields[it.key()] = normalize_value(it.value());
      }
      return {std::move(obj)};
    }
    case Json::value_t::binary:
      break;
  }
  return {NullValue{}};
}

NormalizedValue normalize_value(const NormalizedValue& value) {
  return std::visit(
      [](const auto& x) -> NormalizedValue {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, TextValue>) {
          // Canonical text has no word boundaries left, so only the
          // character-level rules can apply again.
          std::string out;
          for (char c : x.canonical) {
            if (!is_punct_byte(c)) out.push_back(ascii_lower(c));
          }
          return {TextValue{std::move(out)}};
        } else if constexpr (std::is_same_v<T, ArrayValue>) {
          ArrayValue arr;
          for (const auto& item : x.items) {
            arr.items.push_back(normalize_value(item));
          }
          return {std::move(arr)};
        } else if constexpr (std::is_same_v<T, ObjectValue>) {
          ObjectValue obj;
          for (const auto& [k, item] : x.fields) {
            obj.fields[k] = normalize_value(item);
          }
          return {std::move(obj)};
        } else {
          return {x};
        }
      },
      value.v);
}

NormalizedCall normalize_call(const FunctionCall& call) {
  NormalizedCall out;
  out.norm_name = normalize_tool_name(call.tool_name);
  if (call.arguments.is_object()) {
    for (auto it = call.arguments.begin(); it != call.arguments.end(); ++it) {
      out.norm_args[it.key()] = normalize_value(it.value());
    }
  }
  return out;
}

NormalizedCall normalize_call(const NormalizedCall& call) {
  NormalizedCall out;
  out.norm_name = normalize_tool_name(call.norm_name);
  for (const auto& [k, v] : call.norm_args) out.norm_args[k] = normalize_value(v);
  return out;
}

std::string debug_string(const NormalizedValue& value) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, NullValue>) {
          return "null";
        } else if constexpr (std::is_same_v<T, BooleanValue>) {
          return x.value ? "true" : "false";
        } else if constexpr (std::is_same_v<T, NumberValue>) {
          return Json(x.value).dump();
        } else if constexpr (std::is_same_v<T, CanonicalDate>) {
          return "date(" + x.iso + ")";
        } else if constexpr (std::is_same_v<T, TextValue>) {
          return "text(" + x.canonical + ")";
        } else if constexpr (std::is_same_v<T, ArrayValue>) {
          std::string s = "[";
          for (size_t i = 0; i < x.items.size(); ++i) {
            if (i) s += ", ";
            s += debug_string(x.items[i]);
          }
          return s + "]";
        } else {
          std::string s = "{";
          bool first = true;
          for (const auto& [k, v] : x.fields) {
            if (!first) s += ", ";
            first = false;
            s += k + ": " + debug_string(v);
          }
          return s + "}";
        }
      },
      value.v);
}

}  // namespace toolcall
