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

#include "toolcall/model/value_tokens.h"

#include <algorithm>
#include <unordered_set>
#include <utility>

#include "toolcall/util/text.h"

namespace toolcall {
namespace {

bool is_ident_byte(char c) {
  return is_ascii_alpha(c) || is_ascii_digit(c) || c == '_' || c == '-';
}

size_t digit_count(std::string_view s) {
  return static_cast<size_t>(std::count_if(s.begin(), s.end(), is_ascii_digit));
}

// Last word of a key under snake, kebab, or camel convention.
std::string last_key_word(std::string_view key) {
  std::string last;
  std::string word;
  for (size_t i = 0; i < key.size(); ++i) {
    const char c = key[i];
    const bool boundary =
        !(is_ascii_alpha(c) || is_ascii_digit(c)) ||
        (i > 0 && is_ascii_upper(c) && is_ascii_lower(key[i - 1]));
    if (boundary && !word.empty()) {
      last = std::move(word);
      word.clear();
    }
    if (is_ascii_alpha(c) || is_ascii_digit(c)) word.push_back(ascii_lower(c));
  }
  return word.empty() ? last : word;
}

bool is_identifier_key(std::string_view key) {
  const std::string w = last_key_word(key);
  return w == "id" || w == "code" || w == "number";
}

class TokenSink {
 public:
  void add(std::string_view raw) {
    std::string_view v = trim(raw);
    if (v.size() < kMinValueTokenLength) return;
    std::string s(v);
    if (seen_.insert(s).second) out_.push_back(std::move(s));
  }
  std::vector<std::string> take() { return std::move(out_); }

 private:
  std::unordered_set<std::string> seen_;
  std::vector<std::string> out_;
};

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number()) return v.dump();
  return {};
}

void collect_json(const Json& node, bool under_id_key, TokenSink& sink) {
  if (node.is_object()) {
    for (auto it = node.begin(); it != node.end(); ++it) {
      collect_json(it.value(), is_identifier_key(it.key()), sink);
    }
  } else if (node.is_array()) {
    for (const Json& v : node) collect_json(v, under_id_key, sink);
  } else if (node.is_string()) {
    sink.add(node.get_ref<const std::string&>());
  } else if (node.is_number()) {
    const std::string s = node.dump();
    if (under_id_key || digit_count(s) >= 3) sink.add(s);
  }
}

void collect_text(std::string_view text, TokenSink& sink) {
  std::vector<std::pair<size_t, std::string>> found;
  const size_t n = text.size();

  // Quoted strings. Single quotes only count when they are not
  // apostrophes inside a word.
  for (size_t i = 0; i < n; ++i) {
    const char q = text[i];
    if (q != '"' && q != '\'') continue;
    if (q == '\'' && i > 0 && is_word_byte(text[i - 1])) continue;
    size_t j = i + 1;
    while (j < n && text[j] != q) ++j;
    if (j >= n) break;
    if (q == '\'' && j + 1 < n && is_word_byte(text[j + 1])) continue;
    found.emplace_back(i, std::string(text.substr(i + 1, j - i - 1)));
    i = j;
  }

  // Identifier and number runs.
  for (size_t i = 0; i < n;) {
    if (!is_ident_byte(text[i])) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < n && (is_ident_byte(text[j]) ||
                     (text[j] == '.' && j + 1 < n && is_ascii_digit(text[j + 1]) &&
                      j > i && is_ascii_digit(text[j - 1])))) {
      ++j;
    }
    std::string_view run = text.substr(i, j - i);
    while (!run.empty() && (run.front() == '-' || run.front() == '_')) {
      run.remove_prefix(1);
    }
    while (!run.empty() && (run.back() == '-' || run.back() == '_')) {
      run.remove_suffix(1);
    }
    const size_t digits = digit_count(run);
    const bool has_alpha =
        std::any_of(run.begin(), run.end(), is_ascii_alpha);
    if ((has_alpha && digits > 0) || (!has_alpha && digits >= 3)) {
      found.emplace_back(i, std::string(run));
    }

    // `key: value` / `key = value` with an identifier-like key.
    size_t k = j;
    while (k < n && (text[k] == ' ' || text[k] == '\t')) ++k;
    if (k < n && (text[k] == ':' || text[k] == '=') && is_identifier_key(run)) {
      ++k;
      while (k < n && (text[k] == ' ' || text[k] == '\t' || text[k] == '"' ||
                       text[k] == '\'')) {
        ++k;
      }
      size_t e = k;
      while (e < n && !is_space(text[e]) && text[e] != ',' && text[e] != ';' &&
             text[e] != '"' && text[e] != '\'' && text[e] != '}' &&
             text[e] != ')') {
        ++e;
      }
      std::string_view v = text.substr(k, e - k);
      while (!v.empty() && v.back() == '.') v.remove_suffix(1);
      if (!v.empty()) found.emplace_back(k, std::string(v));
    }
    i = j;
  }

  std::stable_sort(found.begin(), found.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [pos, token] : found) sink.add(token);
}

void collect_argument_texts(const Json& node, std::vector<std::string>& out) {
  if (node.is_object()) {
    for (auto it = node.begin(); it != node.end(); ++it) {
      collect_argument_texts(it.value(), out);
    }
  } else if (node.is_array()) {
    for (const Json& v : node) collect_argument_texts(v, out);
  } else {
    std::string s = scalar_text(node);
    if (!s.empty()) out.push_back(std::move(s));
  }
}

}  // namespace

std::vector<std::string> extract_value_tokens(std::string_view observation) {
  TokenSink sink;
  const std::string_view body = trim(observation);
  if (body.empty()) return {};
  if (body.front() == '{' || body.front() == '[') {
    Json j = Json::parse(body, nullptr, false);
    if (!j.is_discarded()) {
      collect_json(j, false, sink);
      return sink.take();
    }
  }
  collect_text(body, sink);
  return sink.take();
}

std::vector<std::string> argument_texts(const Json& arguments) {
  std::vector<std::string> out;
  collect_argument_texts(arguments, out);
  return out;
}

bool call_uses_value(const FunctionCall& call, std::string_view value) {
  for (const std::string& t : argument_texts(call.arguments)) {
    if (contains(t, value)) return true;
  }
  return false;
}

std::vector<std::string> introduced_values(
    std::string_view observation, const std::vector<std::string>& context) {
  std::vector<std::string> out;
  for (std::string& token : extract_value_tokens(observation)) {
    const bool known = std::any_of(
        context.begin(), context.end(),
        [&](const std::string& c) { return contains(c, token); });
    if (!known) out.push_back(std::move(token));
  }
  return out;
}

}  // namespace toolcall
