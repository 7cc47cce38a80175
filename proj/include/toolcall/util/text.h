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

#ifndef TOOLCALL_UTIL_TEXT_H_
#define TOOLCALL_UTIL_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace toolcall {

inline bool is_ascii_alpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}
inline bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }
inline bool is_ascii_upper(char c) { return c >= 'A' && c <= 'Z'; }
inline bool is_ascii_lower(char c) { return c >= 'a' && c <= 'z'; }
inline bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}
// Bytes >= 0x80 belong to multi-byte UTF-8 sequences; they are treated as
// word characters so non-Latin text is never split mid-codepoint.
inline bool is_word_byte(char c) {
  return is_ascii_alpha(c) || is_ascii_digit(c) ||
         static_cast<unsigned char>(c) >= 0x80;
}

inline char ascii_lower(char c) {
  return is_ascii_upper(c) ? static_cast<char>(c - 'A' + 'a') : c;
}

std::string to_lower(std::string_view s);
std::string_view trim(std::string_view s);

// Splits on runs of `sep`, dropping empty pieces.
std::vector<std::string> split_nonempty(std::string_view s, char sep);

// Lowercases and splits on runs of non-word bytes.
std::vector<std::string> word_tokens(std::string_view s);

bool contains(std::string_view haystack, std::string_view needle);

}  // namespace toolcall

#endif  // TOOLCALL_UTIL_TEXT_H_
