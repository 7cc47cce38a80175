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

#ifndef TOOLCALL_UTIL_IO_H_
#define TOOLCALL_UTIL_IO_H_

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

namespace toolcall {

using Json = nlohmann::ordered_json;

std::string read_file(const std::filesystem::path& path);

// Non-blank lines of a line-delimited file, with their 1-based line numbers.
struct Line {
  size_t number;
  std::string text;
};
std::vector<Line> read_lines(const std::filesystem::path& path);

// Writes via a sibling temp file and rename so readers never observe a
// partially written output.
void write_file_atomic(const std::filesystem::path& path,
                       const std::string& contents);

std::string to_jsonl(const std::vector<Json>& records);

}  // namespace toolcall

#endif  // TOOLCALL_UTIL_IO_H_
