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

#ifndef TOOLCALL_SYNTHESIS_PROMPTS_H_
#define TOOLCALL_SYNTHESIS_PROMPTS_H_

#include <map>
#include <string>
#include <string_view>

namespace toolcall {

// Template files from prompts/, compiled into the library. Throws
// Error(kInvalidArgument) for an unknown name.
std::string_view prompt_template(std::string_view name);

// The system prompt injected into every synthesized instance.
std::string_view instance_system_prompt();

// Replaces each {{key}} with its value. Unknown placeholders are left
// untouched.
std::string render_prompt(std::string_view tmpl,
                          const std::map<std::string, std::string>& values);

}  // namespace toolcall

#endif  // TOOLCALL_SYNTHESIS_PROMPTS_H_
