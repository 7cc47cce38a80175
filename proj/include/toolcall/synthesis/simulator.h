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

#ifndef TOOLCALL_SYNTHESIS_SIMULATOR_H_
#define TOOLCALL_SYNTHESIS_SIMULATOR_H_

#include <atomic>

#include "toolcall/providers/chat.h"

namespace toolcall {

// Offline stand-in for the generator model. Reads the request context
// written by the generators and answers with a schema-conformant reply
// derived from the context seed, so equal requests get equal replies.
class SimulatedGenerator : public ChatProvider {
 public:
  ChatResponse chat(const ChatRequest& request) override;
  size_t calls() const { return calls_.load(); }

 private:
  std::atomic<size_t> calls_{0};
};

// Offline judge that gives every dimension the same score.
class SimulatedJudge : public ChatProvider {
 public:
  explicit SimulatedJudge(double score = 9.0) : score_(score) {}
  ChatResponse chat(const ChatRequest& request) override;
  size_t calls() const { return calls_.load(); }

 private:
  double score_;
  std::atomic<size_t> calls_{0};
};

}  // namespace toolcall

#endif  // TOOLCALL_SYNTHESIS_SIMULATOR_H_
