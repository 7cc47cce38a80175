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

#ifndef TOOLCALL_ERROR_H_
#define TOOLCALL_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace toolcall {

enum class ErrorCode {
  kInvalidArgument,
  kMalformedRecord,
  kRoleOrderViolation,
  kPoolTooSmall,
  kTooManyAnchors,
  kEmptyGroundTruth,
  kNoDomainWithEnoughTools,
  kEmbedderUnavailable,
  kProviderError,
  kAuthError,
  kDimensionMismatch,
  kZeroVector,
  kSchemaViolation,
  kDependencyViolation,
  kAnchorViolation,
  kJudgeError,
  kMixedGranularity,
  kRatioUnachievable,
  kConfigError,
  kIoError,
  kParseError,
  kInternal,
};

std::string_view error_code_name(ErrorCode code);

// All library failures are reported through this exception type. The code
// identifies the failure class; the message carries the diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " +
                           message),
        code_(code),
        message_(message) {}

  ErrorCode code() const noexcept { return code_; }
  // The diagnostic without the code-name prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

// True for failures that originate at a chat or embedding provider.
inline bool is_provider_error(ErrorCode code) {
  return code == ErrorCode::kProviderError || code == ErrorCode::kAuthError ||
         code == ErrorCode::kEmbedderUnavailable ||
         code == ErrorCode::kDimensionMismatch ||
         code == ErrorCode::kJudgeError;
}

}  // namespace toolcall

#endif  // TOOLCALL_ERROR_H_
