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

#include "toolcall/error.h"

namespace toolcall {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kMalformedRecord: return "MalformedRecord";
    case ErrorCode::kRoleOrderViolation: return "RoleOrderViolation";
    case ErrorCode::kPoolTooSmall: return "PoolTooSmall";
    case ErrorCode::kTooManyAnchors: return "TooManyAnchors";
    case ErrorCode::kEmptyGroundTruth: return "EmptyGroundTruth";
    case ErrorCode::kNoDomainWithEnoughTools: return "NoDomainWithEnoughTools";
    case ErrorCode::kEmbedderUnavailable: return "EmbedderUnavailable";
    case ErrorCode::kProviderError: return "ProviderError";
    case ErrorCode::kAuthError: return "AuthError";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kZeroVector: return "ZeroVector";
    case ErrorCode::kSchemaViolation: return "SchemaViolation";
    case ErrorCode::kDependencyViolation: return "DependencyViolation";
    case ErrorCode::kAnchorViolation: return "AnchorViolation";
    case ErrorCode::kJudgeError: return "JudgeError";
    case ErrorCode::kMixedGranularity: return "MixedGranularity";
    case ErrorCode::kRatioUnachievable: return "RatioUnachievable";
    case ErrorCode::kConfigError: return "ConfigError";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

}  // namespace toolcall
