// Copyright 2026 The photon_filter Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace photon_filter {

/// Stable error codes. The string form is part of the CLI's error JSON and
/// the numeric value is the process exit status, so neither may be reused.
enum class ErrorCode {
  kInvalidArgument = 2,
  kNonFinite = 3,
  kInvalidState = 4,
  kDimensionMismatch = 5,
  kNeverClicks = 6,
  kTruncationTooSmall = 7,
  kCombAliasing = 8,
  kConfig = 9,
  kIo = 10,
  kValidationFailed = 11,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kNonFinite: return "non_finite";
    case ErrorCode::kInvalidState: return "invalid_state";
    case ErrorCode::kDimensionMismatch: return "dimension_mismatch";
    case ErrorCode::kNeverClicks: return "never_clicks";
    case ErrorCode::kTruncationTooSmall: return "truncation_too_small";
    case ErrorCode::kCombAliasing: return "comb_aliasing";
    case ErrorCode::kConfig: return "config";
    case ErrorCode::kIo: return "io";
    case ErrorCode::kValidationFailed: return "validation_failed";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace photon_filter
