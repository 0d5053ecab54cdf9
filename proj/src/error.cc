/*
 * Copyright (c) 2026 The FIT Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "fit/error.h"

namespace fit {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnreachable: return "Unreachable";
    case ErrorCode::kAuthFailed: return "AuthFailed";
    case ErrorCode::kTimeout: return "Timeout";
    case ErrorCode::kSessionClosed: return "SessionClosed";
    case ErrorCode::kTransportBroken: return "TransportBroken";
    case ErrorCode::kPermissionDenied: return "PermissionDenied";
    case ErrorCode::kUnscriptedCommand: return "UnscriptedCommand";
    case ErrorCode::kUnsupportedOS: return "UnsupportedOS";
    case ErrorCode::kNotInstallable: return "NotInstallable";
    case ErrorCode::kInstallFailed: return "InstallFailed";
    case ErrorCode::kInvalidParameter: return "InvalidParameter";
    case ErrorCode::kScopeMismatch: return "ScopeMismatch";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kUnknownFault: return "UnknownFault";
    case ErrorCode::kInvalidField: return "InvalidField";
    case ErrorCode::kUnknownLabel: return "UnknownLabel";
    case ErrorCode::kEmptyPool: return "EmptyPool";
    case ErrorCode::kWhitelistUnreadable: return "WhitelistUnreadable";
    case ErrorCode::kPreflightFailed: return "PreflightFailed";
    case ErrorCode::kUsageError: return "UsageError";
  }
  return "Unknown";
}

FitError::FitError(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

}  // namespace fit
