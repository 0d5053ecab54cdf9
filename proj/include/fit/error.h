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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fit {

enum class ErrorCode {
  // transport
  kUnreachable,
  kAuthFailed,
  kTimeout,
  kSessionClosed,
  kTransportBroken,
  kPermissionDenied,
  kUnscriptedCommand,
  // osprobe
  kUnsupportedOS,
  kNotInstallable,
  kInstallFailed,
  // faults
  kInvalidParameter,
  kScopeMismatch,
  // campaign
  kSyntaxError,
  kUnknownFault,
  kInvalidField,
  kUnknownLabel,
  kEmptyPool,
  kWhitelistUnreadable,
  kPreflightFailed,
  // cli
  kUsageError,
};

// Stable CamelCase name, e.g. "ScopeMismatch". Used in reports and golden files.
std::string_view ErrorCodeName(ErrorCode code);

class FitError : public std::runtime_error {
 public:
  FitError(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fit
