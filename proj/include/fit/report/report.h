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

#include <cstddef>
#include <string>
#include <string_view>

#include "fit/report/run_report.h"

namespace fit {

inline constexpr int kExitPreflightFailed = 3;
inline constexpr int kExitUsage = 64;

inline constexpr std::size_t kTranscriptCap = 64 * 1024;
inline constexpr std::size_t kTextExcerptCap = 500;

// Truncates to `cap` bytes and appends a marker naming how much was dropped.
std::string CapOutput(std::string_view text, std::size_t cap = kTranscriptCap);

// Schema v1. Stable key order, RFC 3339 UTC timestamps, transcripts verbatim.
std::string RenderJson(const RunReport& report);

// Human summary; not a stable interface.
std::string RenderText(const RunReport& report);

// 0 when every step succeeded or was reverted, 2 when any revert failed,
// 1 otherwise.
int ExitCode(const RunReport& report);

// "2026-10-15T08:30:00.125Z"
std::string FormatTimestamp(std::chrono::system_clock::time_point t);

}  // namespace fit
