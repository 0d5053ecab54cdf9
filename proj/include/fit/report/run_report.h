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

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fit/faults/fault_params.h"
#include "fit/faults/plan.h"
#include "fit/osprobe/os_profile.h"
#include "fit/osprobe/osprobe.h"

namespace fit {

enum class StepStatus { kSuccess, kFailed, kSkipped, kReverted, kRevertFailed };

std::string_view StepStatusName(StepStatus status);

struct CommandOutcome {
  enum class Status { kOk, kFailed, kTimedOut, kError };

  Phase phase = Phase::kProbe;
  std::string command;
  int exit_code = 0;
  std::chrono::milliseconds duration{0};
  Status status = Status::kOk;
  std::string stdout_text;
  std::string stderr_text;
};

std::string_view CommandStatusName(CommandOutcome::Status status);

struct StepReport {
  int index = 0;
  std::string endpoint_label;
  std::string endpoint_address;
  std::string fault_name;
  ParamList params;
  std::optional<OsProfile> os;
  std::vector<ProvisionOutcome> provisioning;
  std::vector<CommandOutcome> transcript;
  StepStatus status = StepStatus::kSkipped;
  std::string note;
  // Epoch when the step never started.
  std::chrono::system_clock::time_point started_at{};
  std::chrono::milliseconds duration{0};
};

struct RunReport {
  std::string scenario_name;
  std::chrono::system_clock::time_point started_at{};
  std::chrono::milliseconds wall_clock{0};
  std::optional<std::uint64_t> seed;
  std::vector<StepReport> steps;

  // Every status is present, zero when unused.
  std::map<StepStatus, int> Summary() const;
};

}  // namespace fit
