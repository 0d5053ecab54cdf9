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

#include <functional>
#include <string>

#include "fit/faults/plan.h"
#include "fit/osprobe/os_profile.h"
#include "fit/osprobe/tools.h"
#include "fit/transport/transport.h"

namespace fit {

inline constexpr std::string_view kOsReleaseProbe = "cat /etc/os-release";
inline constexpr std::string_view kRedhatReleaseProbe = "cat /etc/redhat-release";

struct ProvisionOutcome {
  enum class Action { kAlreadyPresent, kInstalled, kFailed };

  ToolId tool;
  Action action = Action::kAlreadyPresent;
  std::string detail;
};

std::string_view ProvisionActionName(ProvisionOutcome::Action action);

// Runs each step of a plan. Gives callers a hook to record a transcript.
using StepRunner = std::function<ExecResult(const CommandStep&)>;

// A StepRunner that execs directly on `session`, applying `escalation` to
// privileged steps.
StepRunner DirectRunner(Session& session, std::string escalation = "sudo -n");

// Reads os-release, falling back to redhat-release. Never fails on probe
// output; only transport errors propagate.
OsProfile DetectOs(const StepRunner& run);
OsProfile DetectOs(Session& session);

bool ToolInstalled(const StepRunner& run, const ToolId& tool);
bool ToolInstalled(Session& session, const ToolId& tool);

// Provision-phase plan: package install command(s) then a presence re-check.
// Throws kUnsupportedOS or kNotInstallable.
CommandPlan InstallPlan(const OsProfile& profile, const ToolId& tool);

// Installs `tool` only when it is missing. Throws kUnsupportedOS,
// kNotInstallable, or kInstallFailed when the re-check still fails.
ProvisionOutcome EnsureTool(const StepRunner& run, const OsProfile& profile,
                            const ToolId& tool);
ProvisionOutcome EnsureTool(Session& session, const OsProfile& profile,
                            const ToolId& tool);

}  // namespace fit
