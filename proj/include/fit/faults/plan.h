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

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace fit {

// Phases appear in this order within a plan.
enum class Phase { kProbe, kProvision, kInject, kRevert };

std::string_view PhaseName(Phase phase);

struct CommandStep {
  enum class Kind { kExec, kUpload };

  Kind kind = Kind::kExec;
  // Shell command for kExec; absolute remote destination for kUpload.
  std::string command;
  Phase phase = Phase::kInject;
  int timeout_seconds = 30;
  // Executed behind the configured escalation prefix (e.g. "sudo -n").
  bool privileged = false;
  std::set<int> ok_exit_codes = {0};
  // kUpload: local file whose bytes are shipped.
  std::string upload_from;
  // Replaces `command` once a selector probe in the same plan has failed.
  std::string fallback;
  // Probe steps only: a failure selects fallbacks instead of failing the run.
  bool selects_fallback = false;
  // A dropped connection counts as success (the command takes the host down).
  bool tolerate_disconnect = false;

  bool operator==(const CommandStep&) const = default;
};

struct CommandPlan {
  std::vector<CommandStep> steps;
  // Revert is only meaningful this many seconds after inject began.
  std::optional<int> revert_window_seconds;

  std::vector<CommandStep> StepsIn(Phase phase) const;
  bool HasPhase(Phase phase) const;
  // True when the phase order probe* provision* inject* revert* holds.
  bool PhasesOrdered() const;

  bool operator==(const CommandPlan&) const = default;
};

// Canonical one-line-per-step listing, used by golden files and dry runs.
std::string RenderPlan(const CommandPlan& plan);

}  // namespace fit
