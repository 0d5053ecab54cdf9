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

#include "fit/faults/plan.h"

#include <sstream>

namespace fit {

std::string_view PhaseName(Phase phase) {
  switch (phase) {
    case Phase::kProbe: return "probe";
    case Phase::kProvision: return "provision";
    case Phase::kInject: return "inject";
    case Phase::kRevert: return "revert";
  }
  return "?";
}

std::vector<CommandStep> CommandPlan::StepsIn(Phase phase) const {
  std::vector<CommandStep> out;
  for (const auto& s : steps) {
    if (s.phase == phase) out.push_back(s);
  }
  return out;
}

bool CommandPlan::HasPhase(Phase phase) const {
  for (const auto& s : steps) {
    if (s.phase == phase) return true;
  }
  return false;
}

bool CommandPlan::PhasesOrdered() const {
  for (std::size_t i = 1; i < steps.size(); ++i) {
    if (steps[i].phase < steps[i - 1].phase) return false;
  }
  return true;
}

std::string RenderPlan(const CommandPlan& plan) {
  std::ostringstream out;
  for (const auto& s : plan.steps) {
    out << PhaseName(s.phase) << " timeout=" << s.timeout_seconds << " ok=";
    bool first = true;
    for (int code : s.ok_exit_codes) {
      out << (first ? "" : ",") << code;
      first = false;
    }
    if (s.privileged) out << " privileged";
    if (s.selects_fallback) out << " selects-fallback";
    if (s.tolerate_disconnect) out << " tolerate-disconnect";
    if (s.kind == CommandStep::Kind::kUpload) {
      out << " $ upload " << s.upload_from << " -> " << s.command << "\n";
    } else {
      out << " $ " << s.command << "\n";
    }
    if (!s.fallback.empty()) out << "  fallback $ " << s.fallback << "\n";
  }
  if (plan.revert_window_seconds) {
    out << "revert-window " << *plan.revert_window_seconds << "s\n";
  }
  return out.str();
}

}  // namespace fit
